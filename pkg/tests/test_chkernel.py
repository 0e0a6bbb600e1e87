import pytest

from detlab.algebras import FinDimAlgebra
from detlab.chkernel import (
    ch_ideal,
    chi_alpha,
    chi_eval,
    gram_irreducibility,
    ideal_power,
    is_two_sided_ideal,
    kernel_of_det,
    kernel_power_vanishes,
    radical,
    subalgebra_span,
)
from detlab.corpus import REPS, build_rep, load_rep
from detlab.errors import CharacteristicTooSmall, DegreeMismatch
from detlab.groups import AlgebraElem
from detlab.matrices import Matrix
from detlab.rings import PrimeField, Rationals


def _group_law(rep):
    A = FinDimAlgebra.from_monoid(rep.table, rep.ring)
    law = rep.law()
    law.algebra = A
    return law, A


def test_cayley_hamilton_on_matrix_algebra():
    Q = Rationals()
    A = FinDimAlgebra.matrix_algebra(2, Q)
    law = A.det_law()
    x = AlgebraElem(Q, {0: Q(3), 1: Q(-2), 2: Q(5), 3: Q(1)})
    assert chi_eval(law, A, x).is_zero()


def test_chi_alpha_degree_check():
    Q = Rationals()
    A = FinDimAlgebra.matrix_algebra(2, Q)
    law = A.det_law()
    b = A.basis()
    with pytest.raises(DegreeMismatch):
        chi_alpha(law, A, b[:2], (1, 2))
    assert chi_alpha(law, A, b[:2], (1, 1)).is_zero()


def test_ch_quotient_f7_s3_is_four():
    rep = load_rep("S3_std_F7")
    law, A = _group_law(rep)
    CH = ch_ideal(law, A)
    assert A.dim - CH.dim == 4
    assert is_two_sided_ideal(A, CH)


def test_upper_triangular_kernel_and_radical():
    Q = Rationals()
    T2 = FinDimAlgebra.upper_triangular(2, Q)
    law = T2.det_law()
    ker = kernel_of_det(law)
    rad = radical(T2)
    assert ker.dim == 1 and rad == ker
    assert ker.basis[0] == [Q(0), Q(1), Q(0)]


def test_radical_char_guard():
    A = FinDimAlgebra.from_monoid(load_rep("S3_std_F7").table, PrimeField(5))
    with pytest.raises(CharacteristicTooSmall):
        radical(A)


@pytest.mark.parametrize("name", [r for r in REPS if build_rep(r).ring.is_field])
def test_ch_inside_kernel_and_kernel_power(name):
    rep = load_rep(name)
    law, A = _group_law(rep)
    ker = kernel_of_det(rep)
    CH = ch_ideal(law, A)
    assert ker.contains_subspace(CH)
    if ker.dim:
        assert CH.contains_subspace(ideal_power(A, ker, rep.d))


def test_kernel_power_vanishes_in_image():
    Q = Rationals()
    T3 = FinDimAlgebra.upper_triangular(3, Q)
    ker = kernel_of_det(T3.det_law())
    assert ker.dim == 3
    assert kernel_power_vanishes(T3, ker, 3)
    assert not kernel_power_vanishes(T3, ker, 1)


@pytest.mark.parametrize("name", [r for r in REPS if build_rep(r).ring.is_field])
def test_gram_certificate_iff_full_span(name):
    rep = load_rep(name)
    law, _ = _group_law(rep)
    X = [AlgebraElem.basis(g, rep.ring) for g in range(rep.table.size)]
    res = gram_irreducibility(law, X, rep.d, seed=1)
    full = subalgebra_span(list(rep.images), rep.ring) == rep.d ** 2
    assert (res["status"] == "certificate") == full


def test_gram_named_cases():
    for name, status in (("S3_std", "certificate"), ("Z3_chi1_plus_chi2_F7", "exhausted"),
                         ("Z3_rotation", "exhausted")):
        rep = load_rep(name)
        law, _ = _group_law(rep)
        X = [AlgebraElem.basis(g, rep.ring) for g in range(rep.table.size)]
        assert gram_irreducibility(law, X, rep.d)["status"] == status


def test_subalgebra_span_of_rotation():
    Q = Rationals()
    R = Matrix(Q, [[0, -1], [1, -1]])
    assert subalgebra_span([R]) == 2
