import random

import pytest

from detlab.corpus import GROUPS, REPS, build_rep, load_group, load_rep, trivial_rep
from detlab.dim2 import (
    AXIOMS,
    Dim2Law,
    axioms_pass,
    deformation_law,
    deformation_space_enumerate,
    dim2_eval,
    dim2_from_pseudochar,
    factorI_probe,
    odd_locus_symbolic,
    odd_reducibility_relation,
    tangent_parametrization,
    verify_dim2_axioms,
)
from detlab.errors import PreconditionViolated, TwoNotInvertible
from detlab.groups import AlgebraElem
from detlab.matrices import Matrix
from detlab.pseudochar import CentralFunction
from detlab.rings import PrimeField, Poly, Rationals

TWO_DIM = [r for r in REPS if build_rep(r).d == 2]


@pytest.mark.parametrize("name", TWO_DIM)
def test_rep_laws_pass_all_axioms(name):
    law = Dim2Law.from_rep(load_rep(name))
    report = verify_dim2_axioms(law.T, law.D, law.table)
    assert list(report) == list(AXIOMS)
    assert axioms_pass(report), {k: v.as_dict() for k, v in report.items() if not v.passed}


@pytest.mark.parametrize("name", TWO_DIM)
def test_dim2_eval_matches_generic_determinant(name):
    rep = load_rep(name)
    law = Dim2Law.from_rep(rep)
    names = [f"t{g}" for g in range(rep.table.size)]
    R = Poly(rep.ring, names)
    x = AlgebraElem(R, {g: R.var(n) for g, n in enumerate(names)})
    M = Matrix.zeros(2, 2, R)
    for g, n in enumerate(names):
        M = M + rep.images[g].lift(R).scale(R.var(n))
    assert dim2_eval(law, x) == M.det()


def test_broken_law_reports_witness():
    rep = load_rep("S3_std")
    law = Dim2Law.from_rep(rep)
    D = list(law.D)
    D[1] = -D[1]
    report = verify_dim2_axioms(law.T, D, law.table)
    assert not axioms_pass(report)
    bad = [k for k, v in report.items() if not v.passed]
    assert report[bad[0]].witness is not None


@pytest.mark.parametrize("ring", [Rationals(), PrimeField(7)])
def test_dim2_from_pseudochar(ring):
    rep = load_rep("S3_std").change_ring(ring)
    law = dim2_from_pseudochar(CentralFunction.from_rep(rep))
    assert list(law.D) == rep.dets()


def test_dim2_from_pseudochar_needs_two_invertible():
    rep = trivial_rep(load_group("Z2"), 2, PrimeField(2))
    with pytest.raises(TwoNotInvertible):
        dim2_from_pseudochar(CentralFunction(rep.table, rep.traces()))


@pytest.mark.parametrize("group,count", [("trivial", 1), ("Z4", 4), ("Z2xZ2", 32)])
def test_deformation_counts(group, count):
    G = load_group(group)
    F2 = PrimeField(2)
    laws = deformation_space_enumerate(G, F2)
    assert len(laws) == count
    assert len(tangent_parametrization(G, F2)) == count
    for tau, delta in laws:
        assert factorI_probe(deformation_law(G, F2, tau, delta), G)["ok"]


def test_odd_locus_symbolic_relation():
    rel = odd_locus_symbolic()
    # residual and gram_det are not proportional, but gram_det = -residual^2
    assert rel.linear_kappa is None
    assert rel.square_kappa == Rationals()(-1)
    assert rel.gram_det == -(rel.residual * rel.residual)


def test_odd_locus_requires_conjugation():
    Q = Rationals()
    g = Matrix.identity(2, Q)
    with pytest.raises(PreconditionViolated):
        odd_reducibility_relation(Matrix(Q, [[1, 0], [0, 1]]), g)


def test_odd_locus_reducible_sample():
    Q = Rationals()
    c = Matrix(Q, [[1, 0], [0, -1]])
    g = Matrix(Q, [[3, 5], [0, 7]])
    residual, gram = odd_reducibility_relation(c, g)
    assert residual.is_zero() and gram.is_zero()
    h = Matrix(Q, [[3, 5], [2, 7]])
    residual, gram = odd_reducibility_relation(c, h)
    assert not residual.is_zero() and not gram.is_zero()
