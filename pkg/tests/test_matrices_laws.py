import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detlab.algebras import FinDimAlgebra
from detlab.corpus import load_rep
from detlab.errors import NonSquare
from detlab.groups import AlgebraElem
from detlab.laws import (
    CharacterLaw,
    MatrixDetLaw,
    PowerLaw,
    homogeneity_check,
    law_identity_fuzz,
    tensor_sigma_trace,
    tensor_sigma_trace_dense,
)
from detlab.matrices import Matrix, berkowitz_charpoly, cofactor_det, companion, lambdas_of
from detlab.rings import Integers, IntegersMod, Poly, PrimeField, Rationals


def _charpoly_by_cofactors(M):
    """Oracle: expand det(tI - M) by cofactors over Z[t]."""
    R = Poly(M.ring, ["t"])
    t = R.var("t")
    d = M.nrows
    A = Matrix(R, [[(t if i == j else R.zero()) - R.lift(M.rows[i][j]) for j in range(d)] for i in range(d)])
    p = cofactor_det(A)
    out = []
    for k in range(d, -1, -1):
        out.append(M.ring.lift(p.coeff({"t": k})) if k else M.ring.lift(p.coeff({"t": 0})))
    return out


def test_identity_charpoly(ZZ):
    assert berkowitz_charpoly(Matrix.identity(2, ZZ)) == [ZZ(1), ZZ(-2), ZZ(1)]


def test_rotation_charpoly(ZZ):
    assert berkowitz_charpoly(Matrix(ZZ, [[0, 1], [-1, 0]])) == [ZZ(1), ZZ(0), ZZ(1)]


def test_companion_charpoly_symbolic(ZZ):
    R = Poly(ZZ, ["s", "p"])
    s, p = R.gens()
    C = companion(R, [-s, p])
    assert berkowitz_charpoly(C) == [R.one(), -s, p]


def test_nonsquare_rejected(ZZ):
    with pytest.raises(NonSquare):
        berkowitz_charpoly(Matrix(ZZ, [[1, 2, 3], [4, 5, 6]]))


def test_berkowitz_matches_cofactor_oracle(ZZ):
    rng = random.Random(7)
    for d in (1, 2, 3, 4):
        for _ in range(200 if d < 4 else 50):
            M = Matrix(ZZ, [[rng.randint(-9, 9) for _ in range(d)] for _ in range(d)])
            assert berkowitz_charpoly(M) == _charpoly_by_cofactors(M)


def test_berkowitz_over_z_mod_4_and_dual_numbers():
    R = IntegersMod(4)
    M = Matrix(R, [[2, 1], [3, 2]])
    assert berkowitz_charpoly(M)[-1] == M.det() == R(1)
    from detlab.rings import DualNumbers

    A = DualNumbers(Rationals())
    e = A.eps()
    N = Matrix(A, [[1 + e, e], [0, 1]])
    assert N.det() == 1 + e


@settings(max_examples=40)
@given(st.lists(st.integers(-9, 9), min_size=9, max_size=9))
def test_det_is_multiplicative(entries):
    ZZ = Integers()
    A = Matrix(ZZ, [entries[0:3], entries[3:6], entries[6:9]])
    B = A.transpose() + Matrix.identity(3, ZZ)
    assert (A * B).det() == A.det() * B.det()


def test_lambdas_of_rep_elements_match_law():
    rep = load_rep("S3_std")
    law = rep.law()
    law.algebra = FinDimAlgebra.from_monoid(rep.table, rep.ring)
    for g in range(rep.table.size):
        x = AlgebraElem.basis(g, rep.ring)
        assert law.lambdas(x) == lambdas_of(rep.images[g])
        # the generic extraction through D(t - x) agrees as well
        assert super(MatrixDetLaw, law).lambdas(x) == lambdas_of(rep.images[g])


def test_lambda_examples(QQ):
    rep = load_rep("Z4_rotation")
    law = rep.law()
    law.algebra = FinDimAlgebra.from_monoid(rep.table, QQ)
    g = AlgebraElem.basis(1, QQ)
    assert law.lambda_i(g, 2) == QQ(1)
    assert law.lambda_i(g, 3) == QQ(0)
    assert law.lambda_i(g, 0) == QQ(1)


def test_character_law_is_linear(F7):
    rep = load_rep("Z3_chi1_F7")
    law = CharacterLaw(rep.table, [M.rows[0][0] for M in rep.images])
    R = Poly(F7, ["t"])
    t = R.var("t")
    x = rep.table.one(R) - AlgebraElem.basis(1, R).scale(t)
    assert law.evaluate(x) == 1 - 2 * t


def test_fuzz_passes_for_det_and_power():
    rep = load_rep("S3_std")
    law = rep.law()
    law.algebra = FinDimAlgebra.from_monoid(rep.table, rep.ring)
    assert law_identity_fuzz(law, trials=4, seed=1)["ok"]
    sq = PowerLaw(law, 2)
    assert sq.dimension == 4
    assert law_identity_fuzz(sq, trials=2, seed=1, max_elements=2)["ok"]


class _Corrupted(MatrixDetLaw):
    def evaluate(self, x):
        # add a degree-2 term that is not multiplicative
        c = x.coeff(0)
        return super().evaluate(x) + c * c


def test_fuzz_reports_corrupted_law():
    rep = load_rep("S3_std")
    law = _Corrupted(rep.images, rep.ring, FinDimAlgebra.from_monoid(rep.table, rep.ring))
    res = law_identity_fuzz(law, checks=("multiplicativity",), trials=4, seed=3)
    assert not res["ok"]
    assert res["violations"][0]["monomials"]


def test_homogeneity(QQ):
    rep = load_rep("S3_perm3")
    law = rep.law()
    law.algebra = FinDimAlgebra.from_monoid(rep.table, QQ)
    x = AlgebraElem(QQ, {1: QQ(2), 4: QQ(-1)})
    assert homogeneity_check(law, x)


def test_tensor_trace_small_cases(ZZ):
    rng = random.Random(11)
    A = Matrix(ZZ, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
    B = Matrix(ZZ, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
    C = Matrix(ZZ, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
    assert tensor_sigma_trace([A, B], (0, 1)) == A.trace() * B.trace()
    assert tensor_sigma_trace([A, B], (1, 0)) == (A * B).trace()
    assert tensor_sigma_trace([A, B, C], (1, 2, 0)) == (A * B * C).trace()
    assert tensor_sigma_trace_dense([A, B, C], (1, 2, 0)) == (A * B * C).trace()
