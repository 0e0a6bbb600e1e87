"""Matrix representations and determinant laws evaluated as polynomial laws.

A determinant law of dimension d on an algebra R (a monoid table or a
FinDimAlgebra) is anything with ``evaluate(x)`` for algebra elements x whose
coefficients live in an extension B of the base ring (polynomial variables
and/or dual numbers).  Lambda_i are read off D(t - x).
"""
from __future__ import annotations

import itertools
import random
from math import factorial

from .errors import (
    DimensionMismatch,
    InvalidRepresentation,
    NonSquare,
)
from .groups import AlgebraElem, FiniteMonoidTable
from .matrices import Matrix, berkowitz_charpoly, lambdas_of
from .rings import Poly, Ring, RingElem, coefficients_in, fresh_names, ring_from_json


class DeterminantLaw:
    """Base class.  Subclasses set ``dimension``, ``base``, ``algebra``."""

    dimension: int
    base: Ring
    algebra = None

    @property
    def d(self) -> int:
        return self.dimension

    def evaluate(self, x: AlgebraElem) -> RingElem:
        raise NotImplementedError

    __call__ = evaluate

    def lambdas(self, x: AlgebraElem) -> list:
        """[Lambda_0, ..., Lambda_d] of x, from D(t - x) = sum (-1)^i Lambda_i t^(d-i)."""
        B = x.ring
        (name,) = fresh_names(B, 1, "lam")
        Bt = Poly(B, [name])
        t = Bt.var(name)
        y = self.algebra.one(Bt).scale(t) - x.lift(Bt)
        value = self.evaluate(y)
        _, parts = coefficients_in(value, name)
        d = self.dimension
        if any(k > d for k in parts):
            raise InvalidRepresentation(f"D(t - x) has degree above {d}")
        out = []
        for i in range(d + 1):
            c = B.lift(parts[d - i]) if (d - i) in parts else B.zero()
            out.append(c if i % 2 == 0 else -c)
        return out

    def lambda_i(self, x: AlgebraElem, i: int) -> RingElem:
        if i < 0:
            raise ValueError("i must be >= 0")
        if i > self.dimension:
            return x.ring.zero()
        if i == 0:
            return x.ring.one()
        return self.lambdas(x)[i]

    def charpoly(self, x: AlgebraElem) -> list:
        """Coefficients [1, -Lambda_1, Lambda_2, ...] of D(t - x)."""
        return [c if i % 2 == 0 else -c for i, c in enumerate(self.lambdas(x))]

    def trace(self, x: AlgebraElem) -> RingElem:
        return self.lambda_i(x, 1)

    # provider protocol used by Amitsur and the Gram test
    def lam(self, x, k):
        return self.lambda_i(x, k)

    def mul(self, x, y):
        return self.algebra.mul(x, y)

    def element(self, g: int, ring: Ring | None = None) -> AlgebraElem:
        return AlgebraElem.basis(g, ring or self.base)


class MatrixDetLaw(DeterminantLaw):
    """det of the linear extension of basis images; a law on the span of the basis.

    The images need not be multiplicative (that is what fuzzing detects).
    """

    def __init__(self, images, base: Ring, algebra):
        self.images = tuple(images)
        self.base = base
        self.algebra = algebra
        self.dimension = self.images[0].nrows if self.images else 0
        self._lifted = {base: self.images}

    def _images_over(self, B: Ring):
        if B not in self._lifted:
            self._lifted[B] = tuple(M.lift(B) for M in self.images)
        return self._lifted[B]

    def matrix_of(self, x: AlgebraElem) -> Matrix:
        B = x.ring
        imgs = self._images_over(B)
        d = self.dimension
        acc = [[B.zero_p()] * d for _ in range(d)]
        add, mul = B.add_p, B.mul_p
        for k, c in x.terms.items():
            M = imgs[k]
            for i in range(d):
                row, Mi = acc[i], M.rows[i]
                for j in range(d):
                    if not B.is_zero_p(Mi[j].v):
                        row[j] = add(row[j], mul(c.v, Mi[j].v))
        return Matrix._raw(B, tuple(tuple(RingElem(B, v) for v in r) for r in acc))

    def evaluate(self, x):
        return self.matrix_of(x).det()

    def lambdas(self, x):
        return lambdas_of(self.matrix_of(x))


class CharacterLaw(DeterminantLaw):
    """Dimension 1: D(sum c_g g) = sum c_g chi(g)."""

    def __init__(self, table: FiniteMonoidTable, values, base: Ring | None = None):
        self.values = tuple(values)
        self.base = base or self.values[0].ring
        self.algebra = table
        self.dimension = 1

    def evaluate(self, x):
        B = x.ring
        acc = B.zero()
        for g, c in x.terms.items():
            acc = acc + c * B.lift(self.values[g])
        return acc


class PowerLaw(DeterminantLaw):
    """D^m: a law of dimension m * dim(D)."""

    def __init__(self, inner: DeterminantLaw, m: int):
        self.inner = inner
        self.m = m
        self.base = inner.base
        self.algebra = inner.algebra
        self.dimension = inner.dimension * m

    def evaluate(self, x):
        return self.inner.evaluate(x) ** self.m


class MatrixLambdas:
    """Provider on raw matrices: lam(M, k) = Lambda_k(M), mul = matrix product."""

    def lam(self, M: Matrix, k: int) -> RingElem:
        if k > M.nrows:
            return M.ring.zero()
        return lambdas_of(M)[k]

    def mul(self, A: Matrix, B: Matrix) -> Matrix:
        return A * B


class MatrixRep:
    """A representation of a finite monoid by d x d matrices over a ring."""

    def __init__(self, table: FiniteMonoidTable, images, ring: Ring | None = None, validate: bool = True):
        if isinstance(images, dict):
            images = [images[k] for k in range(table.size)]
        images = list(images)
        if len(images) != table.size:
            raise InvalidRepresentation(f"need {table.size} images, got {len(images)}")
        self.ring = ring or images[0].ring
        self.table = table
        self.images = tuple(images)
        self.d = images[0].nrows
        for k, M in enumerate(images):
            if M.nrows != M.ncols:
                raise NonSquare(f"image of {k}")
            if M.nrows != self.d:
                raise DimensionMismatch(f"image of {k} has size {M.nrows}, expected {self.d}")
            if M.ring != self.ring:
                raise InvalidRepresentation(f"image of {k} lives over {M.ring}")
        if validate:
            self._validate()

    def _validate(self):
        T = self.table
        if self.images[T.identity] != Matrix.identity(self.d, self.ring):
            raise InvalidRepresentation("identity is not sent to the identity matrix")
        for x in range(T.size):
            for y in range(T.size):
                if self.images[T(x, y)] != self.images[x] * self.images[y]:
                    raise InvalidRepresentation(f"rho({x}*{y}) != rho({x}) rho({y})")

    @classmethod
    def from_generators(cls, table: FiniteMonoidTable, gens: dict, ring: Ring) -> "MatrixRep":
        """Extend images of generating elements along the table (then validate)."""
        d = next(iter(gens.values())).nrows if gens else 1
        images = {table.identity: Matrix.identity(d, ring)}
        queue = [table.identity]
        while queue:
            x = queue.pop(0)
            for g, M in gens.items():
                y = table(x, g)
                if y not in images:
                    images[y] = images[x] * M
                    queue.append(y)
        if len(images) != table.size:
            raise InvalidRepresentation("generators do not generate the monoid")
        return cls(table, images, ring)

    def law(self) -> MatrixDetLaw:
        return MatrixDetLaw(self.images, self.ring, self.table)

    def traces(self) -> list:
        return [M.trace() for M in self.images]

    def dets(self) -> list:
        return [M.det() for M in self.images]

    def change_ring(self, ring: Ring) -> "MatrixRep":
        return MatrixRep(self.table, [M.change_ring(ring) for M in self.images], ring)

    def direct_sum(self, other: "MatrixRep") -> "MatrixRep":
        R = self.ring
        out = []
        for A, B in zip(self.images, other.images):
            n, m = A.nrows, B.nrows
            z = R.zero()
            rows = [list(A.rows[i]) + [z] * m for i in range(n)]
            rows += [[z] * n + list(B.rows[i]) for i in range(m)]
            out.append(Matrix(R, rows))
        return MatrixRep(self.table, out, R)

    def to_json(self, include_group: bool = True) -> dict:
        data = {
            "d": self.d,
            "ring": self.ring.to_json(),
            "images": {str(k): [[self.ring.elem_to_json(x) for x in r] for r in M.rows]
                       for k, M in enumerate(self.images)},
        }
        if include_group:
            data["group"] = self.table.to_json()
        return data

    @classmethod
    def from_json(cls, data, table: FiniteMonoidTable | None = None) -> "MatrixRep":
        if not isinstance(data, dict):
            raise InvalidRepresentation("representation JSON must be an object")
        if "ring" not in data:
            raise InvalidRepresentation("representation JSON missing field 'ring'")
        ring = ring_from_json(data["ring"])
        if table is None:
            if "group" not in data:
                raise InvalidRepresentation("representation JSON missing field 'group' (or pass --group)")
            table = FiniteMonoidTable.from_json(data["group"])

        def mat(rows):
            return Matrix(ring, [[ring.elem_from_json(x) for x in r] for r in rows])

        if "images" in data:
            imgs = {int(k): mat(v) for k, v in data["images"].items()}
            if len(imgs) == table.size:
                rep = cls(table, imgs, ring)
            else:
                rep = cls.from_generators(table, imgs, ring)
        elif "generators" in data:
            rep = cls.from_generators(table, {int(k): mat(v) for k, v in data["generators"].items()}, ring)
        else:
            raise InvalidRepresentation("representation JSON missing field 'images'")
        if "d" in data and int(data["d"]) != rep.d:
            raise InvalidRepresentation(f"field 'd' says {data['d']} but images are {rep.d}x{rep.d}")
        return rep


def det_law_eval(law: DeterminantLaw, x: AlgebraElem) -> RingElem:
    return law.evaluate(x)


def lambda_i(law: DeterminantLaw, x: AlgebraElem, i: int) -> RingElem:
    return law.lambda_i(x, i)


def tensor_sigma_trace(matrices, sigma) -> RingElem:
    """Trace of (M_1 x ... x M_n) o P_sigma on the n-fold tensor power.

    P_sigma sends e_{a_1} x ... x e_{a_n} to e_{a_sigma(1)} x ... x e_{a_sigma(n)},
    so only the diagonal entries prod_k M_k[a_k, a_sigma(k)] are needed.
    """
    n = len(matrices)
    if len(sigma) != n:
        raise DimensionMismatch(f"permutation of degree {len(sigma)} for {n} matrices")
    if n == 0:
        raise DimensionMismatch("need at least one matrix")
    d = matrices[0].nrows
    R = matrices[0].ring
    for M in matrices:
        if M.nrows != d or M.ncols != d or M.ring != R:
            raise DimensionMismatch("matrices must share size and ring")
    add, mul = R.add_p, R.mul_p
    total = R.zero_p()
    rows = [M.rows for M in matrices]
    for a in itertools.product(range(d), repeat=n):
        p = R.one_p()
        for k in range(n):
            x = rows[k][a[k]][a[sigma[k]]].v
            if R.is_zero_p(x):
                p = None
                break
            p = mul(p, x)
        if p is not None:
            total = add(total, p)
    return RingElem(R, total)


def tensor_sigma_trace_dense(matrices, sigma) -> RingElem:
    """The same trace via the explicit d^n x d^n matrix (slow oracle)."""
    n = len(matrices)
    d = matrices[0].nrows
    R = matrices[0].ring
    big = matrices[0]
    for M in matrices[1:]:
        big = big.kron(M)
    N = d ** n
    idx = list(itertools.product(range(d), repeat=n))
    pos = {a: i for i, a in enumerate(idx)}
    rows = [[R.zero()] * N for _ in range(N)]
    for a in idx:
        b = tuple(a[sigma[k]] for k in range(n))
        rows[pos[b]][pos[a]] = R.one()
    P = Matrix(R, rows)
    return (big * P).trace()


# ---------------------------------------------------------------------------
# identity fuzzing


def _generic_in(R, law, elems, names):
    x = AlgebraElem.zero(R)
    for g, name in zip(elems, names):
        x = x + AlgebraElem.basis(g, R).scale(R.var(name))
    return x


def _numeric_in(R, elems, rng, bound=5):
    return AlgebraElem(R, {g: R(rng.randint(-bound, bound)) for g in elems})


def _report_terms(diff: RingElem, limit: int = 5) -> list:
    if hasattr(diff.ring, "terms"):
        return [f"{c}*{dict(zip(diff.ring.vars, e))}" for e, c in diff.ring.terms(diff)[:limit]]
    return [str(diff)]


def law_identity_fuzz(law: DeterminantLaw, checks=("multiplicativity", "swap"), trials: int = 5,
                      seed: int = 0, max_elements: int = 3, mode: str = "symbolic") -> dict:
    """Test D(xy) = D(x)D(y) and D(1 + r r') = D(1 + r' r) on generic elements.

    Each trial draws up to ``max_elements`` basis elements per argument.  In
    symbolic mode the arguments are sums t_i g_i over fresh variables, so an
    identity that holds is proved on that support; in numeric mode random
    integer coefficients are used instead.
    """
    n = law.algebra.dim
    base = law.base
    violations = []
    runs = 0
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        k1 = rng.randint(1, min(max_elements, n))
        k2 = rng.randint(1, min(max_elements, n))
        e1 = sorted(rng.sample(range(n), k1))
        e2 = sorted(rng.sample(range(n), k2))
        if mode == "symbolic":
            names = [f"a{i}" for i in range(k1)] + [f"b{i}" for i in range(k2)]
            R = Poly(base, names)
            x = _generic_in(R, law, e1, names[:k1])
            y = _generic_in(R, law, e2, names[k1:])
        else:
            R = base
            x = _numeric_in(R, e1, rng)
            y = _numeric_in(R, e2, rng)
        for check in checks:
            runs += 1
            if check == "multiplicativity":
                diff = law.evaluate(law.mul(x, y)) - law.evaluate(x) * law.evaluate(y)
            elif check == "swap":
                one = law.algebra.one(R)
                diff = law.evaluate(one + law.mul(x, y)) - law.evaluate(one + law.mul(y, x))
            else:
                raise ValueError(f"unknown check {check!r}")
            if not diff.is_zero():
                violations.append({
                    "check": check,
                    "trial": trial,
                    "elements": [e1, e2],
                    "monomials": _report_terms(diff),
                })
    return {"checks": list(checks), "runs": runs, "violations": violations, "ok": not violations}


def homogeneity_check(law: DeterminantLaw, x: AlgebraElem) -> bool:
    """D(b x) = b^d D(x) in a fresh variable b."""
    B = x.ring
    (name,) = fresh_names(B, 1, "b")
    Bb = Poly(B, [name])
    b = Bb.var(name)
    xb = x.lift(Bb)
    return law.evaluate(xb.scale(b)) == b ** law.dimension * law.evaluate(xb)


def factorial_unit(ring: Ring, d: int) -> bool:
    return ring(factorial(d)).is_unit()
