"""Dense matrices over a ring context and the Berkowitz characteristic polynomial."""
from __future__ import annotations

from typing import Sequence

from .errors import ContextMismatch, DimensionMismatch, NonSquare
from .rings import Ring, RingElem


class Matrix:
    """Immutable dense matrix of RingElem entries over one context."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows):
        rows = tuple(tuple(ring(x) if not isinstance(x, RingElem) else x for x in r) for r in rows)
        for r in rows:
            if len(r) != len(rows[0]):
                raise DimensionMismatch("ragged rows")
            for x in r:
                if x.ring != ring:
                    raise ContextMismatch(f"entry {x} lives in {x.ring}, not {ring}")
        self.ring = ring
        self.rows = rows

    @classmethod
    def _raw(cls, ring, rows):
        m = cls.__new__(cls)
        m.ring = ring
        m.rows = rows
        return m

    @classmethod
    def identity(cls, n: int, ring: Ring) -> "Matrix":
        one, zero = ring.one(), ring.zero()
        return cls._raw(ring, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int, m: int, ring: Ring) -> "Matrix":
        z = ring.zero()
        return cls._raw(ring, tuple((z,) * m for _ in range(n)))

    @classmethod
    def diag(cls, ring: Ring, entries) -> "Matrix":
        n = len(entries)
        z = ring.zero()
        return cls(ring, [[entries[i] if i == j else z for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "Matrix"):
        if other.ring != self.ring:
            raise ContextMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix._raw(self.ring, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.ring, tuple(tuple(-a for a in r) for r in self.rows))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.ring(c) if not isinstance(c, RingElem) else c
        return Matrix._raw(self.ring, tuple(tuple(c * a for a in r) for r in self.rows))

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} * {other.shape}")
        R = self.ring
        add, mul, zero = R.add_p, R.mul_p, R.zero_p()
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    acc = add(acc, mul(a.v, b.v))
                row.append(RingElem(R, acc))
            out.append(tuple(row))
        return Matrix._raw(R, tuple(out))

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n: int) -> "Matrix":
        out = Matrix.identity(self.nrows, self.ring)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.ring, tuple(zip(*self.rows)))

    def trace(self) -> RingElem:
        if self.nrows != self.ncols:
            raise NonSquare(self.shape)
        acc = self.ring.zero()
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def charpoly(self) -> list:
        return berkowitz_charpoly(self)

    def det(self) -> RingElem:
        cp = berkowitz_charpoly(self)
        return cp[-1] if self.nrows % 2 == 0 else -cp[-1]

    def map(self, f, ring: Ring | None = None) -> "Matrix":
        ring = ring or self.ring
        return Matrix(ring, [[f(x) for x in r] for r in self.rows])

    def lift(self, ring: Ring) -> "Matrix":
        if ring == self.ring:
            return self
        return Matrix._raw(ring, tuple(tuple(ring.lift(x) for x in r) for r in self.rows))

    def change_ring(self, ring: Ring) -> "Matrix":
        return Matrix._raw(ring, tuple(tuple(ring.convert(x) for x in r) for r in self.rows))

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def flat(self) -> list:
        return [x for r in self.rows for x in r]

    def kron(self, other: "Matrix") -> "Matrix":
        self._check(other)
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append(tuple(a * b for a in r for b in s))
        return Matrix._raw(self.ring, tuple(rows))

    def tolist(self) -> list:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"


def matrix(ring: Ring, rows: Sequence[Sequence]) -> Matrix:
    return Matrix(ring, rows)


def berkowitz_charpoly(M: Matrix) -> list:
    """Coefficients [1, c1, ..., cd] of det(t - M) = sum c_i t^(d-i).

    Division free, so valid over any commutative ring; c_i = (-1)^i Lambda_i(M).
    """
    n = M.nrows
    if n != M.ncols:
        raise NonSquare(f"matrix of shape {M.shape}")
    R = M.ring
    add, mul, neg = R.add_p, R.mul_p, R.neg_p
    zero, one = R.zero_p(), R.one_p()
    A = [[x.v for x in r] for r in M.rows]
    if n == 0:
        return [R.one()]
    vect = [one, neg(A[0][0])]
    for r in range(1, n):
        row = A[r][:r]
        X = [A[i][r] for i in range(r)]
        toep = [one, neg(A[r][r])]
        for _ in range(r):
            acc = zero
            for a, b in zip(row, X):
                acc = add(acc, mul(a, b))
            toep.append(neg(acc))
            newX = []
            for i in range(r):
                acc = zero
                for j in range(r):
                    acc = add(acc, mul(A[i][j], X[j]))
                newX.append(acc)
            X = newX
        new = []
        for i in range(r + 2):
            acc = zero
            for j in range(min(i, r) + 1):
                if j < len(vect):
                    acc = add(acc, mul(toep[i - j], vect[j]))
            new.append(acc)
        vect = new
    return [RingElem(R, c) for c in vect]


def lambdas_of(M: Matrix) -> list:
    """[Lambda_0, ..., Lambda_d] of a square matrix (signs removed)."""
    cp = berkowitz_charpoly(M)
    return [c if i % 2 == 0 else -c for i, c in enumerate(cp)]


def cofactor_det(M: Matrix) -> RingElem:
    """Laplace expansion along the first row; slow, used as an oracle."""
    n = M.nrows
    if n != M.ncols:
        raise NonSquare(M.shape)
    if n == 0:
        return M.ring.one()
    if n == 1:
        return M.rows[0][0]
    total = M.ring.zero()
    for j in range(n):
        minor = Matrix._raw(M.ring, tuple(r[:j] + r[j + 1:] for r in M.rows[1:]))
        term = M.rows[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def companion(ring: Ring, coeffs) -> Matrix:
    """Companion matrix of t^d + coeffs[0] t^(d-1) + ... + coeffs[d-1].

    Columns are the images of 1, X, ..., X^(d-1) under multiplication by X.
    """
    d = len(coeffs)
    zero, one = ring.zero(), ring.one()
    rows = [[zero] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = one
    for i in range(d):
        rows[i][d - 1] = -coeffs[d - 1 - i]
    return Matrix(ring, rows)
