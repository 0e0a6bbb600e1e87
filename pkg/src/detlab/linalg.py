"""Exact linear algebra over a field on lists of RingElem."""
from __future__ import annotations

from .errors import DimensionMismatch, NotAField
from .rings import Ring, RingElem


def _require_field(ring: Ring):
    if not ring.is_field:
        raise NotAField(f"{ring} is not a field")


def rref(rows, ring: Ring):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    _require_field(ring)
    R = ring
    M = [[x.v for x in r] for r in rows]
    ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if not R.is_zero_p(M[i][c])), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = R.inv_p(M[r][c])
        M[r] = [R.mul_p(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and not R.is_zero_p(M[i][c]):
                f = M[i][c]
                M[i] = [R.add_p(a, R.neg_p(R.mul_p(f, b))) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return [[RingElem(R, x) for x in row] for row in M[:r]], pivots


def rank(rows, ring: Ring) -> int:
    if not rows:
        return 0
    return len(rref(rows, ring)[1])


def nullspace(rows, ring: Ring, ncols: int | None = None) -> list:
    """Basis of {v : M v = 0} for M given by rows."""
    if not rows:
        n = ncols or 0
        return [[ring.one() if i == j else ring.zero() for i in range(n)] for j in range(n)]
    n = len(rows[0])
    E, piv = rref(rows, ring)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [ring.zero()] * n
        v[f] = ring.one()
        for row, p in zip(E, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def det(rows, ring: Ring) -> RingElem:
    from .matrices import Matrix

    return Matrix(ring, rows).det()


def solve_in_span(basis_rows, pivots, v, ring: Ring):
    """Coordinates of v in an rref basis, or None if v is not in the span."""
    R = ring
    w = [x.v for x in v]
    coords = []
    for row, p in zip(basis_rows, pivots):
        c = w[p]
        coords.append(RingElem(R, c))
        if not R.is_zero_p(c):
            w = [R.add_p(a, R.neg_p(R.mul_p(c, b.v))) for a, b in zip(w, row)]
    if any(not R.is_zero_p(x) for x in w):
        return None
    return coords


class Subspace:
    """A subspace of ring^n stored as an rref basis."""

    def __init__(self, ring: Ring, n: int, vectors=()):
        _require_field(ring)
        self.ring = ring
        self.n = n
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise DimensionMismatch(f"vector of length {len(v)} in a space of dimension {n}")
        if vecs:
            self.basis, self.pivots = rref(vecs, ring)
        else:
            self.basis, self.pivots = [], []

    @classmethod
    def zero(cls, ring, n):
        return cls(ring, n)

    @classmethod
    def full(cls, ring, n):
        return cls(ring, n, [[ring.one() if i == j else ring.zero() for i in range(n)] for j in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v) -> list:
        """Remainder of v after clearing the pivot coordinates."""
        R = self.ring
        w = [x.v for x in v]
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if not R.is_zero_p(c):
                w = [R.add_p(a, R.neg_p(R.mul_p(c, b.v))) for a, b in zip(w, row)]
        return [RingElem(R, x) for x in w]

    def contains(self, v) -> bool:
        return all(x.is_zero() for x in self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v):
        return solve_in_span(self.basis, self.pivots, v, self.ring)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ring, self.n, self.basis + other.basis)

    def extend(self, vectors) -> "Subspace":
        return Subspace(self.ring, self.n, self.basis + [list(v) for v in vectors])

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.n == other.n and self.pivots == other.pivots
                and self.basis == other.basis)

    def complement_indices(self) -> list:
        return [i for i in range(self.n) if i not in self.pivots]

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.n})"
