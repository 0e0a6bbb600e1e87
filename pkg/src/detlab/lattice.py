"""Integer lattices: Hermite normal form, left kernels and elementary divisors."""
from __future__ import annotations

from sympy import Matrix as _SymMatrix
from sympy import ZZ
from sympy.matrices.normalforms import invariant_factors


def hnf(rows, ncols: int, transform: bool = False):
    """Row Hermite normal form of the Z-span of ``rows``.

    Returns (H, pivots) or, with ``transform``, (H, pivots, U, kernel) where
    U A = H stacked over zero rows and ``kernel`` is a Z-basis of the left
    kernel {a : a A = 0}.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)] if transform else None

    def sub(i, k, q):
        A[i] = [a - q * b for a, b in zip(A[i], A[k])]
        if transform:
            U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    def swap(i, k):
        A[i], A[k] = A[k], A[i]
        if transform:
            U[i], U[k] = U[k], U[i]

    def negate(i):
        A[i] = [-a for a in A[i]]
        if transform:
            U[i] = [-a for a in U[i]]

    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][c]))
            if i0 != r:
                swap(r, i0)
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    sub(i, r, A[i][c] // A[r][c])
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if r < m and A[r][c]:
            if A[r][c] < 0:
                negate(r)
            for i in range(r):
                if A[i][c]:
                    sub(i, r, A[i][c] // A[r][c])
            pivots.append(c)
            r += 1
    H = A[:r]
    if not transform:
        return H, pivots
    kernel = U[r:]
    return H, pivots, U, kernel


def reduce_mod(H, pivots, v):
    """Canonical representative of v modulo the lattice with HNF basis H."""
    w = list(map(int, v))
    for row, c in zip(H, pivots):
        q = w[c] // row[c]
        if q:
            w = [a - q * b for a, b in zip(w, row)]
    return w


def contains(H, pivots, v) -> bool:
    return not any(reduce_mod(H, pivots, v))


def left_kernel(rows, ncols: int):
    """HNF basis of {a in Z^m : sum a_i rows_i = 0}."""
    if not rows:
        return []
    _, _, _, K = hnf(rows, ncols, transform=True)
    if not K:
        return []
    H, _ = hnf(K, len(rows))
    return H


def elementary_divisors(rows, ncols: int):
    """(nontrivial invariant factors, free rank) of Z^ncols / span(rows)."""
    H, _ = hnf(rows, ncols)
    if not H:
        return [], ncols
    inv = invariant_factors(_SymMatrix(H), domain=ZZ)
    nonzero = [int(abs(x)) for x in inv if x != 0]
    return [d for d in nonzero if d != 1], ncols - len(nonzero)
