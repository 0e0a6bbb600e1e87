"""Central functions, the T^sigma formalism, polarizations and Newton relations.

Permutations are tuples in one-line notation on {0..n-1}: sigma[i] is the
image of i.  A cycle i -> sigma(i) -> ... contributes T(g_i g_sigma(i) ...).
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial

from .errors import DegreeMismatch, FactorialNotInvertible, NotCentral, TooLarge
from .groups import AlgebraElem, FiniteMonoidTable
from .matrices import Matrix
from .rings import Poly, Ring, RingElem, coefficients_in, fresh_names, series_ops

MAX_D = 5


@lru_cache(maxsize=None)
def cycles(sigma: tuple) -> tuple:
    """Cycles of sigma, each starting at its smallest index; fixed points included."""
    seen = set()
    out = []
    for i in range(len(sigma)):
        if i in seen:
            continue
        c = [i]
        seen.add(i)
        j = sigma[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = sigma[j]
        out.append(tuple(c))
    return tuple(out)


@lru_cache(maxsize=None)
def sign(sigma: tuple) -> int:
    s = 1
    for c in cycles(sigma):
        if len(c) % 2 == 0:
            s = -s
    return s


def compose(p: tuple, q: tuple) -> tuple:
    """(p q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> tuple:
    return tuple(itertools.permutations(range(n)))


class CentralFunction:
    """T : G -> A with T(gh) = T(hg), checked on construction."""

    def __init__(self, table: FiniteMonoidTable, values, d: int | None = None, check: bool = True):
        self.table = table
        self.values = tuple(values)
        self.ring = self.values[0].ring
        self.d = d
        if len(self.values) != table.size:
            raise DegreeMismatch(f"{len(self.values)} values for a monoid of size {table.size}")
        if check:
            for g in range(table.size):
                for h in range(g + 1, table.size):
                    if self.values[table(g, h)] != self.values[table(h, g)]:
                        raise NotCentral(f"T({g}*{h}) != T({h}*{g})")
            if d is not None and self.values[table.identity] != self.ring(d):
                raise NotCentral(f"T(1) = {self.values[table.identity]}, expected {d}")

    def __call__(self, g: int) -> RingElem:
        return self.values[g]

    def mul(self, g: int, h: int) -> int:
        return self.table(g, h)

    @classmethod
    def from_rep(cls, rep) -> "CentralFunction":
        return cls(rep.table, rep.traces(), rep.d)


class MatrixTrace:
    """T = trace on matrices, so tuples may be arbitrary matrices."""

    def __call__(self, M: Matrix) -> RingElem:
        return M.trace()

    def mul(self, A: Matrix, B: Matrix) -> Matrix:
        return A * B


def t_sigma(T, sigma, g) -> RingElem:
    """prod over cycles (i_1 ... i_r) of T(g_{i_1} ... g_{i_r})."""
    sigma = tuple(sigma)
    if len(sigma) != len(g):
        raise DegreeMismatch(f"permutation of degree {len(sigma)} for a {len(g)}-tuple")
    value = None
    for c in cycles(sigma):
        x = g[c[0]]
        for i in c[1:]:
            x = T.mul(x, g[i])
        v = T(x)
        value = v if value is None else value * v
    return value


def signed_sum(T, g, perms=None) -> RingElem:
    """sum over sigma in S_n of sign(sigma) T^sigma(g)."""
    n = len(g)
    total = None
    for sigma in perms or symmetric_group(n):
        v = t_sigma(T, sigma, g)
        v = v if sign(sigma) > 0 else -v
        total = v if total is None else total + v
    return total


def pseudochar_identity_check(T, d: int, tuples=None, exhaustive: bool = False, cap: int = 10 ** 5,
                              max_failures: int = 10) -> dict:
    """Evaluate sum sign(sigma) T^sigma over S_(d+1) on (d+1)-tuples."""
    if d + 1 > MAX_D + 1:
        raise TooLarge(f"d = {d} exceeds the cap {MAX_D}")
    if exhaustive:
        m = T.table.size
        if m ** (d + 1) > cap:
            raise TooLarge(f"{m}^{d + 1} tuples exceeds the cap {cap}")
        tuples = itertools.product(range(m), repeat=d + 1)
    checked = 0
    failures = []
    for tup in tuples:
        tup = tuple(tup)
        if len(tup) != d + 1:
            raise DegreeMismatch(f"tuple {tup} has length {len(tup)}, expected {d + 1}")
        checked += 1
        v = signed_sum(T, tup)
        if not v.is_zero():
            if len(failures) < max_failures:
                failures.append({"tuple": list(tup), "value": str(v)})
            else:
                failures.append(None)
    n_fail = len(failures)
    return {"checked": checked, "n_failures": n_fail,
            "failures": [f for f in failures if f is not None], "ok": n_fail == 0}


def full_polarization_det(T, g) -> RingElem:
    """psi = sum over S_d of sign(sigma) T^sigma(g_1, ..., g_d)."""
    if len(g) > MAX_D:
        raise TooLarge(f"d = {len(g)} exceeds the cap {MAX_D}")
    return signed_sum(T, tuple(g))


@lru_cache(maxsize=None)
def polarization_group(d: int) -> tuple:
    """(sigma, s(sigma)) for H = <S_d x S_d, tau> in S_2d, tau = prod (i, d+i).

    s is the signature on S_d x S_d and s(h tau) = -sign(h).
    """
    if d > MAX_D:
        raise TooLarge(f"d = {d} exceeds the cap {MAX_D}")
    tau = tuple(list(range(d, 2 * d)) + list(range(d)))
    out = []
    for p in symmetric_group(d):
        for q in symmetric_group(d):
            h = tuple(list(p) + [d + x for x in q])
            s = sign(p) * sign(q)
            out.append((h, s))
            out.append((compose(h, tau), -s))
    return tuple(out)


def partial_polarization_phi(T, g, h) -> RingElem:
    """phi_T(g_1..g_d, h_1..h_d) = sum over H of s(sigma) T^sigma."""
    if len(g) != len(h):
        raise DegreeMismatch(f"tuples of lengths {len(g)} and {len(h)}")
    d = len(g)
    tup = tuple(g) + tuple(h)
    total = None
    for sigma, s in polarization_group(d):
        v = t_sigma(T, sigma, tup)
        v = v if s > 0 else -v
        total = v if total is None else total + v
    return total


def lambdas_from_traces(powertraces, d: int, ring: Ring | None = None) -> list:
    """Newton: Lambda_i = (1/i) sum_{j=1..i} (-1)^(j-1) Lambda_(i-j) T(r^j); returns [L_1..L_d]."""
    p = list(powertraces)
    if len(p) < d:
        raise DegreeMismatch(f"need {d} power traces, got {len(p)}")
    ring = ring or p[0].ring
    for i in range(1, d + 1):
        if not ring(i).is_unit():
            raise FactorialNotInvertible(f"{i} is not a unit in {ring}")
    lam = [ring.one()]
    for i in range(1, d + 1):
        acc = ring.zero()
        for j in range(1, i + 1):
            term = lam[i - j] * p[j - 1]
            acc = acc + term if j % 2 == 1 else acc - term
        lam.append(acc * ring(i).inv())
    return lam[1:]


def newton_check(law, r: AlgebraElem, order: int) -> dict:
    """-t D'(1 - t r)/D(1 - t r) versus sum_{n<=N} Lambda_1(r^n) t^n mod t^(N+1)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    B = r.ring
    (name,) = fresh_names(B, 1, "t")
    Bt = Poly(B, [name])
    t = Bt.var(name)
    one = law.algebra.one(Bt)
    value = law.evaluate(one - r.lift(Bt).scale(t))
    lhs = series_ops("truncated_log_derivative", value, order, name)
    rhs = Bt.zero()
    power = law.algebra.one(B)
    for n in range(1, order + 1):
        power = law.mul(power, r)
        rhs = rhs + Bt.lift(law.lambda_i(power, 1)) * t ** n
    _, lparts = coefficients_in(lhs, name)
    _, rparts = coefficients_in(rhs, name)
    mismatches = [n for n in range(order + 1)
                  if lparts.get(n, None) != rparts.get(n, None)]
    return {"order": order, "lhs": str(lhs), "rhs": str(rhs), "ok": not mismatches,
            "mismatched_degrees": mismatches}


def power_traces(M: Matrix, d: int) -> list:
    out, P = [], M
    for _ in range(d):
        out.append(P.trace())
        P = P * M
    return out


def diagonal_expected(d: int) -> int:
    return factorial(d)
