"""Finite monoids given by multiplication tables, and sparse algebra elements."""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import (
    ClosureTooLarge,
    ContextMismatch,
    IndexOutOfRange,
    InvalidTable,
    NoInverses,
    NotABijection,
)
from .rings import Poly, Ring, RingElem, fresh_names


class AlgebraElem:
    """Sparse linear combination of basis indices with coefficients in one ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            if not isinstance(c, RingElem):
                c = ring(c)
            elif c.ring != ring:
                raise ContextMismatch(f"coefficient in {c.ring}, expected {ring}")
            if not c.is_zero():
                clean[int(k)] = c
        self.ring = ring
        self.terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        a = cls.__new__(cls)
        a.ring = ring
        a.terms = terms
        return a

    @classmethod
    def basis(cls, i: int, ring: Ring) -> "AlgebraElem":
        return cls._raw(ring, {i: ring.one()})

    @classmethod
    def zero(cls, ring: Ring) -> "AlgebraElem":
        return cls._raw(ring, {})

    @classmethod
    def from_vector(cls, vec, ring: Ring | None = None) -> "AlgebraElem":
        ring = ring or vec[0].ring
        return cls(ring, {i: c for i, c in enumerate(vec)})

    def to_vector(self, n: int) -> list:
        z = self.ring.zero()
        return [self.terms.get(i, z) for i in range(n)]

    def coeff(self, i: int) -> RingElem:
        return self.terms.get(i, self.ring.zero())

    def _check(self, other):
        if not isinstance(other, AlgebraElem):
            raise TypeError(f"expected AlgebraElem, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ContextMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out[k] + c if k in out else c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return AlgebraElem._raw(self.ring, out)

    def __neg__(self):
        return AlgebraElem._raw(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AlgebraElem":
        if not isinstance(c, RingElem):
            c = self.ring(c)
        out = {}
        for k, v in self.terms.items():
            p = c * v
            if not p.is_zero():
                out[k] = p
        return AlgebraElem._raw(self.ring, out)

    def __mul__(self, c):
        if isinstance(c, AlgebraElem):
            raise TypeError("multiply algebra elements through their algebra (table.mul / algebra.mul)")
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AlgebraElem) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        return sorted(self.terms)

    def lift(self, ring: Ring) -> "AlgebraElem":
        if ring == self.ring:
            return self
        return AlgebraElem(ring, {k: ring.lift(c) for k, c in self.terms.items()})

    def map_coeffs(self, f, ring: Ring) -> "AlgebraElem":
        return AlgebraElem(ring, {k: f(c) for k, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*e{k}" for k, c in sorted(self.terms.items()))


class FiniteMonoidTable:
    """A finite monoid by its multiplication table; inverses are detected."""

    def __init__(self, size: int, identity: int, table, labels=None, inverse=None, validate=True):
        self.size = int(size)
        self.identity = int(identity)
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.size))
        self.perms = None
        if validate:
            self._validate()
        self.inverse = tuple(inverse) if inverse is not None else self._find_inverses()
        if inverse is not None:
            for x, y in enumerate(self.inverse):
                if self.table[x][y] != self.identity:
                    raise InvalidTable(f"inverse[{x}]={y} but {x}*{y}={self.table[x][y]}")

    @property
    def dim(self) -> int:
        return self.size

    def _validate(self):
        m, e, T = self.size, self.identity, self.table
        if len(T) != m or any(len(r) != m for r in T):
            raise InvalidTable(f"table must be {m}x{m}")
        if not 0 <= e < m:
            raise InvalidTable(f"identity {e} out of range")
        for r in T:
            for x in r:
                if not 0 <= x < m:
                    raise InvalidTable(f"entry {x} out of range")
        for x in range(m):
            if T[e][x] != x or T[x][e] != x:
                raise InvalidTable(f"identity fails at x={x}")
        for x in range(m):
            Tx = T[x]
            for y in range(m):
                Txy = T[Tx[y]]
                Ty = T[y]
                for z in range(m):
                    if Txy[z] != Tx[Ty[z]]:
                        raise InvalidTable(f"associativity fails at triple ({x}, {y}, {z})")
        if len(self.labels) != m:
            raise InvalidTable("labels length differs from size")

    def _find_inverses(self):
        inv = []
        for x in range(self.size):
            ys = [y for y in range(self.size)
                  if self.table[x][y] == self.identity and self.table[y][x] == self.identity]
            if not ys:
                return None
            inv.append(ys[0])
        return tuple(inv)

    @property
    def is_group(self) -> bool:
        return self.inverse is not None

    def require_inverses(self):
        if self.inverse is None:
            raise NoInverses("the monoid is not a group")
        return self.inverse

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, xs: Sequence[int]) -> int:
        out = self.identity
        for x in xs:
            out = self.table[out][x]
        return out

    def power(self, x: int, n: int) -> int:
        out = self.identity
        for _ in range(n):
            out = self.table[out][x]
        return out

    def one(self, ring: Ring) -> AlgebraElem:
        return AlgebraElem.basis(self.identity, ring)

    def delta(self, g: int, ring: Ring) -> AlgebraElem:
        if not 0 <= g < self.size:
            raise IndexOutOfRange(g)
        return AlgebraElem.basis(g, ring)

    def mul(self, a: AlgebraElem, b: AlgebraElem) -> AlgebraElem:
        return algebra_mul(a, b, self)

    def order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
            if k > self.size:
                raise InvalidTable(f"element {g} has no finite order")
        return k

    def squares_subgroup(self) -> list:
        """Elements of the subgroup generated by all squares, sorted."""
        gens = {self.table[g][g] for g in range(self.size)}
        H = {self.identity}
        frontier = list(H)
        while frontier:
            new = []
            for h in frontier:
                for s in gens:
                    x = self.table[h][s]
                    if x not in H:
                        H.add(x)
                        new.append(x)
            frontier = new
        return sorted(H)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "identity": self.identity,
            "table": [list(r) for r in self.table],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json(cls, data) -> "FiniteMonoidTable":
        if not isinstance(data, dict):
            raise InvalidTable("group JSON must be an object")
        if "permutations" in data:
            return monoid_from_permutations(data["permutations"], cap=int(data.get("cap", 5040)))
        try:
            return cls(data["size"], data["identity"], data["table"], data.get("labels"))
        except KeyError as exc:
            raise InvalidTable(f"group JSON missing field {exc}") from None

    def __repr__(self):
        return f"FiniteMonoidTable(size={self.size})"


def _compose(p, q):
    """(p*q)(i) = p(q(i)): apply q first."""
    return tuple(p[i] for i in q)


def monoid_from_permutations(generators, cap: int = 5040) -> FiniteMonoidTable:
    """Closure of permutations of {0..k-1} under composition.

    Elements are listed breadth first over generator words, generators tried
    in input order; element x*y means "apply y, then x".
    """
    gens = [tuple(int(i) for i in g) for g in generators]
    k = len(gens[0]) if gens else 0
    for g in gens:
        if len(g) != k or sorted(g) != list(range(k)):
            raise NotABijection(f"{list(g)} is not a permutation of 0..{k - 1}")
    ident = tuple(range(k))
    elems = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(x, g)
            if y not in index:
                if len(elems) >= cap:
                    raise ClosureTooLarge(f"closure exceeds cap {cap}")
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    table = [[index[_compose(x, y)] for y in elems] for x in elems]
    labels = ["e"] + ["".join(str(i) for i in p) for p in elems[1:]]
    G = FiniteMonoidTable(len(elems), 0, table, labels=labels, validate=False)
    G.perms = tuple(elems)
    return G


def algebra_mul(a: AlgebraElem, b: AlgebraElem, table: FiniteMonoidTable) -> AlgebraElem:
    """Convolution product in the monoid algebra."""
    if a.ring != b.ring:
        raise ContextMismatch(f"{a.ring} vs {b.ring}")
    R = a.ring
    add, mul = R.add_p, R.mul_p
    T = table.table
    m = table.size
    acc = {}
    for x, cx in a.terms.items():
        if not 0 <= x < m:
            raise IndexOutOfRange(x)
        Tx = T[x]
        for y, cy in b.terms.items():
            if not 0 <= y < m:
                raise IndexOutOfRange(y)
            z = Tx[y]
            p = mul(cx.v, cy.v)
            acc[z] = add(acc[z], p) if z in acc else p
    return AlgebraElem._raw(R, {z: RingElem(R, v) for z, v in acc.items() if not R.is_zero_p(v)})


def generic_element(elements: Sequence[int], table, base: Ring, prefix: str = "t"):
    """Sum t_i * delta_{g_i} over a ring with fresh variables appended.

    Returns (element, polynomial ring, variable names).
    """
    if not elements:
        raise IndexOutOfRange("generic_element needs at least one element")
    size = table.size if hasattr(table, "size") else table.dim
    for g in elements:
        if not 0 <= g < size:
            raise IndexOutOfRange(g)
    names = fresh_names(base, len(elements), prefix)
    R = Poly(base, names)
    x = AlgebraElem.zero(R)
    for g, name in zip(elements, names):
        x = x + AlgebraElem._raw(R, {g: R.var(name)})
    return x, R, names


def augmentation(a: AlgebraElem) -> RingElem:
    acc = a.ring.zero()
    for c in a.terms.values():
        acc = acc + c
    return acc


def cyclic_group(n: int) -> FiniteMonoidTable:
    return FiniteMonoidTable(n, 0, [[(i + j) % n for j in range(n)] for i in range(n)],
                             labels=["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)])


def direct_product(G: FiniteMonoidTable, H: FiniteMonoidTable) -> FiniteMonoidTable:
    pairs = [(g, h) for g in range(G.size) for h in range(H.size)]
    idx = {p: i for i, p in enumerate(pairs)}
    table = [[idx[(G(a[0], b[0]), H(a[1], b[1]))] for b in pairs] for a in pairs]
    labels = [f"({G.labels[g]},{H.labels[h]})" for g, h in pairs]
    return FiniteMonoidTable(len(pairs), idx[(G.identity, H.identity)], table, labels=labels)
