"""Exact commutative rings used as coefficient contexts.

A ring context is a small frozen object (``Integers()``, ``PrimeField(7)``,
``PolynomialRing(base, ("t1", "t2"))``, ...).  Values are ``RingElem``
instances carrying their context and an immutable payload.  The contexts
implement arithmetic on raw payloads; ``RingElem`` only adds operator sugar
and the context check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    ContextMismatch,
    InvalidRing,
    NonUnitConstantTerm,
    NotAUnit,
    UnknownVariable,
    UnsupportedExtension,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class Ring:
    """Base class for ring contexts; subclasses are frozen dataclasses."""

    characteristic = 0
    is_field = False
    is_finite = False

    # payload level -----------------------------------------------------
    def zero_p(self):
        raise NotImplementedError

    def one_p(self):
        raise NotImplementedError

    def from_int_p(self, n: int):
        raise NotImplementedError

    def add_p(self, a, b):
        raise NotImplementedError

    def neg_p(self, a):
        raise NotImplementedError

    def mul_p(self, a, b):
        raise NotImplementedError

    def is_zero_p(self, a) -> bool:
        raise NotImplementedError

    def is_unit_p(self, a) -> bool:
        raise NotImplementedError

    def inv_p(self, a):
        raise NotImplementedError

    def is_nilpotent_p(self, a) -> bool:
        return self.is_zero_p(a)

    def hash_p(self, a) -> int:
        return hash(a)

    def str_p(self, a) -> str:
        return str(a)

    def canon_p(self, a):
        """Return the canonical form of a payload (identity on canonical input)."""
        return a

    def lift_p(self, src: "Ring", a):
        """Map a payload of ``src`` into this ring along the structure map."""
        if src == self:
            return a
        if isinstance(src, Integers):
            return self.from_int_p(a)
        raise UnsupportedExtension(f"cannot lift from {src} into {self}")

    # element level -----------------------------------------------------
    def elem(self, payload) -> "RingElem":
        return RingElem(self, payload)

    def zero(self) -> "RingElem":
        return RingElem(self, self.zero_p())

    def one(self) -> "RingElem":
        return RingElem(self, self.one_p())

    def __call__(self, x) -> "RingElem":
        if isinstance(x, RingElem):
            return self.lift(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return RingElem(self, self.from_int_p(x))
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def from_fraction(self, q: Fraction) -> "RingElem":
        den = self(q.denominator)
        return self(q.numerator) * den.inv()

    def parse(self, s: str) -> "RingElem":
        s = s.strip()
        try:
            return self.from_fraction(Fraction(s))
        except ValueError:
            raise InvalidRing(f"cannot parse {s!r} as an element of {self}") from None

    def lift(self, x: "RingElem") -> "RingElem":
        if x.ring == self:
            return x
        return RingElem(self, self.lift_p(x.ring, x.v))

    def convert(self, x: "RingElem") -> "RingElem":
        """Base change along a ring map that is not an extension (Z -> Z/n, Q -> F_p)."""
        if x.ring == self:
            return x
        src = x.ring
        if isinstance(src, Integers):
            return self(x.v)
        if isinstance(src, Rationals):
            return self.from_fraction(x.v)
        if isinstance(src, _Modular) and isinstance(self, _Modular):
            if src.modulus % self.modulus:
                raise UnsupportedExtension(f"no ring map {src} -> {self}")
            return self(x.v)
        return self.lift(x)

    def elements(self) -> Iterator["RingElem"]:
        raise InvalidRing(f"{self} is not finite")

    def to_json(self) -> dict:
        raise NotImplementedError

    def elem_to_json(self, x: "RingElem"):
        return str(x)

    def elem_from_json(self, data) -> "RingElem":
        if isinstance(data, (int, str)):
            return self(data)
        raise InvalidRing(f"bad element encoding {data!r} for {self}")


class RingElem:
    """An immutable element of a ring context."""

    __slots__ = ("ring", "v")

    def __init__(self, ring: Ring, v):
        self.ring = ring
        self.v = v

    def _other(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise ContextMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return RingElem(self.ring, self.ring.add_p(self.v, o.v))

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg_p(self.v))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return RingElem(self.ring, self.ring.add_p(self.v, self.ring.neg_p(o.v)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return RingElem(self.ring, self.ring.mul_p(self.v, o.v))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ring == other.ring and self.v == other.v
        if isinstance(other, (int, Fraction)):
            try:
                return self.v == self.ring(other).v
            except Exception:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.ring.hash_p(self.v)))

    def is_zero(self) -> bool:
        return self.ring.is_zero_p(self.v)

    def is_one(self) -> bool:
        return self.v == self.ring.one_p()

    def is_unit(self) -> bool:
        return self.ring.is_unit_p(self.v)

    def is_nilpotent(self) -> bool:
        return self.ring.is_nilpotent_p(self.v)

    def inv(self) -> "RingElem":
        if not self.ring.is_unit_p(self.v):
            raise NotAUnit(f"{self} is not a unit in {self.ring}")
        return RingElem(self.ring, self.ring.inv_p(self.v))

    def canonical(self) -> "RingElem":
        return RingElem(self.ring, self.ring.canon_p(self.v))

    def __repr__(self):
        return self.ring.str_p(self.v)

    __str__ = __repr__

    # polynomial conveniences
    def coeff(self, monomial) -> "RingElem":
        if not isinstance(self.ring, PolynomialRing):
            raise InvalidRing("coeff needs a polynomial context")
        return poly_coeff(self, monomial)

    def terms(self):
        if not isinstance(self.ring, PolynomialRing):
            raise InvalidRing("terms needs a polynomial context")
        return self.ring.terms(self)


# ---------------------------------------------------------------------------
# scalar contexts


@dataclass(frozen=True)
class Integers(Ring):
    characteristic = 0

    def zero_p(self):
        return 0

    def one_p(self):
        return 1

    def from_int_p(self, n):
        return int(n)

    def add_p(self, a, b):
        return a + b

    def neg_p(self, a):
        return -a

    def mul_p(self, a, b):
        return a * b

    def is_zero_p(self, a):
        return a == 0

    def is_unit_p(self, a):
        return a in (1, -1)

    def inv_p(self, a):
        return a

    def from_fraction(self, q):
        if q.denominator != 1:
            raise NotAUnit(f"{q.denominator} is not a unit in Z")
        return RingElem(self, q.numerator)

    def to_json(self):
        return {"kind": "Integers"}

    def __str__(self):
        return "ZZ"


@dataclass(frozen=True)
class Rationals(Ring):
    characteristic = 0
    is_field = True

    def zero_p(self):
        return Fraction(0)

    def one_p(self):
        return Fraction(1)

    def from_int_p(self, n):
        return Fraction(n)

    def add_p(self, a, b):
        return a + b

    def neg_p(self, a):
        return -a

    def mul_p(self, a, b):
        return a * b

    def is_zero_p(self, a):
        return a == 0

    def is_unit_p(self, a):
        return a != 0

    def inv_p(self, a):
        return 1 / a

    def canon_p(self, a):
        return Fraction(a)

    def from_fraction(self, q):
        return RingElem(self, Fraction(q))

    def to_json(self):
        return {"kind": "Rationals"}

    def __str__(self):
        return "QQ"


class _Modular(Ring):
    """Shared arithmetic for residue rings; payloads live in [0, modulus)."""

    is_finite = True

    @property
    def modulus(self) -> int:
        raise NotImplementedError

    @property
    def characteristic(self):
        return self.modulus

    def zero_p(self):
        return 0

    def one_p(self):
        return 1 % self.modulus

    def from_int_p(self, n):
        return int(n) % self.modulus

    def add_p(self, a, b):
        return (a + b) % self.modulus

    def neg_p(self, a):
        return (-a) % self.modulus

    def mul_p(self, a, b):
        return (a * b) % self.modulus

    def is_zero_p(self, a):
        return a == 0

    def is_unit_p(self, a):
        return math.gcd(a, self.modulus) == 1

    def inv_p(self, a):
        return pow(a, -1, self.modulus)

    def is_nilpotent_p(self, a):
        n = self.modulus
        return pow(a, n.bit_length(), n) == 0

    def canon_p(self, a):
        return a % self.modulus

    def elements(self):
        for k in range(self.modulus):
            yield RingElem(self, k)


@dataclass(frozen=True)
class IntegersMod(_Modular):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidRing(f"modulus must be an integer >= 2, got {self.n!r}")

    @property
    def modulus(self):
        return self.n

    @property
    def is_field(self):
        return _is_prime(self.n)

    def to_json(self):
        return {"kind": "Zmod", "n": self.n}

    def __str__(self):
        return f"Z/{self.n}"


@dataclass(frozen=True)
class PrimeField(_Modular):
    p: int

    is_field = True

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise InvalidRing(f"{self.p!r} is not prime")

    @property
    def modulus(self):
        return self.p

    def to_json(self):
        return {"kind": "Fp", "p": self.p}

    def __str__(self):
        return f"GF({self.p})"


# ---------------------------------------------------------------------------
# polynomial rings


def _grlex_key(exps):
    return (sum(exps), exps)


@dataclass(frozen=True)
class PolynomialRing(Ring):
    """Sparse multivariate polynomials.  Nested polynomial bases are flattened.

    A payload is a dict mapping exponent tuples (aligned with ``vars``) to
    nonzero base payloads.  Payload dicts are never mutated once built.
    """

    base: Ring
    vars: tuple

    def __post_init__(self):
        names = tuple(self.vars)
        base = self.base
        if isinstance(base, PolynomialRing):
            names = tuple(base.vars) + names
            base = base.base
        if len(set(names)) != len(names):
            raise InvalidRing(f"duplicate variable names in {names}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "vars", names)

    @property
    def characteristic(self):
        return self.base.characteristic

    @property
    def nvars(self):
        return len(self.vars)

    def _zero_exp(self):
        return (0,) * len(self.vars)

    def zero_p(self):
        return {}

    def one_p(self):
        return self.const_p(self.base.one_p())

    def const_p(self, c):
        if self.base.is_zero_p(c):
            return {}
        return {self._zero_exp(): c}

    def from_int_p(self, n):
        return self.const_p(self.base.from_int_p(n))

    def add_p(self, a, b):
        if not a:
            return b
        if not b:
            return a
        base = self.base
        out = dict(a)
        for e, c in b.items():
            if e in out:
                s = base.add_p(out[e], c)
                if base.is_zero_p(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return out

    def neg_p(self, a):
        neg = self.base.neg_p
        return {e: neg(c) for e, c in a.items()}

    def mul_p(self, a, b):
        if not a or not b:
            return {}
        base = self.base
        add, mul = base.add_p, base.mul_p
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = mul(ca, cb)
                if e in out:
                    out[e] = add(out[e], c)
                else:
                    out[e] = c
        return {e: c for e, c in out.items() if not base.is_zero_p(c)}

    def is_zero_p(self, a):
        return not a

    def is_nilpotent_p(self, a):
        return all(self.base.is_nilpotent_p(c) for c in a.values())

    def is_unit_p(self, a):
        z = self._zero_exp()
        if z not in a or not self.base.is_unit_p(a[z]):
            return False
        return all(self.base.is_nilpotent_p(c) for e, c in a.items() if e != z)

    def inv_p(self, a):
        # u = c0 (1 + m) with m nilpotent, so u^-1 = c0^-1 sum (-m)^k
        z = self._zero_exp()
        c0inv = self.base.inv_p(a[z])
        m = self.mul_p(self.const_p(c0inv), a)
        m = self.add_p(m, self.neg_p(self.one_p()))
        neg_m = self.neg_p(m)
        total, power = self.one_p(), self.one_p()
        while True:
            power = self.mul_p(power, neg_m)
            if not power:
                break
            total = self.add_p(total, power)
        return self.mul_p(total, self.const_p(c0inv))

    def canon_p(self, a):
        base = self.base
        return {tuple(e): base.canon_p(c) for e, c in a.items() if not base.is_zero_p(c)}

    def hash_p(self, a):
        h = self.base.hash_p
        return hash(frozenset((e, h(c)) for e, c in a.items()))

    def lift_p(self, src, a):
        if src == self:
            return a
        if isinstance(src, PolynomialRing):
            missing = [v for v in src.vars if v not in self.vars]
            if missing:
                raise UnsupportedExtension(f"variables {missing} not in {self}")
            pos = [self.vars.index(v) for v in src.vars]
            n = len(self.vars)
            out = {}
            for e, c in a.items():
                ne = [0] * n
                for k, p in zip(e, pos):
                    ne[p] = k
                cc = self.base.lift_p(src.base, c)
                if not self.base.is_zero_p(cc):
                    out[tuple(ne)] = cc
            return out
        return self.const_p(self.base.lift_p(src, a))

    def convert(self, x):
        if isinstance(x.ring, PolynomialRing) and x.ring.vars == self.vars:
            out = {}
            for e, c in x.v.items():
                cc = self.base.convert(RingElem(x.ring.base, c)).v
                if not self.base.is_zero_p(cc):
                    out[e] = cc
            return RingElem(self, out)
        if isinstance(x.ring, PolynomialRing):
            return Ring.convert(self, x)
        return RingElem(self, self.const_p(self.base.convert(x).v))

    def from_fraction(self, q):
        return RingElem(self, self.const_p(self.base.from_fraction(q).v))

    # user API
    def var(self, name: str) -> RingElem:
        if name not in self.vars:
            raise UnknownVariable(name)
        e = [0] * len(self.vars)
        e[self.vars.index(name)] = 1
        return RingElem(self, {tuple(e): self.base.one_p()})

    def gens(self):
        return [self.var(v) for v in self.vars]

    def const(self, c: RingElem) -> RingElem:
        return RingElem(self, self.const_p(self.base.lift(c).v))

    def monomial_exps(self, monomial) -> tuple:
        if isinstance(monomial, dict):
            e = [0] * len(self.vars)
            for name, k in monomial.items():
                if name not in self.vars:
                    raise UnknownVariable(name)
                e[self.vars.index(name)] = k
            return tuple(e)
        e = tuple(monomial)
        if len(e) != len(self.vars):
            raise UnknownVariable(f"exponent tuple {e} does not match {self.vars}")
        return e

    def terms(self, p: RingElem):
        """(exponent tuple, base coefficient) pairs in descending graded-lex order."""
        return [(e, RingElem(self.base, p.v[e])) for e in sorted(p.v, key=_grlex_key, reverse=True)]

    def str_p(self, a):
        if not a:
            return "0"
        parts = []
        for e in sorted(a, key=_grlex_key, reverse=True):
            c = self.base.str_p(a[e])
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            if not mono:
                parts.append(c)
            elif c == "1":
                parts.append(mono)
            elif c == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}" if isinstance(self.base, DualNumbers) else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {"kind": "Poly", "base": self.base.to_json(), "vars": list(self.vars)}

    def elem_to_json(self, x):
        return [
            [list(e), self.base.elem_to_json(RingElem(self.base, x.v[e]))]
            for e in sorted(x.v, key=_grlex_key, reverse=True)
        ]

    def elem_from_json(self, data):
        if isinstance(data, (int, str)):
            return self(data)
        out = RingElem(self, {})
        for e, c in data:
            cc = self.base.elem_from_json(c)
            out = out + RingElem(self, {self.monomial_exps(e): cc.v} if not cc.is_zero() else {})
        return out

    def __str__(self):
        return f"{self.base}[{','.join(self.vars)}]"


# ---------------------------------------------------------------------------
# dual numbers


@dataclass(frozen=True)
class DualNumbers(Ring):
    """A[eps] with eps^2 = 0; payload is the pair (a, b) for a + b*eps."""

    base: Ring

    @property
    def characteristic(self):
        return self.base.characteristic

    @property
    def is_finite(self):
        return self.base.is_finite

    def zero_p(self):
        z = self.base.zero_p()
        return (z, z)

    def one_p(self):
        return (self.base.one_p(), self.base.zero_p())

    def from_int_p(self, n):
        return (self.base.from_int_p(n), self.base.zero_p())

    def add_p(self, a, b):
        add = self.base.add_p
        return (add(a[0], b[0]), add(a[1], b[1]))

    def neg_p(self, a):
        neg = self.base.neg_p
        return (neg(a[0]), neg(a[1]))

    def mul_p(self, a, b):
        B = self.base
        return (B.mul_p(a[0], b[0]), B.add_p(B.mul_p(a[0], b[1]), B.mul_p(a[1], b[0])))

    def is_zero_p(self, a):
        return self.base.is_zero_p(a[0]) and self.base.is_zero_p(a[1])

    def is_unit_p(self, a):
        return self.base.is_unit_p(a[0])

    def is_nilpotent_p(self, a):
        return self.base.is_nilpotent_p(a[0])

    def inv_p(self, a):
        B = self.base
        ai = B.inv_p(a[0])
        return (ai, B.neg_p(B.mul_p(B.mul_p(ai, ai), a[1])))

    def canon_p(self, a):
        return (self.base.canon_p(a[0]), self.base.canon_p(a[1]))

    def hash_p(self, a):
        return hash((self.base.hash_p(a[0]), self.base.hash_p(a[1])))

    def lift_p(self, src, a):
        if src == self:
            return a
        if isinstance(src, DualNumbers):
            return (self.base.lift_p(src.base, a[0]), self.base.lift_p(src.base, a[1]))
        return (self.base.lift_p(src, a), self.base.zero_p())

    def from_fraction(self, q):
        return RingElem(self, (self.base.from_fraction(q).v, self.base.zero_p()))

    def make(self, a, b) -> RingElem:
        """The element a + b*eps, coercing both parts into the base."""
        A = self.base
        return RingElem(self, (A(a).v, A(b).v))

    def eps(self) -> RingElem:
        return RingElem(self, (self.base.zero_p(), self.base.one_p()))

    def parts(self, x: RingElem):
        return RingElem(self.base, x.v[0]), RingElem(self.base, x.v[1])

    def elements(self):
        for a in self.base.elements():
            for b in self.base.elements():
                yield RingElem(self, (a.v, b.v))

    def str_p(self, a):
        s0, s1 = self.base.str_p(a[0]), self.base.str_p(a[1])
        if self.base.is_zero_p(a[1]):
            return s0
        if self.base.is_zero_p(a[0]):
            return f"{s1}*eps"
        return f"{s0} + {s1}*eps"

    def to_json(self):
        return {"kind": "Dual", "base": self.base.to_json()}

    def elem_to_json(self, x):
        a, b = self.parts(x)
        return [self.base.elem_to_json(a), self.base.elem_to_json(b)]

    def elem_from_json(self, data):
        if isinstance(data, (int, str)):
            return self(data)
        return self.make(self.base.elem_from_json(data[0]), self.base.elem_from_json(data[1]))

    def __str__(self):
        return f"{self.base}[eps]"


# ---------------------------------------------------------------------------
# helpers


def Poly(base: Ring, vars: Iterable[str]) -> PolynomialRing:
    return PolynomialRing(base, tuple(vars))


def fresh_names(ring: Ring, n: int, prefix: str = "t") -> list:
    """n variable names with the given prefix not already used in ``ring``."""
    used = set(ring.vars) if isinstance(ring, PolynomialRing) else set()
    names, k = [], 1
    while len(names) < n:
        name = f"{prefix}{k}"
        if name not in used:
            names.append(name)
        k += 1
    return names


def extend(ring: Ring, names: Iterable[str]) -> PolynomialRing:
    """Adjoin polynomial variables to ``ring``."""
    return PolynomialRing(ring, tuple(names))


def ring_arith(op: str, a: RingElem, b: RingElem | None = None):
    """Functional form of the basic operations."""
    if b is not None and (not isinstance(b, RingElem) or a.ring != b.ring):
        raise ContextMismatch(f"{a.ring} vs {getattr(b, 'ring', type(b))}")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "eq":
        return a == b
    if op == "is_unit":
        return a.is_unit()
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown op {op!r}")


def poly_coeff(p: RingElem, monomial) -> RingElem:
    """Coefficient of a monomial (exponent tuple or {name: exponent}) in p."""
    R = p.ring
    if not isinstance(R, PolynomialRing):
        raise InvalidRing("poly_coeff needs a polynomial context")
    e = R.monomial_exps(monomial)
    return RingElem(R.base, p.v.get(e, R.base.zero_p()))


def coefficients_in(p: RingElem, var: str) -> tuple:
    """Split p by powers of one variable.

    Returns (coefficient ring, {k: coefficient of var^k}); the coefficient
    ring is the polynomial ring in the remaining variables (or the base).
    """
    R = p.ring
    if not isinstance(R, PolynomialRing) or var not in R.vars:
        raise UnknownVariable(var)
    pos = R.vars.index(var)
    rest = R.vars[:pos] + R.vars[pos + 1:]
    S = PolynomialRing(R.base, rest) if rest else R.base
    buckets: dict = {}
    for e, c in p.v.items():
        k = e[pos]
        if rest:
            buckets.setdefault(k, {})[e[:pos] + e[pos + 1:]] = c
        else:
            buckets[k] = c
    return S, {k: RingElem(S, v) for k, v in buckets.items()}


def coefficient_in(p: RingElem, var: str, k: int, target: Ring | None = None) -> RingElem:
    """Coefficient of var^k, optionally lifted into ``target``."""
    S, parts = coefficients_in(p, var)
    c = parts.get(k, S.zero())
    return target.lift(c) if target is not None else c


def from_coefficients(ring: PolynomialRing, var: str, coeffs: dict) -> RingElem:
    t = ring.var(var)
    out = ring.zero()
    for k, c in coeffs.items():
        out = out + ring.lift(c) * t ** k
    return out


def truncate(p: RingElem, var: str, order: int) -> RingElem:
    R = p.ring
    pos = R.vars.index(var)
    return RingElem(R, {e: c for e, c in p.v.items() if e[pos] <= order})


def series_ops(op: str, p: RingElem, order: int | None = None, var: str = "t") -> RingElem:
    """Truncated power-series operations in one variable of a polynomial context.

    op is "derivative", "truncated_inverse" or "truncated_log_derivative"
    (the latter is -t p'/p).  Other variables are treated as coefficients.
    """
    R = p.ring
    if not isinstance(R, PolynomialRing) or var not in R.vars:
        raise UnknownVariable(var)
    if op == "derivative":
        pos = R.vars.index(var)
        out = {}
        for e, c in p.v.items():
            if e[pos]:
                c2 = R.base.mul_p(R.base.from_int_p(e[pos]), c)
                if not R.base.is_zero_p(c2):
                    ne = e[:pos] + (e[pos] - 1,) + e[pos + 1:]
                    out[ne] = c2
        d = RingElem(R, out)
        return truncate(d, var, order) if order is not None else d
    if order is None:
        raise ValueError("truncated operations need an order")
    if op == "truncated_inverse":
        return _series_inverse(p, var, order)
    if op == "truncated_log_derivative":
        t = R.var(var)
        q = -t * series_ops("derivative", p, None, var) * _series_inverse(p, var, order)
        return truncate(q, var, order)
    raise ValueError(f"unknown series op {op!r}")


def _series_inverse(p: RingElem, var: str, order: int) -> RingElem:
    R = p.ring
    S, parts = coefficients_in(p, var)
    c0 = parts.get(0, S.zero())
    if not c0.is_unit():
        raise NonUnitConstantTerm(f"constant term {c0} is not a unit")
    c0inv = c0.inv()
    q = [c0inv]
    for n in range(1, order + 1):
        acc = S.zero()
        for k in range(1, n + 1):
            if k in parts:
                acc = acc + parts[k] * q[n - k]
        q.append(-c0inv * acc)
    return from_coefficients(R, var, dict(enumerate(q)))


# ---------------------------------------------------------------------------
# JSON


def ring_from_json(data) -> Ring:
    if isinstance(data, str):
        return parse_ring_name(data)
    if not isinstance(data, dict) or "kind" not in data:
        raise InvalidRing(f"ring description must be an object with 'kind': {data!r}")
    kind = data["kind"]
    try:
        if kind in ("Integers", "Z", "ZZ"):
            return Integers()
        if kind in ("Rationals", "Q", "QQ"):
            return Rationals()
        if kind == "Zmod":
            return IntegersMod(int(data["n"]))
        if kind == "Fp":
            return PrimeField(int(data["p"]))
        if kind == "Poly":
            return PolynomialRing(ring_from_json(data["base"]), tuple(data["vars"]))
        if kind == "Dual":
            return DualNumbers(ring_from_json(data["base"]))
    except KeyError as exc:
        raise InvalidRing(f"ring description {data!r} is missing field {exc}") from None
    raise InvalidRing(f"unknown ring kind {kind!r}")


def ring_to_json(ring: Ring) -> dict:
    return ring.to_json()


def parse_ring_name(s: str) -> Ring:
    """Short names for the command line: Z, Q, F7, Z/4, Zmod4, or a JSON object."""
    import json

    s = s.strip()
    if s.startswith("{"):
        return ring_from_json(json.loads(s))
    u = s.upper()
    if u in ("Z", "ZZ", "INTEGERS"):
        return Integers()
    if u in ("Q", "QQ", "RATIONALS"):
        return Rationals()
    for prefix in ("GF", "FP", "F"):
        if u.startswith(prefix) and u[len(prefix):].isdigit():
            return PrimeField(int(u[len(prefix):]))
    for prefix in ("Z/", "ZMOD"):
        if u.startswith(prefix) and u[len(prefix):].isdigit():
            return IntegersMod(int(u[len(prefix):]))
    raise InvalidRing(f"unknown ring name {s!r}")
