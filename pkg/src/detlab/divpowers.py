"""Symmetric tensors TS^d(R) as models of divided powers, and their abelianizations.

For a free algebra R with basis b_1..b_m, TS^d(R) has the orbit-sum basis
e_M = sum of b_{s_1} x ... x b_{s_d} over the distinct rearrangements s of a
multiset M.  The universal degree-d law sends x = sum c_j b_j to
x^{x d} = sum_M (prod_j c_j^{M_j}) e_M.
"""
from __future__ import annotations

import itertools
import random

import sympy
from collections import Counter
from fractions import Fraction
from math import comb, lcm

from .algebras import FinDimAlgebra
from .chkernel import ideal_closure
from .errors import InvalidTable, NotAField, TooLarge
from .groups import AlgebraElem, FiniteMonoidTable
from .lattice import contains, elementary_divisors, hnf, left_kernel, reduce_mod
from .laws import DeterminantLaw
from .linalg import Subspace, nullspace
from .matrices import Matrix, berkowitz_charpoly, companion
from .rings import Integers, Poly, Rationals, Ring, RingElem


def multisets(m: int, d: int) -> list:
    return list(itertools.combinations_with_replacement(range(m), d))


def orbit(M: tuple) -> list:
    return sorted(set(itertools.permutations(M)))


class SymTensorAlgebra(FinDimAlgebra):
    """TS^d of a finite-dimensional algebra, with the orbit-sum basis."""

    def __init__(self, base_algebra: FinDimAlgebra, d: int, products, unit, basis_multisets, validate):
        self.base_algebra = base_algebra
        self.degree = d
        self.multisets = basis_multisets
        self.index = {M: i for i, M in enumerate(basis_multisets)}
        labels = ["{" + ",".join(base_algebra.labels[j] for j in M) + "}" for M in basis_multisets]
        super().__init__(base_algebra.ring, products, unit, labels=labels, validate=validate)


def ts_build(algebra: FinDimAlgebra, d: int, cap: int = 10 ** 6, validate: bool | None = None) -> SymTensorAlgebra:
    """Structure constants of TS^d(algebra) in the orbit-sum basis."""
    m = algebra.dim
    if m ** d > cap:
        raise TooLarge(f"{m}^{d} exceeds the cap {cap}")
    R = algebra.ring
    basis = multisets(m, d)
    index = {M: i for i, M in enumerate(basis)}
    orbits = [orbit(M) for M in basis]
    P = algebra._prod
    add, mul = R.add_p, R.mul_p
    products = []
    for oi in orbits:
        row = []
        for oj in orbits:
            acc = {}
            for s in oi:
                for u in oj:
                    # expand b_{s_1} b_{u_1} x ... x b_{s_d} b_{u_d}; keep sorted index tuples
                    partial = [((), R.one_p())]
                    for a, b in zip(s, u):
                        nxt = []
                        for seq, c in partial:
                            last = seq[-1] if seq else -1
                            for k, ck in P[a][b]:
                                if k >= last:
                                    nxt.append((seq + (k,), mul(c, ck)))
                        partial = nxt
                        if not partial:
                            break
                    for seq, c in partial:
                        key = index[seq]
                        acc[key] = add(acc[key], c) if key in acc else c
            row.append(AlgebraElem(R, {k: RingElem(R, v) for k, v in acc.items()}))
        products.append(row)
    unit = _universal_vector(algebra.unit, d, index)
    if validate is None:
        validate = len(basis) <= 40
    return SymTensorAlgebra(algebra, d, products, unit, basis, validate)


def _universal_vector(x: AlgebraElem, d: int, index: dict) -> AlgebraElem:
    B = x.ring
    support = sorted(x.terms)
    out = {}
    for M in itertools.combinations_with_replacement(support, d):
        c = B.one()
        for j, k in Counter(M).items():
            c = c * x.terms[j] ** k
        out[index[M]] = c
    return AlgebraElem(B, out)


def gamma_universal_image(g: AlgebraElem, ts: SymTensorAlgebra) -> AlgebraElem:
    """The element g^{x d} of TS^d, with coefficients in g's ring."""
    return _universal_vector(g, ts.degree, ts.index)


def lambda_vector(ts: SymTensorAlgebra, g: int, i: int) -> AlgebraElem:
    """Lambda_i(b_g) under the universal law, for a unit that is a basis element.

    Expanding (t b_e - b_g)^{x d} shows the coefficient of t^(d-i) is
    (-1)^i e_M with M = {e^(d-i), g^(i)}, so Lambda_i(b_g) = e_M.
    """
    A = ts.base_algebra
    R = ts.ring
    if len(A.unit.terms) != 1 or not A.unit.terms.get(next(iter(A.unit.terms))).is_one():
        raise InvalidTable("lambda_vector needs the unit to be a basis element")
    e = next(iter(A.unit.terms))
    M = tuple(sorted([e] * (ts.degree - i) + [g] * i))
    return AlgebraElem(R, {ts.index[M]: R.one()})


class UniversalGammaLaw(DeterminantLaw):
    """x -> class of x^{x d} in TS^d; values are vectors of the symmetric-tensor algebra.

    ``evaluate`` returns an AlgebraElem of ``ts`` (not a scalar), so this
    provider is used through ``evaluate_vector`` and the multiplicativity
    check rather than through scalar Lambda extraction.
    """

    def __init__(self, ts: SymTensorAlgebra):
        self.ts = ts
        self.base = ts.ring
        self.algebra = ts.base_algebra
        self.dimension = ts.degree

    def evaluate(self, x):
        return gamma_universal_image(x, self.ts)

    evaluate_vector = evaluate

    def is_multiplicative_on(self, x: AlgebraElem, y: AlgebraElem) -> bool:
        lhs = self.evaluate(self.algebra.mul(x, y))
        rhs = self.ts.mul(self.evaluate(x), self.evaluate(y))
        return lhs == rhs


# ---------------------------------------------------------------------------
# abelianization


def _commutators(algebra: FinDimAlgebra) -> list:
    out = []
    b = algebra.basis()
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            c = algebra.mul(b[i], b[j]) - algebra.mul(b[j], b[i])
            if not c.is_zero():
                out.append(algebra.vec(c))
    return out


class IntegralQuotient:
    """Z-algebra R / L with L the lattice of a two-sided ideal, computed by HNF."""

    def __init__(self, algebra: FinDimAlgebra, H, pivots):
        self.algebra = algebra
        self.H = H
        self.pivots = pivots
        self.divisors, self.free_rank = elementary_divisors(H, algebra.dim) if H else ([], algebra.dim)

    @property
    def ideal_rank(self) -> int:
        return len(self.H)

    def reduce(self, a: AlgebraElem) -> list:
        return reduce_mod(self.H, self.pivots, [x.v for x in a.to_vector(self.algebra.dim)])

    def is_zero(self, a: AlgebraElem) -> bool:
        return contains(self.H, self.pivots, [x.v for x in a.to_vector(self.algebra.dim)])

    def mul(self, a, b):
        return self.algebra.mul(a, b)

    def __repr__(self):
        return f"IntegralQuotient(free_rank={self.free_rank}, divisors={self.divisors})"


def abelianization(algebra: FinDimAlgebra):
    """Quotient by the two-sided ideal generated by commutators.

    Over a field: (quotient FinDimAlgebra, projection).  Over the integers:
    (IntegralQuotient, reduction map) carrying elementary divisors.
    """
    R = algebra.ring
    if R.is_field:
        J = ideal_closure(algebra, _commutators(algebra))
        return algebra.quotient(J)
    if isinstance(R, Integers):
        n = algebra.dim
        H, piv = hnf(_commutators(algebra), n) if _commutators(algebra) else ([], [])
        basis = algebra.basis()
        while True:
            new = [list(r) for r in H]
            for r in H:
                x = algebra.elem([R(v) for v in r])
                for b in basis:
                    new.append([c.v for c in algebra.vec(algebra.mul(b, x))])
                    new.append([c.v for c in algebra.vec(algebra.mul(x, b))])
            H2, piv2 = hnf(new, n) if new else ([], [])
            if H2 == H:
                break
            H, piv = H2, piv2
        Q = IntegralQuotient(algebra, H, piv)
        return Q, Q.reduce
    raise NotAField(f"abelianization needs a field or the integers, got {R}")


def commutator_cokernel(algebra: FinDimAlgebra) -> Subspace:
    """Linear span [A, A] of commutators (no ideal closure), over a field.

    A / [A, A] is the target of the universal trace; for a matrix algebra it
    is one-dimensional, while the algebra quotient by the generated ideal is 0.
    """
    R = algebra.ring
    if not R.is_field:
        raise NotAField(f"{R} is not a field")
    return Subspace(R, algebra.dim, _commutators(algebra))


# ---------------------------------------------------------------------------
# universal determinant rings


def _monomials(ngens: int, max_deg: int) -> list:
    out = []
    for deg in range(max_deg + 1):
        for combo in itertools.combinations_with_replacement(range(ngens), deg):
            out.append(combo)
    return out


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, RingElem) else c == 0


def _mono_str(names, combo) -> str:
    if not combo:
        return "1"
    parts = []
    for j, k in sorted(Counter(combo).items()):
        parts.append(names[j] if k == 1 else f"{names[j]}^{k}")
    return "*".join(parts)


def _poly_str(names, monos, coeffs) -> str:
    terms = []
    for c, combo in zip(coeffs, monos):
        if c == 0:
            continue
        m = _mono_str(names, combo)
        if m == "1":
            terms.append(str(c))
        elif c == 1:
            terms.append(m)
        elif c == -1:
            terms.append("-" + m)
        else:
            terms.append(f"{c}*{m}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


class UniversalDetRing:
    """Presentation data for Gamma^d(base[G])^ab with generators Lambda_i(g)."""

    def __init__(self, table: FiniteMonoidTable, d: int, base: Ring, max_degree: int = 4,
                 monomial_cap: int = 400):
        m = table.size
        if comb(m + d - 1, d) > 300:
            raise TooLarge(f"C({m + d - 1}, {d}) exceeds 300")
        self.table, self.d, self.base = table, d, base
        self.group_algebra = FinDimAlgebra.from_monoid(table, base)
        self.ts = ts_build(self.group_algebra, d)
        self.gen_pairs = [(i, g) for g in range(m) if g != table.identity for i in range(1, d + 1)]
        self.names = [f"L{i}({table.labels[g]})" for i, g in self.gen_pairs]
        self.gen_vectors = [lambda_vector(self.ts, g, i) for i, g in self.gen_pairs]
        if base.is_field:
            self.quotient, self.project = abelianization(self.ts)
            self.dimension = self.quotient.dim
            self.divisors, self.free_rank = [], self.quotient.dim
        else:
            self.quotient, self.project = abelianization(self.ts)
            self.dimension = self.ts.dim - self.quotient.ideal_rank
            self.divisors, self.free_rank = self.quotient.divisors, self.quotient.free_rank
        degree = max_degree
        while degree > 1 and len(_monomials(len(self.gen_pairs), degree)) > monomial_cap:
            degree -= 1
        self.relation_degree = degree
        self.monomials = _monomials(len(self.gen_pairs), degree)[::-1]

    def evaluate_monomial(self, combo) -> AlgebraElem:
        x = self.ts.one()
        for j in combo:
            x = self.ts.mul(x, self.gen_vectors[j])
        return x

    def _vec(self, a: AlgebraElem) -> list:
        """Coordinates in the quotient model (ints over Z, field elements otherwise)."""
        if self.base.is_field:
            return self.quotient.vec(self.project(a))
        return self.project(a)

    def relation_lattice(self, max_degree: int | None = None) -> list:
        """Basis of all linear relations among scanned monomials of degree <= max_degree.

        Rows are coefficient vectors indexed like ``self.monomials`` (highest
        degree first); entries for monomials above ``max_degree`` are zero.
        """
        cols = [i for i, c in enumerate(self.monomials) if max_degree is None or len(c) <= max_degree]
        vecs = [self._vec(self.evaluate_monomial(self.monomials[i])) for i in cols]
        zero = self.base.zero() if self.base.is_field else 0
        if self.base.is_field:
            F = self.base
            rows = [[v[k] for v in vecs] for k in range(len(vecs[0]))]
            rel = Subspace(F, len(vecs), nullspace(rows, F, ncols=len(vecs))).basis
        else:
            K = left_kernel(vecs + [list(r) for r in self.quotient.H], self.ts.dim)
            rel = [r for r in (k[:len(vecs)] for k in K) if any(r)]
            rel = hnf(rel, len(vecs))[0] if rel else []
        out = []
        for r in rel:
            full = [zero] * len(self.monomials)
            for i, c in zip(cols, r):
                full[i] = c
            out.append(full)
        return out

    def _shift(self, row, mono):
        """Coefficients of (relation row) * mono, or None if the degree overflows."""
        out = [self.base.zero() if self.base.is_field else 0] * len(self.monomials)
        for c, combo in zip(row, self.monomials):
            if _is_zero(c):
                continue
            key = tuple(sorted(combo + mono))
            if key not in self._mono_index:
                return None
            out[self._mono_index[key]] = c
        return out

    def generating_relations(self) -> list:
        """Relations not implied by lower-degree ones times monomials, within the scan degree."""
        self._mono_index = {c: i for i, c in enumerate(self.monomials)}
        kept, implied = [], []
        for k in range(1, self.relation_degree + 1):
            for r in self.relation_lattice(k):
                if self._in_span(implied, r):
                    continue
                kept.append(r)
                for mono in self.monomials:
                    shifted = self._shift(r, mono)
                    if shifted is not None:
                        implied.append(shifted)
        return kept

    def _in_span(self, rows, v) -> bool:
        if not rows:
            return False
        if self.base.is_field:
            return Subspace(self.base, len(v), rows).contains(v)
        H, piv = hnf(rows, len(v))
        return contains(H, piv, v)

    def relations(self) -> list:
        out = []
        for r in self.generating_relations():
            coeffs = [c.v if isinstance(c, RingElem) else c for c in r]
            out.append(_poly_str(self.names, self.monomials, coeffs))
        return out

    @property
    def symbols(self) -> dict:
        """sympy symbols s_i standing for the generators, keyed by generator name."""
        return {name: sympy.Symbol(f"x{j}") for j, name in enumerate(self.names)}

    def holds(self, relation) -> bool:
        """Does a polynomial relation in the generators vanish in the model?

        ``relation`` is a sympy expression in ``self.symbols`` or a dict from
        generator-index tuples to integer coefficients.
        """
        if not isinstance(relation, dict):
            syms = list(self.symbols.values())
            P = sympy.Poly(sympy.expand(relation), *syms)
            relation = {}
            for exps, c in P.terms():
                combo = tuple(j for j, e in enumerate(exps) for _ in range(e))
                c = Fraction(int(c.p), int(c.q))
                relation[combo] = int(c) if c.denominator == 1 else c
        acc = AlgebraElem.zero(self.ts.ring)
        for combo, c in relation.items():
            acc = acc + self.evaluate_monomial(tuple(sorted(combo))).scale(c)
        if self.base.is_field:
            return self.project(acc).is_zero()
        return self.quotient.is_zero(acc)

    def points(self) -> list:
        """Field points as tuples of generator values (base must be a field)."""
        Q = self.quotient
        gens = [Q.vec(self.project(v)) for v in self.gen_vectors]
        out = []
        for phi in field_points(Q):
            vals = tuple(sum((a * b for a, b in zip(phi, g)), self.base.zero()) for g in gens)
            out.append(vals)
        return sorted(out, key=lambda t: [c.v for c in t])

    def specialize(self, phi):
        """The determinant law x -> phi(class of x^{x d}) on the group algebra.

        ``phi`` is a field point as returned by ``field_points(self.quotient)``.
        """
        Q, ts, F = self.quotient, self.ts, self.base

        def D(x: AlgebraElem):
            v = Q.vec(self.project(gamma_universal_image(x, ts)))
            return sum((a * b for a, b in zip(phi, v)), F.zero())
        return D

    def report(self) -> dict:
        return {
            "dimension": self.dimension,
            "ts_dimension": self.ts.dim,
            "elementary_divisors": self.divisors,
            "free_rank": self.free_rank,
            "generators": self.names,
            "relations_up_to_degree": self.relation_degree,
            "relations": self.relations(),
        }


def universal_det_ring(table: FiniteMonoidTable, d: int, base: Ring, max_degree: int = 4) -> UniversalDetRing:
    return UniversalDetRing(table, d, base, max_degree)


# ---------------------------------------------------------------------------
# field points of a commutative algebra


def _field_roots(coeffs, F) -> list:
    """Roots in F of sum coeffs[i] t^(n-i) (F a prime field or Q)."""
    if isinstance(F, Rationals):
        den = 1
        for c in coeffs:
            den = lcm(den, c.v.denominator)
        ints = [int(c.v * den) for c in coeffs]
        roots = set()
        while ints and ints[-1] == 0:
            roots.add(Fraction(0))
            ints = ints[:-1]
        if len(ints) <= 1:
            return sorted(F(r) for r in roots) if roots else []
        lead, const = abs(ints[0]), abs(ints[-1])
        cands = {Fraction(p, q) * s for p in _divisors(const) for q in _divisors(lead) for s in (1, -1)}
        for r in cands:
            val = Fraction(0)
            for c in ints:
                val = val * r + c
            if val == 0:
                roots.add(r)
        return [F(r) for r in sorted(roots)]
    out = []
    for x in F.elements():
        val = F.zero()
        for c in coeffs:
            val = val * x + c
        if val.is_zero():
            out.append(x)
    return out


def _divisors(n: int) -> list:
    return [k for k in range(1, n + 1) if n % k == 0]


def field_points(algebra: FinDimAlgebra) -> list:
    """All algebra maps phi: A -> k for a commutative algebra over a field k.

    A point is a common eigenvector of the transposed multiplication
    operators; phi(b_i) is then the eigenvalue of b_i.  Returned as lists
    [phi(b_0), ..., phi(b_{n-1})].
    """
    F = algebra.ring
    if not F.is_field:
        raise NotAField(f"{F} is not a field")
    n = algebra.dim
    # M_i acts on functionals: (phi M_i)(b_j) = phi(b_i b_j)
    ops = [algebra.left_mult_matrix(algebra.basis_elem(i)) for i in range(n)]
    points = []

    def restrict(op, W):
        # matrix of phi -> phi*op on the row space W (rows are functionals)
        imgs = []
        for w in W.basis:
            img = [sum((w[k] * op[k][j] for k in range(n)), F.zero()) for j in range(n)]
            imgs.append(W.coordinates(img))
        return imgs

    def recurse(W, i, values):
        if W.dim == 0:
            return
        if i == n:
            points.append(values)
            return
        M = restrict(ops[i], W)
        if any(row is None for row in M):
            raise NotAField("subspace not invariant; is the algebra commutative?")
        cp = berkowitz_charpoly(Matrix(F, M)) if M else [F.one()]
        for lam in _field_roots(cp, F):
            # W_lam = {phi in W : phi*op = lam phi}
            eqs = []
            dimW = W.dim
            # coefficients a (phi = a W) with a (M - lam I) = 0
            for j in range(dimW):
                eqs.append([M[k][j] - (lam if k == j else F.zero()) for k in range(dimW)])
            sol = nullspace(eqs, F, ncols=dimW)
            vecs = []
            for a in sol:
                vecs.append([sum((a[k] * W.basis[k][j] for k in range(dimW)), F.zero()) for j in range(n)])
            recurse(Subspace(F, n, vecs), i + 1, values + [lam])

    recurse(Subspace.full(F, n), 0, [])
    unit = algebra.vec(algebra.unit)
    out = []
    for vals in points:
        # normalisation: phi(1) must be 1
        one = sum((u * v for u, v in zip(unit, vals)), F.zero())
        if one == F.one():
            out.append(vals)
    return out


# ---------------------------------------------------------------------------
# product decomposition


def product_decomposition_check(d: int, m1: int, m2: int, base: Ring | None = None, samples: int = 20,
                                seed: int = 0, S1: FinDimAlgebra | None = None,
                                S2: FinDimAlgebra | None = None) -> dict:
    """Gamma^d(S1 x S2) against prod_i Gamma^i(S1) (x) Gamma^(d-i)(S2) on orbit bases."""
    base = base or Integers()
    S1 = S1 or FinDimAlgebra.diagonal(m1, base)
    S2 = S2 or FinDimAlgebra.diagonal(m2, base)
    m1, m2 = S1.dim, S2.dim
    S = _product_algebra(S1, S2)
    lhs = ts_build(S, d)
    rhs_dim = sum(comb(m1 + i - 1, i) * comb(m2 + d - i - 1, d - i) for i in range(d + 1))
    parts = {i: (ts_build(S1, i) if i else None, ts_build(S2, d - i) if d - i else None) for i in range(d + 1)}

    def phi(M):
        M1 = tuple(k for k in M if k < m1)
        M2 = tuple(k - m1 for k in M if k >= m1)
        return len(M1), M1, M2

    images = [phi(M) for M in lhs.multisets]
    bijective = len(set(images)) == len(images) == rhs_dim

    def apply(x: AlgebraElem) -> dict:
        out = {}
        for k, c in x.terms.items():
            out[images[k]] = c
        return out

    def rhs_mul(u: dict, v: dict) -> dict:
        out = {}
        for (i, A1, A2), cu in u.items():
            for (j, B1, B2), cv in v.items():
                if i != j:
                    continue
                T1, T2 = parts[i]
                p1 = T1.mul(T1.basis_elem(T1.index[A1]), T1.basis_elem(T1.index[B1])) if T1 else None
                p2 = T2.mul(T2.basis_elem(T2.index[A2]), T2.basis_elem(T2.index[B2])) if T2 else None
                terms1 = [(T1.multisets[k], c) for k, c in p1.terms.items()] if T1 else [((), base.one())]
                terms2 = [(T2.multisets[k], c) for k, c in p2.terms.items()] if T2 else [((), base.one())]
                for N1, c1 in terms1:
                    for N2, c2 in terms2:
                        key = (i, N1, N2)
                        val = cu * cv * c1 * c2
                        out[key] = out[key] + val if key in out else val
        return {k: v for k, v in out.items() if not v.is_zero()}

    rng = random.Random(seed)
    compatible = True
    n = lhs.dim
    for _ in range(samples):
        a, b = rng.randrange(n), rng.randrange(n)
        prod = lhs.mul(lhs.basis_elem(a), lhs.basis_elem(b))
        if apply(prod) != rhs_mul(apply(lhs.basis_elem(a)), apply(lhs.basis_elem(b))):
            compatible = False
            break
    identity = comb(m1 + m2 + d - 1, d) == rhs_dim
    return {"d": d, "m1": m1, "m2": m2, "lhs_dim": lhs.dim, "rhs_dim": rhs_dim,
            "binomial_identity": identity, "bijective_on_orbits": bijective,
            "ring_map_compatible": compatible,
            "ok": identity and bijective and compatible and lhs.dim == rhs_dim}


def _product_algebra(S1: FinDimAlgebra, S2: FinDimAlgebra) -> FinDimAlgebra:
    R = S1.ring
    n1, n2 = S1.dim, S2.dim
    prods = []
    for i in range(n1 + n2):
        row = []
        for j in range(n1 + n2):
            if i < n1 and j < n1:
                row.append(S1.product(i, j))
            elif i >= n1 and j >= n1:
                p = S2.product(i - n1, j - n1)
                row.append(AlgebraElem(R, {k + n1: c for k, c in p.terms.items()}))
            else:
                row.append(AlgebraElem.zero(R))
        prods.append(row)
    unit = S1.unit + AlgebraElem(R, {k + n1: c for k, c in S2.unit.terms.items()})
    labels = [f"{l}'" for l in S1.labels] + [f"{l}''" for l in S2.labels]
    return FinDimAlgebra(R, prods, unit, labels=labels, validate=False)


def orbit_basis_is_idempotent(ts: SymTensorAlgebra) -> bool:
    """e_M e_N = delta_MN e_M and the e_M sum to 1 (the diagonal case)."""
    n = ts.dim
    for i in range(n):
        for j in range(n):
            p = ts.mul(ts.basis_elem(i), ts.basis_elem(j))
            want = ts.basis_elem(i) if i == j else AlgebraElem.zero(ts.ring)
            if p != want:
                return False
    total = AlgebraElem(ts.ring, {i: ts.ring.one() for i in range(n)})
    return total == ts.unit


# ---------------------------------------------------------------------------
# the symmetric-function model


def symmetric_poly_model(d: int) -> dict:
    """Companion matrix of the generic monic polynomial over Z[S1..Sd]."""
    if d > 4:
        raise TooLarge("d <= 4")
    names = [f"S{i}" for i in range(1, d + 1)]
    R = Poly(Integers(), names)
    S = R.gens()
    # t^d - S1 t^(d-1) + S2 t^(d-2) - ...
    coeffs = [S[i] if i % 2 == 1 else -S[i] for i in range(d)]
    C = companion(R, coeffs)
    generic = [R.one()] + [(-1) ** (i + 1) * S[i] for i in range(d)]
    cp = berkowitz_charpoly(C)
    charpoly_ok = cp == generic
    lambdas = [c if i % 2 == 0 else -c for i, c in enumerate(cp)]
    lambda_ok = all(lambdas[i] == S[i - 1] for i in range(1, d + 1))
    # generic linear f = a0 + a1 X, g = b0 + b1 X
    R2 = Poly(R, ["a0", "a1", "b0", "b1"])
    a0, a1, b0, b1 = (R2.var(v) for v in ("a0", "a1", "b0", "b1"))
    C2 = C.lift(R2)
    I = Matrix.identity(d, R2)
    F = I.scale(a0) + C2.scale(a1)
    G = I.scale(b0) + C2.scale(b1)
    mult_ok = (F * G).det() == F.det() * G.det()
    det_ok = C.det() == S[d - 1]
    return {"d": d, "charpoly": str(cp), "charpoly_is_generic": charpoly_ok,
            "lambda_i_equals_S_i": lambda_ok, "multiplicative": mult_ok,
            "det_equals_S_d": det_ok,
            "ok": charpoly_ok and lambda_ok and mult_ok and det_ok}
