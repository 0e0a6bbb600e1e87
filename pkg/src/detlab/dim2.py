"""Two-dimensional determinants given by a pair (T, D) of functions on a group."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    CharacteristicNotTwo,
    EnumerationTooLarge,
    PreconditionViolated,
    PseudocharIdentityFails,
    TwoNotInvertible,
)
from .groups import AlgebraElem, FiniteMonoidTable
from .laws import DeterminantLaw, MatrixRep
from .matrices import Matrix
from .pseudochar import CentralFunction, pseudochar_identity_check
from .rings import DualNumbers, Poly, Rationals, Ring, RingElem


class Dim2Law(DeterminantLaw):
    """The quadratic law D(sum t_i g_i) = sum D(g_i) t_i^2 + sum_{i<j} f(g_i, g_j) t_i t_j.

    f(g, h) = T(g)T(h) - T(gh).  No axioms are checked here; see
    ``verify_dim2_axioms``.
    """

    def __init__(self, table: FiniteMonoidTable, T, D, base: Ring | None = None):
        self.table = table
        self.T = tuple(T)
        self.D = tuple(D)
        self.base = base or self.T[0].ring
        self.algebra = table
        self.dimension = 2

    def f(self, g: int, h: int) -> RingElem:
        return self.T[g] * self.T[h] - self.T[self.table(g, h)]

    def evaluate(self, x):
        return dim2_eval(self, x)

    @classmethod
    def from_rep(cls, rep: MatrixRep) -> "Dim2Law":
        if rep.d != 2:
            raise PreconditionViolated(f"representation has dimension {rep.d}, not 2")
        return cls(rep.table, rep.traces(), rep.dets(), rep.ring)

    def to_json(self) -> dict:
        R = self.base
        return {"ring": R.to_json(), "T": [R.elem_to_json(x) for x in self.T],
                "D": [R.elem_to_json(x) for x in self.D]}

    @classmethod
    def from_json(cls, data, table: FiniteMonoidTable) -> "Dim2Law":
        from .rings import ring_from_json

        for key in ("ring", "T", "D"):
            if key not in data:
                raise PreconditionViolated(f"law JSON missing field {key!r}")
        R = ring_from_json(data["ring"])
        T = [R.elem_from_json(x) for x in data["T"]]
        D = [R.elem_from_json(x) for x in data["D"]]
        if len(T) != table.size or len(D) != table.size:
            raise PreconditionViolated(f"T and D need {table.size} values")
        return cls(table, T, D, R)


def dim2_eval(law: Dim2Law, x: AlgebraElem) -> RingElem:
    B = x.ring
    items = sorted(x.terms.items())
    acc = B.zero()
    for i, (g, cg) in enumerate(items):
        acc = acc + B.lift(law.D[g]) * cg * cg
        for h, ch in items[i + 1:]:
            acc = acc + B.lift(law.f(g, h)) * cg * ch
    return acc


@dataclass
class AxiomResult:
    passed: bool
    witness: tuple | None = None
    checked: int = 0

    def as_dict(self):
        return {"passed": self.passed, "checked": self.checked,
                "witness": list(self.witness) if self.witness is not None else None}


AXIOMS = ("T(1)=2", "D_unit_hom", "a_central", "b_relation", "f_diagonal",
          "exdim2_i", "exdim2_ii", "exdim2_iii")


def verify_dim2_axioms(T, D, table: FiniteMonoidTable, stop_early: bool = False) -> dict:
    """Exhaustive check of the (T, D) axioms and of the conditions on f.

    Returns {axiom name: AxiomResult}.  With ``stop_early`` the first failing
    axiom ends the run (remaining axioms are omitted).
    """
    inv = table.require_inverses()
    G = range(table.size)
    e = table.identity
    T, D = list(T), list(D)
    R = T[0].ring

    def f(g, h):
        return T[g] * T[h] - T[table(g, h)]

    out = {}

    def record(name, gen):
        checked = 0
        for args, ok in gen:
            checked += 1
            if not ok:
                out[name] = AxiomResult(False, args, checked)
                return False
        out[name] = AxiomResult(True, None, checked)
        return True

    checks = [
        ("T(1)=2", lambda: [((e,), T[e] == R(2))]),
        ("D_unit_hom", lambda: itertools.chain(
            [((e,), D[e] == R.one())],
            (((g,), D[g].is_unit()) for g in G),
            (((g, h), D[table(g, h)] == D[g] * D[h]) for g in G for h in G))),
        ("a_central", lambda: (((g, h), T[table(g, h)] == T[table(h, g)]) for g in G for h in G)),
        ("b_relation", lambda: (((g, h), (D[g] * T[table(inv[g], h)] - T[g] * T[h] + T[table(g, h)]).is_zero())
                                for g in G for h in G)),
        ("f_diagonal", lambda: (((g,), f(g, g) == D[g] * 2) for g in G)),
        ("exdim2_i", lambda: (((g, h), D[table(g, h)] == D[g] * D[h]) for g in G for h in G)),
        ("exdim2_ii", lambda: (((h, h2, g), f(table(h, g), table(h2, g)) == f(h, h2) * D[g])
                               for h in G for h2 in G for g in G)),
        ("exdim2_iii", lambda: (((h, h2, g, g2),
                                 f(table(h, g), table(h2, g2)) + f(table(h, g2), table(h2, g)) == f(h, h2) * f(g, g2))
                                for h in G for h2 in G for g in G for g2 in G)),
    ]
    for name, gen in checks:
        ok = record(name, gen())
        if stop_early and not ok:
            break
    return out


def axioms_pass(report: dict) -> bool:
    return all(r.passed for r in report.values())


def report_to_json(report: dict) -> dict:
    return {k: v.as_dict() for k, v in report.items()}


def dim2_from_pseudochar(T: CentralFunction, check_identity: bool = True) -> Dim2Law:
    """D(g) = (T(g)^2 - T(g^2)) / 2; the resulting law is verified before returning."""
    R = T.ring
    two = R(2)
    if not two.is_unit():
        raise TwoNotInvertible(f"2 is not a unit in {R}")
    table = T.table
    if T(table.identity) != two:
        raise PseudocharIdentityFails("T(1) != 2")
    if check_identity:
        rep = pseudochar_identity_check(T, 2, exhaustive=True)
        if not rep["ok"]:
            raise PseudocharIdentityFails(f"witness {rep['failures'][0]}")
    half = two.inv()
    D = [(T(g) * T(g) - T(table(g, g))) * half for g in range(table.size)]
    law = Dim2Law(table, T.values, D, R)
    report = verify_dim2_axioms(law.T, law.D, table)
    if not axioms_pass(report):
        bad = {k: v.as_dict() for k, v in report.items() if not v.passed}
        raise PseudocharIdentityFails(f"constructed law fails axioms: {bad}")
    return law


# ---------------------------------------------------------------------------
# deformations over A[eps] in characteristic 2


def _require_char_two(base: Ring):
    if not (base(2)).is_zero():
        raise CharacteristicNotTwo(f"2 != 0 in {base}")


def tangent_parametrization(table: FiniteMonoidTable, base: Ring) -> set:
    """{(tau, delta)}: tau constant on cosets of G^2 with tau(1)=0, delta additive on G/G^2."""
    _require_char_two(base)
    H = set(table.squares_subgroup())
    G = range(table.size)
    # coset representative of each element
    cosets = []
    rep_of = {}
    for g in G:
        if g in rep_of:
            continue
        members = {table(g, h) for h in H}
        cosets.append(sorted(members))
        for m in members:
            rep_of[m] = len(cosets) - 1
    vals = [x.v for x in base.elements()]
    zero = base.zero_p()
    out = set()
    e_coset = rep_of[table.identity]
    for tv in itertools.product(vals, repeat=len(cosets)):
        if tv[e_coset] != zero:
            continue
        tau = tuple(tv[rep_of[g]] for g in G)
        for dv in itertools.product(vals, repeat=len(cosets)):
            delta = tuple(dv[rep_of[g]] for g in G)
            if all(delta[table(g, h)] == base.add_p(delta[g], delta[h]) for g in G for h in G):
                out.add((tau, delta))
    return out


def deformation_space_enumerate(table: FiniteMonoidTable, base: Ring, cap: int = 10 ** 6) -> list:
    """All (tau, delta) with (2 + eps tau, 1 + eps delta) a dimension-2 law over base[eps].

    Brute force over all pairs of functions, each checked against the full
    axiom list; the result is compared with the coset parametrization.
    """
    _require_char_two(base)
    table.require_inverses()
    vals = [x.v for x in base.elements()]
    m = table.size
    if len(vals) ** (2 * m) > cap:
        raise EnumerationTooLarge(f"{len(vals)}^{2 * m} candidates exceeds the cap {cap}")
    A = DualNumbers(base)
    two, one = base(2).v, base.one_p()
    e = table.identity
    zero = base.zero_p()
    found = []
    others = [g for g in range(m) if g != e]
    for tv in itertools.product(vals, repeat=len(others)):
        tau = [zero] * m
        for g, v in zip(others, tv):
            tau[g] = v
        T = [RingElem(A, (two, t)) for t in tau]
        for delta in itertools.product(vals, repeat=m):
            D = [RingElem(A, (one, dl)) for dl in delta]
            if axioms_pass(verify_dim2_axioms(T, D, table, stop_early=True)):
                found.append((tuple(tau), tuple(delta)))
    predicted = tangent_parametrization(table, base)
    if set(found) != predicted:
        raise PreconditionViolated(
            f"enumeration found {len(found)} deformations but the parametrization predicts {len(predicted)}")
    return found


def deformation_law(table: FiniteMonoidTable, base: Ring, tau, delta) -> Dim2Law:
    A = DualNumbers(base)
    two, one = base(2).v, base.one_p()
    T = [RingElem(A, (two, t if not isinstance(t, RingElem) else t.v)) for t in tau]
    D = [RingElem(A, (one, d if not isinstance(d, RingElem) else d.v)) for d in delta]
    return Dim2Law(table, T, D, A)


def factorI_probe(law: Dim2Law, table: FiniteMonoidTable | None = None, power: int | None = None) -> dict:
    """Products x of 2d spanning elements of I = ker(D_0) satisfy D(1 + t x y) = 1.

    D_0 is the reduction of the law mod eps, assumed trivial (T = 2, D = 1);
    y is a generic element with one fresh variable per group element.
    """
    from .chkernel import kernel_of_det
    from .corpus import trivial_rep

    table = table or law.table
    A = law.base
    k = A.base if isinstance(A, DualNumbers) else A
    power = power or 2 * law.dimension
    I = kernel_of_det(trivial_rep(table, law.dimension, k))
    span = [AlgebraElem(k, dict(enumerate(v))) for v in I.basis]
    names = ["t"] + [f"y{g}" for g in range(table.size)]
    R = Poly(A, names)
    t = R.var("t")
    y = AlgebraElem(R, {g: R.var(f"y{g}") for g in range(table.size)})
    one = table.one(R)
    checked, failures = 0, []
    seen = set()
    for combo in itertools.product(range(len(span)), repeat=power):
        x = span[combo[0]]
        for c in combo[1:]:
            x = table.mul(x, span[c])
        key = frozenset(x.terms.items())
        if key in seen:
            continue
        seen.add(key)
        checked += 1
        xr = x.lift(A).lift(R) if A != k else x.lift(R)
        value = law.evaluate(one + table.mul(xr, y).scale(t))
        if value != R.one():
            failures.append({"product_of": list(combo), "value": str(value)})
    return {"ideal_dim": I.dim, "products_checked": checked, "failures": failures, "ok": not failures}


# ---------------------------------------------------------------------------
# the odd reducible locus


def odd_reducibility_relation(c: Matrix, g: Matrix, allow_det_plus_one: bool = False):
    """(residual, gram_det) for x = tr g - 2, y = tr(cg) - 2, z = det g - 1.

    residual = x^2 - y^2 - 4(1 - x + y + z); gram_det = det(tr(x_i x_j)) for
    (x_i) = (1, c, g, cg).
    """
    if c.shape != (2, 2) or g.shape != (2, 2):
        raise PreconditionViolated("c and g must be 2x2")
    if not c.trace().is_zero():
        raise PreconditionViolated(f"tr(c) = {c.trace()}, expected 0")
    want = 1 if allow_det_plus_one else -1
    if c.det() != c.ring(want) and not (allow_det_plus_one and c.det() == c.ring(-1)):
        raise PreconditionViolated(f"det(c) = {c.det()}, expected {want}")
    R = c.ring
    x = g.trace() - 2
    y = (c * g).trace() - 2
    z = g.det() - 1
    residual = x * x - y * y - 4 * (1 - x + y + z)
    I = Matrix.identity(2, R)
    elems = [I, c, g, c * g]
    gram = Matrix(R, [[(a * b).trace() for b in elems] for a in elems])
    return residual, gram.det()


@dataclass
class OddLocusRelation:
    """Outcome of the symbolic comparison of residual and gram_det."""

    residual: RingElem
    gram_det: RingElem
    linear_kappa: RingElem | None
    square_kappa: RingElem | None


def _constant_ratio(num: RingElem, den: RingElem):
    """kappa with num = kappa * den if the ratio is a constant, else None."""
    R = num.ring
    if den.is_zero():
        return None
    e0 = max(den.v)
    kappa = R.base.elem(num.v.get(e0, R.base.zero_p())) * R.base.elem(den.v[e0]).inv()
    return kappa if num == R.const(kappa) * den else None


def odd_locus_symbolic() -> OddLocusRelation:
    """Expand both quantities for c = diag(1, -1) and a generic g over Q[a, b, e, f].

    Since both are conjugation invariant, this covers every c with
    tr c = 0 and det c = -1.  The constants returned are exact: linear_kappa
    solves residual = kappa * gram_det, square_kappa solves
    gram_det = kappa * residual^2; either is None when no constant works.
    """
    Q = Rationals()
    R = Poly(Q, ["a", "b", "e", "f"])
    a, b, e, f = R.gens()
    c = Matrix(R, [[1, 0], [0, -1]])
    g = Matrix(R, [[a, b], [e, f]])
    residual, gram = odd_reducibility_relation(c, g)
    return OddLocusRelation(residual, gram, _constant_ratio(residual, gram),
                            _constant_ratio(gram, residual * residual))
