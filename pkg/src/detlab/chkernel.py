"""Cayley-Hamilton elements, the CH ideal, radicals, kernels and irreducibility."""
from __future__ import annotations

import itertools
import random

from .algebras import FinDimAlgebra
from .errors import (
    CertificationFailed,
    CharacteristicTooSmall,
    DegreeMismatch,
    DimensionMismatch,
    LawNotEvaluable,
    NotAField,
)
from .groups import AlgebraElem
from .laws import MatrixDetLaw, MatrixRep
from .linalg import Subspace, nullspace, rank, rref, solve_in_span
from .matrices import Matrix
from .rings import Integers, Poly, PolynomialRing, Rationals, RingElem, fresh_names


def chi_eval(law, algebra, r: AlgebraElem) -> AlgebraElem:
    """r^d - Lambda_1(r) r^(d-1) + ... + (-1)^d Lambda_d(r)."""
    d = law.dimension
    try:
        lams = law.lambdas(r)
    except (AttributeError, NotImplementedError) as exc:
        raise LawNotEvaluable(str(exc)) from None
    B = r.ring
    power = algebra.one(B)
    powers = [power]
    for _ in range(d):
        power = algebra.mul(power, r)
        powers.append(power)
    out = AlgebraElem.zero(B)
    for i in range(d + 1):
        term = powers[d - i].scale(lams[i])
        out = out + term if i % 2 == 0 else out - term
    return out


def chi_polarizations(law, algebra, elements) -> dict:
    """All coefficients chi_alpha of chi(t_1 r_1 + ... + t_n r_n), keyed by alpha."""
    if not elements:
        raise DegreeMismatch("need at least one element")
    B = elements[0].ring
    n = len(elements)
    names = fresh_names(B, n, "t")
    R = Poly(B, names)
    x = AlgebraElem.zero(R)
    for r, name in zip(elements, names):
        x = x + r.lift(R).scale(R.var(name))
    chi = chi_eval(law, algebra, x)
    nb = len(B.vars) if isinstance(B, PolynomialRing) else 0
    out: dict = {}
    for k, p in chi.terms.items():
        for e, c in p.v.items():
            alpha, rest = e[nb:], e[:nb]
            slot = out.setdefault(alpha, {})
            if nb:
                slot.setdefault(k, {})[rest] = c
            else:
                slot[k] = c
    return {alpha: AlgebraElem(B, {k: RingElem(B, v) for k, v in terms.items()})
            for alpha, terms in out.items()}


def chi_alpha(law, algebra, elements, alpha) -> AlgebraElem:
    alpha = tuple(alpha)
    if len(alpha) != len(elements):
        raise DegreeMismatch(f"alpha has {len(alpha)} entries for {len(elements)} elements")
    if sum(alpha) != law.dimension:
        raise DegreeMismatch(f"|alpha| = {sum(alpha)}, expected {law.dimension}")
    pol = chi_polarizations(law, algebra, elements)
    return pol.get(alpha, AlgebraElem.zero(elements[0].ring))


def _require_field(algebra):
    if not algebra.ring.is_field:
        raise NotAField(f"{algebra.ring} is not a field")


def ideal_closure(algebra: FinDimAlgebra, vectors) -> Subspace:
    """Smallest two-sided ideal containing the given coordinate vectors."""
    _require_field(algebra)
    S = Subspace(algebra.ring, algebra.dim, vectors)
    basis = algebra.basis()
    while True:
        new = []
        for v in S.basis:
            x = algebra.elem(v)
            for b in basis:
                new.append(algebra.vec(algebra.mul(b, x)))
                new.append(algebra.vec(algebra.mul(x, b)))
        S2 = S.extend(new)
        if S2.dim == S.dim:
            return S
        S = S2


def ch_ideal(law, algebra: FinDimAlgebra, max_arity: int | None = None) -> Subspace:
    """Two-sided ideal generated by the chi_alpha on tuples of basis elements."""
    _require_field(algebra)
    d = law.dimension
    arity = min(max_arity if max_arity is not None else d, algebra.dim)
    basis = algebra.basis()
    gens = []
    for n in range(1, arity + 1):
        for combo in itertools.combinations(range(algebra.dim), n):
            pol = chi_polarizations(law, algebra, [basis[c] for c in combo])
            for alpha, v in pol.items():
                if all(a >= 1 for a in alpha) and not v.is_zero():
                    gens.append(algebra.vec(v))
    return ideal_closure(algebra, gens)


def subspace_product(algebra, U: Subspace, V: Subspace) -> Subspace:
    vecs = []
    for u in U.basis:
        x = algebra.elem(u)
        for v in V.basis:
            vecs.append(algebra.vec(algebra.mul(x, algebra.elem(v))))
    return Subspace(algebra.ring, algebra.dim, vecs)


def ideal_power(algebra, J: Subspace, k: int) -> Subspace:
    P = J
    for _ in range(k - 1):
        P = subspace_product(algebra, P, J)
    return P


def is_two_sided_ideal(algebra, J: Subspace) -> bool:
    for v in J.basis:
        x = algebra.elem(v)
        for b in algebra.basis():
            if not J.contains(algebra.vec(algebra.mul(b, x))) or not J.contains(algebra.vec(algebra.mul(x, b))):
                return False
    return True


def radical(algebra: FinDimAlgebra) -> Subspace:
    """Kernel of (x, y) -> tr(L_{xy}); valid in characteristic 0 or p > dim."""
    _require_field(algebra)
    p = algebra.ring.characteristic
    if p != 0 and p <= algebra.dim:
        raise CharacteristicTooSmall(f"characteristic {p} <= dimension {algebra.dim}")
    n = algebra.dim
    tr = algebra.regular_traces()
    R = algebra.ring
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = R.zero()
            for k, c in algebra.product(i, j).terms.items():
                acc = acc + c * tr[k]
            row.append(acc)
        gram.append(row)
    J = Subspace(R, n, nullspace(gram, R))
    if not is_two_sided_ideal(algebra, J):
        raise CertificationFailed("trace-form kernel is not a two-sided ideal")
    if J.dim and ideal_power(algebra, J, n + 1).dim:
        raise CertificationFailed("trace-form kernel is not nilpotent")
    return J


def _as_matrix_law(source):
    if isinstance(source, MatrixRep):
        return source.law()
    if isinstance(source, MatrixDetLaw):
        return source
    raise LawNotEvaluable("kernel_of_det needs a matrix representation")


def kernel_of_det(source, certify: bool = True) -> Subspace:
    """ker(det o rho) as the preimage of the radical of the image algebra.

    ``source`` is a MatrixRep or a MatrixDetLaw (basis images plus algebra).
    With ``certify`` every spanning vector x is checked to satisfy
    Lambda_i(x y) = 0 for all i >= 1 and a generic y.
    """
    law = _as_matrix_law(source)
    k = law.base
    if not k.is_field:
        raise NotAField(f"{k} is not a field")
    n = len(law.images)
    S = FinDimAlgebra.from_matrices(list(law.images), k)
    rad = radical(S)
    cols = []
    flat_rows, piv = rref([M.flat() for M in S.images], k)
    for M in law.images:
        c = solve_in_span(flat_rows, piv, M.flat(), k)
        cols.append(rad.reduce(c))
    # rows of the map k^n -> S/Rad(S)
    A = [[cols[g][i] for g in range(n)] for i in range(S.dim)]
    ker = Subspace(k, n, nullspace(A, k, ncols=n))
    if certify and ker.dim:
        _certify_kernel(law, ker)
    return ker


def _certify_kernel(law, ker: Subspace):
    k = law.base
    n = len(law.images)
    names = [f"u{g}" for g in range(n)]
    R = Poly(k, names)
    y = AlgebraElem(R, {g: R.var(name) for g, name in zip(range(n), names)})
    for v in ker.basis:
        x = AlgebraElem(k, dict(enumerate(v))).lift(R)
        lams = law.lambdas(law.mul(x, y))
        if any(not c.is_zero() for c in lams[1:]):
            raise CertificationFailed(f"kernel vector {v} fails the generic Lambda check")


def kernel_power_vanishes(algebra, J: Subspace, d: int) -> bool:
    """All d-fold products of spanning vectors of J are zero."""
    elems = [algebra.elem(v) for v in J.basis]
    for combo in itertools.product(elems, repeat=d):
        x = combo[0]
        for y in combo[1:]:
            x = algebra.mul(x, y)
        if not x.is_zero():
            return False
    return True


def subalgebra_basis(generators, ring) -> Subspace:
    """Flattened basis of the unital algebra generated by square matrices."""
    if not generators:
        raise DimensionMismatch("need at least one generator")
    d = generators[0].nrows
    for g in generators:
        if g.nrows != d or g.ncols != d:
            raise DimensionMismatch("generators must be square of one size")
    if not ring.is_field:
        raise NotAField(f"{ring} is not a field")

    def unflat(v):
        return Matrix(ring, [v[i * d:(i + 1) * d] for i in range(d)])

    S = Subspace(ring, d * d, [Matrix.identity(d, ring).flat()])
    while True:
        new = [(unflat(v) * g).flat() for v in S.basis for g in generators]
        S2 = S.extend(new)
        if S2.dim == S.dim:
            return S
        S = S2


def subalgebra_span(generators, ring=None) -> int:
    ring = ring or generators[0].ring
    return subalgebra_basis(generators, ring).dim


def _field_of(ring):
    if ring.is_field:
        return ring, (lambda x: x)
    if isinstance(ring, Integers):
        Q = Rationals()
        return Q, Q.lift
    raise NotAField(f"{ring} is not a field")


def gram_irreducibility(provider, X, d: int, restarts: int = 20, seed: int = 0) -> dict:
    """Search X and its pairwise products for d^2 elements with unit trace Gram determinant."""
    cands = []
    for x in list(X) + [provider.mul(a, b) for a in X for b in X]:
        if x not in cands:
            cands.append(x)
    traces: dict = {}

    def tr(i, j):
        if (i, j) not in traces:
            traces[(i, j)] = provider.lam(provider.mul(cands[i], cands[j]), 1)
        return traces[(i, j)]

    ring = tr(0, 0).ring
    F, to_field = _field_of(ring)

    def gram(idx):
        return [[to_field(tr(i, j)) for j in idx] for i in idx]

    target = d * d
    full_rank = rank(gram(range(len(cands))), F)
    result = {"status": "exhausted", "certificate": None, "gram_det": None,
              "candidates": len(cands), "max_gram_rank": full_rank}
    if full_rank < target:
        return result
    rng = random.Random(seed)
    order = list(range(len(cands)))
    for attempt in range(restarts + 1):
        if attempt:
            rng.shuffle(order)
        chosen = []
        for c in order:
            trial = chosen + [c]
            if rank(gram(trial), F) == len(trial):
                chosen = trial
                if len(chosen) == target:
                    det = Matrix(ring, [[tr(i, j) for j in chosen] for i in chosen]).det()
                    if det.is_unit():
                        result.update(status="certificate", certificate=[cands[i] for i in chosen],
                                      certificate_indices=chosen, gram_det=det)
                        return result
                    break
    return result
