"""Finite-dimensional algebras given by structure constants."""
from __future__ import annotations

from .errors import DimensionMismatch, InvalidTable, NotAField, UnsupportedExtension
from .groups import AlgebraElem, FiniteMonoidTable
from .linalg import Subspace, rref, solve_in_span
from .matrices import Matrix
from .rings import Ring, RingElem


class FinDimAlgebra:
    """Free module with basis b_0..b_(n-1) and products b_i b_j = sum c_ij^k b_k.

    ``products[i][j]`` is an AlgebraElem over ``ring``.  Optionally
    ``images`` embeds the basis into matrices, which gives the algebra a
    determinant law (see ``det_law``).
    """

    def __init__(self, ring: Ring, products, unit: AlgebraElem, labels=None, images=None,
                 validate: bool = True):
        self.ring = ring
        self.dim = len(products)
        self._prod = [[[(k, c.v) for k, c in sorted(p.terms.items())] for p in row] for row in products]
        self.unit = unit
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(self.dim))
        self.images = tuple(images) if images is not None else None
        self._lifted = {ring: self._prod}
        if validate:
            self.check()

    @property
    def size(self) -> int:
        return self.dim

    def product(self, i: int, j: int) -> AlgebraElem:
        return AlgebraElem(self.ring, {k: RingElem(self.ring, c) for k, c in self._prod[i][j]})

    def _prod_over(self, B: Ring):
        if B not in self._lifted:
            src = self.ring
            self._lifted[B] = [[[(k, B.lift_p(src, c)) for k, c in p] for p in row] for row in self._prod]
        return self._lifted[B]

    def mul(self, a: AlgebraElem, b: AlgebraElem) -> AlgebraElem:
        if b.ring != a.ring:
            # one side may live over a subring of the other
            try:
                b = b.lift(a.ring)
            except UnsupportedExtension:
                a = a.lift(b.ring)
        B = a.ring
        P = self._prod_over(B)
        add, mul = B.add_p, B.mul_p
        acc = {}
        for i, ci in a.terms.items():
            Pi = P[i]
            for j, cj in b.terms.items():
                cij = mul(ci.v, cj.v)
                for k, c in Pi[j]:
                    v = mul(cij, c)
                    acc[k] = add(acc[k], v) if k in acc else v
        return AlgebraElem._raw(B, {k: RingElem(B, v) for k, v in acc.items() if not B.is_zero_p(v)})

    def one(self, ring: Ring | None = None) -> AlgebraElem:
        ring = ring or self.ring
        return self.unit.lift(ring)

    def basis_elem(self, i: int, ring: Ring | None = None) -> AlgebraElem:
        return AlgebraElem.basis(i, ring or self.ring)

    def basis(self, ring: Ring | None = None) -> list:
        return [self.basis_elem(i, ring) for i in range(self.dim)]

    def vec(self, a: AlgebraElem) -> list:
        return a.to_vector(self.dim)

    def elem(self, v) -> AlgebraElem:
        return AlgebraElem(self.ring, {i: c for i, c in enumerate(v)})

    def power(self, a: AlgebraElem, n: int) -> AlgebraElem:
        out = self.one(a.ring)
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def check(self):
        n = self.dim
        b = self.basis()
        u = self.unit
        for i in range(n):
            if self.mul(u, b[i]) != b[i] or self.mul(b[i], u) != b[i]:
                raise InvalidTable(f"unit fails on basis element {i}")
        for i in range(n):
            for j in range(n):
                bij = self.product(i, j)
                for k in range(n):
                    if self.mul(bij, b[k]) != self.mul(b[i], self.product(j, k)):
                        raise InvalidTable(f"associativity fails at triple ({i}, {j}, {k})")

    def is_commutative(self) -> bool:
        return all(self._prod[i][j] == self._prod[j][i] for i in range(self.dim) for j in range(i))

    def left_mult_matrix(self, z: AlgebraElem) -> list:
        """Rows of the matrix of x -> z x in the basis (column j = z b_j)."""
        n = self.dim
        cols = [self.vec(self.mul(z, self.basis_elem(j, z.ring))) for j in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def regular_traces(self) -> list:
        """tr(L_{b_k}) for each basis element."""
        R = self.ring
        out = []
        for k in range(self.dim):
            acc = R.zero()
            for i in range(self.dim):
                for kk, c in self._prod[k][i]:
                    if kk == i:
                        acc = acc + RingElem(R, c)
            out.append(acc)
        return out

    def det_law(self):
        from .laws import MatrixDetLaw

        if self.images is None:
            raise InvalidTable("algebra has no matrix model")
        return MatrixDetLaw(self.images, self.ring, self)

    def ideal_elements(self, sub: Subspace) -> list:
        return [self.elem(v) for v in sub.basis]

    def __repr__(self):
        return f"FinDimAlgebra(dim={self.dim}, ring={self.ring})"

    # constructors ------------------------------------------------------
    @classmethod
    def from_monoid(cls, table: FiniteMonoidTable, ring: Ring) -> "FinDimAlgebra":
        prods = [[AlgebraElem.basis(table(i, j), ring) for j in range(table.size)] for i in range(table.size)]
        return cls(ring, prods, AlgebraElem.basis(table.identity, ring), labels=table.labels, validate=False)

    @classmethod
    def matrix_algebra(cls, d: int, ring: Ring) -> "FinDimAlgebra":
        """M_d with basis E_ij (index i*d + j)."""
        return cls._from_units(d, ring, [(i, j) for i in range(d) for j in range(d)])

    @classmethod
    def upper_triangular(cls, d: int, ring: Ring) -> "FinDimAlgebra":
        return cls._from_units(d, ring, [(i, j) for i in range(d) for j in range(i, d)])

    @classmethod
    def _from_units(cls, d, ring, pairs):
        index = {p: k for k, p in enumerate(pairs)}
        prods = []
        for (i, j) in pairs:
            row = []
            for (k, l) in pairs:
                row.append(AlgebraElem.basis(index[(i, l)], ring) if j == k else AlgebraElem.zero(ring))
            prods.append(row)
        unit = AlgebraElem(ring, {index[(i, i)]: ring.one() for i in range(d)})
        images = []
        for (i, j) in pairs:
            rows = [[ring.one() if (a, b) == (i, j) else ring.zero() for b in range(d)] for a in range(d)]
            images.append(Matrix(ring, rows))
        labels = [f"E{i + 1}{j + 1}" for i, j in pairs]
        return cls(ring, prods, unit, labels=labels, images=images, validate=False)

    @classmethod
    def diagonal(cls, n: int, ring: Ring) -> "FinDimAlgebra":
        """ring^n with orthogonal idempotent basis."""
        prods = [[AlgebraElem.basis(i, ring) if i == j else AlgebraElem.zero(ring) for j in range(n)]
                 for i in range(n)]
        unit = AlgebraElem(ring, {i: ring.one() for i in range(n)})
        return cls(ring, prods, unit, labels=[f"e{i + 1}" for i in range(n)], validate=False)

    @classmethod
    def from_matrices(cls, mats, ring: Ring) -> "FinDimAlgebra":
        """The span of the given matrices, assumed closed under products and containing 1."""
        if not ring.is_field:
            raise NotAField(f"{ring} is not a field")
        d = mats[0].nrows
        flat, piv = rref([M.flat() for M in mats], ring)
        basis = [Matrix(ring, [row[i * d:(i + 1) * d] for i in range(d)]) for row in flat]
        n = len(basis)

        def coords(M):
            c = solve_in_span(flat, piv, M.flat(), ring)
            if c is None:
                raise DimensionMismatch("span of matrices is not closed under products")
            return AlgebraElem(ring, dict(enumerate(c)))

        prods = [[coords(basis[i] * basis[j]) for j in range(n)] for i in range(n)]
        unit = coords(Matrix.identity(d, ring))
        return cls(ring, prods, unit, images=basis, validate=False)

    def quotient(self, ideal: Subspace):
        """Quotient by a two-sided ideal; returns (algebra, projection function).

        The quotient basis is the set of non-pivot coordinates of the ideal's
        rref basis; reduction modulo the ideal is exact.
        """
        keep = ideal.complement_indices()
        pos = {k: i for i, k in enumerate(keep)}
        R = self.ring

        def project(a: AlgebraElem) -> AlgebraElem:
            v = ideal.reduce(a.lift(R).to_vector(self.dim) if a.ring == R else a.to_vector(self.dim))
            return AlgebraElem(R, {pos[k]: v[k] for k in keep})

        prods = [[project(self.mul(self.basis_elem(i), self.basis_elem(j))) for j in keep] for i in keep]
        Q = FinDimAlgebra(R, prods, project(self.unit), labels=[self.labels[k] for k in keep],
                          validate=False)
        return Q, project
