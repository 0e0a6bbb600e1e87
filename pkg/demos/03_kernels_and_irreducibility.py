"""Cayley-Hamilton ideals, kernels of determinants and the trace Gram test.

Run: python3 demos/03_kernels_and_irreducibility.py
"""
from detlab.algebras import FinDimAlgebra
from detlab.chkernel import ch_ideal, gram_irreducibility, kernel_of_det, subalgebra_span
from detlab.corpus import load_rep
from detlab.groups import AlgebraElem
from detlab.rings import Rationals

# upper triangular 2x2 matrices: the determinant only sees the diagonal
T2 = FinDimAlgebra.upper_triangular(2, Rationals())
ker = kernel_of_det(T2.det_law())
print("kernel on T2 (basis E11, E12, E22):", [[str(x) for x in v] for v in ker.basis])

for name in ("S3_std_F7", "S3_std", "Z3_chi1_plus_chi2_F7", "Z3_rotation"):
    rep = load_rep(name)
    A = FinDimAlgebra.from_monoid(rep.table, rep.ring)
    law = rep.law()
    law.algebra = A
    CH = ch_ideal(law, A)
    X = [AlgebraElem.basis(g, rep.ring) for g in range(rep.table.size)]
    gram = gram_irreducibility(law, X, rep.d)
    print(f"{name}: dim A = {A.dim}, CH quotient {A.dim - CH.dim}, kernel {kernel_of_det(rep).dim}, "
          f"span {subalgebra_span(list(rep.images), rep.ring)}, Gram test {gram['status']}")
