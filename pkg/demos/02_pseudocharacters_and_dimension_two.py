"""Traces of representations as pseudocharacters, and laws of dimension two.

Run: python3 demos/02_pseudocharacters_and_dimension_two.py
"""
from detlab.corpus import load_group, load_rep
from detlab.dim2 import (
    deformation_space_enumerate,
    dim2_from_pseudochar,
    odd_locus_symbolic,
    verify_dim2_axioms,
)
from detlab.pseudochar import CentralFunction, pseudochar_identity_check
from detlab.rings import PrimeField

rep = load_rep("S3_std")
T = CentralFunction.from_rep(rep)
print("S3 standard traces:", [str(t) for t in T.values])
print("degree 3 signed identity:", pseudochar_identity_check(T, 2, exhaustive=True)["ok"])
print("degree 2 signed identity:", pseudochar_identity_check(T, 1, exhaustive=True)["failures"][:2])

# rebuild the determinant from the trace alone (2 is invertible over Q)
law = dim2_from_pseudochar(T)
print("D recovered from T:", [str(d) for d in law.D])
for name, res in verify_dim2_axioms(law.T, law.D, law.table).items():
    print(f"  {name:12s} {'ok' if res.passed else 'fails at ' + str(res.witness)} ({res.checked} cases)")

# first-order deformations of the trivial law over F2[eps]
for g in ("trivial", "Z4", "Z2xZ2"):
    print(f"deformations of the trivial law on {g}:", len(deformation_space_enumerate(load_group(g), PrimeField(2))))

# reducibility locus for an odd conjugation: the Gram determinant is minus the square of the residual
rel = odd_locus_symbolic()
print("residual:", rel.residual, " gram_det:", rel.gram_det, " linear constant:", rel.linear_kappa)
