"""The universal determinant ring of a tiny group through symmetric tensors.

Run: python3 demos/04_universal_ring.py
"""
from detlab.corpus import load_group
from detlab.divpowers import field_points, product_decomposition_check, symmetric_poly_model, universal_det_ring
from detlab.rings import Integers, PrimeField, Rationals

U = universal_det_ring(load_group("Z2"), 2, Integers())
rep = U.report()
print("Z/2, d = 2 over Z: rank", rep["free_rank"], "torsion", rep["elementary_divisors"])
print("generators:", rep["generators"])
for r in rep["relations"]:
    print("  relation:", r)

UQ = universal_det_ring(load_group("Z2"), 2, Rationals())
print("rational points (L1, L2):", [tuple(str(c) for c in p) for p in UQ.points()])

U7 = universal_det_ring(load_group("S3"), 2, PrimeField(7), max_degree=2)
print("S3, d = 2 over F7: dimension", U7.dimension, "with", len(field_points(U7.quotient)), "points")

print("product decomposition d=3, m=(2,2):", product_decomposition_check(3, 2, 2)["ok"])
print("symmetric functions d=3:", symmetric_poly_model(3)["charpoly"])
