"""Characteristic polynomials without division, and Amitsur's formula.

Run: python3 demos/01_characteristic_polynomials.py
"""
import random

from detlab.laws import MatrixLambdas
from detlab.lyndon import amitsur_lambda, amitsur_terms, cfl_factorize
from detlab.matrices import Matrix, berkowitz_charpoly, companion
from detlab.rings import IntegersMod, Integers, Poly

ZZ = Integers()

# Berkowitz works over any commutative ring, here Z/4 where 2 is a zero divisor
M = Matrix(IntegersMod(4), [[2, 1], [3, 2]])
print("charpoly over Z/4:", berkowitz_charpoly(M))

# a symbolic companion matrix recovers its polynomial
R = Poly(ZZ, ["s", "p"])
s, p = R.gens()
print("companion of t^2 - s t + p:", berkowitz_charpoly(companion(R, [-s, p])))

# Lyndon factorization of a word, then Amitsur's expansion of Lambda_2(A + B)
print("CFL factorization of 'banana':", cfl_factorize("banana"))
rng = random.Random(1)
A = Matrix(ZZ, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
B = Matrix(ZZ, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
for word, fac, sign, value in amitsur_terms(MatrixLambdas(), [A, B], 2):
    print(f"  word {word}: factors {fac}, sign {sign:+d}, value {value}")
print("Lambda_2(A + B) via words:", amitsur_lambda(MatrixLambdas(), [A, B], 2))
print("det(A + B) directly:     ", (A + B).det())
