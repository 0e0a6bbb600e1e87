"""Lyndon words, Chen-Fox-Lyndon factorization and Amitsur's formula.

Words are tuples of letter indices (strings are accepted and compared by
character).  Lexicographic order is Python's sequence order, in which a
proper prefix is smaller than the word.
"""
from __future__ import annotations

import itertools
import random

from .errors import EmptyWord, TooManyWords
from .matrices import Matrix, lambdas_of
from .laws import MatrixLambdas

WORD_CAP = 10 ** 6


def _word(w):
    w = tuple(w)
    if not w:
        raise EmptyWord("empty word")
    return w


def is_lyndon(w) -> bool:
    """True iff w is strictly smaller than each of its proper suffixes."""
    w = _word(w)
    return all(w < w[k:] for k in range(1, len(w)))


def cfl_factorize(w) -> list:
    """Duval's algorithm; returns [(lyndon factor, exponent), ...] nonincreasing."""
    w = _word(w)
    n = len(w)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        period = j - k
        count = 0
        while i <= k:
            count += 1
            i += period
        factors.append((w[i - count * period: i - (count - 1) * period], count))
    return _merge(factors)


def _merge(factors):
    out = []
    for f, c in factors:
        if out and out[-1][0] == f:
            out[-1] = (f, out[-1][1] + c)
        else:
            out.append((f, c))
    return out


def brute_force_factorizations(w) -> list:
    """All ways to write w as a nonincreasing product of Lyndon words (oracle)."""
    w = _word(w)
    results = []

    def rec(pos, prev, acc):
        if pos == len(w):
            results.append(_merge([(f, 1) for f in acc]))
            return
        for end in range(pos + 1, len(w) + 1):
            f = w[pos:end]
            if is_lyndon(f) and (prev is None or f <= prev):
                rec(end, f, acc + [f])

    rec(0, None, [])
    return results


def epsilon_sign(w) -> int:
    """prod over Lyndon factors of (-1)^((len + 1) * exponent)."""
    s = 1
    for f, c in cfl_factorize(w):
        if ((len(f) + 1) * c) % 2:
            s = -s
    return s


def _sign_of(factors) -> int:
    s = 1
    for f, c in factors:
        if ((len(f) + 1) * c) % 2:
            s = -s
    return s


def amitsur_terms(provider, elements, i: int, cap: int = WORD_CAP):
    """Yield (word, factorization, sign, Lambda(w)) for all words of length i.

    Lambda(w) = Lambda_{l_q}(w_q) ... Lambda_{l_1}(w_1), each factor word w_j
    being replaced by the product of its letters.
    """
    n = len(elements)
    if i < 0:
        raise ValueError("i must be >= 0")
    if n ** i > cap:
        raise TooManyWords(f"{n}^{i} words exceeds the cap {cap}")
    cache = {}

    def lam_of(word, l):
        key = (word, l)
        if key not in cache:
            x = elements[word[0]]
            for letter in word[1:]:
                x = provider.mul(x, elements[letter])
            cache[key] = provider.lam(x, l)
        return cache[key]

    for w in itertools.product(range(n), repeat=i):
        fac = cfl_factorize(w)
        value = None
        for f, l in reversed(fac):
            v = lam_of(f, l)
            value = v if value is None else value * v
        yield w, fac, _sign_of(fac), value


def amitsur_lambda(provider, elements, i: int, cap: int = WORD_CAP):
    """Lambda_i(r_1 + ... + r_n) as the signed sum over words of length i."""
    if i == 0:
        return None if not elements else _one_like(provider, elements[0])
    total = None
    for _, _, sign, value in amitsur_terms(provider, elements, i, cap):
        term = value if sign > 0 else -value
        total = term if total is None else total + term
    return total


def _one_like(provider, x):
    return provider.lam(x, 0)


def amitsur_multilinear(provider, elements):
    """Sum of eps(w) Lambda(w) over words using each letter exactly once."""
    n = len(elements)
    total = None
    cache = {}
    for w in itertools.permutations(range(n)):
        fac = cfl_factorize(w)
        value = None
        for f, l in reversed(fac):
            if (f, l) not in cache:
                x = elements[f[0]]
                for letter in f[1:]:
                    x = provider.mul(x, elements[letter])
                cache[(f, l)] = provider.lam(x, l)
            value = cache[(f, l)] if value is None else value * cache[(f, l)]
        term = value if _sign_of(fac) > 0 else -value
        total = term if total is None else total + term
    return total


def random_matrix(ring, d, rng, bound=9) -> Matrix:
    return Matrix(ring, [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(d)])


def amitsur_consistency_suite(law=None, n_max: int = 2, d: int = 2, trials: int = 20, seed: int = 0,
                              ring=None) -> dict:
    """Compare amitsur_lambda with the charpoly of the summed matrix.

    With ``law=None`` random integer matrices are used; with a matrix-backed
    law, random combinations of basis elements of its algebra.
    """
    from .rings import Integers

    rng = random.Random(seed)
    checked = 0
    for trial in range(trials):
        for n in range(1, n_max + 1):
            if law is None:
                R = ring or Integers()
                elems = [random_matrix(R, d, rng) for _ in range(n)]
                provider = MatrixLambdas()
                total = elems[0]
                for M in elems[1:]:
                    total = total + M
                expected = lambdas_of(total)
                dd = d
            else:
                from .groups import AlgebraElem

                R = law.base
                dim = law.algebra.dim
                elems = [AlgebraElem(R, {g: R(rng.randint(-3, 3)) for g in range(dim)}) for _ in range(n)]
                provider = law
                total = elems[0]
                for x in elems[1:]:
                    total = total + x
                expected = lambdas_of(law.matrix_of(total))
                dd = law.dimension
            for i in range(1, dd + 1):
                got = amitsur_lambda(provider, elems, i)
                checked += 1
                if got != expected[i]:
                    return {"ok": False, "checked": checked, "discrepancy": {
                        "trial": trial, "n": n, "i": i, "amitsur": str(got), "charpoly": str(expected[i])}}
    return {"ok": True, "checked": checked, "discrepancy": None}
