"""Exhaustive generation of Stirling permutations and brute-force distributions.

Everything here is the ground-truth oracle the rest of the library is
checked against, so it stays deliberately simple: build order n from order
n-1 by inserting the new doubled letter into each gap, and filter or tally
whole words.
"""

from __future__ import annotations

from .polynomials import Polynomial
from .words import avoids, count_adjacent_122, stats

PQR = ("p", "q", "r")
PZ = ("p", "z")


def double_factorial_odd(n):
    """(2n-1)!! with the empty-product convention for n = 0."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def generate_all(n):
    """Yield every Stirling permutation of order n exactly once.

    Canonical order: the doubled letter n is inserted into the gaps of each
    order n-1 word counting from the right end, so the stream for n=2 is
    1122, 1221, 2211.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        yield ()
        return
    for prev in generate_all(n - 1):
        size = len(prev)
        for gap in range(size + 1):
            pos = size - gap
            yield prev[:pos] + (n, n) + prev[pos:]


def generate_avoiders(n, patterns):
    """Yield the order-n Stirling permutations avoiding every given pattern."""
    patterns = tuple(patterns)
    for word in generate_all(n):
        if avoids(word, patterns):
            yield word


def distribution(n, patterns=()):
    """Joint plateau/descent/ascent polynomial over the order-n avoiders.

    The monomial p**plat * q**des * r**asc is tallied per permutation; with
    no patterns this is the full distribution over all of order n.
    """
    terms = {}
    for word in generate_avoiders(n, patterns):
        s = stats(word)
        key = (s.plat, s.des, s.asc)
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(PQR, terms)


def second_order_eulerian(n):
    """Row n of the second-order Eulerian triangle: counts by des+1 = k."""
    if n < 1:
        raise ValueError("order must be positive")
    row = [0] * n
    for word in generate_all(n):
        row[stats(word).des] += 1
    return row


def joint_plat_122(n, patterns=((2, 1, 3),)):
    """Distribution of (plateaus, adjacent-pair occurrences of 122).

    The occurrence statistic is count_adjacent_122: the version whose
    generating function satisfies the substitution equation solved by
    series.solve_R.  (Counting all position triples instead would differ
    from order 3 on, e.g. on 123321.)
    """
    terms = {}
    for word in generate_avoiders(n, patterns):
        key = (stats(word).plat, count_adjacent_122(word))
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(PZ, terms)
