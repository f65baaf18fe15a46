"""Independent reference implementations used to cross-check the library.

Everything here is deliberately naive: elementary divisors via gcds of
k x k minors, ranks over the rationals, etc.  Slow but obviously correct.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def minor_gcd_divisors(rows: list[list[int]]) -> list[int]:
    """Elementary divisors from the minor-gcd characterization:
    e_1 * ... * e_k = gcd of all k x k minors."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    prev = 1
    divisors = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                g = gcd(g, _det([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        divisors.append(g // prev)
        prev = g
    return divisors


def _det(a: list[list[int]]) -> int:
    k = len(a)
    if k == 1:
        return a[0][0]
    total = 0
    for j in range(k):
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _det(minor)
        total += term if j % 2 == 0 else -term
    return total


def rational_rank(rows: list[list[int]]) -> int:
    """Row rank by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def count_complement_slow(rows: list[list[int]], q: int) -> int:
    """Pure-Python point count over (Z_q)^m, no numpy."""
    if q == 1:
        return 0
    m = len(rows)
    n = len(rows[0]) if m else 0

    def points(prefix):
        if len(prefix) == m:
            yield prefix
            return
        for v in range(q):
            yield from points(prefix + (v,))

    count = 0
    for z in points(()):
        if all(sum(z[i] * rows[i][j] for i in range(m)) % q
               for j in range(n)):
            count += 1
    return count
