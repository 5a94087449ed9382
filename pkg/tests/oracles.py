"""Slow, obviously-correct reference computations used only by the tests.

Nothing here imports the code under test except for plain data types.
"""
import itertools


def poly_mul(a, b):
    """Untruncated schoolbook product over the integers."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_pow(a, j):
    out = [1]
    for _ in range(j):
        out = poly_mul(out, a)
    return out


def coeff(a, k):
    return a[k] if 0 <= k < len(a) else 0


def f_powers(f, n):
    """f^0 .. f^(n-2) as integer coefficient lists cut after t^(n-2)."""
    return [poly_pow(list(f), j)[: max(n - 1, 0)] for j in range(max(n - 1, 0))]


def raw_adjacency(g, f, n, p, powers=None):
    """a_{i,j} = [t^(i-2)] g f^(j-1) mod p from integer expansions (1-based i > j)."""
    if powers is None:
        powers = f_powers(f, n)
    rows = [[0] * n for _ in range(n)]
    for j in range(1, n):
        col = poly_mul(list(g), powers[j - 1])
        for i in range(j + 1, n + 1):
            v = coeff(col, i - 2) % p
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = v
    return tuple(tuple(r) for r in rows)


def count_occurrences(perm, pattern):
    k = len(pattern)
    order = sorted(range(k), key=lambda r: pattern[r])
    total = 0
    for idx in itertools.combinations(range(len(perm)), k):
        vals = [perm[i] for i in idx]
        ranked = sorted(range(k), key=lambda r: vals[r])
        total += ranked == order
    return total


def insert_by_slots(bits):
    """Independent simulation of the insertion map with an explicit slot scan."""
    m = len(bits) + 1
    slots = [None] * m
    for value in range(1, m + 1):
        free = [s for s in range(m) if slots[s] is None]
        if value == m:
            slots[free[0]] = value
        else:
            left, right = free[-2], free[-1]
            slots[right if bits[value - 1] else left] = value
    return tuple(slots)
