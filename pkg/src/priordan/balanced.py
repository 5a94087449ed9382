"""Balanced ternary words, closed walks on the cube, and the bijection eta.

Words are strings over ``"012"``. A word is balanced when each letter
occurs an even number of times; read letter ``x`` as "flip coordinate
x+1" and a balanced word is a closed walk on the 3-cube from the origin.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb

import numpy as np

from .exceptions import ConsistencyError, InputError
from .series import CanonicalPair, CoeffSeq, as_modulus

__all__ = [
    "is_balanced", "h_map", "h_inv", "eta", "eta_inv", "CubeWalk", "word_to_walk",
    "walk_to_word", "count_closed_walks_matrix", "count_closed_walks_formula",
    "count_balanced", "count_balanced_closed_form", "count_balanced_brute_force",
    "balanced_words",
]

LETTERS = "012"

# (f coefficient, g coefficient) of the new vertex for each unequal suffix
SUFFIX = {
    (1, 0): "01", (1, 1): "12", (1, 2): "02",
    (2, 0): "10", (2, 1): "21", (2, 2): "20",
}
SUFFIX_INV = {v: k for k, v in SUFFIX.items()}


def _check_word(word: str) -> str:
    if not isinstance(word, str):
        word = "".join(str(c) for c in word)
    bad = set(word) - set(LETTERS)
    if bad:
        raise InputError(f"letters {sorted(bad)} are not in {{0,1,2}}")
    return word


def is_balanced(word) -> bool:
    word = _check_word(word)
    return len(word) % 2 == 0 and all(word.count(x) % 2 == 0 for x in LETTERS)


def _third(x: str, y: str) -> str:
    return (set(LETTERS) - {x, y}).pop()


def _flip_first(word: str, x: str, y: str) -> str:
    swap = {x: y, y: x}
    for i, c in enumerate(word):
        if c in swap:
            return word[:i] + swap[c] + word[i + 1:]
    return word


def h_map(word, x, y) -> str:
    """Flip the leftmost x/y letter to the other one and append ``xy``.

    Defined on balanced words other than the constant word of the third letter.
    """
    word = _check_word(word)
    x, y = str(x), str(y)
    if x == y or x not in LETTERS or y not in LETTERS:
        raise InputError(f"h needs two distinct letters of 0,1,2; got {x!r}, {y!r}")
    if not is_balanced(word):
        raise InputError(f"{word!r} is not balanced")
    z = _third(x, y)
    if all(c == z for c in word):
        raise InputError(f"h_{x},{y} is undefined on the constant word {word!r}")
    return _flip_first(word, x, y) + x + y


def h_inv(word) -> str:
    word = _check_word(word)
    if len(word) < 2 or word[-1] == word[-2]:
        raise InputError(f"{word!r} does not end in two distinct letters")
    return _flip_first(word[:-2], word[-2], word[-1])


def eta(pair: CanonicalPair) -> str:
    """Balanced word of length 2n for an oriented Riordan graph of order n+1.

    Built by growing the graph one vertex at a time from order 2.
    """
    if pair.p != 3:
        raise InputError(f"eta is defined for p=3 only, got p={pair.p}")
    if pair.n < 2:
        raise InputError("eta starts at order 2")
    g = pair.g_coeffs()
    word = str(g[0]) * 2
    bstar = 0 if g[0] else None
    for m in range(2, pair.n):
        # grow from order m to m+1: new coefficients g_{m-1} and f_{m-1-bstar}
        gn = g[m - 1]
        if bstar is None:
            word += str(gn) * 2
            if gn:
                bstar = m - 1
            continue
        fn = pair.ftilde[m - 1 - bstar]
        if fn == 0:
            word += str(gn) * 2
            continue
        x, y = SUFFIX[fn, gn]
        z = _third(x, y)
        source = "0" * len(word) if set(word) == {z} else word
        word = h_map(source, x, y)
    return word


def eta_inv(word) -> CanonicalPair:
    word = _check_word(word)
    if not word or not is_balanced(word):
        raise InputError(f"{word!r} is not a non-empty balanced word")
    steps = []
    while len(word) > 2:
        x, y = word[-2], word[-1]
        if x == y:
            steps.append((int(x), 0))
            word = word[:-2]
            continue
        fn, gn = SUFFIX_INV[x + y]
        prev = h_inv(word)
        if set(prev) == {"0"}:
            prev = _third(x, y) * len(prev)
        steps.append((gn, fn))
        word = prev
    m = as_modulus(3)
    g = [int(word[0])]
    bstar = 0 if g[0] else None
    f = [0]
    for gn, fn in reversed(steps):
        if bstar is None:
            if fn:
                raise ConsistencyError("nonzero f coefficient peeled off an empty prefix")
            if gn:
                bstar = len(g)
        else:
            f.append(fn)
        g.append(gn)
    n = len(g) + 1
    if bstar is None:
        return CanonicalPair.empty(n, m)
    return CanonicalPair(m, n, bstar, CoeffSeq(m, tuple(g)), CoeffSeq(m, tuple(f)))


def balanced_words(n: int):
    """Brute force: every balanced word of length 2n, lexicographically."""
    for letters in itertools.product(LETTERS, repeat=2 * n):
        word = "".join(letters)
        if is_balanced(word):
            yield word


# --- cube walks ------------------------------------------------------------

@dataclass(frozen=True)
class CubeWalk:
    """Walk on the k-cube from the origin; ``steps`` are 1-based coordinates."""

    dim: int
    steps: tuple[int, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise InputError("cube dimension must be >= 1")
        if any(not 1 <= s <= self.dim for s in self.steps):
            raise InputError(f"steps must be coordinates in 1..{self.dim}")

    def vertices(self) -> list[tuple[int, ...]]:
        v = [0] * self.dim
        out = [tuple(v)]
        for s in self.steps:
            v[s - 1] ^= 1
            out.append(tuple(v))
        return out

    @property
    def end(self) -> tuple[int, ...]:
        return self.vertices()[-1]

    def is_closed(self) -> bool:
        return not any(self.end)

    def to_json(self) -> str:
        return json.dumps({"dim": self.dim, "steps": list(self.steps)})

    @classmethod
    def from_json(cls, text: str) -> "CubeWalk":
        data = json.loads(text)
        return cls(int(data["dim"]), tuple(data["steps"]))


def word_to_walk(word, dim: int = 3) -> CubeWalk:
    word = _check_word(word)
    return CubeWalk(dim, tuple(int(c) + 1 for c in word))


def walk_to_word(walk: CubeWalk) -> str:
    if walk.dim != 3:
        raise InputError(f"words over 0,1,2 describe walks on the 3-cube, got dimension {walk.dim}")
    return "".join(str(s - 1) for s in walk.steps)


def _cube_adjacency(k: int) -> list[list[int]]:
    size = 1 << k
    return [[1 if bin(u ^ v).count("1") == 1 else 0 for v in range(size)] for u in range(size)]


def _matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def count_closed_walks_matrix(k: int, length: int) -> int:
    """(origin, origin) entry of the length-th power of the k-cube adjacency matrix."""
    if k < 1 or length < 0:
        raise InputError("need dimension >= 1 and length >= 0")
    base = _cube_adjacency(k)
    size = len(base)
    result = [[int(i == j) for j in range(size)] for i in range(size)]
    e = length
    while e:
        if e & 1:
            result = _matmul(result, base)
        base = _matmul(base, base)
        e >>= 1
    return result[0][0]


def count_closed_walks_formula(k: int, length: int) -> int:
    """2^-k * sum_j C(k, j) (k - 2j)^length, evaluated exactly."""
    if k < 1 or length < 0:
        raise InputError("need dimension >= 1 and length >= 0")
    total = sum(comb(k, j) * (k - 2 * j) ** length for j in range(k + 1))
    q, r = divmod(total, 2 ** k)
    if r:
        raise ConsistencyError(f"closed-walk sum {total} is not divisible by 2^{k}")
    return q


def count_balanced_closed_form(n: int) -> int:
    q, r = divmod(9 ** n + 3, 4)
    if r:
        raise ConsistencyError(f"(9^{n} + 3)/4 is not an integer")
    return q


def count_balanced(n: int, check_walks: bool = True) -> int:
    """b_n from b_0 = 1, b_{k+1} = 3 b_k + 6 (b_k - 1), cross-checked."""
    if n < 0:
        raise InputError("n must be >= 0")
    b = 1
    for _ in range(n):
        b = 3 * b + 6 * (b - 1)
    closed = count_balanced_closed_form(n)
    if b != closed:
        raise ConsistencyError(f"recursion gives {b}, closed form {closed} for n={n}")
    if check_walks:
        for name, oracle in (("matrix", count_closed_walks_matrix), ("formula", count_closed_walks_formula)):
            w = oracle(3, 2 * n)
            if w != b:
                raise ConsistencyError(f"{name} walk count {w} != {b} for n={n}")
    return b


def count_balanced_brute_force(n: int) -> int:
    """Count balanced words of length 2n by scanning all 3^(2n) of them."""
    length = 2 * n
    codes = np.arange(3 ** length, dtype=np.int64)
    parity = np.zeros_like(codes)
    for _ in range(length):
        codes, digit = np.divmod(codes, 3)
        parity ^= np.left_shift(1, digit)
    return int(np.count_nonzero(parity == 0))
