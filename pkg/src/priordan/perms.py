"""Pattern-avoiding permutations and the bijection phi onto P_2n.

Permutations are plain tuples in one-line notation over 1..m. Binary words
for the insertion map ``psi`` are strings over ``"01"``.

>>> psi("011001")
(7, 5, 4, 6, 3, 1, 2)
>>> psi_inv((7, 5, 4, 6, 3, 1, 2))
'011001'
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exceptions import InputError
from .graphs import NONE, GraphClass
from .series import CanonicalPair, CoeffSeq, as_modulus

__all__ = [
    "Permutation", "BlockDecomposition", "as_permutation", "reduce", "contains_pattern",
    "avoids", "psi", "psi_inv", "is_member_P2n", "decompose", "phi", "phi_inv",
    "perm_class", "avoiders", "members_P2n", "parse_perm", "format_perm", "display_perm",
]

Permutation = tuple[int, ...]

P123 = (1, 2, 3)
P132 = (1, 3, 2)


def as_permutation(seq: Sequence[int]) -> Permutation:
    perm = tuple(seq)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise InputError(f"{perm!r} is not a permutation of 1..{len(perm)}")
    return perm


def reduce(seq: Sequence[int]) -> Permutation:
    """Relabel distinct values by rank: 4287 -> 2143."""
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise InputError(f"cannot reduce a sequence with repeated values: {seq!r}")
    rank = {v: i for i, v in enumerate(sorted(seq), start=1)}
    return tuple(rank[v] for v in seq)


def contains_pattern(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """Brute force over index subsets; fine for the short patterns used here."""
    pattern = tuple(pattern)
    k = len(pattern)
    if k == 0:
        return True
    perm = tuple(perm)
    # order[r] = position in the pattern holding the (r+1)-th smallest value
    order = sorted(range(k), key=pattern.__getitem__)
    for idx in itertools.combinations(range(len(perm)), k):
        vals = [perm[i] for i in idx]
        if all(vals[order[r]] < vals[order[r + 1]] for r in range(k - 1)):
            return True
    return False


def avoids(perm: Sequence[int], *patterns: Sequence[int]) -> bool:
    return not any(contains_pattern(perm, pat) for pat in patterns)


def _bits(word) -> tuple[int, ...]:
    if isinstance(word, str):
        if set(word) - {"0", "1"}:
            raise InputError(f"binary word expected, got {word!r}")
        return tuple(int(ch) for ch in word)
    bits = tuple(word)
    if any(b not in (0, 1) for b in bits):
        raise InputError(f"binary word expected, got {bits!r}")
    return bits


def psi(word) -> Permutation:
    """Insert 1, 2, ... into the left (0) or right (1) of the two rightmost empty slots."""
    bits = _bits(word)
    m = len(bits) + 1
    out = [0] * m
    empty = list(range(m))
    for value, bit in enumerate(bits, start=1):
        out[empty.pop(-1 if bit else -2)] = value
    out[empty[0]] = m
    return tuple(out)


def psi_inv(perm: Sequence[int]) -> str:
    """Replay the insertion; fails exactly when perm contains 123 or 132."""
    perm = as_permutation(perm)
    m = len(perm)
    if m == 0:
        raise InputError("psi is only defined for non-empty permutations")
    where = {v: i for i, v in enumerate(perm)}
    empty = list(range(m))
    bits = []
    for value in range(1, m):
        pos = where[value]
        if pos == empty[-1]:
            bits.append("1")
            empty.pop()
        elif pos == empty[-2]:
            bits.append("0")
            empty.pop(-2)
        else:
            raise InputError(f"{format_perm(perm)} contains 123 or 132")
    return "".join(bits)


def avoiders(m: int) -> Iterator[Permutation]:
    """S_m(123, 132) as the image of psi, in lexicographic order of the bit word."""
    for bits in itertools.product((0, 1), repeat=m - 1):
        yield psi(bits)


def fixed_points(perm: Sequence[int]) -> list[int]:
    return [i for i, v in enumerate(perm, start=1) if i == v]


def is_member_P2n(perm: Sequence[int]) -> bool:
    perm = as_permutation(perm)
    if len(perm) % 2:
        raise InputError(f"P_2n needs even length, got {len(perm)}")
    if len(fixed_points(perm)) != 2:
        return False
    try:
        psi_inv(perm)
    except InputError:
        return False
    return True


def members_P2n(n: int) -> Iterator[Permutation]:
    """Avoiders of length 2n with exactly two fixed points."""
    for perm in avoiders(2 * n):
        if len(fixed_points(perm)) == 2:
            yield perm


@dataclass(frozen=True)
class BlockDecomposition:
    """A member of P_2n cut into A | descending middle | D around fixed points a < b."""

    n: int
    a: int
    b: int
    A: Permutation
    middle: tuple[int, ...]
    D: Permutation

    @property
    def empty_graph(self) -> bool:
        return self.b == 2 * self.n


def decompose(perm: Sequence[int]) -> BlockDecomposition:
    perm = as_permutation(perm)
    if not is_member_P2n(perm):
        raise InputError(f"{format_perm(perm)} is not in P_2n")
    n = len(perm) // 2
    a, b = fixed_points(perm)
    if a != n:
        raise InputError(f"first fixed point is {a}, expected {n}")
    size = 2 * n - b
    middle = perm[size: b - 1]
    if middle != tuple(range(b - 1, size, -1)):
        raise InputError(f"middle block of {format_perm(perm)} is not b-1, b-2, ..., {size + 1}")
    A, D = perm[:size], perm[b:]
    if sorted(A) != list(range(b + 1, 2 * n + 1)):
        raise InputError(f"prefix block of {format_perm(perm)} does not hold the values above b")
    return BlockDecomposition(n, a, b, A, middle, D)


def phi(pair: CanonicalPair) -> Permutation:
    if pair.p != 2:
        raise InputError(f"phi is defined for p=2 only, got p={pair.p}")
    n = pair.n
    b = 2 * n if pair.is_empty() else pair.bstar + n + 1
    size = 2 * n - b
    out = []
    if size:
        g = pair.g_coeffs()
        out += [v + b for v in psi(g[pair.bstar + 1:])]
    out += range(b - 1, size, -1)
    out.append(b)
    if size:
        out += psi(pair.f_coeffs())
    return tuple(out)


def phi_inv(perm: Sequence[int]) -> CanonicalPair:
    blocks = decompose(perm)
    n, b = blocks.n, blocks.b
    m = as_modulus(2)
    if blocks.empty_graph:
        return CanonicalPair.empty(n, m)
    bstar = b - n - 1
    g_bits = psi_inv(tuple(v - b for v in blocks.A))
    f_bits = psi_inv(blocks.D)
    g = (0,) * bstar + (1,) + tuple(int(c) for c in g_bits)
    f = (0,) + tuple(int(c) for c in f_bits)
    return CanonicalPair(m, n, bstar, CoeffSeq(m, g), CoeffSeq(m, f))


def appell_block(size: int) -> Permutation:
    """(L-1)(L-2)...32 L 1, the D block of every Appell-type graph."""
    if size <= 1:
        return tuple(range(1, size + 1))
    return tuple(range(size - 1, 1, -1)) + (size, 1)


def pascal_perm(n: int) -> Permutation:
    """(2n)(2n-1)...(n+2) n (n+1) (n-1)...1."""
    return tuple(range(2 * n, n + 1, -1)) + (n, n + 1) + tuple(range(n - 1, 0, -1))


def perm_class(perm: Sequence[int]) -> GraphClass:
    """Classes of the graph behind a member of P_2n, read off its blocks.

    Covers ONE_PLUS_F, PROPER, APPELL, BELL, PASCAL and DERIVATIVE.
    """
    blocks = decompose(perm)
    if blocks.empty_graph:
        # D is empty, so the Appell block matches trivially; A is empty, so no
        # insertion step can break the derivative rule
        return GraphClass.APPELL | GraphClass.BELL | GraphClass.DERIVATIVE
    n, b, A, D = blocks.n, blocks.b, blocks.A, blocks.D
    bstar = b - n - 1
    a_bits = tuple(int(c) for c in psi_inv(reduce(A)))
    d_bits = tuple(int(c) for c in psi_inv(D))
    out = NONE
    if b == n + 1 and reduce(A) == D:
        out |= GraphClass.ONE_PLUS_F
    if b == n + 1 and D[-1] == min(D):
        out |= GraphClass.PROPER
    if D == appell_block(len(D)):
        out |= GraphClass.APPELL
    if tuple(perm) == pascal_perm(n):
        out |= GraphClass.PASCAL
    # the first bstar+1 insertions into D leave bstar...21(bstar+1) at its right
    # end; every later insertion into D must repeat the matching one of A
    replay = ((0,) * bstar + (1,) + a_bits)[: len(d_bits)]
    if d_bits == replay:
        out |= GraphClass.BELL
    # insertion step k of A carries the coefficient of t^(bstar+k): odd powers
    # must go left, and each even power must repeat the next insertion into D
    g = (0,) * bstar + (1,) + a_bits
    if (
        bstar % 2 == 0
        and all(bit == 0 for k, bit in enumerate(a_bits, start=1) if (bstar + k) % 2)
        and all(d_bits[i] == g[i] for i in range(0, len(d_bits), 2))
    ):
        out |= GraphClass.DERIVATIVE
    return out


def parse_perm(text: str) -> Permutation:
    """Comma separated one-line notation: ``"10,8,9,6,5,4,7,3,1,2"``."""
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"malformed permutation {text!r}; expected comma-separated integers") from None
    return as_permutation(values)


def format_perm(perm: Sequence[int]) -> str:
    return ",".join(str(v) for v in perm)


def display_perm(perm: Sequence[int]) -> str:
    """Compact display with multi-digit values parenthesised, e.g. (10)896547312."""
    return "".join(str(v) if v < 10 else f"({v})" for v in perm)
