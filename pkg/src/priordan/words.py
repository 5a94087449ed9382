"""p-Riordan words and the bijection xi from graphs of order n+1 to words of length n.

A letter a_{i,j} is stored as the tuple ``(i, j)``. For p = 2 the compact
alphabet a = (0,0), b = (1,0), c = (0,1), d = (1,1) is used for text.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .exceptions import InputError
from .graphs import GraphClass, NONE
from .series import CanonicalPair, CoeffSeq, as_modulus

__all__ = [
    "Letter", "Word", "validate_word", "xi", "xi_inv", "count_words", "word_class",
    "parse_word", "format_word", "all_words",
]

Letter = tuple[int, int]
Word = tuple[Letter, ...]

COMPACT = {"a": (0, 0), "b": (1, 0), "c": (0, 1), "d": (1, 1)}
_COMPACT_INV = {v: k for k, v in COMPACT.items()}


def _check_letters(letters: Sequence[Letter], p: int) -> Word:
    word = tuple(tuple(x) for x in letters)
    for pos, letter in enumerate(word):
        if len(letter) != 2 or not all(isinstance(c, int) and 0 <= c < p for c in letter):
            raise InputError(f"letter {letter!r} at position {pos} is not in the alphabet for p={p}")
    return word


def validate_word(letters: Sequence[Letter], p) -> bool:
    """All-(0,0), or the first letter other than (0,0) is (b,0) with b != 0."""
    word = _check_letters(letters, as_modulus(p).p)
    for i, j in word:
        if (i, j) != (0, 0):
            return i != 0 and j == 0
    return True


def xi(pair: CanonicalPair) -> Word:
    """Word of length n-1 for a graph of order n."""
    pair.modulus.require_prime()
    n = pair.n
    if pair.is_empty():
        return ((0, 0),) * (n - 1)
    b = pair.bstar
    g, f = pair.gtilde, pair.ftilde
    head = ((0, 0),) * b + ((g[b], 0),)
    return head + tuple((g[b + k], f[k]) for k in range(1, n - 1 - b))


def xi_inv(letters: Sequence[Letter], p) -> CanonicalPair:
    m = as_modulus(p).require_prime()
    word = _check_letters(letters, m.p)
    if not validate_word(word, m):
        raise InputError(f"not a {m.p}-Riordan word: {format_word(word, m)!r}")
    n = len(word) + 1
    b = next((k for k, letter in enumerate(word) if letter != (0, 0)), None)
    if b is None:
        return CanonicalPair.empty(n, m)
    g = (0,) * b + tuple(i for i, _ in word[b:])
    f = (0,) + tuple(j for _, j in word[b + 1:])
    return CanonicalPair(m, n, b, CoeffSeq(m, g), CoeffSeq(m, f))


def count_words(n: int, p) -> int:
    """|W_n^(p)| via s_0 = 1, s_{k+1} = p^2 (s_k - 1) + p. Needs no primality."""
    q = as_modulus(p).p
    if n < 0:
        raise InputError(f"word length must be >= 0, got {n}")
    s = 1
    for _ in range(n):
        s = q * q * (s - 1) + q
    return s


def all_words(n: int, p) -> Iterator[Word]:
    """Brute force: every word of length n over A^(p) that validates."""
    q = as_modulus(p).p
    alphabet = [(i, j) for i in range(q) for j in range(q)]
    for word in itertools.product(alphabet, repeat=n):
        if validate_word(word, q):
            yield word


def word_class(letters: Sequence[Letter] | str) -> GraphClass:
    """Subclass membership read off the shape of a 2-Riordan word.

    Only ONE_PLUS_F, PROPER and APPELL have word characterizations.
    """
    if isinstance(letters, str):
        letters = parse_word(letters, 2)
    word = _check_letters(letters, 2)
    if not validate_word(word, 2):
        raise InputError("not a 2-Riordan word")
    s = format_word(word, 2)
    out = NONE
    if s[:1] == "b" and set(s[1:]) <= {"a", "d"}:
        out |= GraphClass.ONE_PLUS_F
    if s == "b" or s[:2] in ("bc", "bd"):
        out |= GraphClass.PROPER
    head = s.lstrip("a")
    # a...a, a...ab, a...abxw with x in {c,d} and w over {a,b}
    if head in ("", "b") or (head[:1] == "b" and head[1] in "cd" and set(head[2:]) <= {"a", "b"}):
        out |= GraphClass.APPELL
    return out


def parse_word(text: str, p) -> Word:
    """Compact letters for p=2 (``"bcd"``), ``"i:j,i:j"`` tokens otherwise."""
    q = as_modulus(p).p
    text = text.strip()
    if not text:
        return ()
    if ":" not in text:
        if q != 2:
            raise InputError("compact a/b/c/d letters are only defined for p=2; use 'i:j,...'")
        try:
            return tuple(COMPACT[ch] for ch in text)
        except KeyError as exc:
            raise InputError(f"unknown letter {exc.args[0]!r}; expected a, b, c or d") from None
    letters = []
    for token in text.split(","):
        parts = token.strip().split(":")
        if len(parts) != 2 or not all(x.strip().isdigit() for x in parts):
            raise InputError(f"malformed letter {token!r}; expected 'i:j'")
        letters.append((int(parts[0]), int(parts[1])))
    return _check_letters(letters, q)


def format_word(letters: Iterable[Letter], p) -> str:
    q = as_modulus(p).p
    word = tuple(tuple(x) for x in letters)
    if q == 2:
        return "".join(_COMPACT_INV[x] for x in word)
    return ",".join(f"{i}:{j}" for i, j in word)
