"""Truncated power series over Z_p and the canonical coefficient pair of a graph.

A p-Riordan graph of order ``n`` only ever looks at coefficients of ``g`` and
``f`` up to degree ``n - 2``, so every series here is a plain dense tuple of
residues and every product is truncated at an explicit degree.

>>> g = parse_poly("t^2+t^5", 2)
>>> f = parse_poly("t+t^9", 2)
>>> pair = canonicalize(g, f, 5)
>>> pair.bstar, format_poly(pair.gtilde), format_poly(pair.ftilde)
(2, 't^2', 't')
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from sympy import isprime

from .exceptions import InputError, NonPrimeModulusError

__all__ = [
    "Modulus", "CoeffSeq", "CanonicalPair",
    "as_modulus", "parse_poly", "format_poly", "product_coeff", "derivative",
    "canonicalize", "mul_trunc",
]


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    return bool(isprime(p))


@dataclass(frozen=True)
class Modulus:
    """The coefficient ring Z_p. ``prime`` is computed once at construction."""

    p: int
    prime: bool = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise InputError(f"modulus must be an integer, got {self.p!r}")
        if self.p < 2:
            raise InputError(f"modulus must be >= 2, got {self.p}")
        object.__setattr__(self, "prime", _is_prime(self.p))

    def require_prime(self) -> "Modulus":
        if not self.prime:
            raise NonPrimeModulusError(self.p)
        return self

    def __int__(self):
        return self.p

    def __str__(self):
        return str(self.p)


def as_modulus(p) -> Modulus:
    if isinstance(p, Modulus):
        return p
    return Modulus(p)


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True, eq=False)
class CoeffSeq:
    """Dense truncated power series; ``coeffs[k]`` is the coefficient of t^k.

    Trailing zeros are allowed and ignored by ``==`` and ``hash``.
    """

    modulus: Modulus
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "modulus", as_modulus(self.modulus))
        coeffs = tuple(self.coeffs)
        p = self.modulus.p
        for k, c in enumerate(coeffs):
            if not isinstance(c, int) or not 0 <= c < p:
                raise InputError(f"coefficient {c!r} of t^{k} is not a residue mod {p}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def reduce(cls, values: Iterable[int], p) -> "CoeffSeq":
        """Build from arbitrary non-negative integers, reducing mod p."""
        m = as_modulus(p)
        values = list(values)
        if any(v < 0 for v in values):
            raise InputError("negative coefficients are not accepted")
        return cls(m, tuple(v % m.p for v in values))

    @classmethod
    def zero(cls, p) -> "CoeffSeq":
        return cls(as_modulus(p), ())

    @property
    def p(self) -> int:
        return self.modulus.p

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CoeffSeq):
            return NotImplemented
        return self.modulus == other.modulus and _strip(self.coeffs) == _strip(other.coeffs)

    def __hash__(self):
        return hash((self.modulus.p, _strip(self.coeffs)))

    def __add__(self, other: "CoeffSeq") -> "CoeffSeq":
        _check_same(self, other)
        size = max(len(self), len(other))
        return CoeffSeq(self.modulus, tuple((self[k] + other[k]) % self.p for k in range(size)))

    def __repr__(self):
        return f"CoeffSeq(p={self.p}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    @property
    def degree(self) -> int:
        """Degree of the highest nonzero term, -1 for the zero series."""
        return len(_strip(self.coeffs)) - 1

    def is_zero(self) -> bool:
        return self.degree < 0

    def truncate(self, k: int) -> "CoeffSeq":
        """Keep coefficients of t^0..t^k, padding with zeros (dense up to k)."""
        return CoeffSeq(self.modulus, tuple(self[i] for i in range(k + 1)))


def _check_same(a: CoeffSeq, b: CoeffSeq):
    if a.modulus != b.modulus:
        raise InputError(f"modulus mismatch: {a.p} vs {b.p}")


# --- text form -------------------------------------------------------------

_TERM = re.compile(r"(?P<coef>\d+)?(?P<t>t(?:\^(?P<exp>-?\d+))?)?")


def parse_poly(text: str, p) -> CoeffSeq:
    """Parse ``1+2t^2+t^3`` style text into a series reduced mod p.

    Grammar: terms ``INT``, ``INT t``, ``INT t^INT``, ``t``, ``t^INT`` joined
    by ``+``. Whitespace is ignored; repeated exponents add up.
    """
    m = as_modulus(p)
    # keep a map from compacted index back to the original column
    cols = [i for i, ch in enumerate(text) if not ch.isspace()]
    s = "".join(text[i] for i in cols)

    def where(pos: int) -> int:
        return cols[pos] if pos < len(cols) else len(text)

    if not s:
        return CoeffSeq.zero(m)
    terms: dict[int, int] = {}
    pos = 0
    while True:
        match = _TERM.match(s, pos)
        if match is None or match.end() == pos:
            if pos < len(s) and s[pos] == "-":
                raise InputError(f"negative coefficients are not accepted (position {where(pos)})")
            raise InputError(f"syntax error in polynomial {text!r} at position {where(pos)}")
        if match.group("t") is None:
            exp = 0
        elif match.group("exp") is None:
            exp = 1
        else:
            exp = int(match.group("exp"))
            if exp < 0:
                raise InputError(f"negative exponent at position {where(match.start('exp'))}")
        coef = int(match.group("coef")) if match.group("coef") is not None else 1
        terms[exp] = terms.get(exp, 0) + coef
        pos = match.end()
        if pos == len(s):
            break
        if s[pos] != "+":
            if s[pos] == "-":
                raise InputError(f"negative coefficients are not accepted (position {where(pos)})")
            raise InputError(f"syntax error in polynomial {text!r} at position {where(pos)}")
        pos += 1
        if pos == len(s):
            raise InputError(f"syntax error in polynomial {text!r}: dangling '+'")
    size = max(terms) + 1
    return CoeffSeq(m, tuple(terms.get(k, 0) % m.p for k in range(size)))


def format_poly(seq: CoeffSeq) -> str:
    parts = []
    for k, c in enumerate(seq.coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        mono = "t" if k == 1 else f"t^{k}"
        parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) if parts else "0"


# --- arithmetic ------------------------------------------------------------

def mul_trunc(a: Sequence[int], b: Sequence[int], k: int, p: int) -> list[int]:
    """Product of two coefficient lists mod p, dense up to degree k."""
    out = [0] * (k + 1)
    for i, ai in enumerate(a[: k + 1]):
        if ai:
            for j, bj in enumerate(b[: k + 1 - i]):
                if bj:
                    out[i + j] += ai * bj
    return [c % p for c in out]


def product_coeff(g: CoeffSeq, f: CoeffSeq, j: int, k: int) -> int:
    """[t^k] g * f^j mod p, never touching coefficients above degree k."""
    _check_same(g, f)
    if j < 0 or k < 0:
        raise InputError("j and k must be non-negative")
    p = g.p
    acc = [g[i] for i in range(k + 1)]
    fk = [f[i] for i in range(k + 1)]
    for _ in range(j):
        acc = mul_trunc(acc, fk, k, p)
    return acc[k]


def derivative(f: CoeffSeq) -> CoeffSeq:
    p = f.p
    return CoeffSeq(f.modulus, tuple(((i + 1) % p) * f[i + 1] % p for i in range(max(len(f) - 1, 0))))


# --- canonical pairs -------------------------------------------------------

@dataclass(frozen=True)
class CanonicalPair:
    """The coefficients that determine a p-Riordan graph of order ``n``.

    ``bstar`` is the index of the first nonzero coefficient of g among
    t^0..t^(n-2), or None for the empty graph. ``gtilde`` carries
    g_bstar..g_(n-2) and ``ftilde`` carries f_1..f_(n-2-bstar); everything
    else is zero.
    """

    modulus: Modulus
    n: int
    bstar: int | None
    gtilde: CoeffSeq
    ftilde: CoeffSeq

    def __post_init__(self):
        object.__setattr__(self, "modulus", as_modulus(self.modulus))
        if self.n < 1:
            raise InputError(f"graph order must be >= 1, got {self.n}")
        if self.gtilde.modulus != self.modulus or self.ftilde.modulus != self.modulus:
            raise InputError("modulus mismatch between pair and its series")
        if self.bstar is None:
            if not (self.gtilde.is_zero() and self.ftilde.is_zero()):
                raise InputError("empty graph must have gtilde = ftilde = 0")
            return
        b = self.bstar
        if not 0 <= b <= self.n - 2:
            raise InputError(f"bstar={b} out of range for order {self.n}")
        g, f = self.gtilde, self.ftilde
        if g[b] == 0 or any(g[i] for i in range(b)) or g.degree > self.n - 2:
            raise InputError("gtilde is not canonical for its bstar")
        if f[0] or f.degree > self.n - 2 - b:
            raise InputError("ftilde is not canonical for its bstar")

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def f_len(self) -> int:
        """Number of kept f coefficients (f_1..f_{f_len})."""
        return 0 if self.bstar is None else self.n - 2 - self.bstar

    def g_coeffs(self) -> tuple[int, ...]:
        """g_0..g_(n-2), zero-padded."""
        return tuple(self.gtilde[i] for i in range(self.n - 1))

    def f_coeffs(self) -> tuple[int, ...]:
        """f_1..f_(n-2-bstar); empty for the empty graph."""
        return tuple(self.ftilde[i] for i in range(1, self.f_len + 1))

    def is_empty(self) -> bool:
        return self.bstar is None

    @classmethod
    def empty(cls, n: int, p) -> "CanonicalPair":
        m = as_modulus(p)
        return cls(m, n, None, CoeffSeq.zero(m), CoeffSeq.zero(m))

    @classmethod
    def from_coeffs(cls, n: int, p, g: Sequence[int], f: Sequence[int]) -> "CanonicalPair":
        """Build from g_0.. and f_1.. lists (f given WITHOUT its zero constant term)."""
        m = as_modulus(p)
        return canonicalize(CoeffSeq(m, tuple(g)), CoeffSeq(m, (0, *f)), n)

    def to_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "g": format_poly(self.gtilde), "f": format_poly(self.ftilde)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "CanonicalPair":
        p = data["p"]
        return canonicalize(parse_poly(data["g"], p), parse_poly(data["f"], p), int(data["n"]))

    def __str__(self):
        return f"G_{self.n}({format_poly(self.gtilde)}, {format_poly(self.ftilde)}) mod {self.p}"


def canonicalize(g: CoeffSeq, f: CoeffSeq, n: int, p=None) -> CanonicalPair:
    """Reduce (g, f) to the coefficients that determine G_n(g, f)."""
    _check_same(g, f)
    if p is not None and as_modulus(p) != g.modulus:
        raise InputError(f"modulus mismatch: series are mod {g.p}, requested mod {as_modulus(p).p}")
    if n < 1:
        raise InputError(f"graph order must be >= 1, got {n}")
    if f[0] != 0:
        raise InputError("f must have zero constant term")
    m = g.modulus
    bstar = next((i for i in range(n - 1) if g[i]), None)
    if bstar is None:
        return CanonicalPair.empty(n, m)
    gt = tuple(g[i] if i >= bstar else 0 for i in range(n - 1))
    ft = tuple(f[i] for i in range(n - 1 - bstar))
    return CanonicalPair(m, n, bstar, CoeffSeq(m, _strip(gt)), CoeffSeq(m, _strip(ft)))
