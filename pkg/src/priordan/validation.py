"""Input checking shared by the estimators and the command line."""
from __future__ import annotations

from typing import Iterable

from .exceptions import InputError
from .series import CanonicalPair, CoeffSeq, Modulus, as_modulus, canonicalize, parse_poly


def check_modulus(p, *, prime: bool = False, allowed: Iterable[int] | None = None) -> Modulus:
    m = as_modulus(p)
    if allowed is not None and m.p not in set(allowed):
        raise InputError(f"p={m.p} is not supported here (allowed: {sorted(allowed)})")
    if prime:
        m.require_prime()
    return m


def check_order(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"graph order must be a positive integer, got {n!r}")
    return n


def _series(obj, m: Modulus) -> CoeffSeq:
    if isinstance(obj, CoeffSeq):
        if obj.modulus != m:
            raise InputError(f"series is mod {obj.p}, expected mod {m.p}")
        return obj
    if isinstance(obj, str):
        return parse_poly(obj, m)
    return CoeffSeq.reduce(obj, m)


def check_pair(obj, n: int | None = None, p=None) -> CanonicalPair:
    """Coerce one sample to a canonical pair.

    Accepts a CanonicalPair, a ``{"n", "p", "g", "f"}`` dict, or a ``(g, f)``
    tuple of polynomial strings / coefficient lists / CoeffSeq (needs n and p).
    """
    if isinstance(obj, CanonicalPair):
        pair = obj
    elif isinstance(obj, dict):
        pair = CanonicalPair.from_dict(obj)
    else:
        try:
            g, f = obj
        except (TypeError, ValueError):
            raise InputError(f"cannot read a (g, f) pair from {obj!r}") from None
        if n is None or p is None:
            raise InputError("raw (g, f) samples need both n and p")
        m = as_modulus(p)
        return canonicalize(_series(g, m), _series(f, m), check_order(n))
    if n is not None and pair.n != n:
        raise InputError(f"sample has order {pair.n}, expected {n}")
    if p is not None and pair.modulus != as_modulus(p):
        raise InputError(f"sample is mod {pair.p}, expected mod {as_modulus(p).p}")
    return pair


def check_pairs(X, n: int | None = None, p=None) -> list[CanonicalPair]:
    if isinstance(X, (str, bytes, CanonicalPair, dict)):
        raise InputError("expected a sequence of samples, got a single sample")
    return [check_pair(x, n, p) for x in X]
