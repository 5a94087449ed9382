"""Adjacency matrices, subclass membership and exhaustive enumeration."""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from math import gcd
from typing import Iterator

import numpy as np

from .exceptions import ConsistencyError, InputError
from .series import CanonicalPair, CoeffSeq, Modulus, as_modulus, mul_trunc

__all__ = [
    "AdjMatrix", "GraphClass", "adjacency", "graphs_equal", "classify",
    "enumerate_graphs", "count_graphs", "count_graphs_closed_form",
    "count_graphs_recursive", "class_names", "parse_class",
]


@dataclass(frozen=True)
class AdjMatrix:
    """Symmetric residue matrix with zero diagonal.

    ``rows`` is stored 0-based; use :meth:`entry` for the 1-based vertex
    labels the graph is defined with.
    """

    n: int
    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise InputError(f"adjacency matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            if self.rows[i][i]:
                raise InputError("adjacency matrix must have zero diagonal")
            for j in range(i):
                if self.rows[i][j] != self.rows[j][i]:
                    raise InputError("adjacency matrix must be symmetric")
                if not 0 <= self.rows[i][j] < self.p:
                    raise InputError(f"entry {self.rows[i][j]} is not a residue mod {self.p}")

    def entry(self, i: int, j: int) -> int:
        """a_{i,j} with 1-based vertices."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError((i, j))
        return self.rows[i - 1][j - 1]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def to_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "matrix": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "AdjMatrix":
        return cls(int(data["n"]), int(data["p"]), tuple(tuple(r) for r in data["matrix"]))

    def to_text(self) -> str:
        width = len(str(self.p - 1))
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)

    def __str__(self):
        return self.to_text()


def adjacency(pair: CanonicalPair) -> AdjMatrix:
    """a_{i,j} = [t^(i-2)] g f^(j-1) mod p for i > j, mirrored above the diagonal."""
    n, p = pair.n, pair.p
    rows = [[0] * n for _ in range(n)]
    if n >= 2 and not pair.is_empty():
        top = n - 2
        f = [pair.ftilde[k] for k in range(top + 1)]
        col = [pair.gtilde[k] for k in range(top + 1)]
        # col holds g f^(j-1) truncated at t^(n-2)
        for j in range(1, n):
            for i in range(j + 1, n + 1):
                v = col[i - 2]
                rows[i - 1][j - 1] = v
                rows[j - 1][i - 1] = v
            col = mul_trunc(col, f, top, p)
    return AdjMatrix(n, p, tuple(tuple(r) for r in rows))


def graphs_equal(x: CanonicalPair, y: CanonicalPair) -> bool:
    if x.n != y.n or x.modulus != y.modulus:
        raise InputError(f"cannot compare G_{x.n} mod {x.p} with G_{y.n} mod {y.p}")
    return x == y


class GraphClass(enum.Flag):
    """Named families of p-Riordan graphs.

    Membership is a property of the graph, not of the (g, f) used to write
    it down: a graph is BELL when SOME Bell-type pair produces it.
    """

    EMPTY = enum.auto()
    STAR = enum.auto()
    APPELL = enum.auto()
    BELL = enum.auto()
    PASCAL = enum.auto()
    DERIVATIVE = enum.auto()
    PROPER = enum.auto()
    ONE_PLUS_F = enum.auto()

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")


NONE = GraphClass(0)


def class_names(classes: GraphClass) -> list[str]:
    """CLI labels of the members of a flag set, in declaration order."""
    return [c.label for c in GraphClass if c in classes]


def parse_class(label: str) -> GraphClass:
    for c in GraphClass:
        if c.label == label:
            return c
    raise InputError(f"unknown graph class {label!r}")


def _is_derivative(pair: CanonicalPair) -> bool:
    # need some f (agreeing with ftilde where kept) with (i+1) f_{i+1} = g_i for i <= n-2
    p = pair.p
    g = pair.g_coeffs()
    kept = pair.f_len
    for i, gi in enumerate(g):
        a = (i + 1) % p
        if i + 1 <= kept:
            if a * pair.ftilde[i + 1] % p != gi:
                return False
        elif gi % gcd(a, p):
            return False
    return True


def classify(pair: CanonicalPair) -> GraphClass:
    if pair.is_empty():
        # g = 0 writes the empty graph in Appell, Bell and derivative form alike
        return GraphClass.EMPTY | GraphClass.APPELL | GraphClass.BELL | GraphClass.DERIVATIVE
    b = pair.bstar
    g = pair.g_coeffs()
    f = (0, *pair.f_coeffs())
    kept = pair.f_len
    out = NONE
    if not any(f):
        out |= GraphClass.STAR
    if all(f[k] == (1 if k == 1 else 0) for k in range(1, kept + 1)):
        out |= GraphClass.APPELL
    if all(f[i] == g[i - 1] for i in range(1, kept + 1)):
        out |= GraphClass.BELL
    if b == 0 and all(c == 1 for c in g) and all(c == 1 for c in f[1:]):
        out |= GraphClass.PASCAL
    if _is_derivative(pair):
        out |= GraphClass.DERIVATIVE
    # with no f coefficient in range, f_1 is free and can be taken nonzero
    if b == 0 and (kept == 0 or f[1] != 0):
        out |= GraphClass.PROPER
    if g[0] == 1 and all(g[i] == f[i] for i in range(1, pair.n - 1)):
        out |= GraphClass.ONE_PLUS_F
    return out


def enumerate_graphs(n: int, p) -> Iterator[CanonicalPair]:
    """Every graph of order n exactly once.

    Ordered by (bstar, gtilde, ftilde) lexicographically, with the empty
    graph (bstar = infinity) last.
    """
    m = as_modulus(p).require_prime()
    if n < 1:
        raise InputError(f"graph order must be >= 1, got {n}")
    q = m.p
    for b in range(n - 1):
        free = n - 2 - b
        for lead in range(1, q):
            for rest in itertools.product(range(q), repeat=free):
                g = CoeffSeq(m, (0,) * b + (lead, *rest))
                for fs in itertools.product(range(q), repeat=free):
                    yield CanonicalPair(m, n, b, g, CoeffSeq(m, (0, *fs)))
    yield CanonicalPair.empty(n, m)


def count_graphs_closed_form(n: int, p: int) -> int:
    num, den = p ** (2 * (n - 1)) + p, p + 1
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"(p^(2(n-1)) + p)/(p + 1) is not an integer for n={n}, p={p}")
    return q


def count_graphs_recursive(n: int, p: int) -> int:
    r = 1
    for _ in range(n - 1):
        r = p * p * (r - 1) + p
    return r


def count_graphs(n: int, p) -> int:
    """Number of p-Riordan graphs of order n, cross-checked two ways."""
    m = as_modulus(p).require_prime()
    if n < 1:
        raise InputError(f"graph order must be >= 1, got {n}")
    closed = count_graphs_closed_form(n, m.p)
    rec = count_graphs_recursive(n, m.p)
    if closed != rec:
        raise ConsistencyError(f"closed form {closed} != recursion {rec} for n={n}, p={m.p}")
    return closed
