"""Exhaustive checks of the counting formulas and bijections.

Every check enumerates objects directly and compares against an
independently computed count or set. Each returns a :class:`CheckResult`
carrying the first counterexample found, if any. ``max_n`` lowers every size
bound; ``None`` runs the full default sizes.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from .balanced import (
    balanced_words, count_balanced, count_balanced_brute_force, count_balanced_closed_form,
    count_closed_walks_formula, count_closed_walks_matrix, eta, eta_inv, h_inv, h_map, is_balanced,
)
from .graphs import GraphClass, adjacency, classify, count_graphs, enumerate_graphs
from .perms import P123, P132, avoids, members_P2n, pascal_perm, perm_class, phi, phi_inv, psi
from .series import CanonicalPair, as_modulus, parse_poly, canonicalize
from .words import all_words, count_words, word_class, xi, xi_inv

WORD_CLASSES = GraphClass.ONE_PLUS_F | GraphClass.PROPER | GraphClass.APPELL
PERM_CLASSES = WORD_CLASSES | GraphClass.BELL | GraphClass.PASCAL | GraphClass.DERIVATIVE


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool = True
    detail: str = ""
    counterexample: dict | None = None
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def fail(self, detail: str, **counterexample):
        if self.passed:
            self.passed = False
            self.detail = detail
            self.counterexample = counterexample
        return self

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" - {self.detail}" if self.detail else ""
        if "max_n" in self.data:
            extra = f" [sizes capped at {self.data['max_n']}]" + extra
        return f"[{status}] {self.number:2d}. {self.title} ({self.seconds:.2f}s){extra}"

    def to_dict(self) -> dict:
        return {
            "criterion": self.number, "title": self.title, "passed": self.passed,
            "detail": self.detail, "counterexample": self.counterexample,
            "seconds": round(self.seconds, 3),
        }


CHECKS: dict[int, Callable[[int | None], CheckResult]] = {}


def _check(number: int, title: str):
    def wrap(fn):
        def run(max_n=None):
            res = CheckResult(number, title)
            start = time.perf_counter()
            if max_n is not None:
                res.data["max_n"] = max_n
            fn(res, max_n)
            res.seconds = time.perf_counter() - start
            return res
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        CHECKS[number] = run
        return run
    return wrap


def _cap(default: int, max_n: int | None) -> int:
    return default if max_n is None else min(default, max_n)


def _distinct_graphs(n: int, p: int, res: CheckResult) -> int:
    """Count graphs by distinct adjacency matrix; flag any collision."""
    seen: dict = {}
    for pair in enumerate_graphs(n, p):
        mat = adjacency(pair)
        if mat in seen:
            res.fail("two canonical pairs give the same adjacency matrix",
                     first=seen[mat].to_dict(), second=pair.to_dict())
        seen[mat] = pair
    return len(seen)


def _graph_counts(res: CheckResult, plan: list[tuple[int, int]]):
    counts = {}
    for p, top in plan:
        got = []
        for n in range(1, top + 1):
            distinct = _distinct_graphs(n, p, res)
            expected = (p ** (2 * (n - 1)) + p) // (p + 1)
            got.append(distinct)
            if distinct != expected:
                res.fail("graph count differs from (p^(2(n-1)) + p)/(p + 1)",
                         n=n, p=p, distinct=distinct, expected=expected)
        counts[p] = got
    res.data["counts"] = counts


@_check(1, "graph counts p=2 match (4^(n-1)+2)/3, n=1..7")
def check_counts_p2(res, max_n):
    _graph_counts(res, [(2, _cap(7, max_n))])


@_check(2, "graph counts p=3 (n<=5) and p=5 (n<=4) match (p^(2(n-1))+p)/(p+1)")
def check_counts_p35(res, max_n):
    _graph_counts(res, [(3, _cap(5, max_n)), (5, _cap(4, max_n))])


@_check(3, "pair -> adjacency matrix is injective in every enumeration above")
def check_determination(res, max_n):
    pairs = 0
    for p, top in ((2, _cap(7, max_n)), (3, _cap(5, max_n)), (5, _cap(4, max_n))):
        for n in range(1, top + 1):
            distinct = _distinct_graphs(n, p, res)
            total = count_graphs(n, p)
            pairs += total
            if distinct != total:
                res.fail("collision in pair -> matrix map", n=n, p=p, distinct=distinct, pairs=total)
    res.data["pairs"] = pairs


@_check(4, "xi is a bijection onto p-Riordan words (p=2,3, n<=5); word counts n<=32")
def check_xi(res, max_n):
    for p in (2, 3):
        for n in range(0, _cap(5, max_n) + 1):
            words = set(all_words(n, p))
            image = set()
            for pair in enumerate_graphs(n + 1, p):
                w = xi(pair)
                if w in image:
                    res.fail("xi is not injective", pair=pair.to_dict())
                image.add(w)
                if xi_inv(w, p) != pair:
                    res.fail("xi_inv(xi(G)) != G", pair=pair.to_dict())
            if image != words:
                res.fail("xi image differs from the set of valid words", n=n, p=p,
                         missing=len(words - image), extra=len(image - words))
            if count_words(n, p) != len(words):
                res.fail("count_words differs from brute force", n=n, p=p)
        for n in range(0, 33):
            if count_words(n, p) != count_graphs(n + 1, p):
                res.fail("count_words(n) != count_graphs(n+1)", n=n, p=p)


@_check(5, "psi hits 2^(m-1) avoiders of 123,132 (m<=12); equals brute force (m<=8)")
def check_psi(res, max_n):
    for m in range(1, _cap(12, max_n) + 1):
        image = {psi(bits) for bits in itertools.product((0, 1), repeat=m - 1)}
        if len(image) != 2 ** (m - 1):
            res.fail("psi is not injective", m=m, size=len(image))
        bad = next((q for q in image if not avoids(q, P123, P132)), None)
        if bad is not None:
            res.fail("psi output contains 123 or 132", m=m, perm=list(bad))
        if m <= _cap(8, max_n):
            brute = {q for q in itertools.permutations(range(1, m + 1)) if avoids(q, P123, P132)}
            if brute != image:
                res.fail("psi image differs from brute-force S_m(123,132)", m=m)


@_check(6, "avoiders of length 2n with two fixed points number (4^(n-1)+2)/3, n=1..8")
def check_P2n(res, max_n):
    counts = []
    for n in range(1, _cap(8, max_n) + 1):
        size = sum(1 for _ in members_P2n(n))
        counts.append(size)
        if size != (4 ** (n - 1) + 2) // 3:
            res.fail("|P_2n| differs from (4^(n-1)+2)/3", n=n, size=size)
    res.data["counts"] = counts


@_check(7, "phi is a bijection onto P_2n (n<=6); worked examples reproduce")
def check_phi(res, max_n):
    for n in range(1, _cap(6, max_n) + 1):
        target = set(members_P2n(n))
        image = set()
        for pair in enumerate_graphs(n, 2):
            q = phi(pair)
            if q in image:
                res.fail("phi is not injective", pair=pair.to_dict())
            image.add(q)
            if phi_inv(q) != pair:
                res.fail("phi_inv(phi(G)) != G", pair=pair.to_dict())
        if image != target:
            res.fail("phi image differs from P_2n", n=n)
    for g, f, want in (("t+t^3", "t^2", (10, 8, 9, 6, 5, 4, 7, 3, 1, 2)),
                       ("t", "t+t^2", (9, 8, 10, 6, 5, 4, 7, 3, 2, 1))):
        pair = canonicalize(parse_poly(g, 2), parse_poly(f, 2), 5)
        if phi(pair) != want:
            res.fail("worked phi example does not reproduce", g=g, f=f, got=list(phi(pair)))


@_check(8, "balanced words: brute force = (9^n+3)/4 (n<=7); recursion = closed form (n<=32)")
def check_balanced_counts(res, max_n):
    for n in range(0, _cap(7, max_n) + 1):
        brute = count_balanced_brute_force(n)
        if brute != count_balanced_closed_form(n):
            res.fail("brute-force balanced count differs from (9^n+3)/4", n=n, brute=brute)
    for n in range(0, 33):
        count_balanced(n, check_walks=False)


@_check(9, "h_{x,y} bijects its domain onto balanced words ending in xy (n<=5)")
def check_h(res, max_n):
    for n in range(0, _cap(5, max_n) + 1):
        words = list(balanced_words(n))
        longer = set(balanced_words(n + 1))
        for x, y in itertools.permutations("012", 2):
            z = ({"0", "1", "2"} - {x, y}).pop()
            domain = [w for w in words if not all(c == z for c in w)]
            image = {}
            for w in domain:
                v = h_map(w, x, y)
                if v in image:
                    res.fail("h is not injective", x=x, y=y, words=[image[v], w])
                image[v] = w
                if h_inv(v) != w:
                    res.fail("h_inv(h(w)) != w", x=x, y=y, word=w)
            ends = {v for v in longer if v.endswith(x + y)}
            if set(image) != ends:
                res.fail("h image differs from balanced words ending in xy", n=n, x=x, y=y)
    if h_map("22012120", 0, 1) != "2211212001":
        res.fail("h_{0,1}(22012120) does not reproduce")
    if h_inv("0021210202") != "20212102":
        res.fail("h_inv(0021210202) does not reproduce")


@_check(10, "eta is a bijection onto balanced words (n<=5); base cases and anchors hold")
def check_eta(res, max_n):
    m3 = as_modulus(3)
    for n in range(1, _cap(5, max_n) + 1):
        words = set(balanced_words(n))
        image = set()
        for pair in enumerate_graphs(n + 1, 3):
            w = eta(pair)
            if w in image:
                res.fail("eta is not injective", pair=pair.to_dict())
            image.add(w)
            if not is_balanced(w) or eta_inv(w) != pair:
                res.fail("eta_inv(eta(G)) != G", pair=pair.to_dict())
        if image != words:
            res.fail("eta image differs from the balanced words", n=n)
    for c in range(3):
        base = canonicalize(parse_poly(str(c), m3), parse_poly("0", m3), 2)
        if eta(base) != str(c) * 2:
            res.fail("base case fails", g=c)
    for order in range(2, _cap(6, max_n) + 1):
        for c in range(3):
            g = "+".join(f"{c}t^{k}" for k in range(order - 1)) if c else "0"
            pair = canonicalize(parse_poly(g, m3), parse_poly("0", m3), order)
            if eta(pair) != str(c) * (2 * order - 2):
                res.fail("constant-word anchor fails", order=order, g=g, got=eta(pair))


@_check(11, "closed 3-cube walks: matrix power = sum formula = b_n (n<=10)")
def check_walks(res, max_n):
    for n in range(0, _cap(10, max_n) + 1):
        a = count_closed_walks_matrix(3, 2 * n)
        b = count_closed_walks_formula(3, 2 * n)
        c = count_balanced(n, check_walks=False)
        if not a == b == c:
            res.fail("walk oracles disagree", n=n, matrix=a, formula=b, recursion=c)


@_check(12, "classify, word_class(xi) and perm_class(phi) agree (p=2, order<=6)")
def check_classes(res, max_n):
    for n in range(1, _cap(6, max_n) + 1):
        for pair in enumerate_graphs(n, 2):
            c = classify(pair)
            if word_class(xi(pair)) != c & WORD_CLASSES:
                res.fail("word_class disagrees with classify", pair=pair.to_dict())
            if perm_class(phi(pair)) != c & PERM_CLASSES:
                res.fail("perm_class disagrees with classify", pair=pair.to_dict())
    if pascal_perm(3) != (6, 5, 3, 4, 2, 1):
        res.fail("Pascal permutation at n=3 is not 6,5,3,4,2,1")
    pascal = CanonicalPair.from_coeffs(3, 2, [1, 1], [1])
    if phi(pascal) != (6, 5, 3, 4, 2, 1):
        res.fail("phi(Pascal graph of order 3) is not 6,5,3,4,2,1", got=list(phi(pascal)))


def run_checks(max_n: int | None = None, numbers=None) -> list[CheckResult]:
    chosen = sorted(CHECKS) if numbers is None else sorted(numbers)
    return [CHECKS[k](max_n) for k in chosen]
