import itertools
import json

import pytest
import sympy
from hypothesis import given, strategies as st

from priordan.exceptions import InputError, NonPrimeModulusError
from priordan.graphs import (
    AdjMatrix, GraphClass, adjacency, class_names, classify, count_graphs,
    count_graphs_closed_form, count_graphs_recursive, enumerate_graphs, graphs_equal,
)
from priordan.series import CanonicalPair, CoeffSeq, Modulus, canonicalize, parse_poly

from oracles import raw_adjacency

C = GraphClass


def pair(g, f, n, p):
    return canonicalize(parse_poly(g, p), parse_poly(f, p), n)


class TestAdjacency:
    def test_path(self):
        assert adjacency(pair("1", "t", 3, 2)).rows == ((0, 1, 0), (1, 0, 1), (0, 1, 0))

    @pytest.mark.parametrize("p", [2, 3, 4, 7])
    def test_empty(self, p):
        assert adjacency(pair("0", "0", 5, p)).rows == ((0,) * 5,) * 5

    def test_pascal_order_4(self):
        t = sympy.symbols("t")
        # column generating functions of the Pascal pair, expanded symbolically
        cols = {j: sympy.series(1 / (1 - t) * (t / (1 - t)) ** (j - 1), t, 0, 4).removeO()
                for j in (1, 2, 3)}
        expected = {(i, j): int(sympy.Poly(cols[j], t).coeff_monomial(t ** (i - 2))) % 2
                    for j in (1, 2, 3) for i in range(j + 1, 5)}
        assert expected == {(2, 1): 1, (3, 1): 1, (4, 1): 1, (3, 2): 1, (4, 2): 0, (4, 3): 1}
        mat = adjacency(pair("1+t+t^2", "t+t^2+t^3", 4, 2))
        assert {k: mat.entry(*k) for k in expected} == expected

    def test_one_based_entry(self):
        mat = adjacency(pair("1", "t", 3, 2))
        assert mat.entry(1, 2) == 1 and mat.entry(1, 3) == 0
        with pytest.raises(IndexError):
            mat.entry(0, 1)

    def test_composite_modulus_allowed(self):
        mat = adjacency(pair("2+t", "3t", 4, 4))
        assert mat.rows == raw_adjacency([2, 1], [0, 3], 4, 4)

    @given(st.sampled_from([2, 3, 5, 6]).flatmap(lambda p: st.tuples(
        st.just(p), st.integers(1, 7),
        st.lists(st.integers(0, p - 1), max_size=7),
        st.lists(st.integers(0, p - 1), max_size=6))))
    def test_symmetric_zero_diagonal(self, args):
        p, n, g, f = args
        mat = adjacency(canonicalize(CoeffSeq(Modulus(p), tuple(g)), CoeffSeq(Modulus(p), (0, *f)), n))
        arr = mat.to_numpy()
        assert (arr == arr.T).all() and not arr.diagonal().any()
        assert ((0 <= arr) & (arr < p)).all()

    def test_serialisation(self):
        mat = adjacency(pair("1", "t", 3, 2))
        assert json.loads(mat.to_json()) == {"n": 3, "p": 2, "matrix": [[0, 1, 0], [1, 0, 1], [0, 1, 0]]}
        assert AdjMatrix.from_dict(mat.to_dict()) == mat
        assert mat.to_text() == "0 1 0\n1 0 1\n0 1 0"

    def test_rejects_asymmetric(self):
        with pytest.raises(InputError):
            AdjMatrix(2, 2, ((0, 1), (0, 0)))


class TestGraphsEqual:
    def test_same_canonical_form(self):
        assert graphs_equal(pair("t^2+t^5", "t+t^9", 5, 2), pair("t^2", "t", 5, 2))

    def test_empty_vs_nonempty(self):
        assert not graphs_equal(pair("0", "0", 3, 2), pair("t", "t", 3, 2))

    def test_high_f_coefficient_ignored(self):
        x, y = pair("1", "t", 4, 2), pair("1", "t+t^3", 4, 2)
        assert graphs_equal(x, y)
        assert adjacency(x) == adjacency(y)

    def test_mismatch(self):
        with pytest.raises(InputError):
            graphs_equal(pair("1", "t", 4, 2), pair("1", "t", 5, 2))

    @pytest.mark.parametrize("p, n", [(2, 5), (3, 4)])
    def test_agrees_with_matrix_equality(self, p, n):
        graphs = list(enumerate_graphs(n, p))
        mats = [adjacency(g) for g in graphs]
        for (x, mx), (y, my) in itertools.combinations(zip(graphs, mats), 2):
            assert graphs_equal(x, y) == (mx == my)


def form_members(n, p):
    """For each class, the canonical pairs of every (g, f) written in that form."""
    m = Modulus(p)
    width = n  # g_0..g_{n-1}, f_1..f_{n-1}: enough to reach every kept coefficient

    def canon(g, f):
        return canonicalize(CoeffSeq(m, tuple(x % p for x in g)), CoeffSeq(m, tuple(x % p for x in f)), n)

    gs = list(itertools.product(range(p), repeat=width))
    fs = [(0, *tail) for tail in itertools.product(range(p), repeat=width - 1)]
    one_over = [1] * (width + 1)
    out = {
        C.EMPTY: {canon((), ())},
        C.STAR: {canon(g, ()) for g in gs if any(g[: n - 1])},
        C.APPELL: {canon(g, (0, 1)) for g in gs},
        C.BELL: {canon(g, (0, *g)) for g in gs},
        C.PASCAL: {canon(one_over, [0] + one_over)} if n >= 2 else set(),
        C.DERIVATIVE: {canon([(i + 1) * f[i + 1] for i in range(width - 1)], f) for f in fs},
        C.PROPER: {canon(g, f) for g in gs for f in fs if g[0] and len(f) > 1 and f[1]},
        C.ONE_PLUS_F: {canon([1 + f[0], *f[1:]], f) for f in fs},
    }
    # on one vertex every form degenerates to the empty graph; only EMPTY and
    # the shapes that allow g = 0 keep it
    if n == 1:
        for c in (C.STAR, C.PASCAL, C.PROPER, C.ONE_PLUS_F):
            out[c] = set()
    return out


class TestClassify:
    def test_pascal(self):
        assert classify(pair("1+t+t^2", "t+t^2+t^3", 4, 2)) == C.PASCAL | C.BELL | C.ONE_PLUS_F | C.PROPER

    def test_empty(self):
        got = classify(pair("0", "0", 5, 2))
        assert C.EMPTY in got and C.PROPER not in got and C.STAR not in got

    def test_path_like(self):
        assert classify(pair("1", "t", 5, 2)) == C.APPELL | C.PROPER | C.BELL | C.DERIVATIVE

    def test_names(self):
        assert class_names(C.BELL | C.ONE_PLUS_F) == ["bell", "one-plus-f"]

    @pytest.mark.parametrize("p, n", [(2, n) for n in range(1, 7)] + [(3, n) for n in range(1, 6)] + [(5, 3), (5, 4)])
    def test_matches_brute_force_over_forms(self, p, n):
        members = form_members(n, p)
        for g in enumerate_graphs(n, p):
            got = classify(g)
            for c, found in members.items():
                assert (c in got) == (g in found), (str(g), c)

    @pytest.mark.parametrize("p, n", [(2, 6), (3, 5)])
    def test_class_implications(self, p, n):
        for g in enumerate_graphs(n, p):
            got = classify(g)
            if C.PASCAL in got:
                assert C.BELL in got and C.ONE_PLUS_F in got
            if C.EMPTY in got:
                assert C.STAR not in got and C.PROPER not in got

    @given(st.integers(1, 7), st.lists(st.integers(0, 2), max_size=9), st.lists(st.integers(0, 2), max_size=9))
    def test_invariant_under_canonicalization(self, n, g, f):
        m = Modulus(3)
        once = canonicalize(CoeffSeq(m, tuple(g)), CoeffSeq(m, (0, *f)), n)
        again = canonicalize(once.gtilde, once.ftilde, n)
        assert classify(once) == classify(again)


class TestEnumerate:
    @pytest.mark.parametrize("n, p, size", [(2, 3, 3), (3, 2, 6), (1, 2, 1), (1, 7, 1)])
    def test_sizes(self, n, p, size):
        assert sum(1 for _ in enumerate_graphs(n, p)) == size

    def test_order_one_is_empty_graph(self):
        assert list(enumerate_graphs(1, 3)) == [CanonicalPair.empty(1, 3)]

    def test_order_three_brute_force(self):
        # all graphs on 3 vertices reachable from any g_0,g_1 and f_1
        brute = {raw_adjacency(g, (0, f1), 3, 2) for g in itertools.product((0, 1), repeat=2) for f1 in (0, 1)}
        assert len(brute) == 6 == (4 ** 2 + 2) // 3
        assert {adjacency(x).rows for x in enumerate_graphs(3, 2)} == brute

    def test_lexicographic_with_empty_last(self):
        graphs = list(enumerate_graphs(4, 3))
        keys = [(g.bstar, g.g_coeffs(), g.f_coeffs()) for g in graphs[:-1]]
        assert keys == sorted(keys)
        assert graphs[-1].is_empty()

    def test_rejects_composite(self):
        with pytest.raises(NonPrimeModulusError):
            next(enumerate_graphs(3, 4))

    @pytest.mark.parametrize("p, top", [(2, 6), (3, 6), (5, 4)])
    def test_determination(self, p, top):
        for n in range(1, top + 1):
            graphs = list(enumerate_graphs(n, p))
            mats = {adjacency(g) for g in graphs}
            assert len(graphs) == len(set(graphs)) == len(mats) == count_graphs(n, p)


class TestCount:
    @pytest.mark.parametrize("n, p, expected", [(4, 2, 22), (2, 5, 5), (3, 3, 21), (1, 11, 1)])
    def test_values(self, n, p, expected):
        assert count_graphs(n, p) == expected

    @pytest.mark.parametrize("n, p", [(4, 2), (3, 3)])
    def test_matches_enumeration(self, n, p):
        assert count_graphs(n, p) == sum(1 for _ in enumerate_graphs(n, p))

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 101])
    def test_recursion_equals_closed_form(self, p):
        for n in range(1, 65):
            assert count_graphs_recursive(n, p) == count_graphs_closed_form(n, p)

    def test_rejects_composite(self):
        with pytest.raises(NonPrimeModulusError):
            count_graphs(3, 6)
