import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import Pipeline

from priordan.estimators import (
    AdjacencyTransformer, BalancedWordEncoder, GraphClassTagger, PermutationEncoder, WordEncoder,
)
from priordan.exceptions import InputError, NonPrimeModulusError
from priordan.graphs import GraphClass, adjacency, enumerate_graphs
from priordan.series import CanonicalPair, canonicalize, parse_poly
from priordan.validation import check_pair, check_pairs

ALL = [AdjacencyTransformer, WordEncoder, PermutationEncoder, BalancedWordEncoder, GraphClassTagger]


@pytest.mark.parametrize("cls", ALL)
def test_params_and_clone(cls):
    est = cls(n=4)
    assert est.get_params()["n"] == 4
    twin = clone(est.set_params(n=5))
    assert twin.get_params() == est.get_params()


@pytest.mark.parametrize("cls", ALL)
def test_transform_before_fit(cls):
    with pytest.raises(NotFittedError):
        cls(n=3).transform([("1", "t")])


def test_adjacency_stack():
    out = AdjacencyTransformer(n=3).fit_transform([("1", "t"), ("0", "0")])
    assert out.shape == (2, 3, 3) and out.dtype == np.int64
    assert out[0].tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]] and not out[1].any()


def test_adjacency_mixed_orders():
    pairs = [CanonicalPair.empty(3, 2), CanonicalPair.empty(4, 2)]
    with pytest.raises(InputError, match="mix"):
        AdjacencyTransformer().fit().transform(pairs)


def test_adjacency_composite_modulus():
    out = AdjacencyTransformer(n=4, p=4).fit_transform([("2+t", "3t")])
    assert out[0, 1, 0] == 2


def test_word_roundtrip():
    graphs = list(enumerate_graphs(4, 3))
    enc = WordEncoder(n=4, p=3).fit()
    back = enc.inverse_transform(enc.transform(graphs))
    assert list(back) == graphs
    text = WordEncoder(n=4, p=2, as_text=True).fit().transform([("1+t^2", "t+t^2")])
    assert text[0] == "bcd"
    assert WordEncoder(p=2).fit().inverse_transform(["bcd"])[0] == canonicalize(
        parse_poly("1+t^2", 2), parse_poly("t+t^2", 2), 4)


def test_word_encoder_needs_prime():
    with pytest.raises(NonPrimeModulusError):
        WordEncoder(n=3, p=6).fit()


def test_permutation_encoder():
    enc = PermutationEncoder(n=5).fit()
    perms = enc.transform([("t+t^3", "t^2"), ("t", "t+t^2")])
    assert perms[0] == (10, 8, 9, 6, 5, 4, 7, 3, 1, 2)
    assert perms[1] == (9, 8, 10, 6, 5, 4, 7, 3, 2, 1)
    assert [p.to_dict()["g"] for p in enc.inverse_transform(perms)] == ["t+t^3", "t"]


def test_balanced_encoder():
    enc = BalancedWordEncoder(n=5).fit()
    words = enc.transform([("1+2t^2+t^3", "t^2")])
    assert words[0] == "11200211"
    assert enc.inverse_transform(words)[0].to_dict() == {"n": 5, "p": 3, "g": "1+2t^2+t^3", "f": "t^2"}


def test_tagger_matches_classify():
    graphs = list(enumerate_graphs(4, 2))
    tagger = GraphClassTagger(n=4).fit()
    marks = tagger.transform(graphs)
    names = list(tagger.get_feature_names_out())
    assert marks.shape == (len(graphs), len(GraphClass)) and marks.dtype == np.int8
    pascal = graphs.index(canonicalize(parse_poly("1+t+t^2", 2), parse_poly("t+t^2+t^3", 2), 4))
    assert marks[pascal, names.index("pascal")] == 1
    assert marks[-1, names.index("empty")] == 1


def test_pipeline():
    pipe = Pipeline([("enc", PermutationEncoder(n=3)), ("dec", _Decode())])
    graphs = list(enumerate_graphs(3, 2))
    assert list(pipe.fit_transform(graphs)) == graphs


class _Decode(PermutationEncoder):
    def transform(self, X):
        return self.inverse_transform(X)


def test_sample_order_checked():
    with pytest.raises(InputError, match="order"):
        PermutationEncoder(n=4).fit().transform([CanonicalPair.empty(3, 2)])


def test_check_pair_forms():
    a = check_pair({"n": 3, "p": 2, "g": "1", "f": "t"})
    b = check_pair(([1], [0, 1]), 3, 2)
    c = check_pair(("1", "t"), 3, 2)
    assert a == b == c
    assert adjacency(a).rows[0] == (0, 1, 0)


@pytest.mark.parametrize("bad, kwargs", [
    ("1", {}), (("1", "t"), {}), (5, {"n": 3, "p": 2}), (("1", "t"), {"n": 0, "p": 2}),
])
def test_check_pair_rejects(bad, kwargs):
    with pytest.raises(InputError):
        check_pair(bad, **kwargs)


def test_check_pairs_rejects_single_sample():
    with pytest.raises(InputError):
        check_pairs("1")
