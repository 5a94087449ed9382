"""scikit-learn style wrappers around the graph codecs.

Each encoder is stateless apart from the checked modulus stored by ``fit``,
so they drop into a ``Pipeline`` and support ``get_params``/``set_params``::

    >>> enc = PermutationEncoder(n=5).fit()
    >>> enc.transform([("t+t^3", "t^2")])[0]
    (10, 8, 9, 6, 5, 4, 7, 3, 1, 2)
    >>> enc.inverse_transform(enc.transform([("t", "t+t^2")]))[0].to_dict()
    {'n': 5, 'p': 2, 'g': 't', 'f': 't+t^2'}
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .balanced import eta, eta_inv
from .exceptions import InputError
from .graphs import GraphClass, adjacency, classify
from .perms import phi, phi_inv
from .validation import check_modulus, check_order, check_pairs
from .words import format_word, parse_word, xi, xi_inv

__all__ = [
    "AdjacencyTransformer", "WordEncoder", "PermutationEncoder",
    "BalancedWordEncoder", "GraphClassTagger",
]


def _objects(values) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    out[:] = values
    return out


class _PairTransformer(TransformerMixin, BaseEstimator):
    """Shared fit: validate n and p once and remember the modulus."""

    _fixed_p: int | None = None
    _needs_prime = True

    def fit(self, X=None, y=None):
        p = self._fixed_p if self._fixed_p is not None else self.p
        self.modulus_ = check_modulus(p, prime=self._needs_prime)
        if self.n is not None:
            check_order(self.n)
        return self

    def _pairs(self, X):
        check_is_fitted(self, "modulus_")
        return check_pairs(X, self.n, self.modulus_)


class AdjacencyTransformer(_PairTransformer):
    """Map pairs to a stacked ``(n_samples, n, n)`` array of adjacency matrices."""

    _needs_prime = False

    def __init__(self, n=None, p=2):
        self.n = n
        self.p = p

    def transform(self, X):
        pairs = self._pairs(X)
        orders = {pair.n for pair in pairs}
        if len(orders) > 1:
            raise InputError(f"samples mix graph orders {sorted(orders)}; set n or split them")
        size = orders.pop() if orders else (self.n or 0)
        out = np.zeros((len(pairs), size, size), dtype=np.int64)
        for k, pair in enumerate(pairs):
            out[k] = adjacency(pair).to_numpy()
        return out


class WordEncoder(_PairTransformer):
    """Graphs of order n+1 <-> p-Riordan words of length n.

    With ``as_text`` the words come back in their text form ("bcd", "0:0,2:0").
    """

    def __init__(self, n=None, p=2, as_text=False):
        self.n = n
        self.p = p
        self.as_text = as_text

    def transform(self, X):
        words = [xi(pair) for pair in self._pairs(X)]
        if self.as_text:
            words = [format_word(w, self.modulus_) for w in words]
        return _objects(words)

    def inverse_transform(self, X):
        check_is_fitted(self, "modulus_")
        words = [parse_word(w, self.modulus_) if isinstance(w, str) else w for w in X]
        return _objects([xi_inv(w, self.modulus_) for w in words])


class PermutationEncoder(_PairTransformer):
    """Riordan graphs (p=2) of order n <-> permutations in P_2n."""

    _fixed_p = 2

    def __init__(self, n=None):
        self.n = n

    def transform(self, X):
        return _objects([phi(pair) for pair in self._pairs(X)])

    def inverse_transform(self, X):
        check_is_fitted(self, "modulus_")
        return _objects([phi_inv(perm) for perm in X])


class BalancedWordEncoder(_PairTransformer):
    """Oriented Riordan graphs (p=3) of order n+1 <-> balanced words of length 2n."""

    _fixed_p = 3

    def __init__(self, n=None):
        self.n = n

    def transform(self, X):
        return _objects([eta(pair) for pair in self._pairs(X)])

    def inverse_transform(self, X):
        check_is_fitted(self, "modulus_")
        return _objects([eta_inv(word) for word in X])


class GraphClassTagger(_PairTransformer):
    """One 0/1 indicator column per graph class, in GraphClass order."""

    _needs_prime = False

    def __init__(self, n=None, p=2):
        self.n = n
        self.p = p

    def transform(self, X):
        members = list(GraphClass)
        rows = []
        for pair in self._pairs(X):
            found = classify(pair)
            rows.append([int(c in found) for c in members])
        return np.array(rows, dtype=np.int8).reshape(len(rows), len(members))

    def get_feature_names_out(self, input_features=None):
        return np.array([c.label for c in GraphClass], dtype=object)
