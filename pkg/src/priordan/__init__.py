"""Encode labelled p-Riordan graphs by words, permutations and balanced words."""
from .balanced import (
    CubeWalk, count_balanced, count_closed_walks_formula, count_closed_walks_matrix,
    eta, eta_inv, h_inv, h_map, is_balanced, walk_to_word, word_to_walk,
)
from .estimators import (
    AdjacencyTransformer, BalancedWordEncoder, GraphClassTagger, PermutationEncoder, WordEncoder,
)
from .exceptions import ConsistencyError, InputError, NonPrimeModulusError, RiordanError
from .graphs import AdjMatrix, GraphClass, adjacency, classify, count_graphs, enumerate_graphs, graphs_equal
from .perms import (
    contains_pattern, is_member_P2n, perm_class, phi, phi_inv, psi, psi_inv, reduce,
)
from .series import (
    CanonicalPair, CoeffSeq, Modulus, canonicalize, derivative, format_poly, parse_poly, product_coeff,
)
from .words import count_words, validate_word, word_class, xi, xi_inv

__version__ = "0.1.0"
