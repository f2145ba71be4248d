"""Binary-tree rotations, tree-pair group arithmetic, Z2xZ2 edge colorings,
signed-path balance, and 4-coloring counts of the associated sphere maps."""

from .errors import TreeColorError
from .trees import BinaryTree, all_trees, join, rotate
from .thompson import TreePair, parse_word, word_to_pair
from .coloring import classify_vector, colorings_of_pair, is_acceptable, is_valid
from .paths import is_balanced, sign_structure
from .assoc import color_graph, zero_set
from .maps import is_prime, prime_factorization
from .enumeration import jacobsthal, max_coloring_search

__all__ = [
    "TreeColorError",
    "BinaryTree",
    "all_trees",
    "join",
    "rotate",
    "TreePair",
    "parse_word",
    "word_to_pair",
    "classify_vector",
    "colorings_of_pair",
    "is_acceptable",
    "is_valid",
    "is_balanced",
    "sign_structure",
    "color_graph",
    "zero_set",
    "is_prime",
    "prime_factorization",
    "jacobsthal",
    "max_coloring_search",
]
