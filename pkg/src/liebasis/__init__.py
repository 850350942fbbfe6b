"""Left-greedy Lyndon basis of free Lie algebras, star graphs and the configuration pairing."""

from .errors import (
    AlphabetError,
    LieBasisError,
    NonIntegralCoefficient,
    NotATree,
    NotFullyPartitionable,
    NotLyndon,
    NotPartitionable,
    ParseError,
)
from .graphs import CutResult, LabeledDigraph, connected, edge_cuts, path_graph, star_graph, to_dot
from .lie import (
    Bracket,
    Letter,
    LieCombo,
    LieExpr,
    assoc_expand,
    combo_add,
    combo_scale,
    left_greedy_bracket,
    parse_combo,
    parse_expr,
    random_expr,
    random_relation,
    standard_bracket,
)
from .pairing import (
    bijections,
    pair,
    pair_bruteforce,
    pair_combo,
    pair_definition,
    pair_recursive,
    pair_sigma,
    self_pairing,
)
from .partition import Leaf, Node, PartitionTree, format_tree, full_partition, simple_partition
from .projection import BasisExpansion, project, project_combo, project_verify, verify_basis, witt_dimension
from .words import (
    Alphabet,
    Content,
    Word,
    cyclic_permutations,
    enumerate_lyndon_by_content,
    enumerate_lyndon_by_length,
    is_lyndon,
    lex_compare,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetError",
    "LieBasisError",
    "NonIntegralCoefficient",
    "NotATree",
    "NotFullyPartitionable",
    "NotLyndon",
    "NotPartitionable",
    "ParseError",
    "CutResult",
    "LabeledDigraph",
    "connected",
    "edge_cuts",
    "path_graph",
    "star_graph",
    "to_dot",
    "Bracket",
    "Letter",
    "LieCombo",
    "LieExpr",
    "assoc_expand",
    "combo_add",
    "combo_scale",
    "left_greedy_bracket",
    "parse_combo",
    "parse_expr",
    "random_expr",
    "random_relation",
    "standard_bracket",
    "bijections",
    "pair",
    "pair_bruteforce",
    "pair_combo",
    "pair_definition",
    "pair_recursive",
    "pair_sigma",
    "self_pairing",
    "Leaf",
    "Node",
    "PartitionTree",
    "format_tree",
    "full_partition",
    "simple_partition",
    "BasisExpansion",
    "project",
    "project_combo",
    "project_verify",
    "verify_basis",
    "witt_dimension",
    "Alphabet",
    "Content",
    "Word",
    "cyclic_permutations",
    "enumerate_lyndon_by_content",
    "enumerate_lyndon_by_length",
    "is_lyndon",
    "lex_compare",
]
