"""Dicolouring super-orientations of chordal graphs.

Graph types and checks live in :mod:`dichromatic.graphs`, chordal machinery in
:mod:`dichromatic.chordal`, the colouring algorithms in
:mod:`dichromatic.colouring`, the family generators in
:mod:`dichromatic.constructions` and scikit-learn style wrappers in
:mod:`dichromatic.estimators`.
"""

from .chordal import (
    Ordering,
    TreeDecomposition,
    check_prefix_properties,
    clique_number_chordal,
    clique_tree,
    is_chordal,
    is_perfect_elimination_ordering,
    lemma_ordering,
    lex_bfs,
    make_valid,
    recognize_chordal,
)
from .colouring import (
    BoundReport,
    balanced_c4free_dicolouring,
    exact_dichromatic,
    greedy_peo_dicolouring,
    mad_bound_report,
    omega_reducing_independent_set,
)
from .constructions import (
    FamilyCertificate,
    IntervalMeta,
    c4free_family,
    chordal_kl_family,
    cograph_family,
    hajos_join,
    interval_family,
    interval_lowerbound_witness,
    random_chordal_superorientation,
)
from .density import max_average_degree
from .exceptions import (
    BudgetExceeded,
    C4FoundError,
    DecompositionError,
    InvalidColouringError,
    NotChordalError,
    ParseError,
)
from .graphs import (
    CheckResult,
    Colouring,
    Digraph,
    UndirectedGraph,
    bidirected_graph,
    build_digraph,
    clique_number,
    digon_count,
    digon_degrees,
    is_c4_free,
    max_bidegree,
    underlying_graph,
    validate_dicolouring,
)

__version__ = "0.1.0"
