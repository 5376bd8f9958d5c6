"""Reduced complete-empty X-join decomposition and automorphism groups of finite graphs."""

from .automorphism import (
    GroupDescription,
    NotReducedError,
    Permutation,
    aut_from_decomposition,
    brute_force_aut,
    closure,
    color_aut,
    find_isomorphism,
    verify_automorphism,
    wreath_order,
)
from .construction import lex_product, parse_fiber_spec, x_join
from .decomposition import (
    CharacteristicGraph,
    Fiber,
    FiberKind,
    InvariantError,
    SizeLimitError,
    TwinPartition,
    cem_oracle,
    decompose,
    is_reduced,
    is_reduced_join,
    quotient,
    twin_classes,
)
from .graph import (
    Graph,
    GraphFormatError,
    closed_neighborhood,
    emit_dot,
    emit_graph6,
    externally_related,
    is_clique,
    is_independent,
    open_neighborhood,
    pair_externally_related,
    parse_edge_list,
    parse_graph6,
)

__version__ = "0.1.0"
