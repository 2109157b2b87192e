"""Degeneration order on configurations of a line and two partial flags.

The package models GL(V)-orbits of triples (line, partial flag, partial
flag) as decorated transport matrices, orders them by rank tables,
generates the order by five families of local moves, and validates the
combinatorics against an exact rational linear-algebra oracle.
"""

from .flagcore import (
    DecoratedMatrix,
    FlagError,
    NotFullFlag,
    Position,
    PreconditionFailed,
    ShapeMismatch,
    TransportMatrix,
    ValidationError,
    dominated,
    element_from_obj,
    element_to_obj,
    from_permutation,
    normalize_decoration,
    pos_leq,
    pos_lt,
    render,
    set_leq,
    sort_key,
    to_permutation,
    validate,
)
from .twoflags import (
    NotStrictlyLess,
    RankTable,
    Rectangle,
    TwoFlagReport,
    apply_simple_move,
    enumerate_transport_matrices,
    matrix_from_rank_table,
    progress_move,
    rank_table,
    rk_leq,
    simple_moves,
    verify_two_flag_theorem,
)
from .decorated import (
    NotAnOrbitInvariant,
    RBarTable,
    decorated_from_tables,
    delta_table,
    dimension_full_flags,
    dimension_of,
    enumerate_decorations,
    enumerate_orbits,
    rbar_table,
    rk_compare_witness,
    rk_first_difference,
    rk_leq_dec,
)
from .moves import (
    KIND_ORDER,
    EquivalenceReport,
    Move,
    Poset,
    applicable_moves,
    apply_move,
    build_poset,
    find_chain,
    iter_moves,
    verify_equivalence,
)
from .witness import (
    Configuration,
    IntEchelon,
    MoveDegenerationReport,
    ZeroEntryPosition,
    apply_basis_change,
    configuration_from_obj,
    configuration_to_obj,
    degeneration_family,
    geometric_rank_tables,
    identify_orbit,
    random_int_invertible,
    standard_configuration,
    uncircling_check,
    verify_move_degeneration,
)

__version__ = "0.1.0"

__all__ = [
    "Configuration",
    "DecoratedMatrix",
    "EquivalenceReport",
    "FlagError",
    "IntEchelon",
    "KIND_ORDER",
    "Move",
    "MoveDegenerationReport",
    "NotAnOrbitInvariant",
    "NotFullFlag",
    "NotStrictlyLess",
    "Poset",
    "Position",
    "PreconditionFailed",
    "RBarTable",
    "RankTable",
    "Rectangle",
    "ShapeMismatch",
    "TransportMatrix",
    "TwoFlagReport",
    "ValidationError",
    "ZeroEntryPosition",
    "applicable_moves",
    "apply_basis_change",
    "apply_move",
    "apply_simple_move",
    "build_poset",
    "configuration_from_obj",
    "configuration_to_obj",
    "decorated_from_tables",
    "degeneration_family",
    "delta_table",
    "dimension_full_flags",
    "dimension_of",
    "dominated",
    "element_from_obj",
    "element_to_obj",
    "enumerate_decorations",
    "enumerate_orbits",
    "enumerate_transport_matrices",
    "find_chain",
    "from_permutation",
    "geometric_rank_tables",
    "identify_orbit",
    "iter_moves",
    "matrix_from_rank_table",
    "normalize_decoration",
    "pos_leq",
    "pos_lt",
    "progress_move",
    "random_int_invertible",
    "rank_table",
    "rbar_table",
    "render",
    "rk_compare_witness",
    "rk_first_difference",
    "rk_leq",
    "rk_leq_dec",
    "set_leq",
    "simple_moves",
    "sort_key",
    "standard_configuration",
    "to_permutation",
    "uncircling_check",
    "validate",
    "verify_equivalence",
    "verify_move_degeneration",
    "verify_two_flag_theorem",
]
