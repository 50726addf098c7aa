"""Exact Hecke-algebra seminormal representations on standard skew tableaux,
with verification sweeps for the horizontal-strip composition structure.

Everything is computed over the exact rational-function field Q(a); there is
no floating point anywhere and all checks are identities, not tolerances.
"""

from .linalg import NoSolution, QMatrix, fraction_rank, hstack, nullspace, rref, solve_linear, vstack
from .ratfun import DenominatorVanishes, LaurentPoly, RationalFunction, quantum_int
from .seminormal import (
    RelationViolation,
    SkewRepresentation,
    WedderburnReport,
    act_word,
    build_representation,
    classical_limit,
    invariant_subspace,
    matrix_unit_lift,
    reduced_word,
    relation_failures,
    seminormal_matrix,
    verify_invariants,
    verify_relations,
    wedderburn_check,
)
from .shapes import (
    Box,
    Partition,
    SkewShape,
    SkewTableau,
    all_partitions,
    all_skew_shapes,
    axial_distance,
    check_partition,
    contains,
    content,
    enumerate_skew_tableaux,
    format_partition,
    is_horizontal_strip,
    parse_partition,
    partitions_of,
    sub_partitions,
    swap_entries,
    young_successors,
)
from .stripcat import (
    HSMorphism,
    PathMorphism,
    QImage,
    SourceTargetMismatch,
    hs_compose,
    invariant_dimension,
    invariant_path,
    morita_composition_scalar,
    path_compose,
    project_Q,
    verify_morita,
)

__version__ = "0.1.0"

__all__ = [
    "Box",
    "DenominatorVanishes",
    "HSMorphism",
    "LaurentPoly",
    "NoSolution",
    "Partition",
    "PathMorphism",
    "QImage",
    "QMatrix",
    "RationalFunction",
    "RelationViolation",
    "SkewRepresentation",
    "SkewShape",
    "SkewTableau",
    "SourceTargetMismatch",
    "WedderburnReport",
    "act_word",
    "all_partitions",
    "all_skew_shapes",
    "axial_distance",
    "build_representation",
    "check_partition",
    "classical_limit",
    "contains",
    "content",
    "enumerate_skew_tableaux",
    "format_partition",
    "fraction_rank",
    "hs_compose",
    "hstack",
    "invariant_dimension",
    "invariant_path",
    "invariant_subspace",
    "is_horizontal_strip",
    "matrix_unit_lift",
    "morita_composition_scalar",
    "nullspace",
    "parse_partition",
    "partitions_of",
    "path_compose",
    "project_Q",
    "quantum_int",
    "reduced_word",
    "relation_failures",
    "rref",
    "seminormal_matrix",
    "solve_linear",
    "sub_partitions",
    "swap_entries",
    "verify_invariants",
    "verify_morita",
    "verify_relations",
    "vstack",
    "wedderburn_check",
    "young_successors",
]
