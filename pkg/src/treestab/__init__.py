"""Exact combinatorics of trees embedded in a disk: the noncrossing
arc complex, the tiling algebra's string modules, noncrossing tree
partitions, torsion pairs, and semistable subcategories of integer
stability conditions."""

from .tree_core import (
    ConventionError,
    EmbeddedTree,
    Segment,
    TreeError,
    TreeFileError,
    TreeValidationError,
    compose,
    load_tree,
    parse_tree,
    segment_turns,
    turn,
)
from .nc_complex import Arc, Facet, arcs, boundary_arcs, crossing, facets, flip_neighbors
from .gc_vectors import (
    c_vector,
    g_vector,
    kreweras_theta,
    pairing_matrix,
    quotient_segments,
    segment_of,
    submodule_segments,
    zigzag,
    zigzag_dominance_check,
)
from .string_modules import (
    ModuleSum,
    StringModule,
    algebra_dimension,
    all_submodules,
    hom_basis,
    hom_dim,
    indecomposable_quotients,
    indecomposable_submodules,
    indecomposables,
    is_wide,
    middle_terms,
    quotient_by,
    string_module,
    string_word,
    tiling_algebra,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ConventionError",
    "EmbeddedTree",
    "Facet",
    "ModuleSum",
    "Segment",
    "StringModule",
    "TreeError",
    "TreeFileError",
    "TreeValidationError",
    "algebra_dimension",
    "all_submodules",
    "arcs",
    "boundary_arcs",
    "c_vector",
    "compose",
    "crossing",
    "facets",
    "flip_neighbors",
    "g_vector",
    "hom_basis",
    "hom_dim",
    "indecomposable_quotients",
    "indecomposable_submodules",
    "indecomposables",
    "is_wide",
    "kreweras_theta",
    "load_tree",
    "middle_terms",
    "pairing_matrix",
    "parse_tree",
    "quotient_by",
    "quotient_segments",
    "segment_of",
    "segment_turns",
    "string_module",
    "string_word",
    "submodule_segments",
    "tiling_algebra",
    "turn",
    "zigzag",
    "zigzag_dominance_check",
    "__version__",
]
