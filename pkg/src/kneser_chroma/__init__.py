"""Algebraic colorings of Kneser graph squares over finite fields."""

from .bounds import BoundsReport, bounds_report
from .coloring import (
    ColorVector,
    GroundSet,
    build_ground_set,
    check_ground_set,
    clique_witness,
    color_all,
    color_vertex,
)
from .esym import ESymVector, esym_naive, esym_prefix, esym_union_check
from .gf import Field, make_binary_field, make_prime_field, subfield_elements
from .kneser import (
    GraphSpec,
    adjacent,
    degree_check,
    distance2_related,
    enumerate_vertices,
    intersect_size,
)
from .primes import find_prime_in_interval
from .verifier import (
    VerificationReport,
    exact_chromatic,
    greedy_chromatic,
    recheck_violation,
    verify_coloring,
    verify_table,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "bounds_report",
    "ColorVector",
    "GroundSet",
    "build_ground_set",
    "check_ground_set",
    "clique_witness",
    "color_all",
    "color_vertex",
    "ESymVector",
    "esym_naive",
    "esym_prefix",
    "esym_union_check",
    "Field",
    "make_binary_field",
    "make_prime_field",
    "subfield_elements",
    "GraphSpec",
    "adjacent",
    "degree_check",
    "distance2_related",
    "enumerate_vertices",
    "intersect_size",
    "find_prime_in_interval",
    "VerificationReport",
    "exact_chromatic",
    "greedy_chromatic",
    "recheck_violation",
    "verify_coloring",
    "verify_table",
]
