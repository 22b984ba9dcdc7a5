"""Exact census of torus actions on blowups of the projective plane.

The library reduces a blowup vector to its normal form, seeds Hirzebruch
trapezoids, chops corners with the prescribed size multiset, and
classifies the resulting Delzant polygons up to AGL(2,Z).
"""

from .blowup import (
    BlowupVector,
    BoundReport,
    DerivedParams,
    NonexistenceReport,
    NotBlowupClassError,
    bound_report,
    derived_params,
    format_vector,
    is_reduced,
    nonexistence_check,
    reduce,
)
from .canonical import CanonicalProfile, canonicalize, congruent, is_achiral, oriented_canonical
from .census import (
    ActionClass,
    CensusResult,
    TrapezoidSeed,
    census_state_key,
    run_census,
    trapezoid_seeds,
)
from .chop import (
    ChopDiagnostics,
    ChopRecord,
    InfeasibleChopError,
    chop_corner,
    chop_result_properties,
    feasible_vertices,
)
from .lattice import (
    AffineUnimodularMap,
    Rational,
    apply_map,
    format_rational,
    parse_rational,
    primitive_decompose,
    random_unimodular_map,
)
from .polygon import (
    DelzantPolygon,
    PolygonValidationError,
    ProfileError,
    edge_profile,
    map_polygon,
    polygon_area,
    polygon_from_profile,
    polygon_from_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "ActionClass",
    "AffineUnimodularMap",
    "BlowupVector",
    "BoundReport",
    "CanonicalProfile",
    "CensusResult",
    "ChopDiagnostics",
    "ChopRecord",
    "DelzantPolygon",
    "DerivedParams",
    "InfeasibleChopError",
    "NonexistenceReport",
    "NotBlowupClassError",
    "PolygonValidationError",
    "ProfileError",
    "Rational",
    "TrapezoidSeed",
    "apply_map",
    "bound_report",
    "canonicalize",
    "census_state_key",
    "chop_corner",
    "chop_result_properties",
    "congruent",
    "derived_params",
    "edge_profile",
    "feasible_vertices",
    "format_rational",
    "format_vector",
    "is_achiral",
    "is_reduced",
    "map_polygon",
    "nonexistence_check",
    "oriented_canonical",
    "parse_rational",
    "polygon_area",
    "polygon_from_profile",
    "polygon_from_vertices",
    "primitive_decompose",
    "random_unimodular_map",
    "reduce",
    "run_census",
    "trapezoid_seeds",
]
