"""Chromatic Delaunay mosaics, chromatic radius functions and 6-packs of
persistence diagrams, in exact rational arithmetic."""
from ._kernels import BACKEND
from .core import (
    ChromaticPointSet,
    DiagramPoint,
    Filtration,
    GenericityError,
    GenericityReport,
    PersistenceDiagram,
    SimplicialComplex,
    validate_genericity,
)
from .mosaic import chromatic_delaunay, delaunay_mosaic, k_chromatic_subcomplex, subcomplex_by_colors
from .persistence import (
    MODULES,
    bottleneck_distance,
    diagram,
    norms,
    relative_diagram,
    six_module_diagrams,
)
from .radius import radius_function, radius_oracle, stack_radius_squared
from .sixpack import (
    SixPack,
    mingling_patterns,
    six_pack,
    triple_analysis,
    verify_norm_relations,
    verify_rank_identities,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ChromaticPointSet", "DiagramPoint", "Filtration", "GenericityError", "GenericityReport",
    "MODULES", "PersistenceDiagram", "SimplicialComplex", "SixPack", "bottleneck_distance",
    "chromatic_delaunay", "delaunay_mosaic", "diagram", "k_chromatic_subcomplex", "mingling_patterns",
    "norms", "radius_function", "radius_oracle", "relative_diagram", "six_module_diagrams", "six_pack",
    "stack_radius_squared", "subcomplex_by_colors", "triple_analysis", "validate_genericity",
    "verify_norm_relations", "verify_rank_identities",
]
