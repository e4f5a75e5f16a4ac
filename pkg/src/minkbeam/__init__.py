"""Optimal discrete beamforming via Minkowski sums of convex polygons."""
from .beamforming import (
    OFF,
    BeamProblem,
    Method,
    PhaseSet,
    PreconditionError,
    Solution,
    build_summands,
    psk_fast_path,
    ris_augment,
    ris_equivalence_check,
    solve,
)
from .geometry import ConvexPolygon, GeometryError, canonicalize, convex_hull, minkowski_sum, scale
from .oracle import brute_force, support_solve, support_value, thales_residual

__version__ = "0.1.0"

__all__ = [
    "OFF", "BeamProblem", "Method", "PhaseSet", "PreconditionError", "Solution",
    "build_summands", "psk_fast_path", "ris_augment", "ris_equivalence_check", "solve",
    "ConvexPolygon", "GeometryError", "canonicalize", "convex_hull", "minkowski_sum", "scale",
    "brute_force", "support_solve", "support_value", "thales_residual",
]
