"""Spherical point configurations from subdivided polyhedra.

Generate N-point sets on the unit sphere by refining the faces of a
regular polyhedron with triangular-lattice grids mapped through spherical
area coordinates, optionally recursing on the convex hull of the result;
then score configurations by separation distance, covering radius, mesh
ratio and per-triangle edge ratios.
"""

from .errors import (
    ConsistencyError,
    DomainError,
    GeometryError,
    ParameterError,
    SolverError,
    SphereGridError,
)
from .lattice import (
    barycentric_coords,
    lattice_points,
    to_plane,
    triangulation_number,
    validate_pair,
)
from .meshgen import (
    SphericalConfig,
    TriangleMesh,
    base_polyhedron,
    canonical_order,
    convex_hull_triangulation,
    expected_cardinality,
    generate,
    subdivide_mesh,
    validate_mesh,
)
from .metrics import (
    MetricsReport,
    covering,
    edge_ratios,
    evaluate,
    mesh_ratio,
    separation,
)
from .sequences import Family, format_sequence, parse_family, parse_sequence
from .spherical import (
    area_coords,
    point_from_area_coords,
    project_to_sphere,
    spherical_triangle_area,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "DomainError",
    "Family",
    "GeometryError",
    "MetricsReport",
    "ParameterError",
    "SolverError",
    "SphereGridError",
    "SphericalConfig",
    "TriangleMesh",
    "area_coords",
    "barycentric_coords",
    "base_polyhedron",
    "canonical_order",
    "convex_hull_triangulation",
    "covering",
    "edge_ratios",
    "evaluate",
    "expected_cardinality",
    "format_sequence",
    "generate",
    "lattice_points",
    "mesh_ratio",
    "parse_family",
    "parse_sequence",
    "point_from_area_coords",
    "project_to_sphere",
    "separation",
    "spherical_triangle_area",
    "subdivide_mesh",
    "to_plane",
    "triangulation_number",
    "validate_mesh",
    "validate_pair",
]
