"""Spherical point configurations from recursively subdivided triangle meshes.

A configuration is built by laying a triangular grid over every face of a
closed, convex, triangulated mesh (the three regular deltahedra to start):
grid nodes interior to a face are placed by the inverse area-coordinate
solve on its spherical triangle, nodes on shared edges at equal arc-length
fractions of the edge arc, and the per-face results fuse into one point
set.  The convex hull of that set is again a closed triangulated mesh, so
the step can be applied repeatedly with a sequence of integer pairs.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import ConvexHull, QhullError, cKDTree

from .errors import ConsistencyError, GeometryError, ParameterError
from .lattice import (
    _bary_numerators,
    lattice_points,
    triangulation_number,
    validate_pair,
)
from .spherical import _slerp, _solve_interior, _unit

#: two generated points closer than this are treated as duplicates
DEDUP_TOL = 1e-9

#: interior solve batch size, bounds peak memory of the Newton iteration
_CHUNK = 400_000

_BASE_NAMES = {
    "tetra": "tetrahedron",
    "tetrahedron": "tetrahedron",
    "octa": "octahedron",
    "octahedron": "octahedron",
    "icosa": "icosahedron",
    "icosahedron": "icosahedron",
}

_BASE_VERTEX_COUNT = {"tetrahedron": 4, "octahedron": 6, "icosahedron": 12}


@dataclass
class TriangleMesh:
    """Closed triangulated mesh with unit-sphere vertices.

    ``vertices`` is (V, 3) float64; ``faces`` is (F, 3) int64 with each
    face counterclockwise as seen from outside.
    """

    vertices: np.ndarray
    faces: np.ndarray

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_faces(self):
        return len(self.faces)


@dataclass
class SphericalConfig:
    """An N-point configuration on the unit sphere plus its provenance."""

    points: np.ndarray
    base: str | None = None
    pairs: tuple = ()
    mesh: TriangleMesh | None = None

    @property
    def n(self):
        return len(self.points)

    def hull(self):
        """The hull triangulation of the points, computed once and cached."""
        if self.mesh is None:
            self.mesh = convex_hull_triangulation(self.points)
        return self.mesh


def canonical_base_name(name):
    try:
        return _BASE_NAMES[str(name).strip().lower()]
    except KeyError:
        raise ParameterError(
            f"unknown base polyhedron {name!r}; expected tetra, octa or icosa"
        ) from None


def base_vertex_count(name):
    return _BASE_VERTEX_COUNT[canonical_base_name(name)]


def expected_cardinality(base, pairs):
    """Closed-form point count: 2 + (V0 - 2) * prod of triangulation numbers."""
    v0 = base_vertex_count(base)
    prod = 1
    for pair in pairs:
        m, n = validate_pair(pair)
        prod *= triangulation_number(m, n)
    return 2 + (v0 - 2) * prod


def _orient_outward(vertices, faces):
    """Flip faces whose normal points toward the origin; returns faces."""
    a = vertices[faces[:, 0]]
    b = vertices[faces[:, 1]]
    c = vertices[faces[:, 2]]
    normals = np.cross(b - a, c - a)
    inward = (normals * (a + b + c)).sum(axis=1) < 0.0
    faces = faces.copy()
    faces[inward] = faces[inward][:, [0, 2, 1]]
    return faces


def base_polyhedron(name):
    """Canonical unit-circumradius regular base mesh.

    Fixed orientations: the tetrahedron uses the alternated cube corners
    (1,1,1)/sqrt(3) etc.; the octahedron's vertices sit on the coordinate
    axes; the icosahedron has vertices on the +z and -z axes with two
    five-vertex rings at z = +-1/sqrt(5), the lower ring rotated by pi/5.
    """
    name = canonical_base_name(name)
    if name == "tetrahedron":
        v = np.array(
            [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
        ) / math.sqrt(3.0)
        f = np.array([[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]], dtype=np.int64)
    elif name == "octahedron":
        v = np.array(
            [
                [1.0, 0.0, 0.0],
                [-1.0, 0.0, 0.0],
                [0.0, 1.0, 0.0],
                [0.0, -1.0, 0.0],
                [0.0, 0.0, 1.0],
                [0.0, 0.0, -1.0],
            ]
        )
        f = np.array(
            [[x, y, z] for x in (0, 1) for y in (2, 3) for z in (4, 5)],
            dtype=np.int64,
        )
    else:
        zr = 1.0 / math.sqrt(5.0)
        rr = 2.0 / math.sqrt(5.0)
        upper = [
            (rr * math.cos(2.0 * math.pi * k / 5.0),
             rr * math.sin(2.0 * math.pi * k / 5.0), zr)
            for k in range(5)
        ]
        lower = [
            (rr * math.cos(2.0 * math.pi * k / 5.0 + math.pi / 5.0),
             rr * math.sin(2.0 * math.pi * k / 5.0 + math.pi / 5.0), -zr)
            for k in range(5)
        ]
        v = np.array([(0.0, 0.0, 1.0)] + upper + lower + [(0.0, 0.0, -1.0)])
        f = []
        for k in range(5):
            k1 = (k + 1) % 5
            f.append((0, 1 + k, 1 + k1))
            f.append((1 + k, 6 + k, 1 + k1))
            f.append((1 + k1, 6 + k, 6 + k1))
            f.append((11, 6 + k1, 6 + k))
        f = np.array(f, dtype=np.int64)
    v = _unit(v)
    return TriangleMesh(vertices=v, faces=_orient_outward(v, f))


def _unique_edges(faces, n_vertices):
    """Undirected edges of a closed mesh with their two flanking apexes.

    Returns (edges, apexes): edges is (E, 2) with lower index first,
    apexes is (E, 2).  Raises GeometryError unless every edge is shared
    by exactly two faces.
    """
    e = np.concatenate([faces[:, [0, 1]], faces[:, [1, 2]], faces[:, [2, 0]]])
    apex = np.concatenate([faces[:, 2], faces[:, 0], faces[:, 1]])
    lo = e.min(axis=1)
    hi = e.max(axis=1)
    key = lo.astype(np.int64) * np.int64(n_vertices) + hi
    order = np.argsort(key, kind="stable")
    key_sorted = key[order]
    uniq, start, counts = np.unique(key_sorted, return_index=True, return_counts=True)
    if np.any(counts != 2):
        raise GeometryError("mesh is not a closed 2-manifold (edge not shared by 2 faces)")
    edges = np.column_stack([uniq // n_vertices, uniq % n_vertices])
    apexes = np.column_stack([apex[order][start], apex[order][start + 1]])
    return edges, apexes


def validate_mesh(mesh, sphere_tol=1e-12):
    """Assert closed-manifold structure, Euler characteristic and unit radii."""
    v, f = mesh.vertices, mesh.faces
    radii = np.sqrt((v * v).sum(axis=1))
    if np.any(np.abs(radii - 1.0) > sphere_tol):
        raise GeometryError("mesh vertices are not on the unit sphere")
    edges, _ = _unique_edges(f, len(v))
    if len(v) - len(edges) + len(f) != 2:
        raise GeometryError("mesh violates Euler characteristic V - E + F = 2")
    # Orientation consistency: each undirected edge traversed once per direction.
    directed = np.concatenate([f[:, [0, 1]], f[:, [1, 2]], f[:, [2, 0]]])
    key = directed[:, 0].astype(np.int64) * np.int64(len(v)) + directed[:, 1]
    if len(np.unique(key)) != len(key):
        raise GeometryError("mesh faces are not consistently oriented")
    a, b, c = v[f[:, 0]], v[f[:, 1]], v[f[:, 2]]
    if np.any((np.cross(b - a, c - a) * (a + b + c)).sum(axis=1) <= 0.0):
        raise GeometryError("mesh has inward-facing faces")


def convex_hull_triangulation(points):
    """Convex hull of on-sphere points as an outward-oriented triangle mesh.

    Faces index the input array, whose order is preserved.  Coplanar facet
    patches (several hull points on a common plane circle) come out
    triangulated deterministically for a fixed input ordering.  Every
    input point must be a hull vertex, which holds for any point set on
    the sphere without duplicates.
    """
    points = np.ascontiguousarray(points, dtype=np.float64)
    if points.ndim != 2 or points.shape[1] != 3 or len(points) < 4:
        raise GeometryError("hull needs at least 4 distinct 3-d points")
    try:
        hull = ConvexHull(points)
    except QhullError as exc:
        raise GeometryError(f"convex hull failed: {exc}") from exc
    if len(hull.vertices) != len(points):
        raise GeometryError(
            "input points are not all extreme; hull dropped "
            f"{len(points) - len(hull.vertices)} of them"
        )
    faces = _orient_outward(points, hull.simplices.astype(np.int64))
    return TriangleMesh(vertices=points, faces=faces)


def canonical_order(points):
    """Deterministic point ordering: by z, then atan2(y, x), then (x, y)."""
    theta = np.arctan2(points[:, 1], points[:, 0])
    order = np.lexsort((points[:, 1], points[:, 0], theta, points[:, 2]))
    return points[order]


def _merge_near_duplicates(points):
    """Drop points closer than DEDUP_TOL to an earlier point."""
    tree = cKDTree(points)
    pairs = tree.query_pairs(DEDUP_TOL, output_type="ndarray")
    if len(pairs) == 0:
        return points
    keep = np.ones(len(points), dtype=bool)
    keep[pairs.max(axis=1)] = False
    return points[keep]


def subdivide_mesh(mesh, pair, base=None):
    """One grid-refinement pass over every face of a closed mesh.

    Nodes shared between faces are produced exactly once, so the fusion of
    per-face grids never depends on a dedup tolerance: mesh vertices are
    copied, nodes on a shared edge sit at equal arc-length fractions j/g
    (g = gcd(m, n)) of the edge's great-circle arc, and strictly interior
    nodes are found per face by the inverse area-coordinate solve.  The
    arc-length rule for edge nodes depends only on the edge's endpoints,
    so the two faces sharing an edge always agree on its nodes.  The fused
    set is still scanned for near-duplicates and checked against the
    closed-form count (V - 2) * (m^2 + n^2 + m n) + 2; any mismatch raises
    ConsistencyError.
    """
    m, n = validate_pair(pair)
    v = np.asarray(mesh.vertices, dtype=np.float64)
    f = np.asarray(mesh.faces, dtype=np.int64)
    radii = np.sqrt((v * v).sum(axis=1))
    if np.any(np.abs(radii - 1.0) > 1e-12):
        raise GeometryError("mesh vertices must lie on the unit sphere")
    n_vertices = len(v)
    gamma = triangulation_number(m, n)
    gc = math.gcd(m, n)

    pts = lattice_points(m, n)
    alpha, beta = _bary_numerators(pts, m, n)
    on_a_edge = beta == 0
    on_b_edge = alpha == 0
    on_far_edge = alpha + beta == gamma
    is_interior = ~(on_a_edge | on_b_edge | on_far_edge)
    int_la = alpha[is_interior] / float(gamma)
    int_lb = beta[is_interior] / float(gamma)
    n_int = int(is_interior.sum())

    edges, apexes = _unique_edges(f, n_vertices)

    blocks = [v]
    if gc > 1:
        frac = np.arange(1, gc) / float(gc)
        n_edges = len(edges)
        end_a = np.repeat(v[edges[:, 0]], gc - 1, axis=0)
        end_b = np.repeat(v[edges[:, 1]], gc - 1, axis=0)
        target = np.tile(frac, n_edges)
        blocks.append(_slerp(end_a, end_b, target))

    if n_int > 0:
        v0 = np.repeat(v[f[:, 0]], n_int, axis=0)
        va = np.repeat(v[f[:, 1]], n_int, axis=0)
        vb = np.repeat(v[f[:, 2]], n_int, axis=0)
        la = np.tile(int_la, len(f))
        lb = np.tile(int_lb, len(f))
        solved = np.empty_like(v0)
        for k in range(0, len(la), _CHUNK):
            sl = slice(k, k + _CHUNK)
            solved[sl] = _solve_interior(v0[sl], va[sl], vb[sl], la[sl], lb[sl])
        blocks.append(solved)

    points = np.concatenate(blocks)
    points = _merge_near_duplicates(points)
    expected = (n_vertices - 2) * gamma + 2
    if len(points) != expected:
        raise ConsistencyError(
            f"subdivision produced {len(points)} points, expected {expected} "
            f"for pair ({m},{n}) on a {n_vertices}-vertex mesh"
        )
    return SphericalConfig(points=canonical_order(points), base=base, pairs=((m, n),))


def generate(base, pairs):
    """Full pipeline: base polyhedron refined by a sequence of integer pairs.

    Each pass subdivides the current mesh and re-triangulates the result
    via its convex hull; the final configuration keeps its hull attached
    for metric evaluation.  The point count always equals
    2 + (V0 - 2) * prod_k gamma(m_k, n_k).
    """
    name = canonical_base_name(base)
    pair_list = [validate_pair(p) for p in pairs]
    if len(pair_list) == 0:
        raise ParameterError("sequence must contain at least one integer pair")
    mesh = base_polyhedron(name)
    points = mesh.vertices
    for pair in pair_list:
        cfg = subdivide_mesh(mesh, pair, base=name)
        points = cfg.points
        mesh = convex_hull_triangulation(points)
    out = SphericalConfig(points=points, base=name, pairs=tuple(pair_list), mesh=mesh)
    expected = expected_cardinality(name, pair_list)
    if out.n != expected:
        raise ConsistencyError(f"generated {out.n} points, expected {expected}")
    return out
