"""Shared helpers for the test suite."""

import numpy as np

from spheregrid import expected_cardinality, generate

BASES = ["tetrahedron", "octahedron", "icosahedron"]


def unit_rows(v):
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def random_triangle(rng, min_area=0.05, max_area=2.0):
    """A well-conditioned random spherical triangle (v0, va, vb)."""
    while True:
        v = unit_rows(rng.normal(size=(3, 3)))
        chords = [np.linalg.norm(v[i] - v[j]) for i, j in ((0, 1), (1, 2), (2, 0))]
        anti = [np.linalg.norm(v[i] + v[j]) for i, j in ((0, 1), (1, 2), (2, 0))]
        if min(chords) < 0.1 or min(anti) < 0.1:
            continue
        num = abs(np.dot(v[0], np.cross(v[1], v[2])))
        den = 1.0 + v[0] @ v[1] + v[1] @ v[2] + v[2] @ v[0]
        area = 2.0 * np.arctan2(num, den)
        if min_area <= area <= max_area:
            return v[0], v[1], v[2]


def random_interior_coords(rng, margin=0.0):
    """Uniform area-coordinate target strictly inside the simplex."""
    while True:
        la, lb = rng.random(2)
        if la + lb < 1.0 - margin and la > margin and lb > margin:
            return la, lb


def random_sequence(rng, max_k=3, max_m=6):
    k = int(rng.integers(1, max_k + 1))
    pairs = []
    for _ in range(k):
        m = int(rng.integers(1, max_m + 1))
        n = int(rng.integers(0, m + 1))
        pairs.append((m, n))
    return tuple(pairs)


def random_config(rng, n_max, n_min=12, max_k=3, max_m=6):
    """Generate a configuration whose size lands in [n_min, n_max]."""
    while True:
        base = BASES[rng.integers(0, len(BASES))]
        pairs = random_sequence(rng, max_k=max_k, max_m=max_m)
        if n_min <= expected_cardinality(base, pairs) <= n_max:
            return generate(base, pairs)
