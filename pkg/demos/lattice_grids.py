"""Triangular lattice grids over a triangle, and their barycentric coordinates.

The generator of every spherical configuration in this package is a plain
planar object: the set of integer lattice points falling inside the
triangle selected by a pair (m, n).  This script walks through a few
pairs, shows the point counts against the closed form, and converts grid
points to barycentric coordinates.

Run:  python demos/lattice_grids.py
"""

import math

import numpy as np

from spheregrid import barycentric_coords, lattice_points, to_plane, triangulation_number

print("grid sizes for a few integer pairs")
print(f"{'pair':>8} {'gamma':>6} {'points':>7}   closed form (gamma + 3 gcd)/2 + 1")
for m, n in [(1, 0), (1, 1), (2, 0), (5, 0), (6, 1), (4, 4), (15, 2)]:
    pts = lattice_points(m, n)
    gamma = triangulation_number(m, n)
    closed = (gamma + 3 * math.gcd(m, n)) // 2 + 1
    print(f"  ({m:2d},{n:2d}) {gamma:6d} {len(pts):7d}   {closed}")

print()
print("the (2,1) grid in lattice and planar coordinates")
pts = lattice_points(2, 1)
xy = to_plane(pts)
bc = barycentric_coords(pts, 2, 1)
print(f"{'q1,q2':>8} {'x':>8} {'y':>8} {'lambda_a':>9} {'lambda_b':>9}")
for k in range(len(pts)):
    print(
        f"  ({pts[k,0]:2d},{pts[k,1]:2d}) {xy[k,0]:8.4f} {xy[k,1]:8.4f}"
        f" {bc[k,0]:9.4f} {bc[k,1]:9.4f}"
    )

print()
print("barycentric coordinates are exact fractions: denominators are gamma")
bc = barycentric_coords(lattice_points(5, 0), 5, 0)
numerators = bc * 25
assert np.allclose(numerators, np.rint(numerators))
print("  (5,0): every coordinate is an integer multiple of 1/25")

print()
print("corner points always map to the unit coordinates")
for m, n in [(5, 0), (7, 3)]:
    corners = np.array([[0, 0], [m, n], [-n, m + n]])
    print(f"  ({m},{n}):", barycentric_coords(corners, m, n).tolist())
