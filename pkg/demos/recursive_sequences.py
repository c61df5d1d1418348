"""Recursive refinement: sequences of integer pairs at N around 7700.

A configuration's hull is again a closed triangle mesh, so refinement can
be applied repeatedly: the sequence ((1,1),(4,0),(4,0)) first builds a
32-point set, hulls it, refines every face with (4,0), hulls the 482-point
result, and refines once more.  Different sequences reaching the same N
differ noticeably in quality; multi-step sequences win.

Run:  python demos/recursive_sequences.py
"""

from spheregrid import evaluate, expected_cardinality, format_sequence, generate

SEQUENCES = [
    [(27, 0)],
    [(1, 1), (16, 0)],
    [(1, 1), (2, 0), (2, 0), (2, 0), (2, 0)],
    [(1, 1), (4, 0), (4, 0)],
    [(1, 1), (15, 2)],
]

print(f"{'sequence':>16} {'N':>6} {'separation':>11} {'covering':>9} {'mesh ratio':>10}")
for pairs in SEQUENCES:
    assert expected_cardinality("icosahedron", pairs) == generate("icosahedron", pairs).n
    cfg = generate("icosahedron", pairs)
    r = evaluate(cfg)
    print(
        f"{format_sequence(pairs):>16} {cfg.n:6d} {r.separation:11.6f}"
        f" {r.covering:9.6f} {r.mesh_ratio:10.6f}"
    )

print()
print("same machinery on the other bases")
for base, pairs in [("tetrahedron", [(10, 0)]), ("octahedron", [(1, 1), (7, 0)])]:
    cfg = generate(base, pairs)
    r = evaluate(cfg)
    print(f"  {base:12s} {format_sequence(pairs):>8} N={cfg.n:5d} mesh ratio {r.mesh_ratio:.6f}")
