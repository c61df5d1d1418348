"""Mesh-ratio behaviour of three one-parameter sequence families.

The single-pass family (l,0) is good for small N but its mesh ratio keeps
climbing; prefixing a (1,1) pass shifts the whole curve down; the fully
recursive family (1,1),(4,0)^l appears bounded near 0.63, comfortably
above the theoretical floor of about 0.618 that no sequence can beat
asymptotically.  Output is plot-ready CSV, one block per family.

Run:  python demos/quality_sweep.py [--full]
      --full extends the sweep to N ~ 1e5 (takes a minute or two)
"""

import sys

from spheregrid.cli import run_sweep, write_sweep_csv

full = "--full" in sys.argv[1:]
l_cap = {"l,0": 99 if full else 20, "1,1;l,0": 57 if full else 12}

families = [
    ("l,0", l_cap["l,0"]),
    ("1,1;l,0", l_cap["1,1;l,0"]),
    ("1,1;(4,0)^l", 3),
]

for family, l_max in families:
    rows = run_sweep("icosa", family, 1, l_max, n_cap=10**6)
    write_sweep_csv(rows, sys.stdout)
    gammas = [float(r["mesh_ratio"]) for r in rows]
    print(f"# family {family}: mesh ratio {min(gammas):.4f} .. {max(gammas):.4f}")
    print()
