"""Map where a direction alpha reproduces the true count, for a 2-row matrix.

    python3 scripts/chamber_scan.py --matrix "1,2,1,0;1,1,0,1" --alpha "1,-1+1i" --grid 12

Prints a grid with s1 across and s2 down: '#' where Re W_alpha(s) equals the
enumerated count, '.' where it does not.
"""

import argparse
from dataclasses import dataclass

from vecpart.cli import parse_alpha, parse_matrix
from vecpart.vector import brute_vector_count, decompose, evaluate, on_wall


@dataclass
class Config:
    matrix: str
    alpha: str
    grid: int = 12


def scan(cfg):
    rows = parse_matrix(cfg.matrix)
    if len(rows) != 2:
        raise SystemExit("chamber_scan draws 2-row matrices only")
    alpha = parse_alpha(cfg.alpha)
    d = decompose(rows)
    limit = on_wall(d.matrix, alpha)
    hits = 0
    lines = []
    for s2 in range(cfg.grid, -1, -1):
        row = ""
        for s1 in range(cfg.grid + 1):
            ok = evaluate(d, (s1, s2), alpha, limit=limit).re == brute_vector_count((s1, s2), d.matrix)
            hits += ok
            row += "#" if ok else "."
        lines.append(f"{s2:3d} {row}")
    print("\n".join(lines))
    print(f"    s1 = 0..{cfg.grid}; {hits}/{(cfg.grid + 1) ** 2} points agree (limit mode: {limit})")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--matrix", required=True)
    parser.add_argument("--alpha", required=True)
    parser.add_argument("--grid", type=int, default=12)
    scan(Config(**vars(parser.parse_args())))
