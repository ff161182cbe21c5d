"""Print the partial waves of the worked examples and check every chamber.

    python3 scripts/reproduce_examples.py [--json]
"""

import argparse
import json
import time
from dataclasses import dataclass

from vecpart.catalog import EXAMPLES, chamber_points, chamber_value
from vecpart.vector import brute_vector_count, decompose


@dataclass
class Config:
    json: bool = False


def describe(decomp):
    lines = []
    for n in decomp.exponents():
        terms = [
            f"({p.format(['s1', 's2', 's3'][: decomp.l])}) psi{list(j)}(s - {list(shift)})"
            for (j, shift), p in sorted(decomp.partial(n).items())
        ]
        lines.append(f"  W^{n} = " + " + ".join(terms))
    return lines


def run(cfg):
    report = []
    for ex in EXAMPLES:
        t0 = time.perf_counter()
        d = decompose(ex.rows)
        chambers = []
        for ch in ex.chambers:
            pts = chamber_points(ex, ch)
            bad = [
                s for s in pts
                if not chamber_value(d, ch, s) == ch.closed_form(s) == brute_vector_count(s, d.matrix)
            ]
            chambers.append({"chamber": ch.label, "alpha": [str(a) for a in ch.alpha], "points": len(pts), "mismatches": len(bad)})
        report.append({
            "example": ex.name,
            "matrix": [list(r) for r in ex.rows],
            "waves": describe(d),
            "chambers": chambers,
            "seconds": round(time.perf_counter() - t0, 3),
        })
    if cfg.json:
        print(json.dumps(report, indent=2))
        return
    for r in report:
        print(f"{r['example']}  D = {r['matrix']}  ({r['seconds']}s)")
        print("\n".join(r["waves"]))
        for c in r["chambers"]:
            print(f"    alpha = {c['alpha']}: {c['chamber']}: {c['points'] - c['mismatches']}/{c['points']} agree")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true")
    run(Config(**vars(parser.parse_args())))
