"""Verification reports: evaluate every applicable edge lower bound on a
subject graph, print the JSON report, and show how a failed saturation
check carries a concrete witness.

Run:  python3 demos/bounds_and_reports.py
"""
from __future__ import annotations

import json

from satgraph.constructions import duffus_hanson_t2, semi_sat
from satgraph.graph6 import decode
from satgraph.verify import check_bounds, closure_tower_term


def report(title: str, g, p: int, t: int) -> None:
    rep = check_bounds(g, p, t)
    print(f"{title}:")
    print(f"  {json.dumps(rep.to_json())}\n")


def main() -> None:
    report("degree-2 optimum on 9 vertices", duffus_hanson_t2(9), 3, 2)
    report("semi-saturation construction at (12, 3, 2)", semi_sat(12, 3, 2), 3, 2)
    report("hexagon: saturation fails with a witness non-edge",
           decode("EhEG"), 3, 2)

    t = 2
    tower = closure_tower_term(t)
    print(f"tower term at t={t}: t(t+1)^(t^(2t^2)) = 2*3^256,"
          f" {len(str(tower))} digits, exact: {tower == 2 * 3**256}")


if __name__ == "__main__":
    main()
