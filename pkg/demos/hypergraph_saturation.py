"""Uniform hypergraph saturation with a codegree floor: build the cyclic
base, greedy-complete it, attach universal vertices, and compare edge
counts with the classical minimum that has no codegree constraint.

Run:  python3 demos/hypergraph_saturation.py
"""
from __future__ import annotations

from math import comb

from satgraph.hypersat import (
    bollobas_extremal,
    greedy_complete,
    saturated_hypergraph,
    sidorenko_base,
)
from satgraph.verify import is_r_saturated


def base_story(r: int, t: int, n: int) -> None:
    h, part = sidorenko_base(r, t, n)
    first = set(part.members(0))
    last = set(part.members(r - 1))
    main = sum(
        1 for e in h.edges
        if sum(v in first for v in e) == r - 1 and sum(v in last for v in e) == 1
    )
    print(f"sidorenko_base(r={r}, t={t}, n={n}): classes {part.sizes},"
          f" {h.edge_count()} edges")
    print(f"  min codegree over (r-1)-sets: {h.min_codegree(r - 1)} (floor t={t})")
    print(f"  main-type edges: {main} = t*C(n - t(r-1), r-1)"
          f" = {t * comb(n - t * (r - 1), r - 1)}")
    print(f"  residual edges: {h.edge_count() - main}"
          f" <= C(t(r-1),2)*C(n,r-2) = {comb(t * (r - 1), 2) * comb(n, r - 2)}")
    comp = greedy_complete(h, r + 1)
    grew = comp.edge_count() - h.edge_count()
    print(f"  greedy completion to K_{r + 1}-saturation adds {grew} edges"
          f" (saturated: {is_r_saturated(comp, r + 1)})\n")


def main() -> None:
    base_story(3, 2, 8)
    base_story(3, 2, 10)
    base_story(4, 2, 10)

    print("Saturated hypergraphs with universal top vertices (p > r+1):")
    for r, p, t, n in [(3, 5, 3, 9), (4, 5, 2, 10)]:
        h = saturated_hypergraph(r, p, t, n)
        q = p - r - 1
        print(f"  saturated_hypergraph(r={r}, p={p}, t={t}, n={n}):"
              f" {h.edge_count()} edges, {q} universal vertex(es),"
              f" min codegree {h.min_codegree(r - 1)},"
              f" saturated: {is_r_saturated(h, p)}")

    print("\nAgainst the classical minimum (no codegree floor):")
    for n, r, p in [(8, 3, 5), (6, 3, 4)]:
        h = bollobas_extremal(n, r, p)
        print(f"  bollobas_extremal(n={n}, r={r}, p={p}): {h.edge_count()} edges"
              f" = C(n,r) - C(n-p+r, r)"
              f" = {comb(n, r) - comb(n - p + r, r)},"
              f" saturated: {is_r_saturated(h, p)}")


if __name__ == "__main__":
    main()
