"""Tour of the named constructions: build each family at a few parameter
points, verify its claims on the spot, and print a summary table.

Run:  python3 demos/constructions_tour.py
"""
from __future__ import annotations

from math import comb

from satgraph.constructions import (
    clique_join_bipartite,
    complete_bipartite,
    duffus_hanson_t2,
    ehm_extremal,
    f_graph,
    petersen,
    semi_sat,
    split_family,
)
from satgraph.graph6 import encode
from satgraph.verify import is_saturated, is_semi_saturated


def show(name: str, g, p, formula: int, semi: bool = False) -> None:
    if semi:
        kind = "semi-saturated" if is_semi_saturated(g, p) else "NOT semi-saturated"
    elif p is None:
        kind = "gadget"
    else:
        kind = "saturated" if is_saturated(g, p) else "NOT saturated"
    flag = "ok" if g.edge_count() == formula else "MISMATCH"
    print(f"  {name:<28} n={g.n:>2}  e={g.edge_count():>3} (formula {formula}, {flag})"
          f"  min_deg={g.min_degree()}  {kind}  {encode(g)}")


def main() -> None:
    print("Clique-joined stars: the minimum for degree p-2")
    for n, p in [(8, 3), (10, 4), (12, 5)]:
        show(f"ehm_extremal({n}, {p})", ehm_extremal(n, p), p,
             n * (p - 2) - comb(p - 1, 2))

    print("\nComplete bipartite K_{t, n-t}: triangle saturation at degree t")
    for t, n in [(2, 8), (3, 30)]:
        show(f"complete_bipartite({t}, {n})", complete_bipartite(t, n), 3,
             t * (n - t))

    print("\nClique join over a bipartite core: degree t, any clique order p")
    for n, p, t in [(10, 4, 3), (12, 5, 4)]:
        show(f"clique_join_bipartite({n},{p},{t})", clique_join_bipartite(n, p, t),
             p, t * n - t * t + t * (p - 3) - comb(p - 2, 2))

    print("\nDegree-2 family: 2n-5 edges, a pentagon at n=5")
    for n in (5, 7, 9):
        show(f"duffus_hanson_t2({n})", duffus_hanson_t2(n), 3, 2 * n - 5)

    print("\nThe Petersen graph: triangle-saturated, 3-regular")
    show("petersen()", petersen(), 3, 15)

    print("\nSplit family: degree-t triangle saturation from hub subsets")
    for t, n in [(4, 16), (4, 20), (5, 30)]:
        g, layout = split_family(t, n)
        even = t * n - t * t * (8 + comb(t, t // 2)) // 8
        odd = t * n - t * t - (t - 1) * (t * t - 1) * comb(t, (t - 1) // 2) // (8 * t)
        show(f"split_family({t}, {n})", g, 3, even if t % 2 == 0 else odd)
        print(f"      hub={layout.hub}  splits={layout.splits}")

    print("\nDegree gadget: minimum degree exactly s on m vertices")
    for m, s in [(5, 3), (9, 4)]:
        show(f"f_graph({m}, {s})", f_graph(m, s), None, (m * s + 1) // 2)

    print("\nSemi-saturation upper-bound construction")
    for n, p, t in [(10, 4, 3), (12, 3, 2), (16, 5, 4)]:
        show(f"semi_sat({n}, {p}, {t})", semi_sat(n, p, t), p,
             -((t + p - 2) * (n - p + 2) // -2) + comb(p - 2, 2), semi=True)


if __name__ == "__main__":
    main()
