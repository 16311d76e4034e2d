"""Exact minimum edge counts at desk scale: run the exhaustive search over
small saturated graphs, print the value grid, and compare each cell with
the closed-form candidates the constructions provide.

Run:  python3 demos/search_small_optima.py
"""
from __future__ import annotations

from math import comb

from satgraph.graph6 import decode
from satgraph.search import SearchProblem, enumerate_extremal, exact_sat


def grid(p: int, t_values: range, n_values: range) -> None:
    print(f"p = {p} (saturated, min degree >= t)")
    header = " t\\n |" + "".join(f"{n:>4}" for n in n_values)
    print(header)
    print("-----+" + "-" * (4 * len(n_values)))
    for t in t_values:
        cells = []
        for n in n_values:
            if p > n or t > n - 1:
                cells.append("   .")
                continue
            r = exact_sat(SearchProblem(n, p, t))
            cells.append(f"{r.value if r.status == 'ok' else '-':>4}")
        print(f"{t:>4} |" + "".join(cells))
    print()


def main() -> None:
    grid(3, range(0, 4), range(3, 9))
    grid(4, range(0, 4), range(4, 8))

    print("Closed forms hit by the grid:")
    for n in range(5, 9):
        v = exact_sat(SearchProblem(n, 3, 2)).value
        print(f"  minimum at (n={n}, p=3, t=2) = {v}  (2n-5 = {2 * n - 5})")
    for n, p in [(7, 3), (7, 4)]:
        v = exact_sat(SearchProblem(n, p, p - 2)).value
        formula = n * (p - 2) - comb(p - 1, 2)
        print(f"  minimum at (n={n}, p={p}, t={p - 2}) = {v}"
              f"  (n(p-2) - C(p-1,2) = {formula})")

    print("\nAll optimal graphs up to isomorphism at (7, 3, 2):")
    r = enumerate_extremal(SearchProblem(7, 3, 2))
    for s in r.extremal:
        g = decode(s)
        degs = sorted(g.degree(v) for v in range(g.n))
        print(f"  {s}  degrees {degs}")


if __name__ == "__main__":
    main()
