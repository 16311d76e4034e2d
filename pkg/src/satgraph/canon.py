"""Canonical labeling by colour refinement plus branching.

The canonical form of a graph is the smallest packing of its upper-triangle
adjacency bits (column-major, the bit order graph6 uses) over all labelings
compatible with iterated colour refinement: branch on each vertex of the
first non-singleton colour class, re-refine, and take the minimum over the
discrete partitions reached.  Refinement and the branching rule are
label-independent, so two graphs are isomorphic iff their canonical forms
coincide, and the form is deterministic.  Intended for small n (search
lives at n <= 10); a guard trips rather than letting a pathological branch
run away.
"""
from __future__ import annotations

from typing import Sequence

from .errors import DomainError
from .graphs import Graph

__all__ = [
    "canonical_masks",
    "canonical_form",
    "canonical_graph",
    "are_isomorphic",
    "masks_from_packed",
]

_LABELING_GUARD = 2_000_000


def _refine(n: int, adj: Sequence[int], colors: list[int]) -> list[int]:
    """Stable colour refinement: recolour by (colour, per-class neighbour
    counts).  Signatures are packed into integers, most significant digit
    first, so integer order is the lexicographic order of the tuples."""
    base = n + 1
    while True:
        masks: dict[int, int] = {}
        for v, c in enumerate(colors):
            masks[c] = masks.get(c, 0) | 1 << v
        if len(masks) == n:
            rank = {c: i for i, c in enumerate(sorted(masks))}
            return [rank[c] for c in colors]
        cmasks = [masks[c] for c in sorted(masks)]
        sigs = []
        for v in range(n):
            a = adj[v]
            s = colors[v]
            for m in cmasks:
                s = s * base + (a & m).bit_count()
            sigs.append(s)
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _pack(n: int, adj: Sequence[int], pos: Sequence[int]) -> int:
    """Upper-triangle bits of the relabeled graph, earliest pair most
    significant, so integer order equals lexicographic string order."""
    val = 0
    for k in range(1, n):
        row = adj[pos[k]]
        for j in range(k):
            val = val << 1 | (row >> pos[j] & 1)
    return val


def canonical_masks(n: int, adj: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Return (labeling, packed) for the canonical labeling of the graph
    given by adjacency masks.  labeling[i] is the original vertex placed
    at position i."""
    if n == 0:
        return (), 0
    colors = _refine(n, adj, [0] * n)
    best_packed: int | None = None
    best_pos: tuple[int, ...] | None = None
    visited = 0

    # empty and complete graphs never split under refinement; their packed
    # form is position-independent
    if len(set(colors)) == 1:
        deg = adj[0].bit_count()
        if deg == 0:
            return tuple(range(n)), 0
        if deg == n - 1:
            return tuple(range(n)), (1 << (n * (n - 1) // 2)) - 1

    def rec(colors: list[int]) -> None:
        nonlocal best_packed, best_pos, visited
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            visited += 1
            if visited > _LABELING_GUARD:
                raise DomainError(f"canonical labeling exceeded {_LABELING_GUARD} branches")
            pos = [0] * n
            for v, c in enumerate(colors):
                pos[c] = v
            packed = _pack(n, adj, pos)
            if best_packed is None or packed < best_packed:
                best_packed = packed
                best_pos = tuple(pos)
            return
        for v in target:
            nxt = [c * 2 + 1 for c in colors]
            nxt[v] = colors[v] * 2
            rec(_refine(n, adj, nxt))

    rec(colors)
    assert best_pos is not None and best_packed is not None
    return best_pos, best_packed


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, packed upper-triangle bits) under the canonical labeling."""
    _, packed = canonical_masks(g.n, g.masks())
    return g.n, packed


def masks_from_packed(n: int, packed: int) -> list[int]:
    """Inverse of the packing: rebuild adjacency masks from a packed form."""
    npairs = n * (n - 1) // 2
    masks = [0] * n
    idx = 0
    for k in range(1, n):
        for j in range(k):
            if packed >> (npairs - 1 - idx) & 1:
                masks[j] |= 1 << k
                masks[k] |= 1 << j
            idx += 1
    return masks


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    n, packed = canonical_form(g)
    return Graph.from_masks(n, masks_from_packed(n, packed))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)
