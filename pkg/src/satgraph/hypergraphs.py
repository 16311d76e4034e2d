"""r-uniform hypergraphs: codegrees, complete-subhypergraph search, text I/O.

The text format is "r n m" on the first line, then m lines each holding r
strictly increasing 0-based vertex indices, lines sorted lexicographically.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Optional

from .errors import DomainError, ParseError

__all__ = [
    "Hypergraph",
    "contains_r_clique",
    "find_r_clique",
    "to_text",
    "from_text",
]


class Hypergraph:
    """Immutable r-uniform hypergraph on vertices 0..n-1 (set semantics)."""

    __slots__ = ("r", "n", "edges", "_eset")

    def __init__(self, r: int, n: int, edges: Iterable[Iterable[int]] = ()):
        if r < 1:
            raise DomainError(f"uniformity must be >= 1, got {r}")
        if n < 0:
            raise DomainError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for e in edges:
            e = tuple(sorted(e))
            if len(e) != r or len(set(e)) != r:
                raise DomainError(f"edge {e} is not a set of {r} distinct vertices")
            if e[0] < 0 or e[-1] >= n:
                raise DomainError(f"edge {e} out of range for n={n}")
            norm.add(e)
        self.r = r
        self.n = n
        self.edges = tuple(sorted(norm))
        self._eset = frozenset(norm)

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self._eset

    def degree(self, subset: Iterable[int]) -> int:
        """Number of edges containing every vertex of `subset`."""
        s = set(subset)
        if len(s) > self.r:
            return 0
        return sum(1 for e in self.edges if s.issubset(e))

    def min_codegree(self, s: int) -> int:
        """Minimum, over all s-subsets of the vertices, of the number of
        edges containing the subset.  Requires 1 <= s <= r-1 and n >= s."""
        if not 1 <= s <= self.r - 1:
            raise DomainError(f"codegree order must be in 1..{self.r - 1}, got {s}")
        if self.n < s:
            raise DomainError(f"need at least {s} vertices, have {self.n}")
        counts: Counter[tuple[int, ...]] = Counter()
        for e in self.edges:
            for sub in combinations(e, s):
                counts[sub] += 1
        return min(counts[sub] for sub in combinations(range(self.n), s))

    def with_edge(self, e: Iterable[int]) -> Hypergraph:
        return Hypergraph(self.r, self.n, self.edges + (tuple(sorted(e)),))

    def non_edges(self):
        """All r-sets absent from the edge set, in lexicographic order."""
        for cand in combinations(range(self.n), self.r):
            if cand not in self._eset:
                yield cand

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.r, self.n, self.edges) == (other.r, other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.r, self.n, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(r={self.r}, n={self.n}, m={len(self.edges)})"


def find_r_clique(h: Hypergraph, p: int) -> Optional[tuple[int, ...]]:
    """Lexicographically least p-set whose every r-subset is an edge, or None."""
    if p < h.r:
        raise DomainError(f"clique order must be >= r={h.r}, got {p}")
    for cand in combinations(range(h.n), p):
        if all(sub in h._eset for sub in combinations(cand, h.r)):
            return cand
    return None


def contains_r_clique(h: Hypergraph, p: int) -> bool:
    """True iff every r-subset of some p-set is an edge."""
    return find_r_clique(h, p) is not None


def to_text(h: Hypergraph) -> str:
    """Serialize to the "r n m" + sorted edge lines format."""
    lines = [f"{h.r} {h.n} {len(h.edges)}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph:
    """Parse the "r n m" + edge lines format, validating strictly."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty hypergraph input")
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError(f"header must be 'r n m', got {lines[0]!r}")
    try:
        r, n, m = (int(x) for x in head)
    except ValueError as exc:
        raise ParseError(f"non-integer header field in {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            e = tuple(int(x) for x in ln.split())
        except ValueError as exc:
            raise ParseError(f"non-integer vertex in edge line {ln!r}") from exc
        if len(e) != r:
            raise ParseError(f"edge line {ln!r} has {len(e)} vertices, expected {r}")
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ParseError(f"edge line {ln!r} not strictly increasing")
        edges.append(e)
    if edges != sorted(edges):
        raise ParseError("edge lines not in lexicographic order")
    if len(set(edges)) != len(edges):
        raise ParseError("duplicate edge lines")
    try:
        return Hypergraph(r, n, edges)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc
