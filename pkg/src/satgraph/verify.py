"""Saturation checkers, edge-count bound evaluators, and verification reports.

All bound evaluators return exact values (int or Fraction); nothing here
touches floating point.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Union

from .errors import DomainError, FatalInconsistencyError
from .graph6 import encode
from .graphs import Graph, find_clique, find_clique_in_mask
from .hypergraphs import Hypergraph, find_r_clique, to_text

__all__ = [
    "is_kp_free",
    "is_saturated",
    "is_semi_saturated",
    "is_r_saturated",
    "has_conical_vertex",
    "non_saturating_pair",
    "non_saturating_r_set",
    "ehm_bound",
    "dh_mixed_bound",
    "dh_semi_bound",
    "closure_tower_bound",
    "closure_tower_term",
    "semi_sat_lower_bound",
    "semi_sat_upper_bound",
    "bollobas_bound",
    "BoundEval",
    "VerifyReport",
    "check_bounds",
]


# -- saturation checkers ---------------------------------------------------

def _check_p(p: int) -> None:
    if p < 3:
        raise DomainError(f"clique order must be >= 3, got {p}")


def is_kp_free(g: Graph, p: int) -> bool:
    _check_p(p)
    return find_clique(g, p) is None


def saturation_holds_masks(n: int, adj: Sequence[int], p: int) -> bool:
    """Every non-adjacent pair has a (p-2)-clique in its common
    neighbourhood; freeness is not examined here."""
    k = p - 2
    for u in range(n):
        row = adj[u]
        for v in range(u + 1, n):
            if not row >> v & 1:
                if find_clique_in_mask(adj, row & adj[v], k) is None:
                    return False
    return True


def non_saturating_pair(g: Graph, p: int) -> Optional[tuple[int, int]]:
    """Lexicographically least non-edge whose addition creates no new K_p."""
    _check_p(p)
    adj = g.masks()
    for u, v in g.non_edges():
        if find_clique_in_mask(adj, adj[u] & adj[v], p - 2) is None:
            return (u, v)
    return None


def is_saturated(g: Graph, p: int) -> bool:
    """True iff g is K_p-free and every added edge would create a K_p."""
    return is_kp_free(g, p) and non_saturating_pair(g, p) is None


def is_semi_saturated(g: Graph, p: int) -> bool:
    """True iff every added edge would create a new K_p (copies allowed).

    Equivalent to: every non-edge has a (p-2)-clique in its common
    neighbourhood, since a new copy must use the new edge.
    """
    _check_p(p)
    return non_saturating_pair(g, p) is None


def has_conical_vertex(g: Graph) -> bool:
    """True iff some vertex is adjacent to all others."""
    return any(g.degree(v) == g.n - 1 for v in range(g.n))


def non_saturating_r_set(h: Hypergraph, p: int) -> Optional[tuple[int, ...]]:
    """Lexicographically least absent r-set whose addition creates no
    complete p-set."""
    if p < h.r + 1:
        raise DomainError(f"clique order must be >= r+1 = {h.r + 1}, got {p}")
    eset = set(h.edges)
    for cand in h.non_edges():
        if not _creates_complete(h.n, h.r, eset, cand, p):
            return cand
    return None


def _creates_complete(n: int, r: int, eset: set, cand: tuple[int, ...], p: int) -> bool:
    """Would adding `cand` complete some p-set?"""
    rest = [v for v in range(n) if v not in cand]
    for extra in combinations(rest, p - r):
        s = tuple(sorted(cand + extra))
        if all(sub == cand or sub in eset for sub in combinations(s, r)):
            return True
    return False


def is_r_saturated(h: Hypergraph, p: int) -> bool:
    """True iff h has no complete p-set and every added r-set creates one."""
    return find_r_clique(h, p) is None and non_saturating_r_set(h, p) is None


# -- bound evaluators ------------------------------------------------------

def ehm_bound(n: int, p: int) -> int:
    """Minimum edges of a K_p-saturated graph: n(p-2) - C(p-1,2)."""
    _check_p(p)
    return n * (p - 2) - comb(p - 1, 2)


def dh_semi_bound(n: int, delta: int, p: int) -> Fraction:
    """(n-delta-1)(delta+p-2)/2 + delta - C(p-2,2): a lower bound for
    K_p-saturated and K_p-semi-saturated graphs with minimum degree delta."""
    _check_p(p)
    return Fraction((n - delta - 1) * (delta + p - 2), 2) + delta - comb(p - 2, 2)


def dh_mixed_bound(n: int, p: int, t: int) -> Fraction:
    """The minimum-degree-t specialization of the same counting bound,
    roughly (t+p-2)n/2; valid once n >= 4t."""
    return dh_semi_bound(n, t, p)


def closure_tower_term(t: int) -> int:
    """The additive constant t(t+1)^(t^(2t^2)) of the closure lower bound.

    Exact arbitrary-precision arithmetic; already astronomical at t = 3.
    """
    if t < 1:
        raise DomainError(f"need t >= 1, got {t}")
    return t * (t + 1) ** (t ** (2 * t * t))


def closure_tower_bound(n: int, p: int, t: int) -> int:
    """tn - t(t+1)^(t^(2t^2)): the fully quantitative closure bound on the
    minimum edges of a K_p-saturated graph with minimum degree >= t."""
    _check_p(p)
    return t * n - closure_tower_term(t)


def semi_sat_lower_bound(n: int, p: int, t: int) -> Fraction:
    """(t+p-2)(n-t-1)/2 + t - C(p-2,2): lower bound on the minimum edges of
    a K_p-semi-saturated graph with minimum degree >= t (n >= 4t)."""
    _check_p(p)
    tq = t + p - 2
    return Fraction(tq * (n - t - 1), 2) + t - comb(p - 2, 2)


def semi_sat_upper_bound(n: int, p: int, t: int) -> int:
    """ceil((t+p-2)(n-(p-2))/2) + C(p-2,2): edges of the clique-join
    construction, an upper bound on the same minimum."""
    _check_p(p)
    tq = t + p - 2
    return -((-tq * (n - (p - 2))) // 2) + comb(p - 2, 2)


def bollobas_bound(n: int, r: int, p: int) -> int:
    """C(n,r) - C(n-p+r,r): minimum edges of a K_p^r-saturated r-graph."""
    if r < 2:
        raise DomainError(f"uniformity must be >= 2, got {r}")
    if p < r + 1:
        raise DomainError(f"clique order must be >= r+1 = {r + 1}, got {p}")
    return comb(n, r) - comb(max(n - p + r, 0), r)


# -- verification reports --------------------------------------------------

@dataclass(frozen=True)
class BoundEval:
    name: str
    value: Fraction
    satisfied: bool

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value_num": self.value.numerator,
            "value_den": self.value.denominator,
            "satisfied": self.satisfied,
        }


@dataclass(frozen=True)
class VerifyReport:
    subject: str
    n: int
    p: int
    t: Optional[int]
    edges: int
    min_degree: int
    kp_free: bool
    saturated: bool
    semi_saturated: Optional[bool]
    bounds: tuple[BoundEval, ...] = ()
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "n": self.n,
            "p": self.p,
            "t": self.t,
            "edges": self.edges,
            "min_degree": self.min_degree,
            "kp_free": self.kp_free,
            "saturated": self.saturated,
            "semi_saturated": self.semi_saturated,
            "bounds": [b.to_json() for b in self.bounds],
            "witness": self.witness,
        }


def _hypergraph_digest(h: Hypergraph) -> str:
    sha = hashlib.sha256(to_text(h).encode()).hexdigest()[:16]
    return f"hg:r{h.r}:n{h.n}:m{h.edge_count()}:{sha}"


def check_bounds(subject: Union[Graph, Hypergraph], p: int, t: Optional[int] = None) -> VerifyReport:
    """Verify saturation flags and evaluate every applicable edge bound.

    A violated proven lower bound on a subject whose saturation was just
    verified is impossible; if observed it raises FatalInconsistencyError.
    """
    if isinstance(subject, Hypergraph):
        return _check_hypergraph(subject, p, t)
    return _check_graph(subject, p, t)


def _check_graph(g: Graph, p: int, t: Optional[int]) -> VerifyReport:
    _check_p(p)
    n = g.n
    e = g.edge_count()
    delta = g.min_degree() if n > 0 else 0
    clique = find_clique(g, p)
    kp_free = clique is None
    pair = non_saturating_pair(g, p)
    semi = pair is None
    saturated = kp_free and semi
    witness: Optional[dict] = None
    if clique is not None:
        witness = {"kind": "clique", "vertices": list(clique)}
    elif pair is not None:
        witness = {"kind": "non_edge", "vertices": list(pair)}

    bounds = [BoundEval("ehm", Fraction(ehm_bound(n, p)), Fraction(e) >= ehm_bound(n, p))]
    v = dh_semi_bound(n, delta, p)
    bounds.append(BoundEval("dh_semi", v, Fraction(e) >= v))
    if t is not None and delta >= t:
        # these bounds presuppose min degree >= t
        if n >= 4 * t:
            v = dh_mixed_bound(n, p, t)
            bounds.append(BoundEval("dh_mixed", v, Fraction(e) >= v))
        if 1 <= t <= 2:
            v = Fraction(closure_tower_bound(n, p, t))
            bounds.append(BoundEval("closure_tower", v, Fraction(e) >= v))

    report = VerifyReport(
        subject=encode(g), n=n, p=p, t=t, edges=e, min_degree=delta,
        kp_free=kp_free, saturated=saturated, semi_saturated=semi,
        bounds=tuple(bounds), witness=witness,
    )
    _raise_if_fatal(report)
    return report


def _check_hypergraph(h: Hypergraph, p: int, t: Optional[int]) -> VerifyReport:
    if p < h.r + 1:
        raise DomainError(f"clique order must be >= r+1 = {h.r + 1}, got {p}")
    e = h.edge_count()
    delta = h.min_codegree(h.r - 1) if h.n >= h.r - 1 >= 1 else 0
    clique = find_r_clique(h, p)
    kp_free = clique is None
    missing = non_saturating_r_set(h, p)
    saturated = kp_free and missing is None
    witness: Optional[dict] = None
    if clique is not None:
        witness = {"kind": "r_clique", "vertices": list(clique)}
    elif missing is not None:
        witness = {"kind": "non_edge", "vertices": list(missing)}

    v = Fraction(bollobas_bound(h.n, h.r, p))
    bounds = (BoundEval("bollobas", v, Fraction(e) >= v),)
    report = VerifyReport(
        subject=_hypergraph_digest(h), n=h.n, p=p, t=t, edges=e,
        min_degree=delta, kp_free=kp_free, saturated=saturated,
        semi_saturated=None, bounds=bounds, witness=witness,
    )
    _raise_if_fatal(report)
    return report


def _raise_if_fatal(report: VerifyReport) -> None:
    """Proven lower bounds cannot fail on a subject this module just
    verified as saturated (or semi-saturated, for the bounds that cover
    that case)."""
    if report.saturated:
        applicable = {"ehm", "dh_semi", "dh_mixed", "closure_tower", "bollobas"}
    elif report.semi_saturated:
        applicable = {"ehm", "dh_semi", "dh_mixed"}
    else:
        return
    for b in report.bounds:
        if b.name in applicable and not b.satisfied:
            raise FatalInconsistencyError(
                f"verified-saturated subject violates the {b.name} lower bound "
                f"({report.edges} < {b.value})",
                report,
            )
