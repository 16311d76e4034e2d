"""Degree-closure engine producing auditable edge lower-bound certificates.

For a K_p-saturated graph with minimum degree >= t the engine grows a seed
set R through closure/refinement rounds until every outside vertex has
weight >= t, which certifies e(G) >= t(n - |R*|).  All weights are kept as
integers scaled by 2t, so the audit trail is exact.

Definitions, with Rbar the closure of R and Y the complement of Rbar:
  weight(v)  = deg into Rbar + deg into Y / 2          (scaled: x 2t)
  control(v) = deg into R + deg into Rbar\\R / 2
             + sum over Y-neighbours y of deg_R(y) / 2t (scaled: x 2t)
  bad        = y in Y with weight(y) < t
Each refinement step picks representatives of the maximal bad traces
N_R(y), pulls one Y-neighbour of each into R together with that
neighbour's Rbar-neighbours, and must raise every still-bad vertex's
control by at least 1/(2t); at most 2t^2 steps can occur.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import (
    DomainError,
    FatalInconsistencyError,
    IntegrityError,
    VerificationError,
)
from .graph6 import decode, encode
from .graphs import Graph, iter_bits, mask_of
from .verify import is_saturated

__all__ = [
    "ClosureState",
    "StepRecord",
    "Certificate",
    "closure",
    "make_state",
    "weight",
    "control",
    "bad_vertices",
    "trace_antichain",
    "refine",
    "certify",
    "verify_certificate",
    "LymResult",
    "lym_check",
]


def closure(g: Graph, t: int, seed: Iterable[int]) -> frozenset[int]:
    """Smallest superset of `seed` closed under "t neighbours inside pull
    you in": repeatedly absorb any vertex with >= t neighbours inside."""
    if t < 1:
        raise DomainError(f"need t >= 1, got {t}")
    adj = g.masks()
    cur = mask_of(seed)
    if cur & ~((1 << g.n) - 1) or (g.n == 0 and cur):
        raise DomainError("seed out of range")
    while True:
        grown = cur
        for v in range(g.n):
            if not cur >> v & 1 and (adj[v] & cur).bit_count() >= t:
                grown |= 1 << v
        if grown == cur:
            return frozenset(iter_bits(cur))
        cur = grown


@dataclass(frozen=True)
class ClosureState:
    """One round of the engine: the seed R, its closure Rbar, the outside Y."""

    graph: Graph
    t: int
    r: frozenset[int]
    rbar: frozenset[int]
    y: frozenset[int]
    step: int
    r_mask: int
    rbar_mask: int
    y_mask: int


def make_state(g: Graph, t: int, r: Iterable[int], step: int = 0) -> ClosureState:
    r = frozenset(r)
    if not r:
        raise DomainError("seed set must be non-empty")
    if any(not 0 <= v < g.n for v in r):
        raise DomainError("seed out of range")
    rbar = closure(g, t, r)
    y = frozenset(range(g.n)) - rbar
    return ClosureState(
        graph=g, t=t, r=r, rbar=rbar, y=y, step=step,
        r_mask=mask_of(r), rbar_mask=mask_of(rbar), y_mask=mask_of(y),
    )


def weight(state: ClosureState, v: int) -> int:
    """Scaled weight 2t*w(v) = 2t*deg_Rbar(v) + t*deg_Y(v)."""
    t = state.t
    a = state.graph.adj_mask(v)
    return 2 * t * (a & state.rbar_mask).bit_count() + t * (a & state.y_mask).bit_count()


def control(state: ClosureState, v: int) -> int:
    """Scaled control 2t*l(v); always <= weight(v) on Y."""
    t = state.t
    g = state.graph
    a = g.adj_mask(v)
    inner = state.rbar_mask & ~state.r_mask
    total = 2 * t * (a & state.r_mask).bit_count() + t * (a & inner).bit_count()
    for u in iter_bits(a & state.y_mask):
        total += (g.adj_mask(u) & state.r_mask).bit_count()
    return total


def bad_vertices(state: ClosureState) -> tuple[int, ...]:
    """Y-vertices with weight below t, ascending."""
    thr = 2 * state.t * state.t
    return tuple(v for v in sorted(state.y) if weight(state, v) < thr)


def trace_antichain(state: ClosureState) -> tuple[tuple[frozenset[int], ...], tuple[int, ...]]:
    """Maximal elements of {N_R(y) : y bad} plus, per trace, the least bad
    vertex realizing it exactly.  Requires a non-empty bad set."""
    bad = bad_vertices(state)
    if not bad:
        raise DomainError("no bad vertices; nothing to trace")
    traces_of: dict[frozenset[int], int] = {}
    for y in bad:
        tr = frozenset(iter_bits(state.graph.adj_mask(y) & state.r_mask))
        traces_of.setdefault(tr, y)
    maximal = [
        tr for tr in traces_of
        if not any(tr < other for other in traces_of)
    ]
    maximal.sort(key=lambda s: sorted(s))
    return tuple(maximal), tuple(traces_of[tr] for tr in maximal)


def _choose_xs(state: ClosureState, reps: Sequence[int]) -> tuple[int, ...]:
    xs = []
    for y in reps:
        cand = state.graph.adj_mask(y) & state.y_mask
        if not cand:
            raise IntegrityError(
                f"representative {y} has no neighbour outside the closure; "
                f"the input cannot have minimum degree >= t"
            )
        xs.append((cand & -cand).bit_length() - 1)
    return tuple(xs)


def refine(state: ClosureState) -> tuple[ClosureState, "StepRecord"]:
    """One refinement round; checks its own postconditions and records an
    auditable step."""
    t = state.t
    g = state.graph
    traces, reps = trace_antichain(state)
    if any(len(tr) > t - 1 for tr in traces):
        raise IntegrityError("a trace has size >= t, so the closure is stale")
    res = lym_check(traces, len(state.r))
    if not res.antichain or len(traces) > len(state.r) ** max(t - 1, 0):
        raise IntegrityError("trace family is not a bounded antichain")
    xs = _choose_xs(state, reps)
    new_r = set(state.r)
    for x in xs:
        new_r.add(x)
        new_r.update(iter_bits(g.adj_mask(x) & state.rbar_mask))
    if len(new_r) > len(state.r) + t * len(state.r) ** max(t - 1, 0):
        raise IntegrityError("refined seed exceeded its size bound")
    record = StepRecord(
        r_before=tuple(sorted(state.r)),
        bad=bad_vertices(state),
        traces=tuple(tuple(sorted(tr)) for tr in traces),
        reps=reps,
        xs=xs,
        r_after=tuple(sorted(new_r)),
    )
    nxt = make_state(g, t, new_r, state.step + 1)
    for y in bad_vertices(nxt):
        if control(nxt, y) < control(state, y) + 1:
            raise IntegrityError(
                f"control of bad vertex {y} did not rise by 1/(2t); "
                f"the input cannot be saturated with minimum degree >= t"
            )
    return nxt, record


@dataclass(frozen=True)
class StepRecord:
    r_before: tuple[int, ...]
    bad: tuple[int, ...]
    traces: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]
    xs: tuple[int, ...]
    r_after: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "r_before": list(self.r_before),
            "bad": list(self.bad),
            "traces": [list(tr) for tr in self.traces],
            "reps": list(self.reps),
            "xs": list(self.xs),
            "r_after": list(self.r_after),
        }


@dataclass(frozen=True)
class Certificate:
    """Auditable run of the engine: every step, the final seed, the bound."""

    graph6: str
    p: int
    t: int
    r0: tuple[int, ...]
    steps: tuple[StepRecord, ...]
    r_star: tuple[int, ...]
    iterations: int
    bound: int
    edges: int
    verified: bool

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "p": self.p,
            "t": self.t,
            "r0": list(self.r0),
            "steps": [s.to_json() for s in self.steps],
            "r_star": list(self.r_star),
            "iterations": self.iterations,
            "bound": self.bound,
            "edges": self.edges,
            "verified": self.verified,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        steps = tuple(
            StepRecord(
                r_before=tuple(s["r_before"]),
                bad=tuple(s["bad"]),
                traces=tuple(tuple(tr) for tr in s["traces"]),
                reps=tuple(s["reps"]),
                xs=tuple(s["xs"]),
                r_after=tuple(s["r_after"]),
            )
            for s in data["steps"]
        )
        return cls(
            graph6=data["graph6"], p=data["p"], t=data["t"],
            r0=tuple(data["r0"]), steps=steps, r_star=tuple(data["r_star"]),
            iterations=data["iterations"], bound=data["bound"],
            edges=data["edges"], verified=data["verified"],
        )


def certify(g: Graph, p: int, t: int, r0: Optional[Iterable[int]] = None) -> Certificate:
    """Run the engine to completion on a K_p-saturated graph with minimum
    degree >= t and return the certificate for e(G) >= t(n - |R*|)."""
    if t < 1:
        raise DomainError(f"need t >= 1, got {t}")
    if g.n == 0:
        raise DomainError("empty graph")
    if g.min_degree() < t:
        raise VerificationError(f"minimum degree {g.min_degree()} below t={t}")
    if not is_saturated(g, p):
        raise VerificationError("input graph is not saturated")
    seed = tuple(sorted(r0)) if r0 is not None else (0,)
    state = make_state(g, t, seed)
    steps: list[StepRecord] = []
    limit = 2 * t * t
    # Preconditions are verified, so any step-invariant failure below is not
    # a bad input; it would disprove the bound argument itself.
    while bad_vertices(state):
        if len(steps) >= limit:
            raise FatalInconsistencyError(
                f"did not stabilize within {limit} refinements"
            )
        try:
            state, record = refine(state)
        except IntegrityError as exc:
            raise FatalInconsistencyError(str(exc)) from exc
        steps.append(record)
    r_star = tuple(sorted(state.r))
    bound = t * (g.n - len(r_star))
    edges = g.edge_count()
    if bound > edges:
        raise FatalInconsistencyError(
            f"certified bound {bound} exceeds edge count {edges}"
        )
    cert = Certificate(
        graph6=encode(g), p=p, t=t, r0=seed, steps=tuple(steps),
        r_star=r_star, iterations=len(steps), bound=bound, edges=edges,
        verified=False,
    )
    return Certificate(
        graph6=cert.graph6, p=cert.p, t=cert.t, r0=cert.r0, steps=cert.steps,
        r_star=cert.r_star, iterations=cert.iterations, bound=cert.bound,
        edges=cert.edges, verified=verify_certificate(cert, g),
    )


def verify_certificate(cert: Certificate, g: Optional[Graph] = None) -> bool:
    """Independent replay: rebuild every step from the seed and compare all
    recorded fields, then re-check the final bound."""
    if g is None:
        g = decode(cert.graph6)
    if g.min_degree() < cert.t or not is_saturated(g, cert.p):
        return False
    try:
        state = make_state(g, cert.t, cert.r0)
        for rec in cert.steps:
            if tuple(sorted(state.r)) != rec.r_before:
                return False
            nxt, replayed = refine(state)
            if replayed != rec:
                return False
            state = nxt
    except (DomainError, IntegrityError):
        return False
    if bad_vertices(state):
        return False
    if tuple(sorted(state.r)) != cert.r_star:
        return False
    if cert.iterations != len(cert.steps):
        return False
    if cert.bound != cert.t * (g.n - len(cert.r_star)):
        return False
    if cert.edges != g.edge_count() or cert.bound > cert.edges:
        return False
    return True


@dataclass(frozen=True)
class LymResult:
    antichain: bool
    lym_sum: Fraction
    size_ok: bool


def lym_check(family: Sequence[Iterable[int]], m: int) -> LymResult:
    """Antichain status, the exact LYM sum over subsets of an m-element
    ground set, and whether |family| <= m^s for s the largest set size."""
    sets = [frozenset(a) for a in family]
    for a in sets:
        if any(not 0 <= x for x in a) or len(a) > m:
            raise DomainError(f"set {sorted(a)} cannot live in a {m}-element ground set")
    antichain = not any(
        i != j and a <= b for i, a in enumerate(sets) for j, b in enumerate(sets)
    )
    total = sum((Fraction(1, comb(m, len(a))) for a in sets), Fraction(0))
    s = max((len(a) for a in sets), default=0)
    size_ok = len(sets) <= m ** s
    return LymResult(antichain=antichain, lym_sum=total, size_ok=size_ok)
