"""Tests for saturation checkers, bound evaluators, and reports."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from satgraph.constructions import (
    cone,
    complete_bipartite,
    duffus_hanson_t2,
    ehm_extremal,
    petersen,
    semi_sat,
)
from satgraph.errors import FatalInconsistencyError
from satgraph.graphs import Graph
from satgraph.hypergraphs import Hypergraph
from satgraph.hypersat import bollobas_extremal
import satgraph.verify as verify
from satgraph.verify import (
    bollobas_bound,
    check_bounds,
    closure_tower_bound,
    closure_tower_term,
    dh_mixed_bound,
    dh_semi_bound,
    ehm_bound,
    has_conical_vertex,
    is_kp_free,
    is_r_saturated,
    is_saturated,
    is_semi_saturated,
    non_saturating_pair,
    non_saturating_r_set,
    semi_sat_lower_bound,
    semi_sat_upper_bound,
)

from oracles import brute_is_saturated, brute_is_semi_saturated
from test_graphs import graphs


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def test_is_saturated_known_cases():
    assert is_saturated(cycle(5), 3)
    assert not is_saturated(cycle(6), 3)
    assert is_saturated(complete_bipartite(2, 6), 3)
    assert not is_saturated(petersen(), 4)
    assert is_saturated(ehm_extremal(8, 5), 5)


def test_vacuous_cases_on_complete_graphs():
    k4 = Graph(4, combinations(range(4), 2))
    assert is_saturated(k4, 5)
    assert not is_saturated(k4, 4)
    assert is_semi_saturated(k4, 5)
    assert is_semi_saturated(k4, 4)


def test_is_semi_saturated_known_cases():
    assert is_semi_saturated(semi_sat(10, 4, 3), 4)
    assert is_semi_saturated(path(3), 3)
    assert not is_semi_saturated(path(4), 3)
    assert not is_kp_free(semi_sat(10, 4, 3), 4)


def test_non_saturating_pair_is_lexicographic_least():
    assert non_saturating_pair(cycle(6), 3) == (0, 3)
    assert non_saturating_pair(cycle(5), 3) is None
    assert non_saturating_pair(path(4), 3) == (0, 3)


def test_r_saturation():
    assert is_r_saturated(bollobas_extremal(8, 3, 5), 5)
    almost = Hypergraph(
        3, 5, [e for e in combinations(range(5), 3) if e != (2, 3, 4)]
    )
    assert is_r_saturated(almost, 5)
    empty = Hypergraph(3, 5)
    assert not is_r_saturated(empty, 4)
    assert non_saturating_r_set(empty, 4) == (0, 1, 2)
    complete = Hypergraph(3, 5, combinations(range(5), 3))
    assert not is_r_saturated(complete, 5)


def test_has_conical_vertex():
    assert has_conical_vertex(cone(cycle(5)))
    assert not has_conical_vertex(petersen())
    assert has_conical_vertex(Graph(1))


def test_low_degree_saturated_graphs_have_conical_vertex():
    for g, p in [
        (ehm_extremal(8, 4), 4),
        (ehm_extremal(9, 5), 5),
        (cone(cycle(5)), 4),
        (ehm_extremal(7, 3), 3),
    ]:
        assert is_saturated(g, p)
        assert g.min_degree() < 2 * (p - 2)
        assert has_conical_vertex(g)


def test_bound_values():
    assert ehm_bound(7, 4) == 11
    assert ehm_bound(16, 3) == 15
    assert dh_semi_bound(10, 3, 4) == 17
    assert dh_semi_bound(12, 2, 3) == Fraction(31, 2)
    assert dh_mixed_bound(10, 4, 3) == 17
    assert dh_mixed_bound(12, 3, 2) == Fraction(31, 2)
    assert bollobas_bound(8, 3, 5) == 36
    assert bollobas_bound(6, 3, 4) == 10
    assert semi_sat_lower_bound(10, 4, 3) == 17
    assert semi_sat_upper_bound(10, 4, 3) == 21
    assert closure_tower_bound(10, 3, 1) == 8


def test_tower_term_exact_arbitrary_precision():
    assert closure_tower_term(1) == 2
    assert closure_tower_term(2) == 2 * 3**256
    assert closure_tower_term(2).bit_length() > 256


def test_semi_sandwich_golden_triples():
    for n, p, t in [(10, 4, 3), (12, 3, 2), (16, 5, 4)]:
        e = semi_sat(n, p, t).edge_count()
        assert dh_semi_bound(n, t, p) <= e
        assert semi_sat_lower_bound(n, p, t) <= e
        assert e == semi_sat_upper_bound(n, p, t)


def test_check_bounds_report_schema():
    rep = check_bounds(cycle(5), 3, 2)
    out = rep.to_json()
    assert set(out) == {
        "subject", "n", "p", "t", "edges", "min_degree",
        "kp_free", "saturated", "semi_saturated", "bounds", "witness",
    }
    assert out["subject"] == "Dhc"
    assert out["saturated"] and out["semi_saturated"] and out["kp_free"]
    assert out["witness"] is None
    names = [b["name"] for b in out["bounds"]]
    assert names == ["ehm", "dh_semi", "closure_tower"]
    assert all(b["satisfied"] for b in out["bounds"])
    assert all(
        set(b) == {"name", "value_num", "value_den", "satisfied"}
        for b in out["bounds"]
    )


def test_check_bounds_false_flags_carry_witnesses():
    rep = check_bounds(cycle(6), 3, 2)
    assert not rep.saturated
    assert rep.to_json()["witness"] == {"kind": "non_edge", "vertices": [0, 3]}
    k4 = Graph(4, combinations(range(4), 2))
    rep = check_bounds(k4, 4, None)
    assert not rep.kp_free
    assert rep.to_json()["witness"] == {"kind": "clique", "vertices": [0, 1, 2, 3]}


def test_check_bounds_on_hypergraph():
    rep = check_bounds(bollobas_extremal(8, 3, 5), 5)
    out = rep.to_json()
    assert out["subject"].startswith("hg:r3:n8:m36:")
    assert out["saturated"]
    assert out["edges"] == 36
    assert out["bounds"] == [
        {"name": "bollobas", "value_num": 36, "value_den": 1, "satisfied": True}
    ]


def test_check_bounds_flags_violated_lower_bound_as_fatal(monkeypatch):
    monkeypatch.setattr(verify, "ehm_bound", lambda n, p: 10**6)
    with pytest.raises(FatalInconsistencyError) as err:
        check_bounds(cycle(5), 3, 2)
    assert err.value.report is not None


def brute_alpha(g: Graph) -> int:
    best = 0
    for k in range(g.n, 0, -1):
        for sub in combinations(range(g.n), k):
            if all(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
                return k
    return best


@given(graphs(max_n=9))
def test_edges_at_least_alpha_times_min_degree(g):
    assert g.edge_count() >= brute_alpha(g) * g.min_degree() if g.n else True


@given(graphs(max_n=6), st.integers(min_value=3, max_value=5))
def test_checkers_match_definitional_brute_force(g, p):
    assert is_saturated(g, p) == brute_is_saturated(g, p)
    assert is_semi_saturated(g, p) == brute_is_semi_saturated(g, p)
    if is_saturated(g, p):
        assert is_semi_saturated(g, p)
        assert is_kp_free(g, p)


def test_saturated_constructions_meet_lower_bounds():
    samples = [
        (ehm_extremal(9, 4), 4, 2),
        (complete_bipartite(3, 8), 3, 3),
        (duffus_hanson_t2(9), 3, 2),
        (petersen(), 3, 3),
    ]
    for g, p, t in samples:
        e = g.edge_count()
        assert e >= ehm_bound(g.n, p)
        assert e >= closure_tower_bound(g.n, p, t)
        assert e >= dh_semi_bound(g.n, g.min_degree(), p)
