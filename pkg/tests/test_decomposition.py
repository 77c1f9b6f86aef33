import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equimatch.decomposition import (
    FAIL,
    PASS,
    SKIPPED,
    DecompositionError,
    NoPerfectMatchingError,
    audit_decomposition,
    audit_graph,
    balanced_split_search,
    build_decomposition,
    class_membership,
    odd_clique_obstruction_search,
    sample_perfect_matchings,
    structural_violations,
)
from equimatch.families import complete, complete_bipartite, cycle, f_graph
from equimatch.graph import build_graph
from equimatch.independence import alpha, maximum_independent_sets
from equimatch.matching import Matching, is_factor_critical
from strategies import graphs


def _first_decomposition(g):
    I = sorted(maximum_independent_sets(g, cap=1)[0])
    return build_decomposition(g, I, I[0])


# -- construction -----------------------------------------------------------------


@pytest.mark.parametrize("r, size", [(6, 6), (8, 8)])
def test_matching_and_w_sizes(r, size):
    d = _first_decomposition(f_graph(r))
    assert len(d.Mv) == size and len(d.W) == size - 1
    assert structural_violations(f_graph(r), d) == []


def test_k33_has_no_perfect_matching_after_deletion():
    with pytest.raises(NoPerfectMatchingError):
        build_decomposition(complete_bipartite(3, 3), [0, 1, 2], 0)


def test_rejects_non_independent_set():
    with pytest.raises(DecompositionError, match="not an independent"):
        build_decomposition(f_graph(6), [0, 7], 0)


def test_rejects_non_maximum_set():
    with pytest.raises(DecompositionError, match="independence number"):
        build_decomposition(f_graph(6), [0, 1], 0)


def test_rejects_vertex_outside_set():
    with pytest.raises(DecompositionError):
        build_decomposition(f_graph(6), list(range(6)), 12)


def test_rejects_foreign_matching():
    g = f_graph(6)
    with pytest.raises(DecompositionError):
        build_decomposition(g, list(range(6)), 0, Matching([(1, 7)]))


def test_default_matching_is_lexicographically_first():
    g = f_graph(6)
    d = build_decomposition(g, list(range(6)), 0)
    rest = g.vertex_mask & ~1
    from equimatch.matching import perfect_matchings

    assert d.Mv == next(perfect_matchings(g, rest))


def test_sampled_matchings_are_distinct_and_perfect():
    g = f_graph(6)
    rest = g.vertex_mask & ~1
    ms = sample_perfect_matchings(g, rest, 20, random.Random(0))
    assert len(ms) == 20 and len({m.edges for m in ms}) == 20
    assert all(m.mask == rest for m in ms)


@st.composite
def factor_critical_graphs(draw):
    n = draw(st.sampled_from([5, 7, 9]))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    cyc = [(i, (i + 1) % n) for i in range(n)]
    extra = [p for p in pairs if draw(st.booleans())]
    return build_graph(n, [tuple(sorted(e)) for e in cyc] + extra)


@settings(max_examples=60)
@given(factor_critical_graphs(), st.data())
def test_partition_invariants_on_factor_critical_graphs(g, data):
    assert is_factor_critical(g)  # odd cycle plus chords
    sets = maximum_independent_sets(g, cap=10)
    I = sorted(data.draw(st.sampled_from(sets)))
    v = data.draw(st.sampled_from(I))
    d = build_decomposition(g, I, v)
    assert structural_violations(g, d) == []
    rep = audit_decomposition(g, d, samples=20)
    member, _ = class_membership(g)
    assert not member  # degrees too small for the target class
    assert rep.status_of("class-membership") == FAIL
    assert all(c.status == SKIPPED for c in rep.checks if c.check_id != "class-membership")


# -- audits ---------------------------------------------------------------------------


@pytest.mark.parametrize("r", [6, 8])
def test_f_single_decomposition_passes(r):
    g = f_graph(r)
    rep = audit_decomposition(g, _first_decomposition(g), samples=200)
    assert rep.passed
    assert rep.status_of("class-membership") == PASS
    statuses = {c.check_id: c.status for c in rep.checks}
    # the light case cannot occur here; its checks must be skipped, not passed
    assert statuses["tw-pairs-no-perfect-matching"] == SKIPPED
    assert statuses["heavy-edge-mate-clique"] == PASS


def test_f6_every_max_independent_set_every_vertex():
    g = f_graph(6)
    for I in maximum_independent_sets(g, cap=50):
        for v in I:
            rep = audit_decomposition(g, build_decomposition(g, I, v), samples=50, graph_level=False)
            assert rep.passed


def test_f6_minus_edge_reports_not_in_class():
    g = f_graph(6)
    u, v = g.edges()[0]
    h = build_graph(13, [e for e in g.edges() if e != (u, v)])
    if not is_factor_critical(h):
        pytest.skip("edge removal destroyed factor-criticality")
    d = _first_decomposition(h)
    rep = audit_decomposition(h, d, samples=10)
    first = rep.checks[0]
    assert first.check_id == "class-membership" and first.status == FAIL
    assert "not regular" in first.witness
    assert all(c.status == SKIPPED for c in rep.checks[1:])


def test_audit_rejects_mismatched_decomposition():
    d = _first_decomposition(f_graph(6))
    with pytest.raises(DecompositionError):
        audit_decomposition(f_graph(8), d)


def test_json_lines_records():
    g = f_graph(6)
    rep = audit_decomposition(g, _first_decomposition(g), samples=10)
    recs = [json.loads(line) for line in rep.json_lines()]
    assert len(recs) == len(rep.checks)
    for rec in recs:
        assert {"check_id", "citation", "status"} <= rec.keys()
        assert rec["status"] in (PASS, FAIL, SKIPPED)
        assert rec["citation"]


# -- odd clique obstruction ----------------------------------------------------------------


def _k5_with_pendants():
    # K5 on 0..4; vertex 5 joined to 1 and 4; vertex 6 joined to 0 and 5
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)] + [(1, 5), (4, 5), (0, 6), (5, 6)]
    return build_graph(7, edges)


def test_obstruction_found_on_hand_built_graph():
    g = _k5_with_pendants()
    I, Ip, u = [0, 5], [1, 6], 2
    assert alpha(g) == 2
    res = odd_clique_obstruction_search(g, I, Ip, u)
    assert not res.hypotheses_hold and res.unmet
    X = res.clique
    assert X == frozenset({1, 3, 4})
    # definition-level checks of the three properties
    assert len(X) % 2 == 1 and len(X) >= 3 and all(g.has_edge(a, b) for a, b in combinations(X, 2))
    assert len(X & set(Ip)) == 1
    nbhd = {y for x in X for y in g.neighbors(x)}
    assert nbhd <= X | {u} | set(I)
    assert not X & (set(I) | {u})


def test_obstruction_absent_without_triangles():
    g = cycle(9)
    sets = maximum_independent_sets(g)
    for a in sets:
        for b in sets:
            if not a & b:
                for u in set(range(9)) - a - b:
                    assert odd_clique_obstruction_search(g, a, b, u).clique is None
                return
    pytest.fail("no disjoint pair")


def test_obstruction_preconditions():
    g = f_graph(6)
    X, Y = list(range(6)), list(range(6, 12))
    with pytest.raises(ValueError):
        odd_clique_obstruction_search(g, X, X, 12)
    with pytest.raises(ValueError):
        odd_clique_obstruction_search(g, X, Y, 0)
    with pytest.raises(ValueError):
        odd_clique_obstruction_search(g, X[:3], Y, 12)


@pytest.mark.parametrize("r", [6, 8])
def test_obstruction_absent_on_f(r):
    g = f_graph(r)
    X, Y = list(range(r)), list(range(r, 2 * r))
    for a, b in ((X, Y), (Y, X)):
        res = odd_clique_obstruction_search(g, a, b, 2 * r)
        assert res.hypotheses_hold and res.clique is None


def _brute_obstruction(g, I, Ip, u):
    allowed = [x for x in range(g.n) if x not in set(I) | {u}]
    for k in range(3, len(allowed) + 1, 2):
        for X in combinations(allowed, k):
            xs = set(X)
            if len(xs & set(Ip)) != 1:
                continue
            if not all(g.has_edge(a, b) for a, b in combinations(X, 2)):
                continue
            if {y for x in X for y in g.neighbors(x)} <= xs | {u} | set(I):
                return True
    return False


@settings(max_examples=80)
@given(graphs(min_n=5, max_n=9, p=0.5))
def test_obstruction_search_matches_brute_force(g):
    sets = maximum_independent_sets(g, cap=8)
    for a in sets:
        for b in sets:
            if a & b:
                continue
            for u in sorted(set(range(g.n)) - a - b)[:2]:
                res = odd_clique_obstruction_search(g, a, b, u)
                assert (res.clique is not None) == _brute_obstruction(g, a, b, u)


# -- balanced split ----------------------------------------------------------------------------


@pytest.mark.parametrize("r", [4, 6, 8])
def test_balanced_split_on_f(r):
    g = f_graph(r)
    res = balanced_split_search(g)
    u, X, Y = res.found
    assert u == 2 * r and len(X) == len(Y) == r
    assert X | Y == set(range(2 * r + 1)) - {u}
    for side in (X, Y):
        assert not any(g.has_edge(a, b) for a, b in combinations(side, 2))
    assert res.hypotheses_hold == (r >= 6)


def test_balanced_split_absent_on_k7():
    assert balanced_split_search(complete(7)).found is None


def test_balanced_split_c7_out_of_scope():
    res = balanced_split_search(cycle(7))
    assert res.found is not None and not res.hypotheses_hold


# -- full orchestration ---------------------------------------------------------------------


def test_full_audit_f6():
    full = audit_graph(f_graph(6), set_cap=50, matchings_per_vertex=20, samples=300)
    assert full.decompositions == 2 * 6 * 20
    assert not full.failures
    assert full.obstruction and not full.obstruction_failures
    assert full.partition.found is not None
