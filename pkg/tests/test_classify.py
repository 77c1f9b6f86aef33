import random

import pytest
from hypothesis import given

import oracles
from equimatch.classify import (
    RegularClass,
    TwoConnectedClass,
    audit_isolation_remainders,
    classify_2connected_equimatchable,
    classify_regular,
    even_regular_dichotomy_holds,
    is_equimatchable,
    remainder_shape,
)
from equimatch.families import complete, complete_bipartite, cycle, f_graph, path, petersen, prism
from equimatch.graph import Graph, build_graph, complement, is_biconnected, is_connected
from equimatch.independence import (
    independence_number,
    maximum_independent_sets,
)
from equimatch.matching import is_factor_critical, is_maximal
from equimatch.random_graphs import random_alpha_at_most_two
from strategies import graphs, pair


# -- independence ------------------------------------------------------------------


def test_alpha_c5():
    assert independence_number(cycle(5))[0] == 2


def test_k33_two_maximum_independent_sets():
    sets = maximum_independent_sets(complete_bipartite(3, 3))
    assert independence_number(complete_bipartite(3, 3))[0] == 3
    assert sorted(map(sorted, sets)) == [[0, 1, 2], [3, 4, 5]]


def test_alpha_f6_matches_exhaustive_oracle():
    g = f_graph(6)
    assert oracles.alpha(*pair(g)) == 6
    assert independence_number(g)[0] == 6


def test_maximum_independent_sets_cap():
    assert len(maximum_independent_sets(complement(complete(6)), cap=0)) == 0
    assert len(maximum_independent_sets(complete(6), cap=4)) == 4


@given(graphs(max_n=10))
def test_alpha_and_witness_match_oracle(g):
    a, witness = independence_number(g)
    assert a == oracles.alpha(*pair(g))
    assert len(witness) == a
    assert not any(g.has_edge(x, y) for x in witness for y in witness)


@given(graphs(max_n=9))
def test_all_maximum_independent_sets_match_oracle(g):
    got = sorted(sorted(s) for s in maximum_independent_sets(g))
    assert got == sorted(sorted(s) for s in oracles.maximum_independent_sets(*pair(g)))


# -- equimatchability ------------------------------------------------------------------


def test_k33_equimatchable():
    assert is_equimatchable(complete_bipartite(3, 3)).equimatchable


def test_p4_not_equimatchable_with_middle_edge_witness():
    v = is_equimatchable(path(4))
    assert not v.equimatchable and v.witness.edges == ((1, 2),)


def test_f6_equimatchable_nu_six():
    v = is_equimatchable(f_graph(6))
    assert v.equimatchable and v.nu == 6


def test_petersen_not_equimatchable():
    assert not is_equimatchable(petersen()).equimatchable


@given(graphs(max_n=9))
def test_equimatchable_matches_definitional_oracle(g):
    v = is_equimatchable(g)
    assert v.equimatchable == oracles.equimatchable(*pair(g))
    assert v.nu == oracles.nu(*pair(g))
    if not v.equimatchable:
        assert is_maximal(g, v.witness) and len(v.witness) < v.nu


# -- 2-connected trichotomy ------------------------------------------------------------


def test_trichotomy_examples():
    assert classify_2connected_equimatchable(complete(6)) == TwoConnectedClass.COMPLETE_EVEN
    assert classify_2connected_equimatchable(complete_bipartite(3, 3)) == TwoConnectedClass.BIPARTITE
    assert classify_2connected_equimatchable(cycle(7)) == TwoConnectedClass.FACTOR_CRITICAL


def test_c7_maximal_matchings_all_size_three():
    assert {len(m) for m in oracles.maximal_matchings(*pair(cycle(7)))} == {3}


def test_trichotomy_not_applicable():
    assert classify_2connected_equimatchable(path(4)) == TwoConnectedClass.NOT_APPLICABLE
    assert classify_2connected_equimatchable(petersen()) == TwoConnectedClass.NOT_APPLICABLE


@given(graphs(min_n=3, max_n=9, p=0.6))
def test_trichotomy_always_resolves(g):
    tag = classify_2connected_equimatchable(g)
    applicable = is_biconnected(g) and is_equimatchable(g).equimatchable
    assert (tag != TwoConnectedClass.NOT_APPLICABLE) == applicable


# -- remainder shapes -----------------------------------------------------------------


def test_remainder_shapes():
    assert str(remainder_shape(complete(6))) == "CompleteEven(3)"
    assert str(remainder_shape(complete_bipartite(4, 4))) == "BalancedCompleteBipartite(4)"
    assert str(remainder_shape(cycle(5))) == "Other"
    assert str(remainder_shape(Graph(0, []))) == "CompleteEven(0)"


def test_c7_remainder_is_k2():
    from equimatch.graph import remove_vertices
    from equimatch.matching import Matching, is_isolating

    g = cycle(7)
    m = Matching([(1, 2), (5, 6)])
    assert is_isolating(g, m, 0)
    rest, _ = remove_vertices(g, [0, 1, 2, 5, 6])
    assert str(remainder_shape(rest)) == "CompleteEven(1)"
    rep = audit_isolation_remainders(g)
    assert rep.passed and rep.matchings_checked > 0


def test_k5_every_remainder_empty():
    rep = audit_isolation_remainders(complete(5))
    assert rep.passed and rep.empty_remainders == rep.matchings_checked == 15


def test_f6_remainder_audit():
    rep = audit_isolation_remainders(f_graph(6), per_vertex_cap=200)
    assert rep.passed and not rep.counterexamples


def test_remainder_audit_preconditions():
    with pytest.raises(ValueError):
        audit_isolation_remainders(path(5))
    with pytest.raises(ValueError):
        audit_isolation_remainders(complete_bipartite(3, 3))
    with pytest.raises(ValueError):
        audit_isolation_remainders(petersen())


# -- regular classification ------------------------------------------------------------


@pytest.mark.parametrize(
    "g, text",
    [
        (complete_bipartite(7, 7), "CompleteBipartiteKrr(7)"),
        (complement(cycle(7)), "FourRegularExceptional(complement_C7)"),
        (complement(f_graph(4)), "FourRegularExceptional(complement_F4)"),
        (prism(), "NotEquimatchable"),
        (complete(5), "CompleteKr1(4)"),
        (f_graph(6), "FGraph(6)"),
        (path(4), "NotRegular"),
    ],
)
def test_classify_regular_examples(g, text):
    assert str(classify_regular(g)) == text


def test_classify_regular_disconnected():
    two = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert classify_regular(two).tag == "Disconnected"


@given(graphs(min_n=1, max_n=9))
def test_regular_class_agrees_with_oracle(g):
    cls = classify_regular(g)
    if cls.tag != "NotRegular":
        assert cls.equimatchable == oracles.equimatchable(*pair(g))


def test_fgraph_tag_iff_isomorphic_to_f():
    rng = random.Random(3)
    g = f_graph(6)
    perm = list(range(13))
    rng.shuffle(perm)
    assert classify_regular(g.relabel(perm)) == RegularClass("FGraph", 6, True)
    assert classify_regular(complement(cycle(13))).tag != "FGraph"


# -- small independence number and even-regular dichotomy --------------------------------


def test_alpha_two_odd_order_samples():
    rng = random.Random(5)
    for n in (5, 7, 9, 11):
        for _ in range(25):
            g = random_alpha_at_most_two(n, rng)
            assert independence_number(g)[0] <= 2 and is_connected(g)
            assert is_equimatchable(g).equimatchable
            if is_biconnected(g):
                assert is_factor_critical(g)


@pytest.mark.parametrize("g", [complete_bipartite(4, 4), f_graph(4), complement(cycle(7)), cycle(5), complete(5)])
def test_even_regular_dichotomy(g):
    assert even_regular_dichotomy_holds(g)
