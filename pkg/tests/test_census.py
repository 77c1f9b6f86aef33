from itertools import combinations

import pytest

import oracles
from equimatch import graph6
from equimatch.canon import canonicalize
from equimatch.census import (
    CapabilityError,
    classify_census,
    classify_graph,
    generate_connected_regular,
    iter_connected_regular,
    verify_characterization,
)
from equimatch.classify import even_regular_dichotomy_holds
from equimatch.graph import is_connected, regularity
from strategies import pair

# Frozen from the labelled-enumeration oracle (tests/oracles.py), n <= 7.
ORACLE_CLASS_COUNTS = {
    (2, 1): 1, (3, 2): 1, (4, 2): 1, (4, 3): 1, (5, 2): 1, (5, 4): 1,
    (6, 2): 1, (6, 3): 2, (6, 4): 1, (6, 5): 1, (7, 2): 1, (7, 4): 2, (7, 6): 1,
}


@pytest.mark.parametrize("n, r", sorted(ORACLE_CLASS_COUNTS))
def test_counts_match_frozen_oracle(n, r):
    assert generate_connected_regular(n, r, None) == ORACLE_CLASS_COUNTS[(n, r)]


@pytest.mark.parametrize("n, r", [(4, 3), (5, 4), (6, 3), (6, 4), (5, 2)])
def test_counts_match_live_oracle(n, r):
    assert generate_connected_regular(n, r, None) == oracles.connected_regular_classes(n, r)


# Known counts of connected regular graphs for the larger orders used by verification.
@pytest.mark.parametrize(
    "n, r, count",
    [(8, 3, 5), (10, 3, 19), (12, 3, 85), (8, 4, 6), (9, 4, 16), (10, 4, 59), (8, 5, 3), (10, 5, 60)],
)
def test_larger_counts(n, r, count):
    assert generate_connected_regular(n, r, None) == count


def test_visitor_sees_each_class_once():
    seen = []
    count = generate_connected_regular(10, 3, seen.append)
    assert count == len(seen) == 19
    certs = [canonicalize(g) for g in seen]
    assert len(set(certs)) == len(certs)
    for g in seen:
        assert regularity(g) == 3 and is_connected(g) and g.n == 10


def test_k33_and_prism_at_six():
    gs = iter_connected_regular(6, 3)
    for a, b in combinations(gs, 2):
        assert not oracles.brute_isomorphic(*pair(a), *pair(b))


@pytest.mark.parametrize("n, r", [(5, 3), (7, 3)])
def test_parity_violation(n, r):
    with pytest.raises(ValueError):
        generate_connected_regular(n, r, None)


def test_order_out_of_range():
    with pytest.raises(CapabilityError):
        generate_connected_regular(15, 2, None)
    with pytest.raises(ValueError):
        generate_connected_regular(4, 4, None)


def test_classify_6_3_only_k33():
    eq = [rec for rec in classify_census(6, 3) if rec.equimatchable]
    assert len(eq) == 1 and eq[0].family == "CompleteBipartiteKrr(3)"


def test_classify_5_4_k5():
    recs = classify_census(5, 4)
    assert len(recs) == 1 and recs[0].equimatchable and recs[0].family == "CompleteKr1(4)"


def test_classify_8_3_none():
    assert not any(rec.equimatchable for rec in classify_census(8, 3))


def test_records_reverify_on_decode():
    for rec in classify_census(9, 4):
        g = graph6.decode(rec.g6)
        assert graph6.encode(g) == rec.g6
        assert regularity(g) == rec.r and is_connected(g) and g.n == rec.n
        assert classify_graph(g) == rec
        if rec.equimatchable:
            assert even_regular_dichotomy_holds(g)


def test_parallel_classification_is_deterministic():
    assert classify_census(10, 3, workers=2) == classify_census(10, 3, workers=1)


def test_verify_cubic():
    rep = verify_characterization(3, 12)
    assert rep.match and not rep.discrepancies
    assert sorted(r.n for r in rep.found) == [4, 6]
    assert rep.orders_scanned == [4, 6, 8, 10, 12]


def test_verify_quartic():
    rep = verify_characterization(4, 9)
    assert rep.match
    assert sorted(rec.n for rec in rep.found) == [5, 7, 8, 9, 9]
    assert not rep.dichotomy_violations


def test_verify_cycles_observation():
    rep = verify_characterization(2, 12)
    assert rep.match and rep.note
    assert sorted(rec.n for rec in rep.found) == [3, 4, 5, 7]
    # ceil(n/3) == floor(n/2) picks out the same cycle lengths
    assert [n for n in range(3, 13) if -(-n // 3) == n // 2] == [3, 4, 5, 7]


def test_verify_refuses_outside_envelope():
    with pytest.raises(CapabilityError):
        verify_characterization(6, 13)
    with pytest.raises(CapabilityError):
        verify_characterization(4, 13)
