"""Exact counting of square-free list colorings and the deletion identity."""
import random

import pytest

from thuecolor.counting import (
    ListAssignment,
    coloring_from_json,
    coloring_to_json,
    count_colorings,
    count_colorings_bruteforce,
    count_violations,
    element_from_json,
    element_to_json,
    enumerate_colorings,
    lists_from_json,
    lists_to_json,
)
from thuecolor.graphs import (
    cycle_graph,
    delete,
    edge,
    from_standard,
    path_graph,
    vertex,
)
from thuecolor.repetition import Regime, is_valid, relevant_elements


def _rand_graph(rnd, n_max=5):
    n = rnd.randint(2, n_max)
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    m = rnd.randint(1, len(pairs))
    return from_standard(n, sorted(rnd.sample(pairs, m)))


def test_list_assignment_basics():
    g = path_graph(2)
    u = ListAssignment.uniform(g, 3)
    assert u.colors(vertex(0)) == frozenset({0, 1, 2})
    assert u.colors(edge(0)) == frozenset({0, 1, 2})
    assert u.has(vertex(1)) and not u.has(vertex(2))
    assert u.min_size([vertex(0), edge(0)]) == 3
    fm = ListAssignment.from_map({vertex(0): [5, 5, 6]})
    assert fm.colors(vertex(0)) == frozenset({5, 6})
    with pytest.raises(ValueError):
        fm.colors(vertex(1))


def test_small_path_counts():
    for n, expected in [(1, 4), (2, 12), (3, 36), (4, 96)]:
        g = path_graph(n)
        L = ListAssignment.uniform(g, 4)
        assert count_colorings(g, L, Regime.VERTEX) == expected


def test_counts_match_bruteforce_across_regimes():
    cases = [
        (path_graph(3), 3, Regime.WEAK_TOTAL, 30),
        (path_graph(2), 4, Regime.STRONG_TOTAL, 24),
        (cycle_graph(4), 3, Regime.VERTEX, 12),
        (path_graph(4), 3, Regime.VERTEX, 18),
        (cycle_graph(3), 2, Regime.EDGE, 0),
        (cycle_graph(3), 3, Regime.EDGE, 6),
    ]
    for g, q, regime, expected in cases:
        L = ListAssignment.uniform(g, q)
        got = count_colorings(g, L, regime)
        assert got == expected
        assert got == count_colorings_bruteforce(g, L, regime)


def test_counts_match_bruteforce_random():
    rnd = random.Random(60601)
    for _ in range(25):
        g = _rand_graph(rnd, n_max=4)
        regime = rnd.choice(list(Regime))
        q = rnd.randint(2, 3)
        L = ListAssignment.uniform(g, q)
        assert count_colorings(g, L, regime) == count_colorings_bruteforce(g, L, regime)


def test_larger_frozen_counts():
    # weak total on P3 with 12 colors per element
    g = path_graph(3)
    assert count_colorings(g, ListAssignment.uniform(g, 12), Regime.WEAK_TOTAL) == 172920
    # strong total on P2 with 32 colors
    g = path_graph(2)
    assert count_colorings(g, ListAssignment.uniform(g, 32), Regime.STRONG_TOTAL) == 29760


def test_ternary_square_free_words():
    # counts of ternary square-free words of lengths 1..12 and 30
    expected = [3, 6, 12, 18, 30, 42, 60, 78, 108, 144, 204, 264]
    for n, want in zip(range(1, 13), expected):
        g = path_graph(n)
        assert count_colorings(g, ListAssignment.uniform(g, 3), Regime.VERTEX) == want
    g = path_graph(30)
    assert count_colorings(g, ListAssignment.uniform(g, 3), Regime.VERTEX) == 34422


def test_count_independent_of_order():
    rnd = random.Random(31337)
    for _ in range(8):
        g = _rand_graph(rnd, n_max=4)
        regime = rnd.choice([Regime.VERTEX, Regime.WEAK_TOTAL, Regime.STRONG_TOTAL])
        L = ListAssignment.uniform(g, 3)
        base = count_colorings(g, L, regime)
        elems = relevant_elements(g, regime)
        for _ in range(3):
            order = elems[:]
            rnd.shuffle(order)
            assert count_colorings(g, L, regime, order=order) == base


def test_branch_sum_identity():
    # total count = sum over colors of the first element pinned to that color
    for g, regime, q in [
        (path_graph(4), Regime.VERTEX, 4),
        (path_graph(3), Regime.WEAK_TOTAL, 3),
    ]:
        L = ListAssignment.uniform(g, q)
        first = relevant_elements(g, regime)[0]
        total = count_colorings(g, L, regime)
        split = 0
        for c in sorted(L.colors(first)):
            pinned = dict(L.lists)
            pinned[first] = frozenset({c})
            split += count_colorings(g, ListAssignment(pinned), regime)
        assert split == total


def test_deletion_identity_on_paths():
    # count(P_{n+1}) = 4 * count(P_n) - violations at the appended vertex
    for n in range(1, 6):
        g = path_graph(n + 1)
        L = ListAssignment.uniform(g, 4)
        x = vertex(n)
        c_with = count_colorings(g, L, Regime.VERTEX)
        c_without = count_colorings(delete(g, {x}), L, Regime.VERTEX)
        bad = count_violations(g, L, Regime.VERTEX, x)
        assert c_with == 4 * c_without - bad


def test_deletion_identity_random():
    rnd = random.Random(2718)
    for _ in range(20):
        g = _rand_graph(rnd, n_max=4)
        regime = rnd.choice(list(Regime))
        q = rnd.randint(2, 4)
        L = ListAssignment.uniform(g, q)
        elems = relevant_elements(g, regime)
        if not elems:
            continue
        x = rnd.choice(elems)
        c_with = count_colorings(g, L, regime)
        c_without = count_colorings(delete(g, {x}), L, regime)
        bad = count_violations(g, L, regime, x)
        assert c_with == q * c_without - bad


def test_count_violations_frozen_and_irrelevant():
    g = path_graph(2)
    L = ListAssignment.uniform(g, 4)
    assert count_violations(g, L, Regime.VERTEX, vertex(1)) == 4
    # an edge never matters to the vertex regime
    assert count_violations(g, L, Regime.VERTEX, edge(0)) == 0
    with pytest.raises(ValueError):
        count_violations(g, L, Regime.VERTEX, vertex(5))


def test_empty_graph_and_empty_lists():
    g0 = from_standard(0, [])
    assert count_colorings(g0, ListAssignment.from_map({}), Regime.VERTEX) == 1
    g1 = path_graph(1)
    assert count_colorings(g1, ListAssignment.uniform(g1, 0), Regime.VERTEX) == 0
    with pytest.raises(ValueError):
        # no list at all for a relevant element
        count_colorings(g1, ListAssignment.from_map({}), Regime.VERTEX)


def test_enumerate_colorings():
    g = path_graph(2)
    L = ListAssignment.from_map({vertex(0): [1, 2], vertex(1): [1, 2]})
    got = list(enumerate_colorings(g, L, Regime.VERTEX))
    assert got == [
        {vertex(0): 1, vertex(1): 2},
        {vertex(0): 2, vertex(1): 1},
    ]
    assert list(enumerate_colorings(g, L, Regime.VERTEX, limit=0)) == []
    assert len(list(enumerate_colorings(g, L, Regime.VERTEX, limit=1))) == 1


def test_enumerate_agrees_with_count_and_validates():
    rnd = random.Random(509)
    for _ in range(10):
        g = _rand_graph(rnd, n_max=4)
        regime = rnd.choice(list(Regime))
        L = ListAssignment.uniform(g, 3)
        seen = list(enumerate_colorings(g, L, regime))
        assert len(seen) == count_colorings(g, L, regime)
        for coloring in seen[:5]:
            assert is_valid(g, coloring, regime)


def test_json_round_trips():
    g = path_graph(2)
    L = ListAssignment.from_map({vertex(0): [1, 2], vertex(1): [3], edge(0): [1, 3]})
    assert lists_from_json(lists_to_json(L), g).lists == L.lists
    assert lists_from_json({"uniform": 3}, g).lists == ListAssignment.uniform(g, 3).lists
    x = edge(4)
    assert element_from_json(element_to_json(x)) == x
    coloring = {vertex(0): 7, edge(0): 1}
    assert coloring_from_json(coloring_to_json(coloring)) == coloring
    with pytest.raises(ValueError):
        element_from_json({"kind": "w", "index": 0})
    with pytest.raises(ValueError):
        lists_from_json({"uniform": -1}, g)
