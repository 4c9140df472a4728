"""Square detection in sequences and along paths of colored graphs."""
import itertools
import random

import pytest

from thuecolor.graphs import (
    ElementKind,
    Path,
    PathKind,
    cycle_graph,
    edge,
    from_standard,
    path_graph,
    vertex,
)
from thuecolor.repetition import (
    Regime,
    find_square,
    find_violating_path,
    has_square_through,
    interleaved_sequence,
    is_square_colors,
    is_valid,
    relevant_elements,
)


def _brute_square(seq):
    """Every square via slice comparison, then the (half, start) minimum."""
    hits = [
        (h, s)
        for h in range(1, len(seq) // 2 + 1)
        for s in range(len(seq) - 2 * h + 1)
        if tuple(seq[s:s + h]) == tuple(seq[s + h:s + 2 * h])
    ]
    if not hits:
        return None
    h, s = min(hits)
    return (s, h)


def test_find_square_words():
    assert find_square("hotshots") == (0, 4)
    assert find_square("repetitive") == (4, 2)
    assert find_square("alfalfa") == (0, 3)
    assert find_square("total") is None
    assert find_square("minimize") is None


def test_find_square_any_sequence_type():
    assert find_square([1, 2, 1, 2]) == (0, 2)
    assert find_square((0, 1, 0)) is None
    assert find_square(b"abab") == (0, 2)
    assert find_square("") is None
    assert find_square("x") is None


def test_find_square_prefers_shortest_then_leftmost():
    # both "abab" (half 2) and "cc" (half 1) occur; the repeat wins
    assert find_square("ababcc") == (4, 1)
    # equal halves: leftmost start wins
    assert find_square("aabb") == (0, 1)


def test_find_square_exhaustive_small():
    # contract sweep: every ternary sequence up to length 12
    for n in range(0, 13):
        for seq in itertools.product(range(3), repeat=n):
            assert find_square(seq) == _brute_square(seq), seq


def test_find_square_random_longer():
    rnd = random.Random(8128)
    for _ in range(10_000):
        n = rnd.randint(13, 40)
        seq = tuple(rnd.randrange(3) for _ in range(n))
        assert find_square(seq) == _brute_square(seq), seq


def test_is_square_colors():
    assert is_square_colors([4, 4])
    assert is_square_colors([1, 2, 1, 2])
    assert not is_square_colors([1, 2, 2, 1])
    assert not is_square_colors([])
    assert not is_square_colors([1, 2, 1])


def test_regime_kinds():
    assert Regime.VERTEX.path_kinds == (PathKind.VERTEX,)
    assert Regime.EDGE.path_kinds == (PathKind.EDGE,)
    assert Regime.WEAK_TOTAL.path_kinds == (PathKind.MIXED,)
    assert Regime.STRONG_TOTAL.path_kinds == (
        PathKind.VERTEX,
        PathKind.EDGE,
        PathKind.MIXED,
    )
    assert Regime.VERTEX.element_kinds == (ElementKind.VERTEX,)
    assert Regime.EDGE.element_kinds == (ElementKind.EDGE,)
    assert Regime.STRONG_TOTAL.element_kinds == (ElementKind.VERTEX, ElementKind.EDGE)
    assert Regime.STRONG_TOTAL.kinds_through(ElementKind.EDGE) == (
        PathKind.EDGE,
        PathKind.MIXED,
    )
    assert Regime.WEAK_TOTAL.kinds_through(ElementKind.VERTEX) == (PathKind.MIXED,)


def test_relevant_elements_order():
    g = path_graph(3)
    assert relevant_elements(g, Regime.VERTEX) == [vertex(0), vertex(1), vertex(2)]
    assert relevant_elements(g, Regime.WEAK_TOTAL) == [
        vertex(0), vertex(1), vertex(2), edge(0), edge(1),
    ]
    assert relevant_elements(g, Regime.EDGE) == [edge(0), edge(1)]


def _vcolor(*colors):
    return {vertex(i): c for i, c in enumerate(colors)}


def test_violating_path_basic():
    g = path_graph(4)
    p = find_violating_path(g, _vcolor(1, 2, 1, 2), Regime.VERTEX)
    assert p == Path(PathKind.VERTEX, (vertex(0), vertex(1), vertex(2), vertex(3)))
    assert find_violating_path(g, _vcolor(1, 2, 3, 1), Regime.VERTEX) is None


def test_violating_path_shortest_first():
    g = path_graph(4)
    # half-length 1 at the right end beats the half-length 2 square on the left
    p = find_violating_path(g, _vcolor(1, 2, 1, 1), Regime.VERTEX)
    assert p == Path(PathKind.VERTEX, (vertex(2), vertex(3)))


def test_violating_path_kind_order():
    # vertex square (v0,v1) and edge square (e0,e1) both at half 1;
    # the strong regime reports the vertex one first
    g = path_graph(3)
    coloring = {vertex(0): 1, vertex(1): 1, vertex(2): 2, edge(0): 5, edge(1): 5}
    p = find_violating_path(g, coloring, Regime.STRONG_TOTAL)
    assert p == Path(PathKind.VERTEX, (vertex(0), vertex(1)))
    q = find_violating_path(g, coloring, Regime.EDGE)
    assert q == Path(PathKind.EDGE, (edge(0), edge(1)))


def test_mixed_square_even_half():
    g = path_graph(3)
    coloring = {vertex(0): 1, vertex(1): 1, vertex(2): 2, edge(0): 5, edge(1): 5}
    # colors along v0,e0,v1,e1 read 1,5,1,5
    p = find_violating_path(g, coloring, Regime.WEAK_TOTAL)
    assert p == Path(PathKind.MIXED, (vertex(0), edge(0), vertex(1), edge(1)))


def test_mixed_square_odd_half_counts():
    # vertex and edge palettes are shared, so (v0, e0) colored (c, c)
    # is a square mixed path of half-length 1
    g = path_graph(2)
    coloring = {vertex(0): 3, vertex(1): 1, edge(0): 3}
    p = find_violating_path(g, coloring, Regime.WEAK_TOTAL)
    assert p == Path(PathKind.MIXED, (vertex(0), edge(0)))
    assert not is_valid(g, coloring, Regime.WEAK_TOTAL)


def test_must_contain_and_has_square_through():
    g = path_graph(4)
    coloring = _vcolor(1, 1, 3, 4)
    assert find_violating_path(g, coloring, Regime.VERTEX, must_contain=vertex(3)) is None
    hit = find_violating_path(g, coloring, Regime.VERTEX, must_contain=vertex(0))
    assert hit == Path(PathKind.VERTEX, (vertex(0), vertex(1)))
    assert has_square_through(g, coloring, Regime.VERTEX, vertex(1))
    assert not has_square_through(g, coloring, Regime.VERTEX, vertex(3))
    with pytest.raises(ValueError):
        has_square_through(g, coloring, Regime.VERTEX, vertex(9))
    with pytest.raises(ValueError):
        find_violating_path(g, coloring, Regime.VERTEX, must_contain=edge(9))


def test_partial_colorings_searched_on_colored_part_only():
    g = path_graph(4)
    # v3 uncolored: the 1,2,1,2 square cannot be reported
    coloring = {vertex(0): 1, vertex(1): 2, vertex(2): 1}
    assert find_violating_path(g, coloring, Regime.VERTEX) is None
    coloring[vertex(2)] = 2
    assert find_violating_path(g, coloring, Regime.VERTEX) == Path(
        PathKind.VERTEX, (vertex(1), vertex(2))
    )


def test_is_valid_requires_total_coloring():
    g = path_graph(3)
    with pytest.raises(ValueError, match="partial"):
        is_valid(g, {vertex(0): 1}, Regime.VERTEX)
    with pytest.raises(ValueError, match="partial"):
        # vertex colors alone do not cover a total regime
        is_valid(g, _vcolor(1, 2, 3), Regime.WEAK_TOTAL)


def test_has_square_through_agrees_with_restricted_search():
    rnd = random.Random(20103)
    for _ in range(150):
        n = rnd.randint(2, 5)
        pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
        m = rnd.randint(1, len(pairs))
        g = from_standard(n, sorted(rnd.sample(pairs, m)))
        regime = rnd.choice(list(Regime))
        coloring = {x: rnd.randrange(3) for x in relevant_elements(g, regime)}
        for x in relevant_elements(g, regime):
            via_find = find_violating_path(g, coloring, regime, must_contain=x)
            assert has_square_through(g, coloring, regime, x) == (via_find is not None)


def test_weak_total_on_paths_equals_interleaved_word():
    rnd = random.Random(4001)
    for _ in range(200):
        n = rnd.randint(2, 6)
        g = path_graph(n)
        coloring = {x: rnd.randrange(4) for x in relevant_elements(g, Regime.WEAK_TOTAL)}
        word = interleaved_sequence(g, coloring, n)
        assert is_valid(g, coloring, Regime.WEAK_TOTAL) == (find_square(word) is None)


def test_strong_total_on_paths_equals_three_words():
    rnd = random.Random(4002)
    for _ in range(200):
        n = rnd.randint(2, 6)
        g = path_graph(n)
        coloring = {x: rnd.randrange(4) for x in relevant_elements(g, Regime.STRONG_TOTAL)}
        vseq = [coloring[vertex(i)] for i in range(n)]
        eseq = [coloring[edge(i)] for i in range(n - 1)]
        word = interleaved_sequence(g, coloring, n)
        expected = all(find_square(s) is None for s in (vseq, eseq, word))
        assert is_valid(g, coloring, Regime.STRONG_TOTAL) == expected


def test_vertex_regime_on_cycles_matches_rotated_words():
    # on a cycle every vertex path is an arc; check against direct arcs
    rnd = random.Random(4003)
    for _ in range(60):
        n = rnd.randint(3, 6)
        g = cycle_graph(n)
        colors = [rnd.randrange(3) for _ in range(n)]
        coloring = {vertex(i): colors[i] for i in range(n)}
        arcs_clean = True
        doubled = colors + colors
        for start in range(n):
            for length in range(2, n + 1):
                arc = doubled[start:start + length]
                if find_square(arc) is not None:
                    arcs_clean = False
        assert is_valid(g, coloring, Regime.VERTEX) == arcs_clean
