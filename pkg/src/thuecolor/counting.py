"""Exact counting and enumeration of square-free list colorings.

Counts are exact Python integers produced by backtracking over the
regime's elements in a fixed order.  After each assignment the search
prunes exactly when some fully colored square path passes through the
newly colored element; validity is hereditary under deletion, so every
invalid branch is cut at the first element that completes a square.
Candidate square paths are precomputed per instance and indexed by the
element of theirs that is assigned last, which makes the per-node check
a handful of integer comparisons.

A brute-force counter that filters every total assignment through the
independent square search is kept for cross-validation on tiny
instances.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .graphs import (
    ElementId,
    ElementKind,
    GeneralizedGraph,
    delete,
    edge,
    vertex,
    _canonical,
    _iter_directed_all,
    _iter_directed_through,
)
from .repetition import (
    Color,
    Regime,
    is_valid,
    relevant_elements,
)


@dataclass(frozen=True)
class ListAssignment:
    """A color list per element.  Lists are immutable frozensets of ints."""

    lists: Mapping[ElementId, frozenset[int]]

    def colors(self, x: ElementId) -> frozenset[int]:
        try:
            return self.lists[x]
        except KeyError:
            raise ValueError(f"no color list for element {x}") from None

    def has(self, x: ElementId) -> bool:
        return x in self.lists

    def min_size(self, elements: Iterable[ElementId]) -> int:
        sizes = [len(self.colors(x)) for x in elements]
        return min(sizes) if sizes else 0

    @staticmethod
    def uniform(g: GeneralizedGraph, size: int) -> ListAssignment:
        """Colors 0..size-1 on every element of the graph."""
        if size < 0:
            raise ValueError("list size must be nonnegative")
        palette = frozenset(range(size))
        return ListAssignment({x: palette for x in g.elements})

    @staticmethod
    def from_map(mapping: Mapping[ElementId, Iterable[int]]) -> ListAssignment:
        return ListAssignment({x: frozenset(cs) for x, cs in mapping.items()})


def lists_from_json(obj, g: GeneralizedGraph) -> ListAssignment:
    """Parse either {"uniform": k} or a per-element list array."""
    if isinstance(obj, Mapping):
        if set(obj) != {"uniform"}:
            raise ValueError("list assignment object must be {\"uniform\": k}")
        k = obj["uniform"]
        if not isinstance(k, int) or k < 0:
            raise ValueError("uniform list size must be a nonnegative integer")
        return ListAssignment.uniform(g, k)
    if not isinstance(obj, list):
        raise ValueError("list assignment JSON must be an object or an array")
    lists: dict[ElementId, frozenset[int]] = {}
    for entry in obj:
        elem = element_from_json(entry.get("element"))
        colors = entry.get("colors")
        if not isinstance(colors, list) or any(not isinstance(c, int) for c in colors):
            raise ValueError(f"colors for {elem} must be an integer array")
        if elem in lists:
            raise ValueError(f"duplicate list for element {elem}")
        lists[elem] = frozenset(colors)
    return ListAssignment(lists)


def lists_to_json(lists: ListAssignment) -> list[dict]:
    return [
        {"element": element_to_json(x), "colors": sorted(cs)}
        for x, cs in sorted(lists.lists.items())
    ]


def element_from_json(obj) -> ElementId:
    if not isinstance(obj, Mapping) or set(obj) != {"kind", "index"}:
        raise ValueError(f"malformed element reference: {obj!r}")
    kind, index = obj["kind"], obj["index"]
    if kind not in ("v", "e") or not isinstance(index, int):
        raise ValueError(f"malformed element reference: {obj!r}")
    return vertex(index) if kind == "v" else edge(index)


def element_to_json(x: ElementId) -> dict:
    return {"kind": "v" if x.kind is ElementKind.VERTEX else "e", "index": x.index}


def coloring_from_json(obj) -> dict[ElementId, Color]:
    if not isinstance(obj, list):
        raise ValueError("coloring JSON must be an array")
    out: dict[ElementId, Color] = {}
    for entry in obj:
        elem = element_from_json(entry.get("element"))
        color = entry.get("color")
        if not isinstance(color, int):
            raise ValueError(f"color for {elem} must be an integer")
        if elem in out:
            raise ValueError(f"duplicate color entry for element {elem}")
        out[elem] = color
    return out


def coloring_to_json(coloring: Mapping[ElementId, Color]) -> list[dict]:
    return [
        {"element": element_to_json(x), "color": c}
        for x, c in sorted(coloring.items())
    ]


# ---------------------------------------------------------------------------
# compiled backtracking
# ---------------------------------------------------------------------------

@dataclass
class _Compiled:
    order: list[ElementId]
    palettes: list[tuple[int, ...]]
    # positions whose color must differ from position d (half-length-1 squares)
    partners: list[tuple[int, ...]]
    # longer candidate squares: per position, tuples of (a, b) index pairs that
    # all agree exactly when the path is a square
    longer: list[tuple[tuple[tuple[int, int], ...], ...]]


def _compile(
    g: GeneralizedGraph,
    lists: ListAssignment,
    regime: Regime,
    order: Sequence[ElementId] | None,
) -> _Compiled:
    relevant = relevant_elements(g, regime)
    if order is None:
        elems = relevant
    else:
        elems = list(order)
        if len(elems) != len(set(elems)) or set(elems) != set(relevant):
            raise ValueError("order must list each relevant element exactly once")
    pos = {x: d for d, x in enumerate(elems)}
    palettes = [tuple(sorted(lists.colors(x))) for x in elems]
    partners: list[dict[int, None]] = [dict() for _ in elems]
    longer: list[dict[tuple, None]] = [dict() for _ in elems]
    for kind in regime.path_kinds:
        domain = g.domain(kind)
        for length in range(2, len(domain) + 1, 2):
            half = length // 2
            for seq in _iter_directed_all(g, kind, length, allowed=None):
                if not _canonical(seq):
                    continue
                idx = [pos[x] for x in seq]
                last = max(idx)
                if half == 1:
                    partners[last].setdefault(idx[0] + idx[1] - last)
                else:
                    pairs = sorted(
                        ((idx[k], idx[k + half]) for k in range(half)),
                        key=lambda ab: -max(ab),
                    )
                    longer[last].setdefault(tuple(pairs))
    return _Compiled(
        order=elems,
        palettes=palettes,
        partners=[tuple(p) for p in partners],
        longer=[tuple(l) for l in longer],
    )


def _count_compiled(cp: _Compiled) -> int:
    m = len(cp.order)
    if m == 0:
        return 1
    colors = [0] * m
    palettes = cp.palettes
    partners = cp.partners
    longer = cp.longer
    last_d = m - 1

    def rec(d: int) -> int:
        palette = palettes[d]
        prt = partners[d]
        lng = longer[d]
        total = 0
        if d == last_d:
            for c in palette:
                ok = True
                for p in prt:
                    if colors[p] == c:
                        ok = False
                        break
                if ok and lng:
                    colors[d] = c
                    for pairs in lng:
                        for a, b in pairs:
                            if colors[a] != colors[b]:
                                break
                        else:
                            ok = False
                            break
                if ok:
                    total += 1
            return total
        for c in palette:
            ok = True
            for p in prt:
                if colors[p] == c:
                    ok = False
                    break
            if ok:
                colors[d] = c
                for pairs in lng:
                    for a, b in pairs:
                        if colors[a] != colors[b]:
                            break
                    else:
                        ok = False
                        break
                if ok:
                    total += rec(d + 1)
        return total

    return rec(0)


def count_colorings(
    g: GeneralizedGraph,
    lists: ListAssignment,
    regime: Regime,
    order: Sequence[ElementId] | None = None,
) -> int:
    """Exact number of square-free list colorings under the regime.

    The empty graph has exactly one coloring.  The result does not
    depend on ``order``, which only directs the backtracking.
    """
    return _count_compiled(_compile(g, lists, regime, order))


def enumerate_colorings(
    g: GeneralizedGraph,
    lists: ListAssignment,
    regime: Regime,
    limit: int | None = None,
    order: Sequence[ElementId] | None = None,
) -> Iterator[dict[ElementId, Color]]:
    """Yield every valid coloring in deterministic backtracking order."""
    if limit is not None and limit <= 0:
        return
    cp = _compile(g, lists, regime, order)
    m = len(cp.order)
    emitted = 0
    if m == 0:
        yield {}
        return
    colors: list[int] = [0] * m

    def square_here(d: int, c: int) -> bool:
        for p in cp.partners[d]:
            if colors[p] == c:
                return True
        colors[d] = c
        for pairs in cp.longer[d]:
            for a, b in pairs:
                if colors[a] != colors[b]:
                    break
            else:
                return True
        return False

    def rec(d: int) -> Iterator[dict[ElementId, Color]]:
        for c in cp.palettes[d]:
            if square_here(d, c):
                continue
            colors[d] = c
            if d == m - 1:
                yield dict(zip(cp.order, colors))
            else:
                yield from rec(d + 1)

    for coloring in rec(0):
        yield coloring
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def count_colorings_bruteforce(
    g: GeneralizedGraph, lists: ListAssignment, regime: Regime
) -> int:
    """Filter every total assignment through the independent square search.

    Exponential; only for cross-validating the pruned counter on tiny
    instances.
    """
    elems = relevant_elements(g, regime)
    palettes = [sorted(lists.colors(x)) for x in elems]
    total = 0
    for combo in itertools.product(*palettes):
        if is_valid(g, dict(zip(elems, combo)), regime):
            total += 1
    return total


def count_violations(
    g: GeneralizedGraph, lists: ListAssignment, regime: Regime, x: ElementId
) -> int:
    """Count colorings valid without ``x`` that every color of ``x`` breaks.

    Concretely: pairs (coloring of g minus x, color for x) whose
    extension has a square through x.  Together with the counts this
    gives the deletion identity
    ``count(g) = |lists(x)| * count(g minus x) - count_violations``.
    """
    if x not in g:
        raise ValueError(f"element not in graph: {x}")
    if x.kind not in regime.element_kinds:
        return 0
    g_minus = delete(g, {x})
    palette = sorted(lists.colors(x))
    # candidate squares through x depend only on the graph, so walk them
    # once and reduce each extension test to echo comparisons
    relevant = frozenset(relevant_elements(g, regime))
    echo_pairs: list[tuple[tuple[ElementId, ElementId], ...]] = []
    for kind in regime.kinds_through(x.kind):
        usable = g.domain(kind) & relevant
        for half in range(1, len(usable) // 2 + 1):
            for seq in _iter_directed_through(g, x, kind, 2 * half, allowed=usable):
                if _canonical(seq):
                    echo_pairs.append(tuple(zip(seq[:half], seq[half:])))
    bad = 0
    for coloring in enumerate_colorings(g_minus, lists, regime):
        for c in palette:
            coloring[x] = c
            if any(
                all(coloring[a] == coloring[b] for a, b in pairs)
                for pairs in echo_pairs
            ):
                bad += 1
        del coloring[x]
    return bad
