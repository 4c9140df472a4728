"""Square detection in color sequences and in colorings of generalized graphs.

A square is a sequence s1..s2n whose halves agree position by position
(s_i = s_{i+n} for every i).  A coloring is non-repetitive under a
regime when no path of the regime's kinds induces a square.  Vertex and
edge palettes are shared, and mixed-path squares of odd half-length
(which compare vertex colors with edge colors) count as violations.
"""
from __future__ import annotations

from enum import Enum
from typing import Iterator, Mapping, Sequence

from .graphs import (
    ElementId,
    ElementKind,
    GeneralizedGraph,
    Path,
    PathKind,
    _canonical,
    _iter_directed_through,
)

Color = int
Coloring = Mapping[ElementId, Color]


def find_square(seq: Sequence) -> tuple[int, int] | None:
    """Locate the shortest, then leftmost, square factor of a sequence.

    Returns (start, half_length) or None when the sequence is
    square-free.  Elements only need equality comparison, so strings,
    byte strings, and integer sequences all work.
    """
    n = len(seq)
    for half in range(1, n // 2 + 1):
        for start in range(0, n - 2 * half + 1):
            if all(seq[start + k] == seq[start + half + k] for k in range(half)):
                return (start, half)
    return None


def is_square_colors(colors: Sequence[Color]) -> bool:
    n = len(colors)
    if n == 0 or n % 2:
        return False
    half = n // 2
    return all(colors[k] == colors[half + k] for k in range(half))


class Regime(Enum):
    """Which paths must be square-free and which elements carry colors."""

    VERTEX = "vertex"
    EDGE = "edge"
    WEAK_TOTAL = "weak-total"
    STRONG_TOTAL = "strong-total"

    @property
    def path_kinds(self) -> tuple[PathKind, ...]:
        if self is Regime.VERTEX:
            return (PathKind.VERTEX,)
        if self is Regime.EDGE:
            return (PathKind.EDGE,)
        if self is Regime.WEAK_TOTAL:
            return (PathKind.MIXED,)
        return (PathKind.VERTEX, PathKind.EDGE, PathKind.MIXED)

    @property
    def element_kinds(self) -> tuple[ElementKind, ...]:
        if self is Regime.VERTEX:
            return (ElementKind.VERTEX,)
        if self is Regime.EDGE:
            return (ElementKind.EDGE,)
        return (ElementKind.VERTEX, ElementKind.EDGE)

    def kinds_through(self, x_kind: ElementKind) -> tuple[PathKind, ...]:
        """Path kinds that can pass through an element of the given kind."""
        mine = PathKind.VERTEX if x_kind is ElementKind.VERTEX else PathKind.EDGE
        return tuple(k for k in self.path_kinds if k in (mine, PathKind.MIXED))


def relevant_elements(g: GeneralizedGraph, regime: Regime) -> list[ElementId]:
    """Colored elements of the regime, vertices before edges, by index."""
    out: list[ElementId] = []
    if ElementKind.VERTEX in regime.element_kinds:
        out.extend(sorted(g.vertices))
    if ElementKind.EDGE in regime.element_kinds:
        out.extend(sorted(g.edges))
    return out


def _square_seqs(
    g: GeneralizedGraph,
    coloring: Coloring,
    kind: PathKind,
    length: int,
    colored: frozenset[ElementId],
    through: ElementId | None,
) -> Iterator[tuple[ElementId, ...]]:
    if through is not None:
        it = _iter_directed_through(g, through, kind, length, allowed=colored)
        for seq in it:
            if is_square_colors([coloring[x] for x in seq]):
                yield seq
        return
    yield from _square_dfs(g, coloring, kind, length // 2, colored)


def _square_dfs(
    g: GeneralizedGraph,
    coloring: Coloring,
    kind: PathKind,
    half: int,
    colored: frozenset[ElementId],
) -> Iterator[tuple[ElementId, ...]]:
    """Directed square paths of length 2*half over colored elements.

    Positions past the first half are only extended while they echo the
    colors of the first half, so a search over a mostly square-free
    coloring dies off instead of walking every long path.
    """
    length = 2 * half
    seq: list[ElementId] = []
    on_path: set[ElementId] = set()

    def extend() -> Iterator[tuple[ElementId, ...]]:
        t = len(seq)
        if t == length:
            yield tuple(seq)
            return
        candidates = starts if t == 0 else g.neighbors(seq[-1], kind)
        for y in candidates:
            if y not in colored or y in on_path:
                continue
            if t >= half and coloring[y] != coloring[seq[t - half]]:
                continue
            seq.append(y)
            on_path.add(y)
            yield from extend()
            seq.pop()
            on_path.remove(y)

    starts = sorted(g.domain(kind) & colored)
    yield from extend()


def find_violating_path(
    g: GeneralizedGraph,
    coloring: Coloring,
    regime: Regime,
    must_contain: ElementId | None = None,
) -> Path | None:
    """Search colored elements for a square path, shortest half-length first.

    Ties at the same half-length break on path kind (vertex, edge,
    mixed) and then on the canonical element sequence, so the result is
    deterministic.  Only paths all of whose elements are colored are
    considered; ``must_contain`` restricts the search to paths through
    that element.
    """
    colored = frozenset(x for x in coloring if x in g)
    if must_contain is not None:
        if must_contain not in g:
            raise ValueError(f"element not in graph: {must_contain}")
        if must_contain not in colored:
            return None
    max_half = 0
    for kind in regime.path_kinds:
        max_half = max(max_half, len(g.domain(kind) & colored) // 2)
    for half in range(1, max_half + 1):
        for kind in regime.path_kinds:
            hits = [
                seq
                for seq in _square_seqs(g, coloring, kind, 2 * half, colored, must_contain)
                if _canonical(seq)
            ]
            if hits:
                return Path(kind, min(hits))
    return None


def has_square_through(
    g: GeneralizedGraph, coloring: Coloring, regime: Regime, x: ElementId
) -> bool:
    """True when some fully colored square path of the regime passes through x."""
    if x not in g:
        raise ValueError(f"element not in graph: {x}")
    colored = frozenset(y for y in coloring if y in g)
    if x not in colored:
        return False
    for kind in regime.kinds_through(x.kind):
        max_half = len(g.domain(kind) & colored) // 2
        for half in range(1, max_half + 1):
            for _ in _square_seqs(g, coloring, kind, 2 * half, colored, x):
                return True
    return False


def is_valid(g: GeneralizedGraph, coloring: Coloring, regime: Regime) -> bool:
    """True when the coloring is total on the regime's elements and square-free."""
    missing = [x for x in relevant_elements(g, regime) if x not in coloring]
    if missing:
        raise ValueError(
            f"coloring is partial for regime {regime.value}: missing {missing[0]}"
        )
    return find_violating_path(g, coloring, regime) is None


def interleaved_sequence(g: GeneralizedGraph, coloring: Coloring, n: int) -> list[Color]:
    """Colors along a standard path graph read v0, e0, v1, e1, ..., v_{n-1}."""
    from .graphs import edge, vertex

    seq: list[Color] = []
    for i in range(n):
        seq.append(coloring[vertex(i)])
        if i < n - 1:
            seq.append(coloring[edge(i)])
    return seq
