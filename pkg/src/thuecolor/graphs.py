"""Generalized graphs whose vertices and edges are independently deletable.

Adjacency is carried by three explicit relations (vertex-vertex,
edge-edge, vertex-edge incidence) that persist when elements are
deleted: removing a vertex leaves its two edges adjacent, removing an
edge leaves its endpoints adjacent.  Simple paths of three kinds are
enumerated over these relations:

* vertex paths: consecutive vertices in the vertex-vertex relation,
* edge paths: consecutive edges in the edge-edge relation (repeated
  intermediate vertices are permitted, the relation abstracts them),
* mixed paths: strictly alternating vertices and edges chained by
  incidence.

A path of length L has L elements.  Paths are undirected: a sequence
and its reverse denote the same path, canonicalized to the
lexicographically smaller element sequence.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple


class ElementKind(IntEnum):
    VERTEX = 0
    EDGE = 1


class ElementId(NamedTuple):
    kind: ElementKind
    index: int

    def __str__(self) -> str:
        return ("v" if self.kind is ElementKind.VERTEX else "e") + str(self.index)


def vertex(index: int) -> ElementId:
    return ElementId(ElementKind.VERTEX, index)


def edge(index: int) -> ElementId:
    return ElementId(ElementKind.EDGE, index)


class PathKind(Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    MIXED = "mixed"


_KIND_RANK = {PathKind.VERTEX: 0, PathKind.EDGE: 1, PathKind.MIXED: 2}


def _canonical_pair(a: ElementId, b: ElementId) -> tuple[ElementId, ElementId]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class GeneralizedGraph:
    """Immutable generalized graph.

    ``vv_adj`` and ``ee_adj`` hold unordered pairs stored with the
    smaller element first; ``ve_inc`` holds (vertex, edge) pairs.
    """

    vertices: frozenset[ElementId]
    edges: frozenset[ElementId]
    vv_adj: frozenset[tuple[ElementId, ElementId]]
    ee_adj: frozenset[tuple[ElementId, ElementId]]
    ve_inc: frozenset[tuple[ElementId, ElementId]]

    def __post_init__(self) -> None:
        for v in self.vertices:
            if v.kind is not ElementKind.VERTEX:
                raise ValueError(f"not a vertex id: {v}")
        for e in self.edges:
            if e.kind is not ElementKind.EDGE:
                raise ValueError(f"not an edge id: {e}")
        for a, b in self.vv_adj:
            if a == b:
                raise ValueError(f"vv_adj pair is reflexive: {a}")
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"vv_adj pair off the vertex set: ({a}, {b})")
        for a, b in self.ee_adj:
            if a == b:
                raise ValueError(f"ee_adj pair is reflexive: {a}")
            if a not in self.edges or b not in self.edges:
                raise ValueError(f"ee_adj pair off the edge set: ({a}, {b})")
        for v, e in self.ve_inc:
            if v not in self.vertices or e not in self.edges:
                raise ValueError(f"ve_inc pair off the element sets: ({v}, {e})")

    @property
    def elements(self) -> frozenset[ElementId]:
        return self.vertices | self.edges

    def __contains__(self, x: ElementId) -> bool:
        return x in self.vertices or x in self.edges

    @cached_property
    def _vv_nbrs(self) -> dict[ElementId, tuple[ElementId, ...]]:
        return _neighbor_map(self.vv_adj)

    @cached_property
    def _ee_nbrs(self) -> dict[ElementId, tuple[ElementId, ...]]:
        return _neighbor_map(self.ee_adj)

    @cached_property
    def _mixed_nbrs(self) -> dict[ElementId, tuple[ElementId, ...]]:
        return _neighbor_map(self.ve_inc)

    def neighbors(self, x: ElementId, kind: PathKind) -> tuple[ElementId, ...]:
        """Elements that can follow ``x`` in a path of the given kind."""
        if kind is PathKind.VERTEX:
            return self._vv_nbrs.get(x, ())
        if kind is PathKind.EDGE:
            return self._ee_nbrs.get(x, ())
        return self._mixed_nbrs.get(x, ())

    def degree(self, v: ElementId) -> int:
        """Number of edges incident to the vertex ``v``."""
        if v not in self.vertices:
            raise ValueError(f"not a vertex of this graph: {v}")
        return len(self._mixed_nbrs.get(v, ()))

    @property
    def max_degree(self) -> int:
        if not self.vertices:
            return 0
        return max(self.degree(v) for v in self.vertices)

    def domain(self, kind: PathKind) -> frozenset[ElementId]:
        """Elements that may appear in a path of the given kind."""
        if kind is PathKind.VERTEX:
            return self.vertices
        if kind is PathKind.EDGE:
            return self.edges
        return self.elements


def _neighbor_map(
    pairs: Iterable[tuple[ElementId, ElementId]],
) -> dict[ElementId, tuple[ElementId, ...]]:
    out: dict[ElementId, set[ElementId]] = {}
    for a, b in pairs:
        out.setdefault(a, set()).add(b)
        out.setdefault(b, set()).add(a)
    return {x: tuple(sorted(nbrs)) for x, nbrs in out.items()}


def from_standard(
    n_vertices: int, edge_list: Iterable[tuple[int, int]]
) -> GeneralizedGraph:
    """Build a generalized graph from an ordinary simple graph.

    Vertices are 0..n-1; edge ``j`` of ``edge_list`` becomes the edge
    element with index ``j``.  Two vertices are vv-adjacent when joined
    by an edge, two edges are ee-adjacent when they share a vertex, and
    a vertex is incident to the edges it bounds.
    """
    if n_vertices < 0:
        raise ValueError("vertex count must be nonnegative")
    verts = frozenset(vertex(i) for i in range(n_vertices))
    edge_ids = []
    vv: set[tuple[ElementId, ElementId]] = set()
    ve: set[tuple[ElementId, ElementId]] = set()
    incident: dict[int, list[ElementId]] = {}
    seen: set[tuple[int, int]] = set()
    for j, (u, w) in enumerate(edge_list):
        if not (0 <= u < n_vertices and 0 <= w < n_vertices):
            raise ValueError(f"edge endpoint out of range: ({u}, {w})")
        if u == w:
            raise ValueError(f"self-loop rejected: ({u}, {w})")
        key = (min(u, w), max(u, w))
        if key in seen:
            raise ValueError(f"duplicate edge rejected: ({u}, {w})")
        seen.add(key)
        e = edge(j)
        edge_ids.append(e)
        vv.add(_canonical_pair(vertex(u), vertex(w)))
        ve.add((vertex(u), e))
        ve.add((vertex(w), e))
        incident.setdefault(u, []).append(e)
        incident.setdefault(w, []).append(e)
    ee: set[tuple[ElementId, ElementId]] = set()
    for edges_at_v in incident.values():
        for e1, e2 in itertools.combinations(sorted(edges_at_v), 2):
            ee.add((e1, e2))
    return GeneralizedGraph(
        vertices=verts,
        edges=frozenset(edge_ids),
        vv_adj=frozenset(vv),
        ee_adj=frozenset(ee),
        ve_inc=frozenset(ve),
    )


def delete(g: GeneralizedGraph, removed: Iterable[ElementId]) -> GeneralizedGraph:
    """Remove elements; every relation pair between survivors persists."""
    gone = frozenset(removed)
    missing = gone - g.elements
    if missing:
        raise ValueError(f"cannot delete elements absent from the graph: {sorted(missing)}")
    keep_v = g.vertices - gone
    keep_e = g.edges - gone
    keep = keep_v | keep_e
    return GeneralizedGraph(
        vertices=keep_v,
        edges=keep_e,
        vv_adj=frozenset(p for p in g.vv_adj if p[0] in keep and p[1] in keep),
        ee_adj=frozenset(p for p in g.ee_adj if p[0] in keep and p[1] in keep),
        ve_inc=frozenset(p for p in g.ve_inc if p[0] in keep and p[1] in keep),
    )


@dataclass(frozen=True)
class Path:
    """An undirected simple path, stored in canonical orientation."""

    kind: PathKind
    elements: tuple[ElementId, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("a path has at least one element")
        rev = self.elements[::-1]
        if rev < self.elements:
            object.__setattr__(self, "elements", rev)

    def __len__(self) -> int:
        return len(self.elements)

    def sort_key(self) -> tuple:
        return (len(self.elements), _KIND_RANK[self.kind], self.elements)


def path_is_valid(g: GeneralizedGraph, path: Path) -> bool:
    """Check the path invariants directly against the graph relations."""
    elems = path.elements
    if len(set(elems)) != len(elems):
        return False
    domain = g.domain(path.kind)
    if any(x not in domain for x in elems):
        return False
    if path.kind is PathKind.MIXED:
        for a, b in zip(elems, elems[1:]):
            if a.kind == b.kind:
                return False
    for a, b in zip(elems, elems[1:]):
        if b not in g.neighbors(a, path.kind):
            return False
    return True


def _iter_directed_through(
    g: GeneralizedGraph,
    x: ElementId,
    kind: PathKind,
    length: int,
    allowed: frozenset[ElementId] | None,
) -> Iterator[tuple[ElementId, ...]]:
    """Directed simple paths of exactly ``length`` elements containing ``x``.

    Each directed path is produced once: the position of ``x`` in it is
    unique, so iterating over candidate positions cannot repeat a path.
    """
    domain = g.domain(kind)
    if allowed is not None:
        domain = domain & allowed
    if x not in domain:
        return

    def grow(seq: list[ElementId], used: set[ElementId], slots: int, out_left: bool
             ) -> Iterator[tuple[ElementId, ...]]:
        if slots == 0:
            yield tuple(seq)
            return
        anchor = seq[0] if out_left else seq[-1]
        for w in g.neighbors(anchor, kind):
            if w in used or w not in domain:
                continue
            used.add(w)
            if out_left:
                seq.insert(0, w)
            else:
                seq.append(w)
            yield from grow(seq, used, slots - 1, out_left)
            if out_left:
                seq.pop(0)
            else:
                seq.pop()
            used.remove(w)

    for j in range(length):
        # grow the suffix after x first, then the prefix before it
        for partial in grow([x], {x}, length - 1 - j, out_left=False):
            base = list(partial)
            used = set(base)
            yield from grow(base, used, j, out_left=True)


def _iter_directed_all(
    g: GeneralizedGraph,
    kind: PathKind,
    length: int,
    allowed: frozenset[ElementId] | None,
) -> Iterator[tuple[ElementId, ...]]:
    """Every directed simple path of exactly ``length`` elements."""
    domain = g.domain(kind)
    if allowed is not None:
        domain = domain & allowed
    seq: list[ElementId] = []
    used: set[ElementId] = set()

    def extend(u: ElementId) -> Iterator[tuple[ElementId, ...]]:
        seq.append(u)
        used.add(u)
        if len(seq) == length:
            yield tuple(seq)
        else:
            for w in g.neighbors(u, kind):
                if w not in used and w in domain:
                    yield from extend(w)
        seq.pop()
        used.remove(u)

    for start in sorted(domain):
        yield from extend(start)


def _canonical(seq: tuple[ElementId, ...]) -> bool:
    return seq <= seq[::-1]


def enumerate_paths_through(
    g: GeneralizedGraph, x: ElementId, kind: PathKind, length: int
) -> set[Path]:
    """All simple paths of the given kind with ``length`` elements through ``x``."""
    if length < 1:
        raise ValueError("path length must be positive")
    if x not in g:
        raise ValueError(f"element not in graph: {x}")
    found = set()
    for seq in _iter_directed_through(g, x, kind, length, allowed=None):
        if _canonical(seq):
            found.add(Path(kind, seq))
    return found


def count_paths_containing(
    g: GeneralizedGraph, kind: PathKind, lengths: Iterable[int]
) -> dict[int, Counter]:
    """Tally how many canonical paths of each length contain each element.

    One sweep per length replaces an element-by-element enumeration;
    the totals match ``enumerate_paths_through`` exactly.
    """
    out: dict[int, Counter] = {}
    for length in lengths:
        tally: Counter = Counter()
        for seq in _iter_directed_all(g, kind, length, allowed=None):
            if _canonical(seq):
                tally.update(seq)
        out[length] = tally
    return out


def count_paths_bound(
    delta: int,
    x_kind: ElementKind,
    kind: PathKind,
    i: int,
    total_form: bool = False,
) -> int:
    """Upper bound on the number of length-2i paths of ``kind`` through an element.

    ``total_form`` selects the coarser vertex-path bound i*Delta^(2i-1)
    used when vertices and edges are colored together; the default
    vertex-path bound is i*Delta*(Delta-1)^(2i-2).
    """
    if delta < 1:
        raise ValueError("bound requires maximum degree at least 1")
    if i < 1:
        raise ValueError("half-length must be positive")
    if x_kind is ElementKind.VERTEX and kind is PathKind.VERTEX:
        if total_form:
            return i * delta ** (2 * i - 1)
        return i * delta * (delta - 1) ** (2 * i - 2)
    if x_kind is ElementKind.VERTEX and kind is PathKind.MIXED:
        return i * delta**i
    if x_kind is ElementKind.EDGE and kind is PathKind.MIXED:
        return 2 * i * delta ** (i - 1)
    if x_kind is ElementKind.EDGE and kind is PathKind.EDGE:
        return 2 * i * delta ** (2 * i - 1)
    raise ValueError(f"no bound for {kind.value} paths through a {x_kind.name.lower()}")


def applicable_path_kinds(x_kind: ElementKind) -> tuple[tuple[PathKind, bool], ...]:
    """(path kind, total_form) combinations bounded for the element kind."""
    if x_kind is ElementKind.VERTEX:
        return ((PathKind.VERTEX, False), (PathKind.VERTEX, True), (PathKind.MIXED, False))
    return ((PathKind.EDGE, False), (PathKind.MIXED, False))


# ---------------------------------------------------------------------------
# named constructions
# ---------------------------------------------------------------------------

def path_graph(n: int) -> GeneralizedGraph:
    """The path on n vertices."""
    return from_standard(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> GeneralizedGraph:
    """The cycle on n vertices (n >= 3)."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_standard(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> GeneralizedGraph:
    return from_standard(n, list(itertools.combinations(range(n), 2)))


def petersen_graph() -> GeneralizedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_standard(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def graph_to_json(g: GeneralizedGraph) -> dict:
    """Canonical JSON object: sorted ids, derived relation pairs omitted.

    Incidence is recoverable from the edges' surviving endpoints, so it
    is not serialized; vv/ee pairs that no shared element explains are
    kept under ``extra_vv`` / ``extra_ee``.
    """
    ends: dict[ElementId, list[int]] = {e: [] for e in g.edges}
    for v, e in g.ve_inc:
        ends[e].append(v.index)
    derived_vv = set()
    for e, vs in ends.items():
        if len(vs) == 2:
            a, b = sorted(vs)
            derived_vv.add((vertex(a), vertex(b)))
    derived_ee = set()
    for v in g.vertices:
        for e1, e2 in itertools.combinations(sorted(g._mixed_nbrs.get(v, ())), 2):
            derived_ee.add((e1, e2))
    obj: dict = {
        "vertices": sorted(v.index for v in g.vertices),
        "edges": [
            {"id": e.index, "ends": sorted(ends[e])} for e in sorted(g.edges)
        ],
    }
    extra_vv = sorted(
        [a.index, b.index] for a, b in g.vv_adj if (a, b) not in derived_vv
    )
    extra_ee = sorted(
        [a.index, b.index] for a, b in g.ee_adj if (a, b) not in derived_ee
    )
    if extra_vv:
        obj["extra_vv"] = extra_vv
    if extra_ee:
        obj["extra_ee"] = extra_ee
    return obj


def graph_from_json(obj: Mapping) -> GeneralizedGraph:
    """Parse the canonical JSON object produced by ``graph_to_json``."""
    if not isinstance(obj, Mapping):
        raise ValueError("graph JSON must be an object")
    try:
        vert_idx = list(obj["vertices"])
        edge_objs = list(obj["edges"])
    except KeyError as missing:
        raise ValueError(f"graph JSON lacks required key {missing}") from None
    if any(not isinstance(i, int) for i in vert_idx):
        raise ValueError("vertex indices must be integers")
    if len(set(vert_idx)) != len(vert_idx):
        raise ValueError("duplicate vertex index")
    verts = frozenset(vertex(i) for i in vert_idx)
    vv: set[tuple[ElementId, ElementId]] = set()
    ee: set[tuple[ElementId, ElementId]] = set()
    ve: set[tuple[ElementId, ElementId]] = set()
    edge_ids: set[ElementId] = set()
    incident: dict[int, list[ElementId]] = {}
    for eo in edge_objs:
        if not isinstance(eo, Mapping) or "id" not in eo or "ends" not in eo:
            raise ValueError(f"malformed edge entry: {eo!r}")
        e = edge(int(eo["id"]))
        if e in edge_ids:
            raise ValueError(f"duplicate edge id {eo['id']}")
        edge_ids.add(e)
        ends = list(eo["ends"])
        if len(ends) > 2 or len(set(ends)) != len(ends):
            raise ValueError(f"edge {eo['id']} has malformed ends {ends!r}")
        for u in ends:
            if vertex(u) not in verts:
                raise ValueError(f"edge {eo['id']} endpoint {u} is not a vertex")
            ve.add((vertex(u), e))
            incident.setdefault(u, []).append(e)
        if len(ends) == 2:
            vv.add(_canonical_pair(vertex(ends[0]), vertex(ends[1])))
    for edges_at_v in incident.values():
        for e1, e2 in itertools.combinations(sorted(edges_at_v), 2):
            ee.add((e1, e2))
    for key, pool, store in (
        ("extra_vv", verts, vv),
        ("extra_ee", edge_ids, ee),
    ):
        for pair in obj.get(key, []):
            if len(pair) != 2 or pair[0] == pair[1]:
                raise ValueError(f"malformed {key} pair {pair!r}")
            mk = vertex if key == "extra_vv" else edge
            a, b = mk(pair[0]), mk(pair[1])
            if a not in pool or b not in pool:
                raise ValueError(f"{key} pair {pair!r} references a missing element")
            store.add(_canonical_pair(a, b))
    return GeneralizedGraph(
        vertices=verts,
        edges=frozenset(edge_ids),
        vv_adj=frozenset(vv),
        ee_adj=frozenset(ee),
        ve_inc=frozenset(ve),
    )
