"""Finite multigraphs with a strict total order on the edges.

A graph is an immutable value ``Graph(n, edges)``.  Vertices are ``0..n-1``.
``edges`` is a tuple of ``(edge_id, endpoints)`` pairs sorted by id, where
``endpoints`` is a frozenset of one vertex (a loop) or two vertices.  The edge
order is the numeric order of the ids.  Graphs built with :func:`build_graph`
carry dense ids ``0..m-1``; deletion and contraction keep a subset of the
ancestor's ids, so derived graphs may have gaps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphError, LoopContractionError, NonTransitiveRelationError

VertexId = int
EdgeId = int
Endpoints = frozenset


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[EdgeId, frozenset[VertexId]], ...]
    provenance: str | None = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        prev = -1
        for eid, ends in self.edges:
            if not isinstance(eid, int) or eid < 0:
                raise GraphError(f"edge id must be a nonnegative integer, got {eid!r}")
            if eid <= prev:
                raise GraphError("edge ids must be strictly increasing")
            prev = eid
            if not isinstance(ends, frozenset) or not 1 <= len(ends) <= 2:
                raise GraphError(f"edge {eid}: endpoint set must have 1 or 2 vertices")
            for v in ends:
                if not isinstance(v, int) or not 0 <= v < self.n:
                    raise GraphError(f"edge {eid}: endpoint {v!r} out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[EdgeId, ...]:
        return tuple(eid for eid, _ in self.edges)

    def endpoints(self, e: EdgeId) -> frozenset[VertexId]:
        try:
            return self._lookup[e]
        except KeyError:
            raise GraphError(f"unknown edge id {e}") from None

    @property
    def _lookup(self) -> dict:
        # cached on first use; the dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_lookup_cache"]
        except KeyError:
            table = dict(self.edges)
            object.__setattr__(self, "_lookup_cache", table)
            return table

    def __contains__(self, e) -> bool:
        return e in self._lookup

    def has_loop(self) -> bool:
        return any(len(ends) == 1 for _, ends in self.edges)


def build_graph(n: int, endpoint_sets: Iterable[Iterable[int]], provenance: str | None = None) -> Graph:
    """Build a graph whose i-th listed endpoint set becomes edge ``i``.

    >>> build_graph(3, [{0, 1}, {0, 2}, {1, 2}]).m
    3
    """
    edges = []
    for i, ends in enumerate(endpoint_sets):
        ends = list(ends)
        if not 1 <= len(set(ends)) <= 2 or len(ends) > 2:
            raise GraphError(f"edge {i}: endpoint set must be {{u}} or {{u, v}}, got {ends!r}")
        edges.append((i, frozenset(ends)))
    return Graph(n, tuple(edges), provenance)


def _require(G: Graph, e: EdgeId) -> frozenset:
    return G.endpoints(e)


def is_loop(G: Graph, e: EdgeId) -> bool:
    return len(_require(G, e)) == 1


def are_parallel(G: Graph, e: EdgeId, f: EdgeId) -> bool:
    return _require(G, e) == _require(G, f) and e != f


def parallel_classes(G: Graph) -> list[tuple[EdgeId, ...]]:
    """Groups of two or more edges sharing an endpoint set, each sorted by id."""
    groups: dict[frozenset, list[EdgeId]] = {}
    for eid, ends in G.edges:
        groups.setdefault(ends, []).append(eid)
    return sorted(tuple(ids) for ids in groups.values() if len(ids) > 1)


def is_simple(G: Graph) -> bool:
    seen = set()
    for _, ends in G.edges:
        if len(ends) == 1 or ends in seen:
            return False
        seen.add(ends)
    return True


def min_edge(G: Graph) -> EdgeId:
    if not G.edges:
        raise GraphError("edgeless graph has no minimum edge")
    return G.edges[0][0]


@dataclass(frozen=True)
class VertexPartition:
    """Classes of vertices, sorted by their smallest member."""

    classes: tuple[frozenset[VertexId], ...]
    class_of: dict[VertexId, int] = field(compare=False)


@dataclass(frozen=True)
class EdgePartition:
    """Classes of ``E - {e}``; each class is named by its maximum edge id."""

    classes: tuple[frozenset[EdgeId], ...]
    representative: dict[EdgeId, EdgeId] = field(compare=False)


def vertex_classes_under(G: Graph, e: EdgeId) -> VertexPartition:
    ends = _require(G, e)
    merged = frozenset(ends)
    classes = []
    for v in range(G.n):
        if v in merged:
            if v == min(merged):
                classes.append(merged)
        else:
            classes.append(frozenset((v,)))
    class_of = {v: i for i, cls in enumerate(classes) for v in cls}
    return VertexPartition(tuple(classes), class_of)


def _related(ends_e, ends_x, ends_y) -> bool:
    return ends_e == (ends_x ^ ends_y)


def edge_classes_under(G: Graph, e: EdgeId, strict: bool = True) -> EdgePartition:
    """Partition ``E - {e}`` by x ~ y iff x == y or phi(e) == phi(x) ^ phi(y).

    With ``strict`` (the default) the computed relation must already be
    transitive; otherwise :class:`NonTransitiveRelationError` is raised with a
    witness triple.  ``strict=False`` uses the transitive closure instead,
    which only differs on multigraphs with parallel edges (or repeated loops)
    outside ``e``.
    """
    ends_e = _require(G, e)
    rest = [(x, ends) for x, ends in G.edges if x != e]
    parent = {x: x for x, _ in rest}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    neighbours: dict[EdgeId, set[EdgeId]] = {x: set() for x, _ in rest}
    for i, (x, ex) in enumerate(rest):
        for y, ey in rest[i + 1:]:
            if _related(ends_e, ex, ey):
                neighbours[x].add(y)
                neighbours[y].add(x)
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)

    if strict:
        # a connected non-clique always has a pair at distance exactly two
        for y, nbrs in neighbours.items():
            ordered = sorted(nbrs)
            for i, x in enumerate(ordered):
                for z in ordered[i + 1:]:
                    if z not in neighbours[x]:
                        raise NonTransitiveRelationError(
                            f"relation under edge {e} is not transitive: "
                            f"{x} ~ {y} and {y} ~ {z} but not {x} ~ {z}",
                            (x, y, z),
                        )

    groups: dict[EdgeId, list[EdgeId]] = {}
    for x, _ in rest:
        groups.setdefault(find(x), []).append(x)

    classes = sorted((frozenset(ms) for ms in groups.values()), key=max)
    representative = {x: max(cls) for cls in classes for x in cls}
    return EdgePartition(tuple(classes), representative)


def delete(G: Graph, e: EdgeId) -> Graph:
    _require(G, e)
    return Graph(G.n, tuple(item for item in G.edges if item[0] != e), f"delete({e})")


def contract(G: Graph, e: EdgeId, strict: bool = True) -> Graph:
    """Contract the non-loop edge ``e``.

    Vertex classes are renumbered densely by their smallest original vertex.
    Every class of remaining edges survives as a single edge carrying the
    largest id of the class, so the result's ids are a subset of ``E(G)``.
    """
    ends = _require(G, e)
    if len(ends) == 1:
        raise LoopContractionError(f"edge {e} is a loop; loops are never contracted")
    vparts = vertex_classes_under(G, e)
    eparts = edge_classes_under(G, e, strict=strict)
    edges = []
    for cls in eparts.classes:
        rep = max(cls)
        new_ends = frozenset(vparts.class_of[v] for v in G.endpoints(rep))
        edges.append((rep, new_ends))
    edges.sort(key=lambda item: item[0])
    return Graph(len(vparts.classes), tuple(edges), f"contract({e})")


def relabel_edges(G: Graph, perm: Sequence[int] | dict) -> Graph:
    """Rename edge ``x`` to ``perm[x]``; the new order is the numeric order of the new ids."""
    edges = sorted(((perm[x], ends) for x, ends in G.edges), key=lambda item: item[0])
    if len({x for x, _ in edges}) != len(edges):
        raise GraphError("edge relabelling must be injective")
    return Graph(G.n, tuple(edges), "relabel")


def reindex_edges(G: Graph) -> Graph:
    """Same graph with ids compressed to ``0..m-1`` in the existing order."""
    return Graph(G.n, tuple((i, ends) for i, (_, ends) in enumerate(G.edges)), G.provenance)


def graph_to_dict(G: Graph) -> dict:
    return {"n": G.n, "edges": [[eid, sorted(ends)] for eid, ends in G.edges]}


def graph_from_dict(data: dict) -> Graph:
    return Graph(int(data["n"]), tuple((int(eid), frozenset(int(v) for v in ends)) for eid, ends in data["edges"]))
