"""Cycles, broken circuits and NBC (no-broken-circuit) edge subsets.

Edge sets travel through the public API as sorted tuples of edge ids.
Internally an edge set is an int bitmask indexed by *edge id* (bit ``x`` set
iff edge ``x`` is a member), so sets from a graph and from its deletions and
contractions can be compared directly.  Whole-power-set tables are indexed
by the *local* position of each edge within ``G.edges`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .chromatic import chromatic_polynomial
from .errors import GraphError, GuardExceededError
from .graph import Graph
from .guards import MAX_K_SUBSETS, check_edge_guard

EdgeSet = tuple[int, ...]

_CHUNK_BITS = 16


def edge_set(ids: Iterable[int]) -> EdgeSet:
    ids = list(ids)
    out = tuple(sorted(set(ids)))
    if len(out) != len(ids):
        raise ValueError(f"edge set has duplicate members: {ids!r}")
    return out


def mask_of(ids: Iterable[int]) -> int:
    mask = 0
    for x in ids:
        mask |= 1 << x
    return mask


def ids_of(mask: int) -> EdgeSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def edge_mask(G: Graph) -> int:
    return mask_of(G.edge_ids)


@dataclass(frozen=True)
class BrokenCircuitReport:
    """Deduplicated broken circuits plus every cycle that produced each one."""

    broken_circuits: tuple[EdgeSet, ...]
    provenance: dict[EdgeSet, tuple[EdgeSet, ...]]

    def __contains__(self, item) -> bool:
        return tuple(item) in self.provenance


def _sort_key(s: EdgeSet):
    return len(s), s


# -- cycle enumeration -------------------------------------------------------


def _is_connected(G: Graph, local_mask: int) -> bool:
    parent = {}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for pos, (_, ends) in enumerate(G.edges):
        if local_mask >> pos & 1:
            vs = list(ends)
            for v in vs:
                parent.setdefault(v, v)
            if len(vs) == 2:
                a, b = find(vs[0]), find(vs[1])
                if a != b:
                    parent[a] = b
    roots = {find(v) for v in parent}
    return len(roots) == 1


def _local_to_global(G: Graph, local_mask: int) -> int:
    out = 0
    for pos, (eid, _) in enumerate(G.edges):
        if local_mask >> pos & 1:
            out |= 1 << eid
    return out


@lru_cache(maxsize=1 << 16)
def _cycle_masks(G: Graph) -> tuple[int, ...]:
    m = G.m
    if m == 0:
        return ()
    inc = np.zeros((m, G.n), dtype=np.int16)
    for pos, (_, ends) in enumerate(G.edges):
        for v in ends:
            inc[pos, v] += 2 if len(ends) == 1 else 1
    shifts = np.arange(m, dtype=np.int64)
    found = []
    step = 1 << min(m, _CHUNK_BITS)
    for lo in range(0, 1 << m, step):
        idx = np.arange(lo, lo + step, dtype=np.int64)
        bits = ((idx[:, None] >> shifts) & 1).astype(np.int16)
        deg = bits @ inc
        regular = ((deg == 0) | (deg == 2)).all(axis=1)
        if lo == 0:
            regular[0] = False
        for local in idx[regular].tolist():
            if _is_connected(G, local):
                found.append(_local_to_global(G, local))
    return tuple(sorted(found))


def enumerate_cycles(G: Graph, max_edges: int | None = None) -> set[EdgeSet]:
    """Edge sets of all cycles: nonempty, connected, 2-regular edge subsets.

    A loop contributes degree 2 to its vertex, so loops are 1-cycles and a
    parallel pair is a 2-cycle.  Exhaustive over all ``2**m`` subsets.
    """
    check_edge_guard(G.m, max_edges, "cycle enumeration")
    return {ids_of(c) for c in _cycle_masks(G)}


# -- broken circuits -----------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _bc_masks(G: Graph) -> tuple[int, ...]:
    out = set()
    for c in _cycle_masks(G):
        out.add(c ^ (1 << (c.bit_length() - 1)))
    return tuple(sorted(out))


def broken_circuits(G: Graph, max_edges: int | None = None) -> BrokenCircuitReport:
    check_edge_guard(G.m, max_edges, "broken circuit enumeration")
    provenance: dict[EdgeSet, list[EdgeSet]] = {}
    for c in _cycle_masks(G):
        bc = ids_of(c ^ (1 << (c.bit_length() - 1)))
        provenance.setdefault(bc, []).append(ids_of(c))
    ordered = tuple(sorted(provenance, key=_sort_key))
    return BrokenCircuitReport(
        ordered, {bc: tuple(sorted(provenance[bc], key=_sort_key)) for bc in ordered}
    )


def _validate_subset(G: Graph, X) -> int:
    mask = mask_of(edge_set(X))
    stray = mask & ~edge_mask(G)
    if stray:
        raise GraphError(f"edge set contains ids not in the graph: {list(ids_of(stray))}")
    return mask


def includes_mask(G: Graph, mask: int) -> bool:
    """Unchecked bitmask form of :func:`includes_broken_circuit`."""
    return any(bc & ~mask == 0 for bc in _bc_masks(G))


def includes_broken_circuit(G: Graph, X: Iterable[int], max_edges: int | None = None) -> bool:
    """True iff some broken circuit of ``G`` is a subset of ``X``.

    The empty set is a broken circuit whenever ``G`` has a loop, in which case
    every ``X`` (the empty one included) qualifies.
    """
    mask = _validate_subset(G, X)
    check_edge_guard(G.m, max_edges, "broken circuit enumeration")
    return includes_mask(G, mask)


# -- power-set tables ----------------------------------------------------------


@lru_cache(maxsize=32)
def _popcounts(m: int) -> np.ndarray:
    counts = np.zeros(1 << m, dtype=np.int8)
    for i in range(m):
        view = counts.reshape(-1, 2, 1 << i)
        view[:, 1, :] += 1
    return counts


def _local_index(G: Graph, masks: np.ndarray) -> np.ndarray:
    out = np.zeros_like(masks)
    for pos, eid in enumerate(G.edge_ids):
        out |= ((masks >> eid) & 1) << pos
    return out


def _global_index(G: Graph) -> np.ndarray:
    """Global bitmask of every local subset, in local-index order."""
    out = np.zeros(1 << G.m, dtype=np.int64)
    for pos, eid in enumerate(G.edge_ids):
        view = out.reshape(-1, 2, 1 << pos)
        view[:, 1, :] |= np.int64(1) << eid
    return out


@lru_cache(maxsize=1 << 14)
def includes_table(G: Graph) -> np.ndarray:
    """Boolean table over local subsets: does subset ``i`` include a broken circuit?

    Built by marking each broken circuit and closing upward one bit at a time.
    """
    m = G.m
    table = np.zeros(1 << m, dtype=bool)
    bcs = _bc_masks(G)
    if bcs:
        table[_local_index(G, np.array(bcs, dtype=np.int64))] = True
    for i in range(m):
        view = table.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    table.setflags(write=False)
    return table


def includes_many(G: Graph, masks: np.ndarray) -> np.ndarray:
    """Vectorised :func:`includes_mask` for global bitmasks that lie inside ``E(G)``."""
    return includes_table(G)[_local_index(G, masks)]


def nbc_subsets(G: Graph, k: int, max_edges: int | None = None) -> set[EdgeSet]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if comb(G.m, k) > MAX_K_SUBSETS:
        raise GuardExceededError(f"C({G.m}, {k}) exceeds {MAX_K_SUBSETS} subsets")
    check_edge_guard(G.m, max_edges, "broken circuit enumeration")
    bcs = _bc_masks(G)
    out = set()
    for X in combinations(G.edge_ids, k):
        mask = mask_of(X)
        if not any(bc & ~mask == 0 for bc in bcs):
            out.add(X)
    return out


def nbc_count(G: Graph, k: int, max_edges: int | None = None) -> int:
    return len(nbc_subsets(G, k, max_edges))


def nbc_counts(G: Graph, max_edges: int | None = None) -> tuple[int, ...]:
    """NBC counts for k = 0..n(G) from one pass over the power set."""
    check_edge_guard(G.m, max_edges, "NBC counting")
    sizes = _popcounts(G.m)[~includes_table(G)]
    counts = np.bincount(sizes, minlength=max(G.n, G.m) + 1)
    return tuple(int(c) for c in counts[: G.n + 1])


# -- Whitney's theorem ----------------------------------------------------------


@dataclass(frozen=True)
class WhitneyReport:
    ak: tuple[int, ...]
    nbc: tuple[int, ...]

    @property
    def per_k(self) -> list[tuple[int, int, int, bool]]:
        return [(k, a, c, a == c) for k, (a, c) in enumerate(zip(self.ak, self.nbc))]

    @property
    def passed(self) -> bool:
        return self.ak == self.nbc


def whitney_check(G: Graph, max_edges: int | None = None, memo: dict | None = None) -> WhitneyReport:
    """Compare a_k from deletion-contraction with NBC k-subset counts, k = 0..n."""
    counts = nbc_counts(G, max_edges)
    return WhitneyReport(chromatic_polynomial(G, memo).ak, counts)
