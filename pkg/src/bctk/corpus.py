"""Graph corpora: seeded random multigraphs and exhaustive small enumerations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterator

from .graph import Graph, build_graph


@dataclass(frozen=True)
class FuzzConfig:
    n_max: int = 5
    m_max: int = 8
    trials: int = 100
    seed: int = 0
    allow_loops: bool = False
    allow_parallel: bool = False

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")
        if self.m_max < 0:
            raise ValueError("m_max must be nonnegative")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


def _capacity(n: int, cfg: FuzzConfig) -> int | None:
    """Maximum edge count the flags allow on n vertices (None = unbounded)."""
    if cfg.allow_parallel and (n >= 2 or cfg.allow_loops):
        return None
    return comb(n, 2) + (n if cfg.allow_loops else 0)


def generate_corpus(cfg: FuzzConfig) -> list[Graph]:
    """Deterministic pseudo-random multigraphs.

    n is uniform on [1, n_max] and m uniform on [0, m_max], then clamped to
    what the loop/parallel flags permit on n vertices.  Endpoints are drawn
    uniformly and redrawn until they satisfy the flags.
    """
    rng = random.Random(cfg.seed)
    corpus = []
    for trial in range(cfg.trials):
        n = rng.randint(1, cfg.n_max)
        m = rng.randint(0, cfg.m_max)
        cap = _capacity(n, cfg)
        if cap is not None:
            m = min(m, cap)
        used = set()
        ends = []
        while len(ends) < m:
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v and not cfg.allow_loops:
                continue
            key = frozenset((u, v))
            if key in used and not cfg.allow_parallel:
                continue
            used.add(key)
            ends.append(key)
        corpus.append(build_graph(n, ends, provenance=f"fuzz(seed={cfg.seed}, trial={trial})"))
    return corpus


def endpoint_sets(n: int, loops: bool = True) -> list[frozenset]:
    """Every possible endpoint set on n vertices, loops first per vertex."""
    out = []
    for u in range(n):
        if loops:
            out.append(frozenset((u,)))
        for v in range(u + 1, n):
            out.append(frozenset((u, v)))
    return out


def exhaustive_corpus(n_max: int, m_max: int, loops: bool = True, parallel: bool = True) -> Iterator[Graph]:
    """All incidence-distinct graphs with n <= n_max, m <= m_max.

    Two graphs are incidence-distinct when their multisets of endpoint sets
    differ; each multiset is listed once, in canonical order, which fixes its
    edge order.  n runs from 0.
    """
    for n in range(n_max + 1):
        slots = endpoint_sets(n, loops)
        choose = combinations_with_replacement if parallel else combinations
        for m in range(m_max + 1):
            for ends in choose(slots, m):
                yield build_graph(n, ends)


def exhaustive_size(n_max: int, m_max: int, loops: bool = True, parallel: bool = True) -> int:
    total = 0
    for n in range(n_max + 1):
        s = len(endpoint_sets(n, loops))
        for m in range(m_max + 1):
            if parallel:
                total += 1 if m == 0 else comb(s + m - 1, m)
            else:
                total += comb(s, m)
    return total
