"""Size guards for the exponential enumerations."""

import os

from .errors import GuardExceededError

DEFAULT_MAX_EDGES = 20
HARD_MAX_EDGES = 24
MAX_COLORING_MAPS = 10**8
MAX_K_SUBSETS = 10**6
LEMMA_MAX_EDGES = 14
ENV_VAR = "BCTK_MAX_EDGES"


def resolve_max_edges(override=None):
    """Edge-count guard: explicit override, else ``$BCTK_MAX_EDGES``, else 20.

    Values above the hard cap of 24 (or below 0) raise ``ValueError``.
    """
    if override is None:
        raw = os.environ.get(ENV_VAR)
        if raw is None or raw.strip() == "":
            return DEFAULT_MAX_EDGES
        try:
            override = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if not 0 <= override <= HARD_MAX_EDGES:
        raise ValueError(f"edge guard must lie in [0, {HARD_MAX_EDGES}], got {override}")
    return override


def check_edge_guard(m, max_edges=None, what="enumeration"):
    limit = resolve_max_edges(max_edges)
    if m > limit:
        raise GuardExceededError(f"{what}: m={m} exceeds the edge guard {limit}")
