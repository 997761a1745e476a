"""Instance checks for the deletion-contraction proof of Whitney's theorem.

Each ``check_*`` function quantifies over *every* relevant edge subset of one
graph (guarded at m <= 14) and returns a :class:`LemmaVerdict`.  Calling a
check outside its hypotheses raises :class:`PreconditionError`;
:func:`run_all_checks` turns those into skips.

Verdict identifiers:

====== =====================================================================
L0     parallel e < f: X is NBC in G  <=>  X avoids e and is NBC in G - e
L1     e = min edge, Y in E(G - e): includes a BC of G - e <=> of G
L2     e = min edge, e in X NBC in G: (a) X - e lies in E(G|e), (b) is NBC there
L3     e = min edge, Y NBC in G|e: Y + e is NBC in G
L4a    #NBC k-subsets of G - e == #NBC k-subsets of G avoiding e
L4b    X -> X - e is a bijection from NBC k-sets of G containing e onto
       NBC (k-1)-sets of G|e
EQ3    a_k(G) = a_k(G - e) + a_{k-1}(G|e), k = 1..n
EQ2    P(G) = P(G - e) - P(G|e) for one non-loop edge e
ORACLE deletion-contraction polynomial equals the interpolated colour counts
WHITNEY  a_k(G) equals the number of NBC k-subsets, k = 0..n
====== =====================================================================
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .broken_circuit import (
    _global_index,
    _popcounts,
    edge_mask,
    ids_of,
    includes_many,
    whitney_check,
)
from .chromatic import chromatic_polynomial, oracle_polynomial
from .errors import GraphError, GuardExceededError, NonTransitiveRelationError, PreconditionError
from .graph import (
    Graph,
    are_parallel,
    contract,
    delete,
    graph_to_dict,
    is_loop,
    is_simple,
    min_edge,
    parallel_classes,
)
from .guards import LEMMA_MAX_EDGES, check_edge_guard

LEMMA_ORDER = ("WHITNEY", "L0", "L1", "L2", "L3", "L4a", "L4b", "EQ3")


@dataclass
class LemmaVerdict:
    lemma: str
    instance: dict
    passed: bool
    skipped: bool = False
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failed verdict must carry a counterexample")

    @property
    def failed(self) -> bool:
        return not self.passed and not self.skipped

    def to_json(self) -> dict:
        inst = {k: (graph_to_dict(v) if isinstance(v, Graph) else v) for k, v in self.instance.items()}
        out = {"lemma": self.lemma, "passed": self.passed, "skipped": self.skipped, "instance": inst}
        if self.details:
            out["details"] = self.details
        if self.counterexample is not None:
            out["counterexample"] = _jsonable(self.counterexample)
        return out


def _jsonable(value):
    if isinstance(value, Graph):
        return graph_to_dict(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _verdict(lemma, G, passed, counterexample=None, **params) -> LemmaVerdict:
    return LemmaVerdict(lemma, {"graph": G, **params}, passed, counterexample=counterexample)


def skipped(lemma: str, G: Graph, reason: str, **params) -> LemmaVerdict:
    """Vacuous verdict for an instance outside the lemma's hypotheses."""
    return LemmaVerdict(lemma, {"graph": G, **params}, True, skipped=True, details={"reason": reason})


def _guard(G: Graph):
    check_edge_guard(G.m, LEMMA_MAX_EDGES, "lemma check")


def _need_edges(G: Graph):
    if G.m == 0:
        raise PreconditionError("graph has no edges")


def _need_loop_free(G: Graph):
    if G.has_loop():
        raise PreconditionError("graph has a loop")


def _need_simple(G: Graph):
    if not is_simple(G):
        raise PreconditionError("graph is not simple")


def _first(flags: np.ndarray) -> int | None:
    hits = np.flatnonzero(flags)
    return int(hits[0]) if hits.size else None


# -- the lemmas ----------------------------------------------------------------


def check_lemma0(G: Graph, e: int, f: int) -> LemmaVerdict:
    if not (are_parallel(G, e, f) and e < f):
        raise PreconditionError(f"edges {e} < {f} must be parallel")
    _guard(G)
    H = delete(G, e)
    X = _global_index(G)
    lhs = ~includes_many(G, X)
    inside = ((X >> e) & 1) == 0
    rhs = np.zeros_like(lhs)
    rhs[inside] = ~includes_many(H, X[inside])
    bad = _first(lhs != rhs)
    if bad is None:
        return _verdict("L0", G, True, e=e, f=f)
    return _verdict(
        "L0", G, False, {"X": ids_of(int(X[bad])), "nbc_in_G": bool(lhs[bad]), "rhs": bool(rhs[bad])}, e=e, f=f
    )


def check_lemma1(G: Graph) -> LemmaVerdict:
    _need_edges(G)
    _need_loop_free(G)
    _guard(G)
    e = min_edge(G)
    H = delete(G, e)
    Y = _global_index(H)
    in_H = includes_many(H, Y)
    in_G = includes_many(G, Y)
    bad = _first(in_H != in_G)
    if bad is None:
        return _verdict("L1", G, True, e=e)
    return _verdict(
        "L1", G, False, {"Y": ids_of(int(Y[bad])), "includes_bc_of_G_minus_e": bool(in_H[bad]),
                         "includes_bc_of_G": bool(in_G[bad])}, e=e,
    )


def check_lemma2(G: Graph) -> LemmaVerdict:
    """Both parts at once; a failure names the violated part ("a" or "b")."""
    _need_edges(G)
    _need_simple(G)
    _guard(G)
    e = min_edge(G)
    C = contract(G, e)
    X = _global_index(G)
    X = X[(((X >> e) & 1) == 1) & ~includes_many(G, X)]
    rest = X & ~np.int64(1 << e)
    in_C = (rest & ~np.int64(edge_mask(C))) == 0
    bad = _first(~in_C)
    if bad is not None:
        return _verdict("L2", G, False, {"part": "a", "X": ids_of(int(X[bad]))}, e=e)
    bad = _first(includes_many(C, rest))
    if bad is not None:
        return _verdict("L2", G, False, {"part": "b", "X": ids_of(int(X[bad]))}, e=e)
    return _verdict("L2", G, True, e=e)


def check_lemma3(G: Graph) -> LemmaVerdict:
    _need_edges(G)
    _need_simple(G)
    _guard(G)
    e = min_edge(G)
    C = contract(G, e)
    Y = _global_index(C)
    Y = Y[~includes_many(C, Y)]
    bad = _first(includes_many(G, Y | np.int64(1 << e)))
    if bad is None:
        return _verdict("L3", G, True, e=e)
    return _verdict("L3", G, False, {"Y": ids_of(int(Y[bad]))}, e=e)


def _nbc_k_sets(G: Graph, k: int) -> np.ndarray:
    X = _global_index(G)
    return X[(_popcounts(G.m) == k) & ~includes_many(G, X)]


def bijection_beta(G: Graph, k: int) -> LemmaVerdict:
    """Materialise X -> X - {e} between NBC k-sets of G containing the min edge e
    and NBC (k-1)-sets of G|e, and check it is well defined, injective and onto.
    """
    if k < 1:
        raise PreconditionError("k must be positive")
    _need_edges(G)
    _need_simple(G)
    _guard(G)
    e = min_edge(G)
    bit = 1 << e
    C = contract(G, e)
    domain = [int(x) for x in _nbc_k_sets(G, k) if int(x) & bit]
    codomain = {int(y) for y in _nbc_k_sets(C, k - 1)}
    images = [x & ~bit for x in domain]
    details = {"domain_size": len(domain), "codomain_size": len(codomain)}

    def fail(kind, edges):
        v = _verdict("L4b", G, False, {"kind": kind, "set": edges}, e=e, k=k)
        v.details = details
        return v

    for x, y in zip(domain, images):
        if y not in codomain:
            return fail("not_well_defined", ids_of(x))
    if len(set(images)) != len(images):
        seen = set()
        for x, y in zip(domain, images):
            if y in seen:
                return fail("not_injective", ids_of(x))
            seen.add(y)
    missing = sorted(codomain - set(images))
    if missing:
        return fail("not_surjective", ids_of(missing[0]))
    v = _verdict("L4b", G, True, e=e, k=k)
    v.details = details
    return v


def check_lemma4a(G: Graph, k: int) -> LemmaVerdict:
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    _need_edges(G)
    _need_loop_free(G)
    _guard(G)
    e = min_edge(G)
    H = delete(G, e)
    left = len(_nbc_k_sets(H, k))
    right = int(np.count_nonzero(((_nbc_k_sets(G, k) >> e) & 1) == 0))
    if left == right:
        v = _verdict("L4a", G, True, e=e, k=k)
    else:
        v = _verdict("L4a", G, False, {"nbc_in_G_minus_e": left, "nbc_in_G_without_e": right}, e=e, k=k)
    v.details = {"count": left}
    return v


def check_recurrence(G: Graph, memo: dict | None = None) -> LemmaVerdict:
    _need_edges(G)
    _need_simple(G)
    e = min_edge(G)
    a = chromatic_polynomial(G, memo).ak
    a_del = chromatic_polynomial(delete(G, e), memo).ak
    a_con = chromatic_polynomial(contract(G, e), memo).ak + (0,)
    for k in range(1, G.n + 1):
        if a[k] != a_del[k] + a_con[k - 1]:
            return _verdict(
                "EQ3", G, False,
                {"k": k, "a_G": a[k], "a_G_minus_e": a_del[k], "a_G_contract_e": a_con[k - 1]}, e=e,
            )
    return _verdict("EQ3", G, True, e=e)


def check_deletion_contraction(G: Graph, e: int, memo: dict | None = None) -> LemmaVerdict:
    """P(G) = P(G - e) - P(G|e) for the non-loop edge e (not only the minimum).

    On multigraphs whose edge relation under e is not transitive, the
    contraction falls back to the transitive closure; the verdict records it.
    """
    if is_loop(G, e):
        raise PreconditionError(f"edge {e} is a loop")
    try:
        C = contract(G, e)
        closure = False
    except NonTransitiveRelationError:
        C = contract(G, e, strict=False)
        closure = True
    lhs = chromatic_polynomial(G, memo)
    rhs = chromatic_polynomial(delete(G, e), memo) - chromatic_polynomial(C, memo)
    params = {"e": e}
    if lhs == rhs:
        v = _verdict("EQ2", G, True, **params)
    else:
        v = _verdict("EQ2", G, False, {"lhs": lhs.dense, "rhs": rhs.dense}, **params)
    v.details = {"closure": closure}
    return v


def check_oracle(G: Graph, memo: dict | None = None) -> LemmaVerdict:
    P = chromatic_polynomial(G, memo)
    Q = oracle_polynomial(G)
    if P == Q:
        return _verdict("ORACLE", G, True)
    return _verdict("ORACLE", G, False, {"recursion": P.dense, "oracle": Q.dense})


def check_whitney(G: Graph, memo: dict | None = None) -> LemmaVerdict:
    report = whitney_check(G, memo=memo)
    v = _verdict("WHITNEY", G, report.passed,
                 None if report.passed else {"ak": report.ak, "nbc": report.nbc})
    v.details = {"ak": report.ak, "nbc": report.nbc}
    return v


# -- minimisation and the runner --------------------------------------------------


def minimize_counterexample(G: Graph, check: Callable[[Graph], LemmaVerdict]) -> tuple[Graph, LemmaVerdict]:
    """Greedy single-edge deletion that keeps ``check`` failing.

    ``check`` must fail on ``G``.  Deletions that break the check's
    hypotheses (or raise) are not taken.
    """
    verdict = check(G)
    if not verdict.failed:
        raise ValueError("minimize_counterexample needs a failing instance")
    progress = True
    while progress:
        progress = False
        for eid in G.edge_ids:
            H = delete(G, eid)
            try:
                v = check(H)
            except (PreconditionError, GuardExceededError, GraphError):
                continue
            if v.failed:
                G, verdict, progress = H, v, True
                break
    return G, verdict


def _applicable_checks(G: Graph, memo) -> list[tuple[str, dict, Callable[[Graph], LemmaVerdict] | None, str]]:
    """(lemma, params, check, skip_reason) for every check the runner owes G."""
    plans = []
    too_big = G.m > LEMMA_MAX_EDGES
    plans.append(("WHITNEY", {}, lambda H: check_whitney(H, memo), ""))

    pairs = [(e, f) for cls in parallel_classes(G) for i, e in enumerate(cls) for f in cls[i + 1:]]
    if not pairs:
        plans.append(("L0", {}, None, "no parallel pair"))
    for e, f in pairs:
        plans.append(("L0", {"e": e, "f": f}, lambda H, e=e, f=f: check_lemma0(H, e, f), ""))

    if G.m == 0:
        reason = "no edges"
    elif G.has_loop():
        reason = "graph has a loop"
    else:
        reason = ""
    simple_reason = reason or ("" if is_simple(G) else "graph is not simple")
    if too_big:
        reason = reason or f"m > {LEMMA_MAX_EDGES}"
        simple_reason = simple_reason or f"m > {LEMMA_MAX_EDGES}"

    plans.append(("L1", {}, check_lemma1, reason))
    plans.append(("L2", {}, check_lemma2, simple_reason))
    plans.append(("L3", {}, check_lemma3, simple_reason))
    if reason:
        plans.append(("L4a", {}, None, reason))
    else:
        for k in range(G.m + 1):
            plans.append(("L4a", {"k": k}, lambda H, k=k: check_lemma4a(H, k), ""))
    if simple_reason:
        plans.append(("L4b", {}, None, simple_reason))
        plans.append(("EQ3", {}, None, simple_reason))
    else:
        for k in range(1, G.m + 1):
            plans.append(("L4b", {"k": k}, lambda H, k=k: bijection_beta(H, k), ""))
        plans.append(("EQ3", {}, lambda H: check_recurrence(H, memo), ""))
    return plans


def check_graph(G: Graph, memo: dict | None = None, minimize: bool = True) -> list[LemmaVerdict]:
    """Every applicable check on one graph, in a fixed order."""
    out = []
    for lemma, params, check, reason in _applicable_checks(G, memo):
        if reason or check is None:
            out.append(skipped(lemma, G, reason or "not applicable", **params))
            continue
        try:
            v = check(G)
        except GuardExceededError as exc:
            out.append(skipped(lemma, G, str(exc), **params))
            continue
        if v.failed and minimize:
            small, small_v = minimize_counterexample(G, check)
            v.counterexample = {**v.counterexample, "minimized_graph": small,
                                "minimized_counterexample": small_v.counterexample}
        out.append(v)
    return out


@dataclass
class CheckSummary:
    graphs: int = 0
    counts: dict = field(default_factory=lambda: {k: {"passed": 0, "failed": 0, "skipped": 0} for k in LEMMA_ORDER})
    failures: list = field(default_factory=list)

    @property
    def failed_total(self) -> int:
        return sum(c["failed"] for c in self.counts.values())

    def add(self, verdicts: Iterable[LemmaVerdict]):
        self.graphs += 1
        for v in verdicts:
            bucket = self.counts.setdefault(v.lemma, {"passed": 0, "failed": 0, "skipped": 0})
            if v.skipped:
                bucket["skipped"] += 1
            elif v.passed:
                bucket["passed"] += 1
            else:
                bucket["failed"] += 1
                self.failures.append(v)

    def headline(self) -> str:
        return f"{self.graphs} graphs, {self.failed_total} failures"

    def render(self) -> str:
        lines = [self.headline()]
        for lemma, c in self.counts.items():
            lines.append(f"  {lemma:<8} passed {c['passed']:>7}  failed {c['failed']:>5}  skipped {c['skipped']:>7}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "graphs": self.graphs,
            "failures": self.failed_total,
            "counts": self.counts,
            "failed_verdicts": [v.to_json() for v in self.failures],
        }


def _check_chunk(graphs: Sequence[Graph]) -> list[list[LemmaVerdict]]:
    memo: dict = {}
    return [check_graph(G, memo) for G in graphs]


def run_all_checks(corpus: Sequence[Graph], workers: int = 1, chunk: int = 64) -> CheckSummary:
    """Run every applicable check on every graph and aggregate in corpus order.

    With ``workers > 1`` chunks of the corpus are checked in separate
    processes; the summary does not depend on the worker count.
    """
    summary = CheckSummary()
    corpus = list(corpus)
    if workers <= 1:
        memo: dict = {}
        for G in corpus:
            summary.add(check_graph(G, memo))
        return summary
    chunks = [corpus[i:i + chunk] for i in range(0, len(corpus), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for block in pool.map(_check_chunk, chunks):
            for verdicts in block:
                summary.add(verdicts)
    return summary
