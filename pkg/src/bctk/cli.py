"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 bad input or flags,
3 integer overflow, 4 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import guards
from .broken_circuit import broken_circuits, nbc_counts, nbc_subsets, whitney_check
from .chromatic import chromatic_polynomial
from .corpus import FuzzConfig, generate_corpus
from .errors import CoefficientOverflowError, GraphError, GuardExceededError
from .graphfile import read_graph
from .lemmas import check_graph, run_all_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_OVERFLOW, EXIT_GUARD = 0, 1, 2, 3, 4


def _emit(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False, indent=2))


def _poly_fields(G, P) -> dict:
    return {
        "n": G.n,
        "m": G.m,
        "coefficients_dense": list(P.dense),
        "coefficients_ak": list(P.ak),
    }


def cmd_poly(args) -> int:
    G = read_graph(args.path)
    P = chromatic_polynomial(G, {} if args.cache else None)
    if args.json:
        _emit({**_poly_fields(G, P), "rendered": P.render(ascii=args.ascii)})
    else:
        print(P.render(ascii=args.ascii))
        print(f"dense (low to high): {list(P.dense)}")
        print(f"a = {list(P.ak)}")
    return EXIT_OK


def cmd_bc(args) -> int:
    G = read_graph(args.path)
    report = broken_circuits(G, args.max_edges)
    if args.json:
        _emit({
            "n": G.n,
            "m": G.m,
            "broken_circuits": [list(bc) for bc in report.broken_circuits],
            "provenance": [
                {"broken_circuit": list(bc), "cycles": [list(c) for c in report.provenance[bc]]}
                for bc in report.broken_circuits
            ],
        })
    else:
        print(json.dumps([list(bc) for bc in report.broken_circuits]))
        for bc in report.broken_circuits:
            cycles = ", ".join(str(list(c)) for c in report.provenance[bc])
            print(f"  {list(bc)} <- {cycles}")
    return EXIT_OK


def cmd_nbc(args) -> int:
    G = read_graph(args.path)
    subsets = sorted(nbc_subsets(G, args.k, args.max_edges))
    if args.json:
        out = {"n": G.n, "m": G.m, "k": args.k, "count": len(subsets)}
        if args.list:
            out["subsets"] = [list(s) for s in subsets]
        _emit(out)
    else:
        print(len(subsets))
        if args.list:
            for s in subsets:
                print(list(s))
    return EXIT_OK


def verify_report(G, max_edges=None) -> tuple[dict, bool]:
    """The full JSON report for one graph and whether every check held."""
    memo: dict = {}
    P = chromatic_polynomial(G, memo)
    report = broken_circuits(G, max_edges)
    whitney = whitney_check(G, max_edges, memo)
    verdicts = [v for v in check_graph(G, memo) if v.lemma != "WHITNEY"]
    lemmas = []
    for v in verdicts:
        entry = {"lemma": v.lemma, "passed": v.passed, "skipped": v.skipped}
        params = {k: val for k, val in v.instance.items() if k != "graph"}
        if params:
            entry["params"] = params
        if v.skipped:
            entry["reason"] = v.details.get("reason")
        if v.counterexample is not None:
            entry["counterexample"] = v.to_json()["counterexample"]
        lemmas.append(entry)
    ok = whitney.passed and not any(v.failed for v in verdicts)
    out = {
        **_poly_fields(G, P),
        "broken_circuits": [list(bc) for bc in report.broken_circuits],
        "nbc_counts": list(nbc_counts(G, max_edges)),
        "whitney": {
            "pass": whitney.passed,
            "per_k": [{"k": k, "a_k": a, "nbc": c, "equal": eq} for k, a, c, eq in whitney.per_k],
        },
        "lemmas": lemmas,
    }
    return out, ok


def cmd_verify(args) -> int:
    G = read_graph(args.path)
    out, ok = verify_report(G, args.max_edges)
    if args.json:
        _emit(out)
    else:
        print(f"whitney: {'pass' if out['whitney']['pass'] else 'FAIL'}")
        for row in out["whitney"]["per_k"]:
            print(f"  k={row['k']}: a_k={row['a_k']} nbc={row['nbc']}")
        for entry in out["lemmas"]:
            tag = "skip" if entry["skipped"] else ("pass" if entry["passed"] else "FAIL")
            params = " ".join(f"{k}={v}" for k, v in entry.get("params", {}).items())
            print(f"  {entry['lemma']:<4} {tag} {params}".rstrip())
        if not ok:
            failures = [e for e in out["lemmas"] if "counterexample" in e]
            if not out["whitney"]["pass"]:
                failures.insert(0, {"lemma": "WHITNEY", "per_k": out["whitney"]["per_k"]})
            _emit(failures)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_fuzz(args) -> int:
    try:
        cfg = FuzzConfig(args.n_max, args.m_max, args.trials, args.seed, args.allow_loops, args.allow_parallel)
    except ValueError as exc:
        print(f"bctk fuzz: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.workers < 1:
        print("bctk fuzz: --workers must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    summary = run_all_checks(generate_corpus(cfg), workers=args.workers)
    if args.json:
        _emit({
            "config": {
                "n_max": cfg.n_max, "m_max": cfg.m_max, "trials": cfg.trials, "seed": cfg.seed,
                "allow_loops": cfg.allow_loops, "allow_parallel": cfg.allow_parallel,
            },
            **summary.to_json(),
        })
    else:
        print(summary.render())
        if summary.failures:
            _emit([v.to_json() for v in summary.failures])
    return EXIT_OK if summary.failed_total == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bctk", description="Chromatic polynomials and broken circuits.")
    sub = parser.add_subparsers(dest="command", required=True)

    def guarded(p):
        p.add_argument("--max-edges", type=int, default=None,
                       help=f"edge guard for exhaustive enumeration (default {guards.DEFAULT_MAX_EDGES}, "
                            f"cap {guards.HARD_MAX_EDGES}; also ${guards.ENV_VAR})")

    p = sub.add_parser("poly", help="chromatic polynomial")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--ascii", action="store_true", help="write x instead of λ")
    p.add_argument("--cache", action="store_true", help="memoise subproblems by incidence listing")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("bc", help="broken circuits with their generating cycles")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    guarded(p)
    p.set_defaults(func=cmd_bc)

    p = sub.add_parser("nbc", help="count k-subsets including no broken circuit")
    p.add_argument("path")
    p.add_argument("k", type=int)
    p.add_argument("--list", action="store_true")
    p.add_argument("--json", action="store_true")
    guarded(p)
    p.set_defaults(func=cmd_nbc)

    p = sub.add_parser("verify", help="Whitney check plus every applicable lemma check")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    guarded(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="run the lemma suite over a seeded random corpus")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--m-max", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-loops", action="store_true")
    p.add_argument("--allow-parallel", action="store_true")
    p.add_argument("--workers", type=int, default=1, help="worker processes; output does not depend on it")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", 0) < 0:
        parser.error("k must be nonnegative")
    try:
        if hasattr(args, "max_edges"):
            args.max_edges = guards.resolve_max_edges(args.max_edges)
        return args.func(args)
    except GuardExceededError as exc:
        print(f"bctk: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except CoefficientOverflowError as exc:
        print(f"bctk: overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (GraphError, OSError, ValueError) as exc:
        print(f"bctk: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
