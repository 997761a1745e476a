"""Print a_k next to NBC k-subset counts for a few named graphs.

    python scripts/coefficient_table.py [--max-n 6]
"""

import argparse
from itertools import combinations

from bctk import build_graph, whitney_check


def complete(n):
    return build_graph(n, [{u, v} for u, v in combinations(range(n), 2)])


def cycle(n):
    return build_graph(n, [{i, (i + 1) % n} for i in range(n)])


def wheel(n):
    rim = [{i, (i + 1) % n} for i in range(n)]
    return build_graph(n + 1, rim + [{i, n} for i in range(n)])


def petersen():
    outer = [{i, (i + 1) % 5} for i in range(5)]
    spokes = [{i, i + 5} for i in range(5)]
    inner = [{5 + i, 5 + (i + 2) % 5} for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()

    named = []
    for n in range(2, args.max_n + 1):
        named.append((f"K{n}", complete(n)))
    for n in range(3, args.max_n + 1):
        named.append((f"C{n}", cycle(n)))
    for n in range(3, args.max_n):
        named.append((f"W{n}", wheel(n)))
    named.append(("Petersen", petersen()))

    for name, G in named:
        report = whitney_check(G)
        status = "ok" if report.passed else "MISMATCH"
        print(f"{name:<9} n={G.n:<2} m={G.m:<2} a={list(report.ak)}  nbc={list(report.nbc)}  {status}")


if __name__ == "__main__":
    main()
