"""Run every lemma check over all incidence-distinct graphs up to a size bound.

    python scripts/sweep_exhaustive.py --n-max 5 --m-max 7 [--simple-only] [--workers 4]
"""

import argparse
import json
import time

from bctk.corpus import exhaustive_corpus, exhaustive_size
from bctk.lemmas import run_all_checks


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--m-max", type=int, default=7)
    parser.add_argument("--simple-only", action="store_true")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    loops = parallel = not args.simple_only
    total = exhaustive_size(args.n_max, args.m_max, loops, parallel)
    start = time.perf_counter()
    summary = run_all_checks(exhaustive_corpus(args.n_max, args.m_max, loops, parallel), workers=args.workers)
    elapsed = time.perf_counter() - start
    if args.json:
        print(json.dumps(summary.to_json(), indent=2))
    else:
        print(summary.render())
        print(f"({total} graphs expected, {elapsed:.1f}s)")
    raise SystemExit(0 if summary.failed_total == 0 else 1)


if __name__ == "__main__":
    main()
