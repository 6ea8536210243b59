#!/usr/bin/env python3
"""Run every verification suite at full trial counts and print the report.

Usage: python3 scripts/run_full_verification.py [--seed N] [--trials N]
Exit code 0 iff no suite reported a failure.
"""

import argparse
import sys

from bcpoly.verify import SUITE_NAMES, report_to_json, run_suites


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=None, help="override per-suite defaults")
    parser.add_argument("--max-degree", type=int, default=4)
    parser.add_argument("--coeff-bound", type=int, default=9)
    args = parser.parse_args()

    results = run_suites(
        SUITE_NAMES,
        trials=args.trials,
        seed=args.seed,
        max_degree=args.max_degree,
        coeff_bound=args.coeff_bound,
    )
    print(report_to_json(results, indent=2))
    failures = sum(result.failures for result in results)
    print(f"\n{'PASS' if failures == 0 else 'FAIL'}: {failures} failures across {len(results)} suites", file=sys.stderr)
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
