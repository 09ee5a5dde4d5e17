#!/usr/bin/env python3
"""Run every verification suite and print a per-claim summary.

Usage: python scripts/run_verification.py [--json OUT.json]
Exits nonzero if any claim fails.
"""

import argparse
import json
import sys
import time

import complementa as ca


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", help="also dump all reports to this path")
    args = parser.parse_args()

    t0 = time.perf_counter()
    reports = ca.run_catalog_suite()
    elapsed = time.perf_counter() - t0

    counts = ca.summarize(reports)
    for r in reports:
        if r.status != "pass":
            marker = "SKIP" if r.status == "skipped" else "FAIL"
            print(f"{marker}  {r.claim}  {r.witnesses[:1]}")
    print(f"\n{counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['skipped']} skipped in {elapsed:.1f}s "
          f"({len(ca.catalog())} catalog groups)")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(ca.reports_to_dicts(reports), fh, indent=2)
        print(f"reports written to {args.json}")
    return 1 if counts["fail"] else 0


if __name__ == "__main__":
    sys.exit(main())
