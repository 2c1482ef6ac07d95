#!/usr/bin/env python3
"""Run the full degree-6 classification reproduction and print the summary.

Equivalent to `srsg verify-classification --degree 6 --fixtures fixtures`,
plus a short human-readable digest of every search it ran.
"""

from __future__ import annotations

import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from srsg.verify import run_verification

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def main() -> int:
    jobs = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    t0 = time.perf_counter()
    result = run_verification(FIXTURES, jobs=jobs)
    dt = time.perf_counter() - t0

    for key, t in result["theorems"].items():
        mark = "ok " if t["pass"] else "FAIL"
        print(f"[{mark}] {key}: {t['found_total']} classes (expected {t['expected_total']})")
        for c in t["checks"]:
            mark = "ok " if c["pass"] else "FAIL"
            print(f"    [{mark}] {c['search']}: expected {c['expected']}, found {c['found']}")
        for cls in t["classes"]:
            p = cls["params"]
            print(f"    class {cls['label']}: ({p['n']},{p['r']},{p['a']},{p['b']},{p['c']}) in {cls['class']}")
    print(f"\nsummary: {json.dumps(result['summary'], sort_keys=True)}  ({dt:.1f}s)")
    return 0 if result["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
