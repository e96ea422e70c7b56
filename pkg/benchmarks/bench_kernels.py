#!/usr/bin/env python3
"""Compare the compiled group kernels against the pure-Python fallback.

Runs the subgroup-heavy workloads (subgroup lattice enumeration, dual-route
classification, strength computation) in two subprocesses -- one with the
compiled extension, one with TRACEFORMS_PURE=1 -- and prints a timing table.
Each kernel is repeated and the best wall-clock time is kept.

Usage:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = [
    ("subgroups M64", "subgroups", "M64"),
    ("subgroups SD32", "subgroups", "SD32"),
    ("subgroups metacyclic-256", "subgroups", "metacyclic-256"),
    ("classify m=3 M64", "classify", "M64"),
    ("classify m=3 metacyclic-256", "classify", "metacyclic-256"),
    ("strength metacyclic-256", "strength", "metacyclic-256"),
]


def run_workloads(repeat: int) -> dict:
    from traceforms import classify_two_group, strength
    from traceforms.corpus import corpus_entry
    from traceforms.groups import BACKEND, build_group
    from traceforms.groups.subgroups import all_subgroups

    def fresh(name):
        # bypass corpus caching so every timing starts from a bare table
        return build_group(corpus_entry(name).spec)

    kernels = {
        "subgroups": lambda g: len(all_subgroups(g)),
        "classify": lambda g: classify_two_group(g, 3).subgroup_condition,
        "strength": strength,
    }
    timings = {}
    for label, kind, name in WORKLOADS:
        best = None
        result = None
        for _ in range(repeat):
            group = fresh(name)
            start = time.perf_counter()
            result = kernels[kind](group)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None or elapsed < best else best
        timings[label] = {"seconds": best, "result": repr(result)}
    return {"backend": BACKEND, "timings": timings}


def spawn(pure: bool, repeat: int) -> dict:
    env = dict(os.environ, TRACEFORMS_PURE="1" if pure else "0")
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker", "--repeat", str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.worker:
        json.dump(run_workloads(args.repeat), sys.stdout)
        return 0

    compiled = spawn(pure=False, repeat=args.repeat)
    pure = spawn(pure=True, repeat=args.repeat)
    if compiled["backend"] != "compiled":
        print("note: compiled extension unavailable; comparing pure vs pure")

    width = max(len(label) for label, *_ in WORKLOADS)
    print(f"{'workload':<{width}}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}")
    for label, *_ in WORKLOADS:
        c = compiled["timings"][label]
        p = pure["timings"][label]
        if c["result"] != p["result"]:
            print(f"{label:<{width}}  BACKENDS DISAGREE: {c['result']} vs {p['result']}")
            return 1
        ratio = p["seconds"] / c["seconds"] if c["seconds"] > 0 else float("inf")
        print(
            f"{label:<{width}}  {c['seconds']:>9.4f}s  {p['seconds']:>9.4f}s  {ratio:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
