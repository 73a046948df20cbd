"""Exhaustive bounded search on a compiled instance, size by size.

Prints, for each size bound, how many normal inhabitants of sigma exist
and whether a solution was found. Without a rules file the negative
system {00=>10, 01=>11} is used, which has no solution at any bound.

    python3 scripts/solver_coverage.py --max-size 20
    python3 scripts/solver_coverage.py rules.txt --max-size 16
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from betamatch.reduction import compile_system
from betamatch.solver import EnumBudget, Enumerator, SearchStats, solve_bounded
from betamatch.ssts import Ssts
from betamatch.syntax import parse_ssts, print_term


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("rules", nargs="?", type=Path)
    ap.add_argument("--max-size", type=int, default=20)
    args = ap.parse_args()

    system = parse_ssts(args.rules.read_text()) if args.rules else Ssts.of("00=>10", "01=>11")
    inst = compile_system(system)
    enum = Enumerator()
    print(f"rules: {', '.join(map(str, system.rules))}")
    print(f"{'size':>4} {'new terms':>10} {'total':>10} {'seconds':>8}  result")
    total = 0
    for s in range(1, args.max_size + 1):
        new = enum.count((), inst.sigma, s)
        total += new
        if not new:
            continue
        t0 = time.perf_counter()
        stats = SearchStats()
        found = solve_bounded(inst, EnumBudget(max_size=s, max_count=10**9), stats)
        dt = time.perf_counter() - t0
        result = print_term(found) if found else f"none ({stats.enumerated} checked, {stats.undetermined} undetermined)"
        print(f"{s:>4} {new:>10} {total:>10} {dt:>8.1f}  {result}")
        if found:
            break


if __name__ == "__main__":
    main()
