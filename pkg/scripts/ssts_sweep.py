"""Sweep every system of one or two rules over {0, 1, 2}.

For each system, find the smallest word length n <= --max-n with
0^n =>* 1^n, and check that the witness survives the full reduction
(compile, build the solution term, verify) for the first few hits.

    python3 scripts/ssts_sweep.py --max-n 6 --verify 10
"""

from __future__ import annotations

import argparse
import itertools
import time
from collections import Counter

from betamatch.reduction import compile_system
from betamatch.ssts import Rule, Ssts, search_zero_one
from betamatch.verifier import Ok, verify_solution
from betamatch.witness import solution_term


def systems(alphabet: int, max_rules: int):
    rules = [Rule(*s) for s in itertools.product(range(alphabet), repeat=4) if s[:2] != s[2:]]
    for k in range(1, max_rules + 1):
        for combo in itertools.combinations(rules, k):
            yield Ssts(alphabet, combo)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alphabet", type=int, default=3)
    ap.add_argument("--max-rules", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--verify", type=int, default=10, help="round-trip this many positive systems")
    args = ap.parse_args()

    start = time.perf_counter()
    lengths: Counter = Counter()
    verified = 0
    for s in systems(args.alphabet, args.max_rules):
        hit = search_zero_one(s, args.max_n)
        lengths[hit[0] if hit else None] += 1
        # solution terms need n >= 1, so only word lengths of at least 2 qualify
        if hit and hit[0] >= 2 and verified < args.verify:
            n, d = hit
            verdict = verify_solution(compile_system(s), solution_term(s, n - 1, d))
            assert verdict == Ok(), (s, verdict)
            verified += 1
    total = sum(lengths.values())
    print(f"{total} systems, alphabet {args.alphabet}, up to {args.max_rules} rules")
    for n in sorted(k for k in lengths if k is not None):
        print(f"  shortest n = {n}: {lengths[n]}")
    print(f"  none for n <= {args.max_n}: {lengths[None]}")
    print(f"round trips verified: {verified}")
    print(f"elapsed {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
