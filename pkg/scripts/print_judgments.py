"""Print the intersection-type judgments that mirror a witness.

Each line shows whether the judgment is derivable, next to the row
evaluation by normalization, which it should agree with.

    python3 scripts/print_judgments.py
    python3 scripts/print_judgments.py rules.txt --n 2
"""

from __future__ import annotations

import argparse
from pathlib import Path

from betamatch.itypes import format_judgment, itype_derivable, witness_judgments
from betamatch.ssts import Ssts, decide_for_n
from betamatch.syntax import parse_ssts
from betamatch.verifier import evaluate_rows
from betamatch.witness import expansion_layers, q_rows, q_term, r_rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("rules", nargs="?", type=Path)
    ap.add_argument("--n", type=int, default=3, help="words have length n + 1")
    args = ap.parse_args()

    system = parse_ssts(args.rules.read_text()) if args.rules else Ssts.of("00=>22", "02=>11", "20=>11")
    n = args.n
    d = decide_for_n(system, n + 1)
    if d is None:
        raise SystemExit(f"no derivation of length {n + 1}")
    q = q_term(system, d, n)
    rows = evaluate_rows(system, q, n, q_rows(n))
    layers = expansion_layers(n, q)
    for k in range(n, 0, -1):
        rows += evaluate_rows(system, layers[k - 1], k, r_rows(k))
    js = witness_judgments(system, n, d)
    agree = 0
    for j, row in zip(js, rows):
        ok = itype_derivable(j)
        agree += ok == row.holds
        print(f"{'yes' if ok else 'no ':3}  eval={row.actual!s:2}  {j.label}: {format_judgment(j, j_level(j, n), system.L)}")
    print(f"{agree}/{len(js)} judgments agree with evaluation")


def j_level(j, n: int) -> int:
    # Q-part judgments live at level n; "Mk (i)" at level k
    head = j.label.split()[0]
    return int(head[1:]) if head.startswith("M") else n


if __name__ == "__main__":
    main()
