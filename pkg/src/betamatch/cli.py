"""Command-line front end.

Exit codes: 0 found/verified/derivable, 1 not found or failed, 2 usage or
parse error, 3 budget or fuel exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import (
    BetaMatchError,
    BudgetExceeded,
    InvalidWitness,
    ParseError,
    ResourceLimit,
    StepOutOfRange,
    TypingError,
)
from .itypes import format_judgment, itype_derivable, witness_judgments
from .reduction import MatchingInstance, compile_system
from .solver import EnumBudget, SearchStats, solve_bounded
from .ssts import Ssts, decide_for_n, run_derivation, search_zero_one, zeros
from .syntax import (
    format_word,
    free_names,
    parse_ssts,
    parse_term,
    parse_type,
    print_term,
    print_type,
    read_term,
    to_nameless,
)
from .terms import Normal, normalize, type_check, type_infer
from .verifier import Ok, TypeFail, Undetermined, diagnose, verify_solution
from .witness import solution_term

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


# --------------------------------------------------------------------------
# instance documents


def instance_to_json(inst: MatchingInstance) -> str:
    doc = {
        "sigma": print_type(inst.sigma),
        "tau": print_type(inst.tau),
        "F": print_term(inst.F),
        "N": print_term(inst.N),
        "rules": [f"{r.a} {r.b} => {r.c} {r.d}" for r in inst.rules or ()],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def instance_from_json(text: str) -> MatchingInstance:
    try:
        doc = json.loads(text)
        fields = {k: doc[k] for k in ("sigma", "tau", "F", "N")}
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad instance document: {exc}", 0) from exc
    rules = None
    if doc.get("rules"):
        rules = parse_ssts("\n".join(doc["rules"])).rules
    return MatchingInstance(read_term(fields["F"]), read_term(fields["N"]),
                            parse_type(fields["sigma"]), parse_type(fields["tau"]), rules)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _read_steps(path: str) -> list[tuple[int, int]]:
    steps = []
    for lineno, raw in enumerate(_read(path).splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) != 2 or not all(x.isdigit() for x in line):
            raise ParseError("expected 'rule position'", 1, line=lineno)
        steps.append((int(line[0]), int(line[1])))
    return steps


def _witness_steps(system: Ssts, n: int, steps_file: Optional[str]):
    if steps_file is not None:
        return _read_steps(steps_file)
    d = decide_for_n(system, n + 1)
    if d is None:
        return None
    return list(d)


# --------------------------------------------------------------------------
# commands


def cmd_ssts_search(args) -> int:
    system = parse_ssts(_read(args.file))
    found = search_zero_one(system, args.max_n)
    if found is None:
        print(f"none for n <= {args.max_n}")
        return EXIT_FAIL
    n, d = found
    print(f"n = {n}")
    words = run_derivation(system, zeros(n), d)
    print(format_word(words[0]))
    for (i, j), w in zip(d, words[1:]):
        print(f"{format_word(w)}  rule {i} at {j}")
    return EXIT_OK


def cmd_compile(args) -> int:
    inst = compile_system(parse_ssts(_read(args.file)))
    text = instance_to_json(inst)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_witness(args) -> int:
    system = parse_ssts(_read(args.file))
    steps = _witness_steps(system, args.n, args.steps)
    if steps is None:
        print(f"no derivation of 0^{args.n + 1} =>* 1^{args.n + 1}")
        return EXIT_FAIL
    print(print_term(solution_term(system, args.n, steps)))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = instance_from_json(_read(args.instance))
    verdict = verify_solution(inst, read_term(_read(args.term)), args.fuel)
    if isinstance(verdict, Ok):
        print("ok")
        return EXIT_OK
    if isinstance(verdict, Undetermined):
        print(f"undetermined: fuel {verdict.fuel} exhausted")
        return EXIT_BUDGET
    kind = "type error" if isinstance(verdict, TypeFail) else "not equivalent"
    print(f"{kind}: {verdict.detail}")
    return EXIT_FAIL


def cmd_diagnose(args) -> int:
    system = parse_ssts(_read(args.file))
    try:
        diag = diagnose(system, read_term(_read(args.term)), args.fuel)
    except TypingError as exc:
        print(f"type error: {exc}")
        return EXIT_FAIL
    for row in diag.rows:
        mark = {True: "pass", False: "FAIL", None: "undetermined"}[row.passed]
        print(f"{row.label}: {mark}")
        if row.passed is not True:
            print(f"  left:  {print_term(row.left)}")
            print(f"  right: {print_term(row.right)}")
    if diag.all_pass:
        return EXIT_OK
    return EXIT_BUDGET if any(r.passed is None for r in diag.rows) else EXIT_FAIL


def cmd_solve(args) -> int:
    inst = instance_from_json(_read(args.instance))
    budget = EnumBudget(max_size=args.max_size, max_count=args.max_count, fuel=args.fuel)
    stats = SearchStats()
    found = solve_bounded(inst, budget, stats)
    if found is None:
        print(f"none up to size {args.max_size} ({stats.enumerated} candidates, full coverage)")
        return EXIT_FAIL
    print(print_term(found))
    print(f"# after {stats.enumerated} candidates")
    return EXIT_OK


def cmd_normalize(args) -> int:
    named = parse_term(_read(args.term))
    free = free_names(named)
    res = normalize(to_nameless(named, free), args.fuel)
    if isinstance(res, Normal):
        print(print_term(res.term, args.style, free))
        print(f"# {res.steps} steps")
        return EXIT_OK
    print(print_term(res.partial, args.style, free))
    print(f"# fuel exhausted after {res.steps} steps")
    return EXIT_BUDGET


def cmd_typecheck(args) -> int:
    term = read_term(_read(args.term))
    if args.type is not None:
        ok = type_check([], term, parse_type(args.type))
        print("ok" if ok else "type error")
        return EXIT_OK if ok else EXIT_FAIL
    t = type_infer([], term)
    if t is None:
        print("untypable")
        return EXIT_FAIL
    print(print_type(t))
    return EXIT_OK


def cmd_itype(args) -> int:
    system = parse_ssts(_read(args.file))
    steps = _witness_steps(system, args.n, args.steps)
    if steps is None:
        print(f"no derivation of 0^{args.n + 1} =>* 1^{args.n + 1}")
        return EXIT_FAIL
    all_ok = True
    for j in witness_judgments(system, args.n, steps):
        ok = itype_derivable(j)
        all_ok &= ok
        m = len(j.env) - system.L - 3
        print(f"{'yes' if ok else 'no '} {j.label}: {format_judgment(j, m, system.L)}")
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="betamatch", description="Simple semi-Thue systems as higher-order beta-matching.")
    sub = p.add_subparsers(dest="command", required=True)

    ssts = sub.add_parser("ssts", help="rewriting system tools")
    ssub = ssts.add_subparsers(dest="ssts_command", required=True)
    s = ssub.add_parser("search", help="smallest n with 0^n =>* 1^n")
    s.add_argument("file")
    s.add_argument("--max-n", type=int, required=True)
    s.set_defaults(func=cmd_ssts_search)

    s = sub.add_parser("compile", help="compile a rule file into a matching instance")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("witness", help="solution term for 0^(n+1) =>* 1^(n+1)")
    s.add_argument("file")
    s.add_argument("--n", type=int, required=True, help="words have length n+1")
    s.add_argument("--steps", help="file of 'rule position' lines")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("verify", help="check a candidate against an instance")
    s.add_argument("instance")
    s.add_argument("term")
    s.add_argument("--fuel", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("diagnose", help="per-constraint report for a candidate")
    s.add_argument("file")
    s.add_argument("term")
    s.add_argument("--fuel", type=int)
    s.set_defaults(func=cmd_diagnose)

    s = sub.add_parser("solve", help="bounded search for a solution")
    s.add_argument("instance")
    s.add_argument("--max-size", type=int, default=24)
    s.add_argument("--max-count", type=int, default=1_000_000)
    s.add_argument("--fuel", type=int, default=1_000_000)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("normalize", help="normal form of a term")
    s.add_argument("term")
    s.add_argument("--fuel", type=int, default=1_000_000)
    s.add_argument("--style", choices=("named", "indexed"), default="named")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("typecheck", help="infer or check a simple type")
    s.add_argument("term")
    s.add_argument("--type")
    s.set_defaults(func=cmd_typecheck)

    s = sub.add_parser("itype", help="emit and check the intersection judgments of a witness")
    s.add_argument("file")
    s.add_argument("--n", type=int, required=True, help="words have length n+1")
    s.add_argument("--steps")
    s.set_defaults(func=cmd_itype)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (BudgetExceeded, ResourceLimit) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidWitness, StepOutOfRange) as exc:
        print(f"invalid witness: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (BetaMatchError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
