"""Checking candidate solutions of matching instances."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .gadgets import ExtSymbol, delta, g_substitution, read_projection
from .reduction import MatchingInstance, constraint_pairs
from .ssts import Ssts
from .terms import App, Normal, Term, apply, lams, normalize, size, type_check
from .witness import Row


@dataclass(frozen=True)
class Ok:
    pass


@dataclass(frozen=True)
class TypeFail:
    detail: str


@dataclass(frozen=True)
class EquivFail:
    detail: str


@dataclass(frozen=True)
class Undetermined:
    fuel: int


Verdict = Union[Ok, TypeFail, EquivFail, Undetermined]


def default_fuel(*terms: Term) -> int:
    out = 1000
    for t in terms:
        out *= size(t)
    return out


def verify_solution(instance: MatchingInstance, candidate: Term, fuel: Optional[int] = None) -> Verdict:
    if fuel is None:
        fuel = default_fuel(instance.F, candidate)
    if not type_check([], candidate, instance.sigma):
        return TypeFail("candidate does not have the solution type sigma")
    lhs = normalize(App(instance.F, candidate), fuel)
    rhs = normalize(instance.N, fuel)
    if not (isinstance(lhs, Normal) and isinstance(rhs, Normal)):
        return Undetermined(fuel)
    if lhs.term != rhs.term:
        return EquivFail("F M and N have different normal forms")
    return Ok()


@dataclass(frozen=True)
class DiagnosticRow:
    label: str
    passed: Optional[bool]
    left: Term
    right: Term


@dataclass(frozen=True)
class Diagnosis:
    rows: tuple[DiagnosticRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.passed is True for r in self.rows)

    def row(self, label: str) -> DiagnosticRow:
        return next(r for r in self.rows if r.label == label)


def diagnose(system: Ssts, candidate: Term, fuel: Optional[int] = None) -> Diagnosis:
    """Evaluate the five constraint rows; raises ``TypingError`` if ill-typed.

    ``left``/``right`` hold normal forms, or the partially reduced term when
    fuel ran out (``passed`` is then None).
    """
    rows = []
    for pair in constraint_pairs(system, candidate):
        f = fuel if fuel is not None else default_fuel(pair.left)
        lhs, rhs = normalize(pair.left, f), normalize(pair.right, f)
        if isinstance(lhs, Normal) and isinstance(rhs, Normal):
            rows.append(DiagnosticRow(pair.label, lhs.term == rhs.term, lhs.term, rhs.term))
        else:
            left = lhs.term if isinstance(lhs, Normal) else lhs.partial
            right = rhs.term if isinstance(rhs, Normal) else rhs.partial
            rows.append(DiagnosticRow(pair.label, None, left, right))
    return Diagnosis(tuple(rows))


# --------------------------------------------------------------------------
# semantic evaluation of open terms


def evaluate_open(system: Ssts, term: Term, m: int, assignment: Sequence[ExtSymbol],
                  fuel: int = 1_000_000) -> Term:
    """Normal form of the semantic substitution applied to a level-m term.

    ``r_i, z0, z1, z*`` receive their semantic gadgets and ``pj`` receives
    ``delta_{assignment[j-1]}``.
    """
    if len(assignment) != m:
        raise ValueError(f"need {m} position symbols, got {len(assignment)}")
    n = system.alphabet_size
    closed = lams(system.L + 3 + m, term)
    args = (*g_substitution(system), *[delta(x, n) for x in assignment])
    res = normalize(apply(closed, *args), fuel)
    if not isinstance(res, Normal):
        raise RuntimeError("fuel exhausted while evaluating a typed term")
    return res.term


@dataclass(frozen=True)
class RowResult:
    row: Row
    actual: Optional[ExtSymbol]

    @property
    def holds(self) -> bool:
        return self.actual == self.row.expected


def evaluate_rows(system: Ssts, term: Term, m: int, rows: Sequence[Row]) -> list[RowResult]:
    n = system.alphabet_size
    return [RowResult(r, read_projection(evaluate_open(system, term, m, r.assignment), n)) for r in rows]
