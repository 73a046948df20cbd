"""Solution terms built from rewriting derivations, and shape classification.

Open terms are written under the level-``m`` binder convention of
``gadgets.GammaEnv``: ``pm`` is at distance 0, ``p1`` at ``m-1``, then
``z*`` at ``m``, ``z1`` at ``m+1``, ``z0`` at ``m+2`` and ``rL .. r1``
further out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import InvalidWitness, StepOutOfRange
from .gadgets import BULLET, DOLLAR, ExtSymbol, position_gadget
from .ssts import Ssts, Step, check_derivation, ones, zeros
from .terms import App, Lam, Term, Var, apply, lams, spine


def p_index(j: int, m: int) -> int:
    return m - j


def z_star_index(m: int) -> int:
    return m


def z_one_index(m: int) -> int:
    return m + 1


def z_zero_index(m: int) -> int:
    return m + 2


def r_index(i: int, m: int, L: int) -> int:
    return m + 3 + L - i


def q_term(system: Ssts, derivation: Sequence[Step], m: int) -> Term:
    """``r_i1 p_j1 (r_i2 p_j2 (... z1))``, first step outermost."""
    L = system.L
    for i, j in derivation:
        if not 1 <= i <= L:
            raise StepOutOfRange(f"rule {i} outside 1..{L}")
        if not 1 <= j <= m:
            raise StepOutOfRange(f"position {j} outside 1..{m}")
    term: Term = Var(z_one_index(m))
    for i, j in reversed(derivation):
        term = apply(Var(r_index(i, m, L)), Var(p_index(j, m)), term)
    return term


def r_term(n: int, q: Term) -> Term:
    """``z* p1 (\\p2. z* p2 (\\p3. ... z0 pn q))`` at level 1.

    ``q`` must be written at level ``n``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    term = apply(Var(z_zero_index(n)), Var(p_index(n, n)), q)
    for k in range(n - 1, 0, -1):
        term = apply(Var(z_star_index(k)), Var(p_index(k, k)), Lam(term))
    return term


def expansion_layers(n: int, q: Term) -> list[Term]:
    """``[M1, ..., Mn]`` where ``Mk`` is the subterm of ``r_term`` at level k."""
    out = [apply(Var(z_zero_index(n)), Var(p_index(n, n)), q)]
    for k in range(n - 1, 0, -1):
        out.append(apply(Var(z_star_index(k)), Var(p_index(k, k)), Lam(out[-1])))
    return out[::-1]


def close_level1(system: Ssts, body: Term) -> Term:
    """Bind ``r1..rL z0 z1 z* p1`` around a level-1 body."""
    return lams(system.L + 4, body)


def solution_term(system: Ssts, n: int, derivation: Sequence[Step]) -> Term:
    """A closed solution of the compiled instance from ``0^(n+1) =>* 1^(n+1)``."""
    if n < 1 or not check_derivation(system, zeros(n + 1), derivation, ones(n + 1)):
        raise InvalidWitness(f"derivation does not rewrite 0^{n + 1} to 1^{n + 1}")
    return close_level1(system, r_term(n, q_term(system, derivation, n)))


# --------------------------------------------------------------------------
# shape classification


@dataclass(frozen=True)
class InQ:
    m: int


@dataclass(frozen=True)
class InR:
    m: int


@dataclass(frozen=True)
class Neither:
    pass


ShapeClass = Union[InQ, InR, Neither]


def _is_position(t: Term, m: int) -> bool:
    if isinstance(t, Var):
        return t.index < m
    # eta-expanded form \w. pj w
    return (isinstance(t, Lam) and isinstance(t.body, App)
            and t.body.arg == Var(0)
            and isinstance(t.body.fn, Var) and 1 <= t.body.fn.index <= m)


def in_q(term: Term, m: int, L: int) -> bool:
    while True:
        if term == Var(z_one_index(m)):
            return True
        head, args = spine(term)
        if not (isinstance(head, Var) and len(args) == 2):
            return False
        if not m + 3 <= head.index <= m + 2 + L:
            return False
        if not _is_position(args[0], m):
            return False
        term = args[1]


def in_r(term: Term, m: int, L: int) -> bool:
    while True:
        head, args = spine(term)
        if not (isinstance(head, Var) and len(args) == 2):
            return False
        if head.index == z_zero_index(m):
            return in_q(args[1], m, L)
        if head.index == z_star_index(m) and isinstance(args[1], Lam):
            term, m = args[1].body, m + 1
            continue
        return False


def classify_shape(term: Term, m: int, L: int) -> ShapeClass:
    if in_q(term, m, L):
        return InQ(m)
    if in_r(term, m, L):
        return InR(m)
    return Neither()


# --------------------------------------------------------------------------
# evaluation rows


@dataclass(frozen=True)
class Row:
    """One semantic check: feed ``delta_{assignment[j-1]}`` to ``pj``."""

    assignment: tuple[ExtSymbol, ...]
    expected: ExtSymbol


def _pattern(m: int, i: int) -> tuple[ExtSymbol, ...]:
    return tuple(position_gadget(j, i).symbol for j in range(1, m + 1))


def q_rows(m: int, start: Sequence[int] | None = None) -> list[Row]:
    """Rows ``i = 0..m+1`` for a rewriting term at level m.

    Row 0 reads ``1`` (the final word is all ones); row ``i`` reads the
    ``i``-th symbol of the start word, ``0`` by default.
    """
    start = tuple(start) if start is not None else zeros(m + 1)
    return [Row(_pattern(m, 0), 1)] + [Row(_pattern(m, i), start[i - 1]) for i in range(1, m + 2)]


def r_rows(k: int) -> list[Row]:
    """Rows for the expansion term at level k: ``$``, then ``0`` x k, then ``1``."""
    rows = [Row(_pattern(k, 0), DOLLAR)]
    rows += [Row(_pattern(k, i), 0) for i in range(1, k + 1)]
    rows.append(Row(_pattern(k, k + 1), 1))
    return rows
