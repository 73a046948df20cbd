"""Compile a simple semi-Thue system into a beta-matching instance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import TypingError
from .gadgets import DOLLAR, argument_bundles, kappa, pi, sigma_type
from .ssts import Rule, Ssts
from .terms import (
    IOTA,
    Arrow,
    Lam,
    SimpleType,
    Term,
    Var,
    apply,
    arrows,
    is_normal,
    shift,
    type_check,
)

LABELS = ("F-line", "H-line", "G•-line", "G1-line", "G0-line")


@dataclass(frozen=True)
class MatchingInstance:
    """Find ``M : sigma`` with ``F M =β N``, given ``F : sigma -> tau`` and ``N : tau``."""

    F: Term
    N: Term
    sigma: SimpleType
    tau: SimpleType
    rules: Optional[tuple[Rule, ...]] = None

    def check(self) -> None:
        """Raise ``TypingError`` unless the typing invariants hold."""
        if not type_check([], self.F, Arrow(self.sigma, self.tau)):
            raise TypingError("F does not have type sigma -> tau")
        if not type_check([], self.N, self.tau):
            raise TypingError("N does not have type tau")


@dataclass(frozen=True)
class ConstraintPair:
    left: Term
    right: Term
    label: str


def tau_type(alphabet_size: int) -> SimpleType:
    k = kappa(alphabet_size)
    y = arrows(Arrow(k, k), k, k, k, k, IOTA)
    return Arrow(y, IOTA)


def compile_system(system: Ssts) -> MatchingInstance:
    n = system.alphabet_size
    b = argument_bundles(system)
    x, y = Var(1), Var(0)
    # under the extra binder for u, x sits one level further out
    f_row = Lam(apply(Var(2), *b.f))
    rows = [f_row] + [apply(x, *bundle) for bundle in (b.h, b.g_bullet, b.g_one, b.g_zero)]
    F = Lam(Lam(apply(y, *rows)))
    N = Lam(apply(Var(0), Lam(Var(0)), pi(DOLLAR, n), pi(DOLLAR, n), pi(0, n), pi(1, n)))
    inst = MatchingInstance(F, N, sigma_type(system), tau_type(n), system.rules)
    assert is_normal(F) and is_normal(N)
    return inst


def constraint_pairs(system: Ssts, candidate: Term) -> list[ConstraintPair]:
    """The five closed equations equivalent to ``F candidate =β N``.

    The first one is closed over ``u`` on both sides.
    """
    n = system.alphabet_size
    if not type_check([], candidate, sigma_type(system)):
        raise TypingError("candidate does not have the compiled solution type")
    b = argument_bundles(system)
    return [
        ConstraintPair(Lam(apply(shift(candidate, 1), *b.f)), Lam(Var(0)), LABELS[0]),
        ConstraintPair(apply(candidate, *b.h), pi(DOLLAR, n), LABELS[1]),
        ConstraintPair(apply(candidate, *b.g_bullet), pi(DOLLAR, n), LABELS[2]),
        ConstraintPair(apply(candidate, *b.g_one), pi(0, n), LABELS[3]),
        ConstraintPair(apply(candidate, *b.g_zero), pi(1, n), LABELS[4]),
    ]
