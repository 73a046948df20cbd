"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from betamatch.ssts import Rule, Ssts
from betamatch.terms import IOTA, App, Arrow, Lam, Term, Var

O = IOTA
OO = Arrow(O, O)

# free context for generated open terms: index 0 : o, index 1 : o -> o
BASE_CTX = (O, OO)


@pytest.fixture
def three_rule() -> Ssts:
    return Ssts.of("00=>22", "02=>11", "20=>11")


@pytest.fixture
def single_rule() -> Ssts:
    return Ssts.of("00=>11")


@pytest.fixture
def negative() -> Ssts:
    return Ssts.of("00=>10", "01=>11")


# --------------------------------------------------------------------------
# types and terms


def random_type(rnd: random.Random, depth: int = 2):
    if depth == 0 or rnd.random() < 0.45:
        return O
    return Arrow(random_type(rnd, depth - 1), random_type(rnd, depth - 1))


def random_typed_term(rnd: random.Random, ctx: tuple, ty, depth: int) -> Term:
    """A term of type ``ty`` in ``ctx``; redexes arise from the application case."""
    options = []
    vars_ = [k for k, t in enumerate(ctx) if t == ty]
    if vars_:
        options += ["var"] * 2
    if isinstance(ty, Arrow):
        options += ["lam"] * 2
    if depth > 0:
        options.append("app")
    if not options:
        return Var(ctx.index(O))
    choice = rnd.choice(options)
    if choice == "var":
        return Var(rnd.choice(vars_))
    if choice == "lam":
        return Lam(random_typed_term(rnd, (ty.dom, *ctx), ty.cod, max(depth - 1, 0)))
    arg_ty = random_type(rnd, 1)
    fn = random_typed_term(rnd, ctx, Arrow(arg_ty, ty), depth - 1)
    return App(fn, random_typed_term(rnd, ctx, arg_ty, depth - 1))


def typed_terms(ctx=BASE_CTX, depth: int = 5) -> st.SearchStrategy:
    """``(ctx, term, type)`` with ``ctx |- term : type``, built from a drawn seed."""

    def build(seed: int):
        rnd = random.Random(seed)
        ty = random_type(rnd)
        return ctx, random_typed_term(rnd, ctx, ty, depth), ty

    return st.integers(0, 2**32 - 1).map(build)


def raw_terms(free: int = 2, max_leaves: int = 12) -> st.SearchStrategy:
    """Arbitrary (possibly ill-typed) terms with at most ``free`` free indices."""

    def extend(inner):
        return st.one_of(st.builds(App, inner, inner), st.builds(Lam, inner))

    return st.recursive(st.integers(0, free + 3).map(Var), extend, max_leaves=max_leaves)


def redex_positions(t: Term, path: tuple = ()) -> list[tuple]:
    out = []
    if isinstance(t, App):
        if isinstance(t.fn, Lam):
            out.append(path)
        out += redex_positions(t.fn, path + ("fn",))
        out += redex_positions(t.arg, path + ("arg",))
    elif isinstance(t, Lam):
        out += redex_positions(t.body, path + ("body",))
    return out


def contract_at(t: Term, path: tuple) -> Term:
    from betamatch.terms import substitute

    if not path:
        return substitute(t.fn.body, 0, t.arg)
    head, rest = path[0], path[1:]
    if head == "fn":
        return App(contract_at(t.fn, rest), t.arg)
    if head == "arg":
        return App(t.fn, contract_at(t.arg, rest))
    return Lam(contract_at(t.body, rest))


# --------------------------------------------------------------------------
# rewriting systems


@st.composite
def small_systems(draw, max_symbol: int = 2, max_rules: int = 3) -> Ssts:
    sym = st.integers(0, max_symbol)
    rules = draw(st.lists(st.tuples(sym, sym, sym, sym), min_size=1, max_size=max_rules, unique=True))
    k = max(2, 1 + max(max(r) for r in rules))
    return Ssts(k, tuple(Rule(*r) for r in rules))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: s[16:18]):
            terminalreporter.write_line(line)
