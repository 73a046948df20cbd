import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betamatch.errors import (
    DegenerateSystem,
    PositionOutOfRange,
    ResourceLimit,
    RewriteError,
    RuleMismatch,
    SymbolOutOfRange,
)
from betamatch.ssts import (
    Rule,
    Ssts,
    apply_step,
    check_derivation,
    decide_for_n,
    reachable,
    run_derivation,
    search_zero_one,
    successors,
    ones,
    zeros,
)

from .conftest import small_systems


def closure_oracle(system: Ssts, start: tuple) -> set:
    """Reachable words by naive fixpoint over string windows."""
    text = lambda w: "".join(map(str, w))  # noqa: E731
    seen = {text(start)}
    frontier = set(seen)
    while frontier:
        new = set()
        for w in frontier:
            for r in system.rules:
                lhs, rhs = f"{r.a}{r.b}", f"{r.c}{r.d}"
                for i in range(len(w) - 1):
                    if w[i:i + 2] == lhs:
                        new.add(w[:i] + rhs + w[i + 2:])
        frontier = new - seen
        seen |= new
    return {tuple(int(c) for c in w) for w in seen}


def test_rule_and_system_validation():
    with pytest.raises(SymbolOutOfRange):
        Ssts(2, (Rule(0, 0, 2, 2),))
    with pytest.raises(SymbolOutOfRange):
        Ssts(1, (Rule(0, 0, 0, 0),))
    with pytest.raises(DegenerateSystem):
        Ssts(2, ())
    s = Ssts.of("00=>22", "02=>11")
    assert s.alphabet_size == 3 and s.K == 2 and s.L == 2
    with pytest.raises(RewriteError):
        s.rule(3)


def test_apply_step_errors():
    r = Rule(1, 2, 4, 5)
    assert apply_step((0, 1, 2, 3), r, 2) == (0, 4, 5, 3)
    with pytest.raises(RuleMismatch):
        apply_step((0, 1, 2, 3), r, 1)
    with pytest.raises(PositionOutOfRange):
        apply_step((0, 1, 2, 3), r, 4)
    with pytest.raises(PositionOutOfRange):
        apply_step((0, 1, 2, 3), r, 0)


def test_three_rule_golden(three_rule):
    for n in (1, 2, 3):
        assert decide_for_n(three_rule, n) is None
    d = decide_for_n(three_rule, 4)
    assert d == ((1, 2), (2, 1), (3, 3))
    words = run_derivation(three_rule, zeros(4), d)
    assert words == [(0, 0, 0, 0), (0, 2, 2, 0), (1, 1, 2, 0), (1, 1, 1, 1)]
    assert search_zero_one(three_rule, 4) == (4, d)
    assert search_zero_one(three_rule, 3) is None


def test_single_rule_system(single_rule):
    assert search_zero_one(single_rule, 5) == (2, ((1, 1),))


def test_negative_system_has_no_witness(negative):
    for n in range(1, 7):
        assert decide_for_n(negative, n) is None


def test_negative_system_last_symbol_invariant(negative):
    for n in range(1, 6):
        words = reachable(negative, zeros(n))
        assert set(words) == closure_oracle(negative, zeros(n))
        assert all(w[-1] == 0 for w in words)


def test_successor_order_is_rule_major():
    s = Ssts.of("00=>11", "00=>10")
    steps = [st for st, _ in successors(s, (0, 0, 0))]
    assert steps == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_state_cap_raises():
    s = Ssts.of("00=>01", "00=>10", "01=>10", "10=>01", alphabet_size=2)
    with pytest.raises(ResourceLimit):
        decide_for_n(s, 8, state_cap=10)


def test_bad_arguments():
    s = Ssts.of("00=>11")
    with pytest.raises(ValueError):
        decide_for_n(s, 0)
    with pytest.raises(ValueError):
        search_zero_one(s, 0)


def test_check_derivation_rejects_bad_steps(three_rule):
    assert check_derivation(three_rule, zeros(4), [(1, 2), (2, 1), (3, 3)], ones(4))
    assert not check_derivation(three_rule, zeros(4), [(2, 1)], ones(4))
    assert not check_derivation(three_rule, zeros(4), [(1, 2)], ones(4))


@settings(max_examples=300, deadline=None)
@given(small_systems(), st.integers(1, 5))
def test_decide_agrees_with_closure(system, n):
    d = decide_for_n(system, n)
    reach = closure_oracle(system, zeros(n))
    assert (d is not None) == (ones(n) in reach)
    if d is not None:
        assert check_derivation(system, zeros(n), d, ones(n))


@settings(max_examples=200, deadline=None)
@given(small_systems(), st.integers(2, 4))
def test_derivations_are_shortest(system, n):
    d = decide_for_n(system, n)
    if d is None or len(d) > 4:
        return
    # no derivation with fewer steps exists
    for k in range(len(d)):
        for steps in itertools.product(range(1, system.L + 1), range(1, n), repeat=k):
            pairs = list(zip(steps[::2], steps[1::2]))
            assert not check_derivation(system, zeros(n), pairs, ones(n))
