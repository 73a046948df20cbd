import pytest
from hypothesis import given, settings

from betamatch.nbe import Machine, OutOfFuel, nbe_normal_form
from betamatch.terms import App, Lam, Var, lams, normalize

from .conftest import typed_terms

OMEGA = App(Lam(App(Var(0), Var(0))), Lam(App(Var(0), Var(0))))


def test_nbe_basic():
    k = Lam(Lam(Var(1)))
    assert nbe_normal_form(App(App(k, Lam(Var(0))), Lam(Lam(Var(0))))) == Lam(Var(0))


def test_nbe_fuel():
    with pytest.raises(OutOfFuel):
        nbe_normal_form(OMEGA, fuel=100)


def test_matches_stops_at_mismatch():
    m = Machine()
    v = m.eval(Lam(Lam(App(Var(1), Var(0)))))
    assert m.matches(v, Lam(Lam(App(Var(1), Var(0)))))
    assert not m.matches(v, Lam(Lam(App(Var(0), Var(1)))))
    assert not m.matches(v, Lam(Var(0)))


@settings(max_examples=500, deadline=None)
@given(typed_terms())
def test_nbe_agrees_with_normalize(sample):
    ctx, t, _ = sample
    closed = lams(len(ctx), t)
    expected = normalize(closed).term
    assert nbe_normal_form(closed) == expected
    m = Machine()
    assert m.matches(m.eval(closed), expected)
