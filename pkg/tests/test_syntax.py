import pytest
from hypothesis import given, settings

from betamatch.errors import EmptyRuleSet, ParseError
from betamatch.ssts import Rule
from betamatch.syntax import (
    NLam,
    NVar,
    format_ssts,
    format_word,
    free_names,
    napp,
    nlam,
    parse_ssts,
    parse_term,
    parse_type,
    print_term,
    print_type,
    read_term,
    to_named,
    to_nameless,
)
from betamatch.terms import App, Arrow, Lam, Var, arrows, type_infer

from .conftest import O, OO, raw_terms, typed_terms


def test_identity_parses_to_index_zero():
    assert read_term(r"\x. x") == Lam(Var(0))


def test_lambda_symbol_accepted():
    assert read_term("λx y. y x") == read_term(r"\x. \y. y x")


def test_application_is_left_associative():
    assert read_term(r"\f x y. f x y") == Lam(Lam(Lam(App(App(Var(2), Var(1)), Var(0)))))


def test_trailing_abstraction_extends_right():
    assert read_term(r"\f. f \x. x x") == Lam(App(Var(0), Lam(App(Var(0), Var(0)))))


def test_example_term_infers_expected_type():
    assert type_infer([], read_term(r"\u.\f. f u")) == arrows(O, OO, O)


def test_unbalanced_paren_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_term(r"\x. x)")
    assert exc.value.position == 5


@pytest.mark.parametrize("text", ["", r"\. x", "(x", r"\x x", "x $", "1"])
def test_malformed_terms_rejected(text):
    with pytest.raises(ParseError):
        parse_term(text)


def test_unbound_names_rejected_without_context():
    with pytest.raises(ParseError):
        read_term("f x")
    assert read_term("f x", ["f", "x"]) == App(Var(1), Var(0))


def test_free_names_in_first_occurrence_order():
    assert free_names(parse_term(r"g (\x. x y) g z")) == ["g", "y", "z"]


def test_shadowing_resolves_to_innermost():
    assert read_term(r"\x. \x. x") == Lam(Lam(Var(0)))


def test_printing_styles():
    assert print_term(Lam(Var(0))) == r"\x0. x0"
    assert print_term(Lam(Var(0)), style="indexed") == r"\. 0"
    assert print_term(Lam(Lam(App(Var(1), Lam(Var(0)))))) == r"\x0 x1. x0 (\x2. x2)"
    with pytest.raises(ValueError):
        print_term(Var(0), style="fancy")


def test_named_builders():
    assert nlam("x y", napp("x", "y")) == NLam("x", NLam("y", napp(NVar("x"), NVar("y"))))
    assert to_nameless(to_named(Lam(Var(1)), ["a"]), ["a"]) == Lam(Var(1))


def test_types_parse_right_associative():
    assert parse_type("o -> o -> o") == Arrow(O, OO)
    assert parse_type("(o → o) -> ι") == Arrow(OO, O)
    assert print_type(Arrow(OO, O)) == "(o -> o) -> o"
    for bad in ["o ->", "(o", "o o", "x"]:
        with pytest.raises(ParseError):
            parse_type(bad)


def test_rule_file_three_rule_system():
    s = parse_ssts("0 0 => 2 2\n0 2 => 1 1\n2 0 => 1 1\n")
    assert s.alphabet_size == 3
    assert s.rules == (Rule(0, 0, 2, 2), Rule(0, 2, 1, 1), Rule(2, 0, 1, 1))


def test_rule_file_negative_system_with_comments():
    s = parse_ssts("# negative\n\n0 0 => 1 0   # first\n0 1 => 1 1\n")
    assert s.alphabet_size == 2 and s.L == 2
    assert format_ssts(s) == "0 0 => 1 0\n0 1 => 1 1\n"


def test_rule_file_alphabet_floor():
    assert parse_ssts("0 0 => 0 0").alphabet_size == 2


def test_rule_file_errors():
    with pytest.raises(EmptyRuleSet):
        parse_ssts("# nothing\n\n")
    with pytest.raises(ParseError) as exc:
        parse_ssts("0 0 => 1 1\n0 0 -> 1 1\n")
    assert exc.value.line == 2


def test_format_word():
    assert format_word((0, 2, 1)) == "021"


@settings(max_examples=500, deadline=None)
@given(raw_terms())
def test_named_round_trip(t):
    free = [f"v{k}" for k in range(8)]
    assert read_term(print_term(t, free=free), free) == t


@settings(max_examples=200, deadline=None)
@given(typed_terms())
def test_type_round_trip(sample):
    _, _, ty = sample
    assert parse_type(print_type(ty)) == ty
