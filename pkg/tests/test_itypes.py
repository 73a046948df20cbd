import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betamatch.errors import InvalidWitness, NotNormal
from betamatch.gadgets import BULLET, DOLLAR, TOP, GRule, Gadget, build_gadget, read_projection, realize
from betamatch.itypes import (
    IArrow,
    IAtom,
    Judgment,
    arr,
    build_itype_envs,
    format_inter,
    format_judgment,
    inter,
    itype_derivable,
    positional_env,
    witness_judgments,
)
from betamatch.ssts import Ssts, decide_for_n
from betamatch.terms import App, Lam, Var, apply, normalize
from betamatch.verifier import evaluate_rows
from betamatch.witness import q_rows, q_term

from .conftest import small_systems
from .examples import THREE_RULE_STEPS


def test_axiom_picks_any_member():
    j = Judgment((inter("a", "b"),), Var(0), IAtom("a"))
    assert itype_derivable(j)
    assert not itype_derivable(Judgment((inter("a", "b"),), Var(0), IAtom("c")))


def test_arrow_intro_and_elim():
    # {f : (a ∩ b) -> c, x : a ∩ b} |- f x : c, and \y. f y needs y : a ∩ b
    f = arr(["a", "b"], "c")
    env = (inter("a", "b"), frozenset([f]))
    assert itype_derivable(Judgment(env, App(Var(1), Var(0)), IAtom("c")))
    assert not itype_derivable(Judgment((inter("a"), frozenset([f])), App(Var(1), Var(0)), IAtom("c")))
    assert itype_derivable(Judgment((frozenset([f]),), Lam(App(Var(1), Var(0))), f))


def test_empty_intersection_argument_is_free():
    # an argument typed by the empty intersection imposes nothing
    f = IArrow(frozenset(), IAtom("c"))
    assert itype_derivable(Judgment((frozenset([f]),), App(Var(0), Var(7)), IAtom("c")))


def test_non_normal_subject_rejected():
    with pytest.raises(NotNormal):
        itype_derivable(Judgment((), App(Lam(Var(0)), Lam(Var(0))), IAtom("a")))


def test_aci_canonical_form():
    a, b = arr(1, 0), arr(BULLET, 0, 0)
    assert inter(a, b, a) == inter(b, a)
    assert arr([a, b, a], 1) == arr([b, a], 1)
    assert str(arr(BULLET, [arr(BULLET, DOLLAR), arr(0, 1)], DOLLAR)) == "• → ((0 → 1) ∩ (• → $)) → $"
    assert format_inter([]) == "ω"


def test_three_rule_environment(three_rule):
    rules, control = build_itype_envs(three_rule)
    expected_r1 = inter(arr(1, 2, 0), arr(0, 2, 0), arr(BULLET, 0, 0), arr(BULLET, 1, 1), arr(BULLET, 2, 2))
    assert rules["r1"] == expected_r1
    assert rules["r2"] == inter(arr(1, 1, 0), arr(0, 1, 2), arr(BULLET, 0, 0), arr(BULLET, 1, 1), arr(BULLET, 2, 2))
    assert rules["z1"] == inter(1)
    assert control["z*"] == inter(
        arr(BULLET, arr(BULLET, 0), 0),
        arr(BULLET, [arr(BULLET, DOLLAR), arr(0, 1)], DOLLAR),
        arr(0, arr(1, 0), 1),
        arr(1, arr(BULLET, 0), 0),
    )
    assert control["z0"] == inter(arr(BULLET, 0, 0), arr(BULLET, 1, DOLLAR), arr(0, 0, 1), arr(1, 0, 0))


def test_single_rule_environment(single_rule):
    rules, _ = build_itype_envs(single_rule)
    assert rules["r1"] == inter(arr(1, 1, 0), arr(0, 1, 0), arr(BULLET, 0, 0), arr(BULLET, 1, 1))


def _realizer(component, n):
    """Closed term for an assumption component of a first-position argument."""
    if isinstance(component, IAtom):
        return realize(((TOP, component.name),), n)
    rows = []
    for d in component.domain:
        # d is an arrow  x -> y  over atoms: a delta input mapped to a symbol
        rows.append((((TOP, next(iter(d.domain)).name),), d.codomain.name))
    return realize(tuple(rows), n)


@pytest.mark.parametrize("role", ["r1", "r2", "r3", "z0", "z*"])
def test_environment_components_match_gadgets(three_rule, role):
    # each component a -> b -> c says: gadget applied to realizers of a, b yields pi_c
    n = 3
    rules, control = build_itype_envs(three_rule)
    env = {**rules, **control}
    kinds = {"r1": GRule(three_rule.rules[0]), "r2": GRule(three_rule.rules[1]),
             "r3": GRule(three_rule.rules[2]), "z0": Gadget.G_ZERO, "z*": Gadget.G_STAR}
    g = build_gadget(kinds[role], n)
    for comp in env[role]:
        (first,) = comp.domain
        second = comp.codomain.domain
        out = comp.codomain.codomain.name
        if len(second) == 1 and isinstance(next(iter(second)), IAtom):
            arg2 = realize(next(iter(second)).name, n)
        else:
            arg2 = _realizer(IArrow(second, IAtom(out)), n)
        res = normalize(apply(g, _realizer(first, n), arg2)).term
        assert read_projection(res, n) == out, (role, str(comp))


def test_positional_env_layout():
    env = positional_env({"r1": inter(0), "p2": inter(1)}, 2, 1)
    # p2 p1 z* z1 z0 r1 by distance
    assert env[0] == inter(1) and env[5] == inter(0)
    assert all(not e for e in env[1:5])


def test_three_rule_witness_judgments(three_rule):
    js = witness_judgments(three_rule, 3, THREE_RULE_STEPS)
    assert len(js) == 5 + 5 + 4 + 3
    assert [j.type for j in js[:5]] == [IAtom(1)] + [IAtom(0)] * 4
    assert [j.type for j in js[5:10]] == [IAtom(DOLLAR), IAtom(0), IAtom(0), IAtom(0), IAtom(1)]
    assert [j.type for j in js[14:]] == [IAtom(DOLLAR), IAtom(0), IAtom(1)]
    p_atoms = [tuple(next(iter(j.env[3 - k])).name for k in range(1, 4)) for j in js[:5]]
    assert p_atoms == [("•", "•", "•"), (1, "•", "•"), (0, 1, "•"), ("•", 0, 1), ("•", "•", 0)]
    for j in js:
        assert itype_derivable(j)


def test_perturbed_targets_not_derivable(three_rule):
    for j in witness_judgments(three_rule, 3, THREE_RULE_STEPS):
        for x in (0, 1, 2, DOLLAR, BULLET):
            if IAtom(x) != j.type:
                assert not itype_derivable(Judgment(j.env, j.term, IAtom(x)))


def test_judgment_rendering(three_rule):
    j = witness_judgments(three_rule, 3, THREE_RULE_STEPS)[1]
    text = format_judgment(j, 3, 3)
    assert text.endswith("p1 : 1, p2 : •, p3 : •} ⊢∩ r1 p2 (r2 p1 (r3 p3 z1)) : 0")
    assert "r1 : (0 → 2 → 0) ∩ (1 → 2 → 0) ∩ (• → 0 → 0)" in text


def test_invalid_witness_rejected(three_rule):
    with pytest.raises(InvalidWitness):
        witness_judgments(three_rule, 3, THREE_RULE_STEPS[:1])


@settings(max_examples=150, deadline=None)
@given(small_systems(), st.integers(1, 3), st.data())
def test_mirror_on_arbitrary_rewriting_terms(system, m, data):
    # derivable(target x) iff the semantic row evaluates to x, valid or not
    steps = data.draw(st.lists(st.tuples(st.integers(1, system.L), st.integers(1, m)), max_size=4))
    q = q_term(system, steps, m)
    rules, _ = build_itype_envs(system)
    for row, res in zip(q_rows(m), evaluate_rows(system, q, m, q_rows(m))):
        env = dict(rules)
        env.update({f"p{j}": inter(x) for j, x in enumerate(row.assignment, start=1)})
        penv = positional_env(env, m, system.L)
        for x in range(system.alphabet_size):
            assert itype_derivable(Judgment(penv, q, IAtom(x))) == (res.actual == x)


def _check_mirror(system, n, d):
    from betamatch.witness import expansion_layers, r_rows

    js = witness_judgments(system, n, d)
    q = q_term(system, d, n)
    rows = evaluate_rows(system, q, n, q_rows(n))
    layers = expansion_layers(n, q)
    for k in range(n, 0, -1):
        rows += evaluate_rows(system, layers[k - 1], k, r_rows(k))
    assert len(js) == len(rows)
    for j, r in zip(js, rows):
        assert itype_derivable(j) == r.holds is True


@pytest.mark.parametrize("rules,n", [
    (("00=>11",), 1),
    (("00=>01", "01=>11"), 2),
    (("00=>22", "02=>11", "20=>11"), 3),
    (("00=>10", "10=>12", "12=>11"), 1),
])
def test_mirror_for_known_witnesses(rules, n):
    s = Ssts.of(*rules)
    _check_mirror(s, n, decide_for_n(s, n + 1))


@settings(max_examples=40, deadline=None)
@given(small_systems())
def test_mirror_for_random_witnesses(system):
    d = decide_for_n(system, 3)
    if d is not None:
        _check_mirror(system, 2, d)
