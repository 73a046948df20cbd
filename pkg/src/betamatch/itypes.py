"""Intersection types: derivability for normal terms and the inhabitation
environments mirroring the semantic gadgets.

Arrow domains are frozensets, so intersection is associative, commutative
and idempotent by construction. Atoms are extended-alphabet symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .errors import InvalidWitness, NotNormal
from .gadgets import BULLET, DOLLAR, ExtSymbol
from .ssts import Rule, Ssts, Step, check_derivation, ones, zeros
from .terms import Lam, Term, Var, is_normal, spine
from .witness import expansion_layers, q_rows, q_term, r_rows


@dataclass(frozen=True)
class IAtom:
    name: ExtSymbol

    def __str__(self) -> str:
        return str(self.name)


@dataclass(frozen=True)
class IArrow:
    domain: frozenset
    codomain: "IType"

    def __str__(self) -> str:
        parts = sorted(str(d) if isinstance(d, IAtom) else f"({d})" for d in self.domain)
        if not parts:
            dom = "ω"
        elif len(parts) == 1:
            dom = parts[0]
        else:
            dom = "(" + " ∩ ".join(parts) + ")"
        return f"{dom} → {self.codomain}"


IType = Union[IAtom, IArrow]
# one assumption set per de Bruijn index
ITypeEnv = tuple


def inter(*types: IType | ExtSymbol) -> frozenset:
    return frozenset(_t(t) for t in types)


def _t(t) -> IType:
    return t if isinstance(t, (IAtom, IArrow)) else IAtom(t)


def arr(*parts) -> IType:
    """``arr(a, b, c)`` is ``a → b → c``; a set or list part is an intersection."""
    out = _t(parts[-1])
    for p in reversed(parts[:-1]):
        dom = frozenset(_t(x) for x in p) if isinstance(p, (set, frozenset, list)) else frozenset([_t(p)])
        out = IArrow(dom, out)
    return out


def format_inter(ts: Iterable[IType]) -> str:
    parts = sorted(str(t) if isinstance(t, IAtom) else f"({t})" for t in ts)
    return " ∩ ".join(parts) if parts else "ω"


@dataclass(frozen=True)
class Judgment:
    env: ITypeEnv
    term: Term
    type: IType
    label: str = field(default="", compare=False)


def itype_derivable(j: Judgment) -> bool:
    """Syntax-directed derivability; complete for normal subjects."""
    if not is_normal(j.term):
        raise NotNormal("intersection type checking needs a normal subject")

    @lru_cache(maxsize=None)
    def check(env: ITypeEnv, term: Term, phi: IType) -> bool:
        if isinstance(term, Lam):
            if not isinstance(phi, IArrow):
                return False
            return check((phi.domain, *env), term.body, phi.codomain)
        head, args = spine(term)
        if not isinstance(head, Var) or head.index >= len(env):
            return False
        for psi in env[head.index]:
            if _use(env, psi, args, phi, check):
                return True
        return False

    return check(tuple(frozenset(s) for s in j.env), j.term, j.type)


def _use(env, psi: IType, args: Sequence[Term], phi: IType, check) -> bool:
    for a in args:
        if not isinstance(psi, IArrow):
            return False
        if not all(check(env, a, d) for d in psi.domain):
            return False
        psi = psi.codomain
    return psi == phi


# --------------------------------------------------------------------------
# environments


def rule_itype(rule: Rule, alphabet_size: int) -> frozenset:
    parts = [arr(1, rule.c, rule.a), arr(0, rule.d, rule.b)]
    parts += [arr(BULLET, e, e) for e in range(alphabet_size)]
    return frozenset(parts)


def z_zero_itype() -> frozenset:
    return inter(arr(BULLET, 0, 0), arr(BULLET, 1, DOLLAR), arr(0, 0, 1), arr(1, 0, 0))


def z_star_itype() -> frozenset:
    return inter(
        arr(BULLET, arr(BULLET, 0), 0),
        arr(BULLET, [arr(BULLET, DOLLAR), arr(0, 1)], DOLLAR),
        arr(0, arr(1, 0), 1),
        arr(1, arr(BULLET, 0), 0),
    )


def build_itype_envs(system: Ssts) -> tuple[dict[str, frozenset], dict[str, frozenset]]:
    """Role-keyed assumptions: rules and ``z1``, then ``z0`` and ``z*``."""
    rule_env = {f"r{i}": rule_itype(r, system.alphabet_size) for i, r in enumerate(system.rules, start=1)}
    rule_env["z1"] = inter(1)
    control_env = {"z0": z_zero_itype(), "z*": z_star_itype()}
    return rule_env, control_env


def positional_env(assumptions: Mapping[str, frozenset], m: int, L: int) -> ITypeEnv:
    """Lay out role-keyed assumptions by de Bruijn distance at level m.

    Roles without an assumption get the empty intersection.
    """
    roles = [f"r{i}" for i in range(1, L + 1)] + ["z0", "z1", "z*"] + [f"p{j}" for j in range(1, m + 1)]
    return tuple(frozenset(assumptions.get(r, frozenset())) for r in reversed(roles))


def witness_judgments(system: Ssts, n: int, derivation: Sequence[Step]) -> list[Judgment]:
    """Judgments for the rewriting term, then for each expansion layer.

    The rewriting part has one judgment per position pattern ``i = 0..n+1``;
    expansion layer ``k`` (from ``n`` down to 1) has ``k + 2``.
    """
    if n < 1 or not check_derivation(system, zeros(n + 1), derivation, ones(n + 1)):
        raise InvalidWitness(f"derivation does not rewrite 0^{n + 1} to 1^{n + 1}")
    rule_env, control_env = build_itype_envs(system)
    q = q_term(system, derivation, n)
    out = []
    for i, row in enumerate(q_rows(n)):
        env = dict(rule_env)
        env.update({f"p{j}": inter(x) for j, x in enumerate(row.assignment, start=1)})
        out.append(Judgment(positional_env(env, n, system.L), q, IAtom(row.expected), f"N ({i})"))
    layers = expansion_layers(n, q)
    for k in range(n, 0, -1):
        for i, row in enumerate(r_rows(k)):
            env = {**rule_env, **control_env}
            env.update({f"p{j}": inter(x) for j, x in enumerate(row.assignment, start=1)})
            out.append(Judgment(positional_env(env, k, system.L), layers[k - 1], IAtom(row.expected),
                                f"M{k} ({i})"))
    return out


def format_judgment(j: Judgment, m: int, L: int) -> str:
    """Render with role names, listing only roles that carry assumptions."""
    from .syntax import print_term

    roles = [f"r{i}" for i in range(1, L + 1)] + ["z0", "z1", "z*"] + [f"p{k}" for k in range(1, m + 1)]
    if len(roles) != len(j.env):
        raise ValueError("environment does not match level")
    names = [r.replace("*", "s") for r in roles]
    ctx = [f"{names[i]} : {format_inter(j.env[len(roles) - 1 - i])}" for i in range(len(roles))
           if j.env[len(roles) - 1 - i]]
    return "{" + ", ".join(ctx) + "} ⊢∩ " + print_term(j.term, free=names) + " : " + str(j.type)
