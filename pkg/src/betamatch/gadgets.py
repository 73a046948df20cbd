"""Closed control terms of the reduction and their simple types.

Symbols of the extended alphabet are plain ints for the base symbols
``0..K`` and the strings ``"$"``, ``"•"``, ``"⊤"``, ``"⊥"`` for the four
extra ones. Every projection and case expression takes one argument per
symbol in the fixed order ``0 .. K $ • ⊤ ⊥``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from .errors import DegenerateSystem, SymbolOutOfRange
from .ssts import Rule, Ssts
from .syntax import NamedTerm, NVar, napp, nlam, to_nameless
from .terms import IOTA, Arrow, Lam, SimpleType, Term, Var, apply, arrows

DOLLAR = "$"
BULLET = "•"
TOP = "⊤"
BOT = "⊥"
SPECIALS = (DOLLAR, BULLET, TOP, BOT)

ExtSymbol = Union[int, str]


def ext_symbols(alphabet_size: int) -> list[ExtSymbol]:
    return [*range(alphabet_size), *SPECIALS]


def n_ext(alphabet_size: int) -> int:
    return alphabet_size + len(SPECIALS)


def sym_index(sym: ExtSymbol, alphabet_size: int) -> int:
    """Position of ``sym`` in the canonical argument order."""
    if isinstance(sym, int) and not isinstance(sym, bool):
        if 0 <= sym < alphabet_size:
            return sym
    elif sym in SPECIALS:
        return alphabet_size + SPECIALS.index(sym)
    raise SymbolOutOfRange(f"{sym!r} is not a symbol of the extended alphabet of size {n_ext(alphabet_size)}")


def sym_name(sym: ExtSymbol) -> str:
    return str(sym)


def parse_sym(text: str) -> ExtSymbol:
    aliases = {"$": DOLLAR, "*": BULLET, "•": BULLET, "bullet": BULLET, "T": TOP, "⊤": TOP, "top": TOP,
               "_|_": BOT, "⊥": BOT, "bot": BOT}
    if text in aliases:
        return aliases[text]
    return int(text)


# --------------------------------------------------------------------------
# types


def kappa(alphabet_size: int) -> SimpleType:
    """``o -> ... -> o -> o`` with one argument per extended symbol."""
    return arrows(*[IOTA] * (n_ext(alphabet_size) + 1))


def role_type(role: str, alphabet_size: int) -> SimpleType:
    k = kappa(alphabet_size)
    kk = Arrow(k, k)
    if role == "z1":
        return k
    if role == "z0" or role.startswith("r"):
        return arrows(kk, k, k)
    if role == "z*":
        return arrows(kk, Arrow(kk, k), k)
    if role.startswith("p"):
        return kk
    raise KeyError(role)


@dataclass(frozen=True)
class GammaEnv:
    """The environment for level ``m``: binders ``r1..rL z0 z1 z* p1..pm``.

    ``roles`` lists the binders outermost first; ``env`` is indexed by de
    Bruijn distance, so ``env[0]`` is the type of ``pm``.
    """

    m: int
    L: int
    alphabet_size: int

    def __post_init__(self) -> None:
        if self.L < 1:
            raise DegenerateSystem("the system must have at least one rule")
        if self.m < 1:
            raise ValueError("level m must be at least 1")

    @property
    def roles(self) -> list[str]:
        return ([f"r{i}" for i in range(1, self.L + 1)] + ["z0", "z1", "z*"]
                + [f"p{j}" for j in range(1, self.m + 1)])

    def types(self) -> dict[str, SimpleType]:
        return {r: role_type(r, self.alphabet_size) for r in self.roles}

    @property
    def env(self) -> list[SimpleType]:
        return [role_type(r, self.alphabet_size) for r in reversed(self.roles)]

    def index(self, role: str) -> int:
        roles = self.roles
        return len(roles) - 1 - roles.index(role)

    def var(self, role: str) -> Var:
        return Var(self.index(role))


def gamma_env(m: int, L: int, alphabet_size: int) -> GammaEnv:
    return GammaEnv(m, L, alphabet_size)


def sigma_type(system: Ssts) -> SimpleType:
    """``G1(r1) -> ... -> G1(rL) -> G1(z0) -> G1(z1) -> G1(z*) -> G1(p1) -> kappa``."""
    g = gamma_env(1, system.L, system.alphabet_size)
    return arrows(*[role_type(r, system.alphabet_size) for r in g.roles], kappa(system.alphabet_size))


# --------------------------------------------------------------------------
# gadget kinds


@dataclass(frozen=True)
class Pi:
    symbol: ExtSymbol


@dataclass(frozen=True)
class Delta:
    symbol: ExtSymbol


@dataclass(frozen=True)
class GRule:
    rule: Rule


class Gadget(enum.Enum):
    H_STAR = "H*"
    H_ZERO = "H0"
    H_RULE = "HR"
    G_STAR = "G*"
    G_ZERO = "G0"
    ID_KAPPA = "I"
    F_ZERO_ARG = "\\h. I"
    F_STAR_ARG = "\\h g. g I"


GadgetKind = Union[Pi, Delta, GRule, Gadget]


def position_gadget(j: int, i: int) -> Delta:
    """The delta term fed to ``pj`` when reading off position ``i``."""
    if j < 1 or i < 0:
        raise ValueError("need j >= 1 and i >= 0")
    if i == j:
        return Delta(1)
    if i == j + 1:
        return Delta(0)
    return Delta(BULLET)


# --------------------------------------------------------------------------
# named construction


def _s(sym: ExtSymbol) -> str:
    return f"s{sym}"


class _Builder:
    def __init__(self, alphabet_size: int):
        self.n = alphabet_size
        self.syms = ext_symbols(alphabet_size)
        self.binders = " ".join(_s(x) for x in self.syms)

    def check(self, sym: ExtSymbol) -> ExtSymbol:
        sym_index(sym, self.n)
        return sym

    def case(self, scrut: NamedTerm, branches: Mapping[ExtSymbol, NamedTerm], default: NamedTerm) -> NamedTerm:
        for k in branches:
            self.check(k)
        return napp(scrut, *[branches.get(x, default) for x in self.syms])

    def sym_case(self, scrut: NamedTerm, branches: Mapping[ExtSymbol, ExtSymbol]) -> NamedTerm:
        """``case scrut {i -> s_j ...} else s_bot``."""
        return self.case(scrut, {k: NVar(_s(self.check(v))) for k, v in branches.items()}, NVar(_s(BOT)))

    def pi(self, sym: ExtSymbol) -> NamedTerm:
        return nlam(self.binders, NVar(_s(self.check(sym))))

    def delta(self, sym: ExtSymbol) -> NamedTerm:
        return nlam("x " + self.binders, self.sym_case(NVar("x"), {TOP: sym}))

    def h_star(self) -> NamedTerm:
        body = self.sym_case(napp("g", self.delta(BULLET)), {DOLLAR: DOLLAR})
        return nlam("h g " + self.binders, body)

    def h_zero(self) -> NamedTerm:
        return nlam("h x " + self.binders, self.sym_case(NVar("x"), {1: DOLLAR}))

    def h_rule(self) -> NamedTerm:
        inner = self.sym_case(NVar("x"), {1: 1})
        body = self.case(napp("h", self.pi(TOP)), {BULLET: inner}, NVar(_s(BOT)))
        return nlam("h x " + self.binders, body)

    def g_star(self) -> NamedTerm:
        s_bot = NVar(_s(BOT))
        g = lambda d: napp("g", self.delta(d))
        on_bullet = self.case(g(BULLET), {
            0: NVar(_s(0)),
            DOLLAR: self.sym_case(g(0), {1: DOLLAR}),
        }, s_bot)
        body = self.case(napp("h", self.pi(TOP)), {
            BULLET: on_bullet,
            0: self.sym_case(g(1), {0: 1}),
            1: self.sym_case(g(BULLET), {0: 0}),
        }, s_bot)
        return nlam("h g " + self.binders, body)

    def g_zero(self) -> NamedTerm:
        x = NVar("x")
        body = self.case(napp("h", self.pi(TOP)), {
            BULLET: self.sym_case(x, {0: 0, 1: DOLLAR}),
            0: self.sym_case(x, {0: 1}),
            1: self.sym_case(x, {0: 0}),
        }, NVar(_s(BOT)))
        return nlam("h x " + self.binders, body)

    def g_rule(self, rule: Rule) -> NamedTerm:
        for s in rule.symbols():
            if not 0 <= s < self.n:
                raise SymbolOutOfRange(f"rule {rule} outside alphabet of size {self.n}")
        x = NVar("x")
        passthrough = napp(x, *[NVar(_s(y)) for y in self.syms])
        body = self.case(napp("h", self.pi(TOP)), {
            BULLET: passthrough,
            0: self.sym_case(x, {rule.d: rule.b}),
            1: self.sym_case(x, {rule.c: rule.a}),
        }, NVar(_s(BOT)))
        return nlam("h x " + self.binders, body)

    def named(self, kind: GadgetKind) -> NamedTerm:
        if isinstance(kind, Pi):
            return self.pi(kind.symbol)
        if isinstance(kind, Delta):
            return self.delta(kind.symbol)
        if isinstance(kind, GRule):
            return self.g_rule(kind.rule)
        return {
            Gadget.H_STAR: self.h_star,
            Gadget.H_ZERO: self.h_zero,
            Gadget.H_RULE: self.h_rule,
            Gadget.G_STAR: self.g_star,
            Gadget.G_ZERO: self.g_zero,
            Gadget.ID_KAPPA: lambda: nlam("x", NVar("x")),
            Gadget.F_ZERO_ARG: lambda: nlam("h x", NVar("x")),
            Gadget.F_STAR_ARG: lambda: nlam("h g", napp("g", nlam("x", NVar("x")))),
        }[kind]()


def build_gadget(kind: GadgetKind, alphabet_size: int) -> Term:
    return to_nameless(_Builder(alphabet_size).named(kind))


def build_case(scrutinee: Term, branches: Mapping[ExtSymbol, Term], default: Term, alphabet_size: int) -> Term:
    """``scrutinee N_0 ... N_bot`` with ``N_i = branches[i]`` or ``default``.

    All terms share the same context; nothing is shifted.
    """
    for k in branches:
        sym_index(k, alphabet_size)
    return apply(scrutinee, *[branches.get(x, default) for x in ext_symbols(alphabet_size)])


def declared_type(kind: GadgetKind, alphabet_size: int) -> SimpleType:
    k = kappa(alphabet_size)
    if isinstance(kind, Pi):
        return k
    if isinstance(kind, Delta) or kind is Gadget.ID_KAPPA:
        return Arrow(k, k)
    if isinstance(kind, GRule) or kind in (Gadget.H_RULE,):
        return role_type("r1", alphabet_size)
    if kind in (Gadget.H_ZERO, Gadget.G_ZERO, Gadget.F_ZERO_ARG):
        return role_type("z0", alphabet_size)
    return role_type("z*", alphabet_size)


def pi(sym: ExtSymbol, alphabet_size: int) -> Term:
    return build_gadget(Pi(sym), alphabet_size)


def delta(sym: ExtSymbol, alphabet_size: int) -> Term:
    return build_gadget(Delta(sym), alphabet_size)


def read_projection(term: Term, alphabet_size: int) -> Optional[ExtSymbol]:
    """The symbol ``i`` if ``term`` is literally the projection for ``i``."""
    n = n_ext(alphabet_size)
    body = term
    for _ in range(n):
        if not isinstance(body, Lam):
            return None
        body = body.body
    if isinstance(body, Var) and body.index < n:
        return ext_symbols(alphabet_size)[n - 1 - body.index]
    return None


# --------------------------------------------------------------------------
# argument bundles

# The F bundle mentions the free variable u; it is represented by Var(0) and
# the bundle must be placed directly under a binder for u.
U_PLACEHOLDER = Var(0)


@dataclass(frozen=True)
class Bundles:
    f: tuple[Term, ...]
    h: tuple[Term, ...]
    g_bullet: tuple[Term, ...]
    g_one: tuple[Term, ...]
    g_zero: tuple[Term, ...]

    def g(self, x: ExtSymbol) -> tuple[Term, ...]:
        return {BULLET: self.g_bullet, 1: self.g_one, 0: self.g_zero}[x]


def g_substitution(system: Ssts) -> tuple[Term, ...]:
    """Images of ``r1..rL z0 z1 z*`` under the semantic substitution."""
    n = system.alphabet_size
    return (*[build_gadget(GRule(r), n) for r in system.rules],
            build_gadget(Gadget.G_ZERO, n), pi(1, n), build_gadget(Gadget.G_STAR, n))


def h_substitution(system: Ssts) -> tuple[Term, ...]:
    n = system.alphabet_size
    return (*[build_gadget(Gadget.H_RULE, n)] * system.L,
            build_gadget(Gadget.H_ZERO, n), pi(1, n), build_gadget(Gadget.H_STAR, n))


def f_substitution(system: Ssts) -> tuple[Term, ...]:
    n = system.alphabet_size
    ident = build_gadget(Gadget.ID_KAPPA, n)
    return (*[ident] * system.L, build_gadget(Gadget.F_ZERO_ARG, n), U_PLACEHOLDER,
            build_gadget(Gadget.F_STAR_ARG, n))


def argument_bundles(system: Ssts) -> Bundles:
    n = system.alphabet_size
    g = g_substitution(system)
    return Bundles(
        f=(*f_substitution(system), build_gadget(Gadget.ID_KAPPA, n)),
        h=(*h_substitution(system), delta(BULLET, n)),
        g_bullet=(*g, delta(BULLET, n)),
        g_one=(*g, delta(1, n)),
        g_zero=(*g, delta(0, n)),
    )


# --------------------------------------------------------------------------
# finite-function tables

# A table is a tuple of (input, output) rows; an input is a symbol or a table.
Table = tuple


@dataclass(frozen=True)
class FunctionTable:
    kind: GadgetKind
    rows: tuple[tuple[tuple, ExtSymbol], ...]


def fn(*rows) -> Table:
    return tuple(rows)


def semantics_table(system: Ssts) -> list[FunctionTable]:
    """Partial function tables realized by the semantic gadgets.

    A row ``((arg1, arg2, ...), out)`` says that the gadget applied to
    realizers of the arguments yields the projection for ``out``.
    """
    T, B, D = TOP, BULLET, DOLLAR
    tables = [FunctionTable(Delta(i), (((T,), i),)) for i in ext_symbols(system.alphabet_size)]
    tables.append(FunctionTable(Gadget.G_ZERO, (
        ((fn((T, B)), 0), 0),
        ((fn((T, B)), 1), D),
        ((fn((T, 0)), 0), 1),
        ((fn((T, 1)), 0), 0),
    )))
    for r in system.rules:
        tables.append(FunctionTable(GRule(r), (
            ((fn((T, 1)), r.c), r.a),
            ((fn((T, 0)), r.d), r.b),
        )))
    tables.append(FunctionTable(Gadget.G_STAR, (
        ((fn((T, B)), fn((fn((T, B)), 0))), 0),
        ((fn((T, B)), fn((fn((T, B)), D), (fn((T, 0)), 1))), D),
        ((fn((T, 0)), fn((fn((T, 1)), 0))), 1),
        ((fn((T, 1)), fn((fn((T, B)), 0))), 0),
    )))
    return tables


def realize(spec, alphabet_size: int) -> Term:
    """A closed term realizing a symbol or a (first- or second-order) table.

    Symbols become projections. A table whose inputs are symbols becomes a
    case on its argument; a table whose inputs are one-row tables ``(⊤ ↦ x)``
    probes its argument at the top projection.
    """
    b = _Builder(alphabet_size)
    return to_nameless(_realize_named(spec, b))


def _realize_named(spec, b: _Builder) -> NamedTerm:
    if not isinstance(spec, tuple):
        return b.pi(spec)
    if all(not isinstance(inp, tuple) for inp, _ in spec):
        return nlam("x " + b.binders, b.sym_case(NVar("x"), dict(spec)))
    probes = {}
    for inp, out in spec:
        if not (isinstance(inp, tuple) and len(inp) == 1 and inp[0][0] == TOP):
            raise NotImplementedError(f"cannot realize table input {inp!r}")
        probes[inp[0][1]] = out
    return nlam("f " + b.binders, b.sym_case(napp("f", b.pi(TOP)), probes))
