"""Simply typed lambda calculus kernel on nameless (de Bruijn) terms.

Terms are untyped trees; typing is Curry style, so a term may have many
simple types. ``type_infer`` returns the principal type with its leftover
variables grounded to the atom, and ``type_check`` asks whether a given
type is an instance of the principal one.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))


# --------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"negative de Bruijn index {self.index}")


@dataclass(frozen=True)
class App:
    fn: "Term"
    arg: "Term"


@dataclass(frozen=True)
class Lam:
    body: "Term"


Term = Union[Var, App, Lam]


def apply(head: Term, *args: Term) -> Term:
    """Left-nested application ``head a1 ... an``."""
    for a in args:
        head = App(head, a)
    return head


def lams(n: int, body: Term) -> Term:
    for _ in range(n):
        body = Lam(body)
    return body


def spine(term: Term) -> tuple[Term, list[Term]]:
    """Split ``h a1 ... an`` into ``(h, [a1, ..., an])``."""
    args = []
    while isinstance(term, App):
        args.append(term.arg)
        term = term.fn
    args.reverse()
    return term, args


def size(term: Term) -> int:
    """Number of constructors."""
    n = 0
    stack = [term]
    while stack:
        t = stack.pop()
        n += 1
        if isinstance(t, App):
            stack.append(t.fn)
            stack.append(t.arg)
        elif isinstance(t, Lam):
            stack.append(t.body)
    return n


def free_indices(term: Term, depth: int = 0) -> set[int]:
    """Free indices, reported relative to the outside of ``term``."""
    if isinstance(term, Var):
        return {term.index - depth} if term.index >= depth else set()
    if isinstance(term, App):
        return free_indices(term.fn, depth) | free_indices(term.arg, depth)
    return free_indices(term.body, depth + 1)


def is_closed(term: Term) -> bool:
    return not free_indices(term)


def shift(term: Term, by: int, cutoff: int = 0) -> Term:
    if by == 0:
        return term
    if isinstance(term, Var):
        if term.index >= cutoff:
            return Var(term.index + by)
        return term
    if isinstance(term, App):
        return App(shift(term.fn, by, cutoff), shift(term.arg, by, cutoff))
    return Lam(shift(term.body, by, cutoff + 1))


def substitute(target: Term, index: int, replacement: Term) -> Term:
    """``target[index := replacement]``, removing the binder ``index``.

    ``replacement`` lives in the context without that binder; it is lifted
    when passing under abstractions and indices above ``index`` drop by one.
    """

    def go(t: Term, depth: int) -> Term:
        if isinstance(t, Var):
            k = t.index
            if k == index + depth:
                return shift(replacement, depth)
            if k > index + depth:
                return Var(k - 1)
            return t
        if isinstance(t, App):
            return App(go(t.fn, depth), go(t.arg, depth))
        return Lam(go(t.body, depth + 1))

    return go(target, 0)


def is_normal(term: Term) -> bool:
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, App):
            if isinstance(t.fn, Lam):
                return False
            stack.append(t.fn)
            stack.append(t.arg)
        elif isinstance(t, Lam):
            stack.append(t.body)
    return True


# --------------------------------------------------------------------------
# reduction


@dataclass(frozen=True)
class Normal:
    term: Term
    steps: int


@dataclass(frozen=True)
class FuelExhausted:
    partial: Term
    steps: int


NormalizeResult = Union[Normal, FuelExhausted]


class _Partial(Exception):
    def __init__(self, term: Term):
        self.term = term


def step(term: Term) -> Optional[Term]:
    """One leftmost-outermost contraction, or None if ``term`` is normal."""
    if isinstance(term, App):
        if isinstance(term.fn, Lam):
            return substitute(term.fn.body, 0, term.arg)
        fn = step(term.fn)
        if fn is not None:
            return App(fn, term.arg)
        arg = step(term.arg)
        if arg is not None:
            return App(term.fn, arg)
        return None
    if isinstance(term, Lam):
        body = step(term.body)
        return None if body is None else Lam(body)
    return None


def normalize(term: Term, fuel: int = 1_000_000) -> NormalizeResult:
    """Normal-order reduction with a step budget.

    Head redexes are contracted first and arguments are normalized left to
    right once the head is a variable, which is exactly leftmost-outermost
    order. On fuel exhaustion the partially reduced term is returned.
    """
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    budget = fuel

    def nf(t: Term) -> Term:
        nonlocal budget
        nlam = 0
        while True:
            while isinstance(t, Lam):
                nlam += 1
                t = t.body
            head, args = spine(t)
            if not (isinstance(head, Lam) and args):
                break
            if budget == 0:
                raise _Partial(lams(nlam, t))
            budget -= 1
            t = apply(substitute(head.body, 0, args[0]), *args[1:])
        out = head
        for i, a in enumerate(args):
            try:
                out = App(out, nf(a))
            except _Partial as p:
                raise _Partial(lams(nlam, apply(out, p.term, *args[i + 1:])))
        return lams(nlam, out)

    try:
        result = nf(term)
    except _Partial as p:
        return FuelExhausted(p.term, fuel - budget)
    return Normal(result, fuel - budget)


def beta_equiv(a: Term, b: Term, fuel: int = 1_000_000) -> Optional[bool]:
    """True/False verdict, or None when either side runs out of fuel."""
    na = normalize(a, fuel)
    if not isinstance(na, Normal):
        return None
    nb = normalize(b, fuel)
    if not isinstance(nb, Normal):
        return None
    return na.term == nb.term


# --------------------------------------------------------------------------
# simple types


@dataclass(frozen=True)
class Atom:
    def __str__(self) -> str:
        return "o"


@dataclass(frozen=True)
class Arrow:
    dom: "SimpleType"
    cod: "SimpleType"

    def __str__(self) -> str:
        d = f"({self.dom})" if isinstance(self.dom, Arrow) else str(self.dom)
        return f"{d} -> {self.cod}"


SimpleType = Union[Atom, Arrow]
IOTA = Atom()
TypeEnv = Sequence[SimpleType]


def arrows(*types: SimpleType) -> SimpleType:
    """Right-nested ``t1 -> t2 -> ... -> tn``."""
    out = types[-1]
    for t in reversed(types[:-1]):
        out = Arrow(t, out)
    return out


def type_order(t: SimpleType) -> int:
    if isinstance(t, Atom):
        return 1
    return max(type_order(t.dom) + 1, type_order(t.cod))


def type_size(t: SimpleType) -> int:
    if isinstance(t, Atom):
        return 1
    return 1 + type_size(t.dom) + type_size(t.cod)


def arity(t: SimpleType) -> int:
    n = 0
    while isinstance(t, Arrow):
        n += 1
        t = t.cod
    return n


# Inference works over types with unification variables, kept private to
# this module: public types only ever contain the ground atom.


@dataclass(frozen=True)
class _TVar:
    id: int


class _Unifier:
    def __init__(self) -> None:
        self.subst: dict[int, object] = {}
        self._ids = itertools.count()

    def fresh(self) -> _TVar:
        return _TVar(next(self._ids))

    def resolve(self, t):
        while isinstance(t, _TVar) and t.id in self.subst:
            t = self.subst[t.id]
        return t

    def occurs(self, v: _TVar, t) -> bool:
        t = self.resolve(t)
        if isinstance(t, _TVar):
            return t == v
        if isinstance(t, Arrow):
            return self.occurs(v, t.dom) or self.occurs(v, t.cod)
        return False

    def unify(self, a, b) -> bool:
        a, b = self.resolve(a), self.resolve(b)
        if a == b:
            return True
        if isinstance(a, _TVar):
            if self.occurs(a, b):
                return False
            self.subst[a.id] = b
            return True
        if isinstance(b, _TVar):
            return self.unify(b, a)
        if isinstance(a, Arrow) and isinstance(b, Arrow):
            return self.unify(a.dom, b.dom) and self.unify(a.cod, b.cod)
        return False

    def zonk(self, t, default=None):
        t = self.resolve(t)
        if isinstance(t, Arrow):
            return Arrow(self.zonk(t.dom, default), self.zonk(t.cod, default))
        if isinstance(t, _TVar) and default is not None:
            return default
        return t


def _infer(u: _Unifier, env: list, term: Term):
    # ``env`` is indexed by binder distance
    if isinstance(term, Var):
        if term.index >= len(env):
            return None
        return env[term.index]
    if isinstance(term, Lam):
        a = u.fresh()
        body = _infer(u, [a] + env, term.body)
        if body is None:
            return None
        return Arrow(a, body)
    f = _infer(u, env, term.fn)
    if f is None:
        return None
    x = _infer(u, env, term.arg)
    if x is None:
        return None
    r = u.fresh()
    if not u.unify(f, Arrow(x, r)):
        return None
    return r


def type_infer(env: TypeEnv, term: Term) -> Optional[SimpleType]:
    """Principal type of ``term`` with leftover type variables set to ``o``.

    Returns None if the term has no simple type in ``env``.
    """
    u = _Unifier()
    t = _infer(u, list(env), term)
    if t is None:
        return None
    return u.zonk(t, IOTA)


def type_check(env: TypeEnv, term: Term, expected: SimpleType) -> bool:
    """Whether ``env |- term : expected`` is derivable."""
    u = _Unifier()
    t = _infer(u, list(env), term)
    return t is not None and u.unify(t, expected)


def iter_subterms(term: Term) -> Iterator[Term]:
    stack = [term]
    while stack:
        t = stack.pop()
        yield t
        if isinstance(t, App):
            stack.append(t.arg)
            stack.append(t.fn)
        elif isinstance(t, Lam):
            stack.append(t.body)
