"""Normalization by evaluation, used as a fast path by the solver.

Abstractions evaluate to Python closures and stuck terms to neutral values
(a de Bruijn level applied to values). Closed arguments can be evaluated
once and reused across many candidates, which the substitution-based
normalizer cannot do.
"""

from __future__ import annotations

from typing import Callable, Optional, Union

from .terms import App, Lam, Term, Var, apply, spine


class VLam:
    __slots__ = ("fn",)

    def __init__(self, fn: Callable[["Value"], "Value"]):
        self.fn = fn


class VNeu:
    __slots__ = ("level", "args")

    def __init__(self, level: int, args: tuple = ()):
        self.level = level
        self.args = args


Value = Union[VLam, VNeu]


class OutOfFuel(Exception):
    pass


class Machine:
    """Evaluator with a budget on closure applications."""

    def __init__(self, fuel: Optional[int] = None):
        self.fuel = fuel

    def apply(self, f: Value, a: Value) -> Value:
        if isinstance(f, VLam):
            if self.fuel is not None:
                if self.fuel <= 0:
                    raise OutOfFuel
                self.fuel -= 1
            return f.fn(a)
        return VNeu(f.level, f.args + (a,))

    def eval(self, term: Term, env: tuple = ()) -> Value:
        # env is a linked list (value, rest) indexed by de Bruijn distance
        if isinstance(term, Var):
            e = env
            for _ in range(term.index):
                e = e[1]
            return e[0]
        if isinstance(term, App):
            return self.apply(self.eval(term.fn, env), self.eval(term.arg, env))
        body = term.body
        return VLam(lambda v: self.eval(body, (v, env)))

    def quote(self, value: Value, depth: int = 0) -> Term:
        if isinstance(value, VLam):
            return Lam(self.quote(self.apply(value, VNeu(depth)), depth + 1))
        return apply(Var(depth - 1 - value.level), *[self.quote(a, depth) for a in value.args])

    def matches(self, value: Value, expected: Term, depth: int = 0) -> bool:
        """Whether ``value`` quotes to the normal term ``expected``.

        Quoting is interleaved with the comparison and stops at the first
        mismatch.
        """
        while isinstance(expected, Lam):
            if not isinstance(value, VLam):
                return False
            value = self.apply(value, VNeu(depth))
            expected = expected.body
            depth += 1
        if not isinstance(value, VNeu):
            return False
        head, args = spine(expected)
        if len(value.args) != len(args) or head.index != depth - 1 - value.level:
            return False
        for a, t in zip(value.args, args):
            if not self.matches(a, t, depth):
                return False
        return True


def nbe_normal_form(term: Term, fuel: Optional[int] = None) -> Term:
    """Normal form of a closed term; raises ``OutOfFuel`` past the budget."""
    m = Machine(fuel)
    return m.quote(m.eval(term))
