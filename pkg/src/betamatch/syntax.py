"""Surface syntax: named terms, term/type/rule-file parsers and printers.

Term grammar (whitespace-insensitive)::

    term  ::= '\\' ident+ '.' term | app
    app   ::= atom+
    atom  ::= ident | '(' term ')'

``λ`` is accepted in place of the backslash. Types use ``o`` for the
ground atom and a right-associative ``->``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import EmptyRuleSet, ParseError
from .terms import IOTA, App, Arrow, Lam, SimpleType, Term, Var, spine


@dataclass(frozen=True)
class NVar:
    name: str


@dataclass(frozen=True)
class NApp:
    fn: "NamedTerm"
    arg: "NamedTerm"


@dataclass(frozen=True)
class NLam:
    name: str
    body: "NamedTerm"


NamedTerm = Union[NVar, NApp, NLam]


def nlam(names: str, body: NamedTerm) -> NamedTerm:
    """``nlam("x y z", b)`` is ``\\x. \\y. \\z. b``."""
    for n in reversed(names.split()):
        body = NLam(n, body)
    return body


def napp(head: NamedTerm | str, *args: NamedTerm | str) -> NamedTerm:
    out = NVar(head) if isinstance(head, str) else head
    for a in args:
        out = NApp(out, NVar(a) if isinstance(a, str) else a)
    return out


def to_nameless(term: NamedTerm, free: Sequence[str] = ()) -> Term:
    """Convert using ``free`` as the outer context, innermost binder last.

    ``free[-1]`` gets index 0, matching the convention that the most recent
    binder is nearest.
    """
    ctx = list(free)

    def go(t: NamedTerm) -> Term:
        if isinstance(t, NVar):
            for k in range(len(ctx) - 1, -1, -1):
                if ctx[k] == t.name:
                    return Var(len(ctx) - 1 - k)
            raise KeyError(f"unbound variable {t.name!r}")
        if isinstance(t, NApp):
            return App(go(t.fn), go(t.arg))
        ctx.append(t.name)
        try:
            return Lam(go(t.body))
        finally:
            ctx.pop()

    return go(term)


def to_named(term: Term, free: Sequence[str] = (), prefix: str = "x") -> NamedTerm:
    """Inverse of ``to_nameless``; binders get fresh names ``x0, x1, ...``.

    Free index ``k`` beyond the binders is named ``free[-1 - k]`` when given,
    otherwise ``_{k}``.
    """
    taken = set(free)
    ctx: list[str] = []
    counter = [0]

    def fresh() -> str:
        while True:
            n = f"{prefix}{counter[0]}"
            counter[0] += 1
            if n not in taken:
                return n

    def go(t: Term) -> NamedTerm:
        if isinstance(t, Var):
            if t.index < len(ctx):
                return NVar(ctx[-1 - t.index])
            k = t.index - len(ctx)
            if k < len(free):
                return NVar(free[-1 - k])
            return NVar(f"_{k}")
        if isinstance(t, App):
            return NApp(go(t.fn), go(t.arg))
        name = fresh()
        ctx.append(name)
        try:
            return NLam(name, go(t.body))
        finally:
            ctx.pop()

    return go(term)


# --------------------------------------------------------------------------
# printing


def format_named(term: NamedTerm) -> str:
    if isinstance(term, NLam):
        names = []
        while isinstance(term, NLam):
            names.append(term.name)
            term = term.body
        return "\\" + " ".join(names) + ". " + format_named(term)
    if isinstance(term, NApp):
        parts = []
        while isinstance(term, NApp):
            parts.append(term.arg)
            term = term.fn
        parts.append(term)
        parts.reverse()
        return " ".join(_atom(p) for p in parts)
    return term.name


def _atom(t: NamedTerm) -> str:
    return t.name if isinstance(t, NVar) else f"({format_named(t)})"


def format_indexed(term: Term) -> str:
    if isinstance(term, Lam):
        return "\\. " + format_indexed(term.body)
    if isinstance(term, App):
        head, args = spine(term)
        return " ".join(_iatom(p) for p in [head, *args])
    return str(term.index)


def _iatom(t: Term) -> str:
    return str(t.index) if isinstance(t, Var) else f"({format_indexed(t)})"


def print_term(term: Term, style: str = "named", free: Sequence[str] = ()) -> str:
    """Render ``term`` in ``"named"`` or ``"indexed"`` style."""
    if style == "named":
        return format_named(to_named(term, free))
    if style == "indexed":
        return format_indexed(term)
    raise ValueError(f"unknown style {style!r}")


# --------------------------------------------------------------------------
# term parser

_TOKEN = re.compile(r"\s*(?:(?P<lam>\\|λ)|(?P<dot>\.)|(?P<lp>\()|(?P<rp>\))|(?P<id>[^\W\d]\w*'*))", re.UNICODE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _TermParser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def term(self) -> NamedTerm:
        if self.peek()[0] == "lam":
            self.take("lam")
            names = [self.take("id")[1]]
            while self.peek()[0] == "id":
                names.append(self.take("id")[1])
            self.take("dot")
            return nlam(" ".join(names), self.term())
        return self.app()

    def app(self) -> NamedTerm:
        out = self.atom()
        while self.peek()[0] in ("id", "lp", "lam"):
            if self.peek()[0] == "lam":
                # trailing abstraction extends to the right
                return NApp(out, self.term())
            out = NApp(out, self.atom())
        return out

    def atom(self) -> NamedTerm:
        kind, val, pos = self.peek()
        if kind == "id":
            self.i += 1
            return NVar(val)
        if kind == "lp":
            self.i += 1
            t = self.term()
            self.take("rp")
            return t
        what = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"expected a term, found {what}", pos)


def parse_term(text: str) -> NamedTerm:
    p = _TermParser(text)
    t = p.term()
    kind, val, pos = p.peek()
    if kind != "eof":
        raise ParseError(f"unexpected {val!r}", pos)
    return t


def free_names(term: NamedTerm) -> list[str]:
    """Free variable names in order of first occurrence."""
    seen: list[str] = []

    def go(t: NamedTerm, bound: frozenset[str]) -> None:
        if isinstance(t, NVar):
            if t.name not in bound and t.name not in seen:
                seen.append(t.name)
        elif isinstance(t, NApp):
            go(t.fn, bound)
            go(t.arg, bound)
        else:
            go(t.body, bound | {t.name})

    go(term, frozenset())
    return seen


def read_term(text: str, free: Sequence[str] | None = None) -> Term:
    """Parse and convert to nameless form.

    Without an explicit context the term must be closed.
    """
    named = parse_term(text)
    if free is None:
        loose = free_names(named)
        if loose:
            raise ParseError(f"unbound variable {loose[0]!r}", 0)
        free = ()
    return to_nameless(named, free)


# --------------------------------------------------------------------------
# types

_TYTOKEN = re.compile(r"\s*(?:(?P<o>o|ι)\b|(?P<arrow>->|→)|(?P<lp>\()|(?P<rp>\)))")


def parse_type(text: str) -> SimpleType:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TYTOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} in type", pos)
        toks.append((m.lastgroup, m.start(m.lastgroup)))
        pos = m.end()
    toks.append(("eof", len(text)))
    i = 0

    def arrow() -> SimpleType:
        nonlocal i
        left = atom()
        if toks[i][0] == "arrow":
            i += 1
            return Arrow(left, arrow())
        return left

    def atom() -> SimpleType:
        nonlocal i
        kind, p = toks[i]
        if kind == "o":
            i += 1
            return IOTA
        if kind == "lp":
            i += 1
            t = arrow()
            if toks[i][0] != "rp":
                raise ParseError("expected ')'", toks[i][1])
            i += 1
            return t
        raise ParseError("expected a type", p)

    t = arrow()
    if toks[i][0] != "eof":
        raise ParseError("trailing input in type", toks[i][1])
    return t


def print_type(t: SimpleType) -> str:
    return str(t)


# --------------------------------------------------------------------------
# rule files

_RULE = re.compile(r"^\s*(\d+)\s+(\d+)\s*=>\s*(\d+)\s+(\d+)\s*$")


def parse_ssts(text: str):
    """Parse ``a b => c d`` lines into an ``Ssts``.

    ``#`` starts a comment; blank lines are skipped. The alphabet size is
    one more than the largest symbol mentioned, and at least 2.
    """
    from .ssts import Rule, Ssts

    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _RULE.match(line)
        if m is None:
            col = len(line) - len(line.lstrip())
            raise ParseError("expected a rule 'a b => c d'", col + 1, line=lineno)
        rules.append(Rule(*(int(g) for g in m.groups())))
    if not rules:
        raise EmptyRuleSet("rule file contains no rules")
    alphabet = max(2, 1 + max(max(r.symbols()) for r in rules))
    return Ssts(alphabet, tuple(rules))


def format_ssts(system) -> str:
    return "".join(f"{r.a} {r.b} => {r.c} {r.d}\n" for r in system.rules)


def format_word(word: Iterable[int]) -> str:
    return "".join(str(s) if s < 10 else f"[{s}]" for s in word)
