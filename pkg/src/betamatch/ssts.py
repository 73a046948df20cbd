"""Simple semi-Thue systems: rules ``ab => cd`` over symbols ``0..K``.

Rules preserve word length, so the set of words reachable from ``0^n`` is
finite and breadth-first search decides reachability of ``1^n`` exactly for
each fixed ``n``. Rule indices and positions are 1-based throughout.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    DegenerateSystem,
    PositionOutOfRange,
    ResourceLimit,
    RewriteError,
    RuleMismatch,
    SymbolOutOfRange,
)

Word = tuple[int, ...]
# (rule index, position), both 1-based
Step = tuple[int, int]
Derivation = tuple[Step, ...]

DEFAULT_STATE_CAP = 1_000_000


@dataclass(frozen=True)
class Rule:
    a: int
    b: int
    c: int
    d: int

    def symbols(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"{self.a}{self.b}=>{self.c}{self.d}"


@dataclass(frozen=True)
class Ssts:
    alphabet_size: int
    rules: tuple[Rule, ...]

    def __post_init__(self) -> None:
        if self.alphabet_size < 2:
            raise SymbolOutOfRange("alphabet must contain the symbols 0 and 1")
        if not self.rules:
            raise DegenerateSystem("a system needs at least one rule")
        object.__setattr__(self, "rules", tuple(self.rules))
        for r in self.rules:
            if any(not 0 <= s < self.alphabet_size for s in r.symbols()):
                raise SymbolOutOfRange(f"rule {r} uses a symbol outside 0..{self.alphabet_size - 1}")

    @classmethod
    def of(cls, *rules: str | tuple[int, int, int, int], alphabet_size: int | None = None) -> "Ssts":
        """``Ssts.of("00=>22", "02=>11")`` for single-digit symbols."""
        parsed = []
        for r in rules:
            if isinstance(r, str):
                lhs, rhs = r.replace(" ", "").split("=>")
                parsed.append(Rule(int(lhs[0]), int(lhs[1]), int(rhs[0]), int(rhs[1])))
            else:
                parsed.append(Rule(*r))
        if alphabet_size is None:
            alphabet_size = max(2, 1 + max(max(r.symbols()) for r in parsed))
        return cls(alphabet_size, tuple(parsed))

    @property
    def K(self) -> int:
        """Largest base symbol."""
        return self.alphabet_size - 1

    @property
    def L(self) -> int:
        return len(self.rules)

    def rule(self, index: int) -> Rule:
        if not 1 <= index <= len(self.rules):
            raise RewriteError(f"no rule number {index}")
        return self.rules[index - 1]


def zeros(n: int) -> Word:
    return (0,) * n


def ones(n: int) -> Word:
    return (1,) * n


def apply_step(word: Sequence[int], rule: Rule, position: int) -> Word:
    """Rewrite the window at 1-based ``position`` using ``rule``."""
    word = tuple(word)
    if not 1 <= position <= len(word) - 1:
        raise PositionOutOfRange(f"position {position} outside 1..{len(word) - 1}")
    i = position - 1
    if word[i] != rule.a or word[i + 1] != rule.b:
        raise RuleMismatch(f"rule {rule} does not match {word[i]}{word[i + 1]} at position {position}")
    return word[:i] + (rule.c, rule.d) + word[i + 2:]


def run_derivation(system: Ssts, start: Sequence[int], steps: Sequence[Step]) -> list[Word]:
    """All intermediate words, starting with ``start``; raises on a bad step."""
    words = [tuple(start)]
    for rule_index, position in steps:
        words.append(apply_step(words[-1], system.rule(rule_index), position))
    return words


def check_derivation(system: Ssts, start: Sequence[int], steps: Sequence[Step], end: Sequence[int]) -> bool:
    try:
        words = run_derivation(system, start, steps)
    except RewriteError:
        return False
    return words[-1] == tuple(end)


def successors(system: Ssts, word: Word):
    """Yield ``(step, next_word)`` in rule-major, position-minor order."""
    for ri, r in enumerate(system.rules, start=1):
        for i in range(len(word) - 1):
            if word[i] == r.a and word[i + 1] == r.b:
                yield (ri, i + 1), word[:i] + (r.c, r.d) + word[i + 2:]


def reachable(system: Ssts, start: Sequence[int], state_cap: int = DEFAULT_STATE_CAP) -> dict[Word, Optional[tuple[Word, Step]]]:
    """BFS closure from ``start``: each word maps to its BFS parent and step."""
    start = tuple(start)
    parent: dict[Word, Optional[tuple[Word, Step]]] = {start: None}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for st, nxt in successors(system, w):
            if nxt not in parent:
                if len(parent) >= state_cap:
                    raise ResourceLimit(f"more than {state_cap} reachable words")
                parent[nxt] = (w, st)
                queue.append(nxt)
    return parent


def _trace(parent, target: Word) -> Derivation:
    steps = []
    while parent[target] is not None:
        prev, st = parent[target]
        steps.append(st)
        target = prev
    return tuple(reversed(steps))


def decide_for_n(system: Ssts, n: int, state_cap: int = DEFAULT_STATE_CAP) -> Optional[Derivation]:
    """A shortest derivation ``0^n =>* 1^n``, or None if there is none.

    Search stops as soon as ``1^n`` is discovered; ties between derivations
    of equal length go to the one found first (rule-major, then position).
    """
    if n < 1:
        raise ValueError("word length must be at least 1")
    start, goal = zeros(n), ones(n)
    parent: dict[Word, Optional[tuple[Word, Step]]] = {start: None}
    if start == goal:
        return ()
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for st, nxt in successors(system, w):
            if nxt in parent:
                continue
            if len(parent) >= state_cap:
                raise ResourceLimit(f"more than {state_cap} reachable words for n={n}")
            parent[nxt] = (w, st)
            if nxt == goal:
                return _trace(parent, goal)
            queue.append(nxt)
    return None


def search_zero_one(system: Ssts, max_n: int, state_cap: int = DEFAULT_STATE_CAP) -> Optional[tuple[int, Derivation]]:
    """Smallest ``n <= max_n`` with ``0^n =>* 1^n``, with its derivation."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    for n in range(1, max_n + 1):
        d = decide_for_n(system, n, state_cap)
        if d is not None:
            return n, d
    return None
