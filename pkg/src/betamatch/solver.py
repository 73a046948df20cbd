"""Type-directed enumeration of normal inhabitants and bounded solving.

Every beta-normal term is an abstraction or a variable applied to normal
arguments, so terms of a given type and size can be generated from a head
variable and a split of the remaining size among the arguments. Eta-short
forms are included: matching is modulo beta only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded
from .nbe import Machine, OutOfFuel
from .reduction import MatchingInstance
from .terms import Arrow, Lam, Normal, SimpleType, Term, Var, apply, normalize
from .verifier import Ok, verify_solution


@dataclass(frozen=True)
class EnumBudget:
    max_size: int = 24
    max_count: int = 1_000_000
    fuel: int = 1_000_000

    def __post_init__(self) -> None:
        if min(self.max_size, self.max_count, self.fuel) <= 0:
            raise ValueError("budget fields must be positive")


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered splits of ``total`` into ``parts`` positive sizes, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


class Enumerator:
    """Memoized generator of normal terms by ``(context, type, exact size)``.

    Contexts are tuples of types indexed by de Bruijn distance. Within one
    size, neutral terms come first (head index ascending, then argument
    count, then argument sizes and argument order), followed by
    abstractions.
    """

    def __init__(self, cache_limit: int = 12) -> None:
        # pools above cache_limit are regenerated on demand to bound memory
        self.cache_limit = cache_limit
        self._terms = lru_cache(maxsize=None)(self._terms_uncached)
        self._count = lru_cache(maxsize=None)(self._count_uncached)

    def terms(self, env: Sequence[SimpleType], target: SimpleType, size: int) -> Iterator[Term]:
        return self._iter(tuple(env), target, size)

    def count(self, env: Sequence[SimpleType], target: SimpleType, size: int) -> int:
        return self._count(tuple(env), target, size)

    @staticmethod
    def _heads(env: tuple, target: SimpleType):
        # (head index, argument types) for each way a variable reaches target
        for k, t in enumerate(env):
            doms = []
            while True:
                if t == target:
                    yield k, tuple(doms)
                if not isinstance(t, Arrow):
                    break
                doms.append(t.dom)
                t = t.cod

    def _iter(self, env: tuple, target: SimpleType, size: int) -> Iterator[Term]:
        if size <= self.cache_limit:
            return iter(self._terms(env, target, size))
        return self._generate(env, target, size)

    def _terms_uncached(self, env: tuple, target: SimpleType, size: int) -> tuple[Term, ...]:
        return tuple(self._generate(env, target, size))

    def _generate(self, env: tuple, target: SimpleType, size: int) -> Iterator[Term]:
        if size <= 0:
            return
        for k, doms in self._heads(env, target):
            n = len(doms)
            rest = size - 1 - n
            if rest < n:
                continue
            for split in _compositions(rest, n):
                if any(self._count(env, d, s) == 0 for d, s in zip(doms, split)):
                    continue
                pools = [(env, d, s) for d, s in zip(doms, split)]
                for args in self._product(pools):
                    yield apply(Var(k), *args)
        if isinstance(target, Arrow) and size >= 2:
            for body in self._iter((target.dom, *env), target.cod, size - 1):
                yield Lam(body)

    def _product(self, pools: list[tuple]) -> Iterator[tuple[Term, ...]]:
        if not pools:
            yield ()
            return
        for first in self._iter(*pools[0]):
            for rest in self._product(pools[1:]):
                yield (first, *rest)

    def _count_uncached(self, env: tuple, target: SimpleType, size: int) -> int:
        if size <= 0:
            return 0
        total = 0
        for k, doms in self._heads(env, target):
            n = len(doms)
            rest = size - 1 - n
            if rest < n:
                continue
            for split in _compositions(rest, n):
                prod = 1
                for d, s in zip(doms, split):
                    prod *= self._count(env, d, s)
                    if prod == 0:
                        break
                total += prod
        if isinstance(target, Arrow) and size >= 2:
            total += self._count((target.dom, *env), target.cod, size - 1)
        return total


def count_normal_inhabitants(env: Sequence[SimpleType], target: SimpleType, max_size: int) -> int:
    e = Enumerator()
    return sum(e.count(env, target, s) for s in range(1, max_size + 1))


def enumerate_normal_inhabitants(env: Sequence[SimpleType], target: SimpleType,
                                 budget: EnumBudget = EnumBudget()) -> Iterator[Term]:
    """Yield every normal ``M`` with ``env |- M : target`` and size <= max_size.

    Raises ``BudgetExceeded`` instead of yielding term number max_count + 1.
    """
    e = Enumerator()
    emitted = 0
    for s in range(1, budget.max_size + 1):
        for t in e.terms(env, target, s):
            if emitted == budget.max_count:
                raise BudgetExceeded(f"more than {budget.max_count} terms up to size {budget.max_size}")
            emitted += 1
            yield t


@dataclass
class SearchStats:
    enumerated: int = 0
    undetermined: int = 0


def solve_bounded(instance: MatchingInstance, budget: EnumBudget = EnumBudget(),
                  stats: Optional[SearchStats] = None) -> Optional[Term]:
    """First enumerated solution, or None once the bounded space is covered.

    Candidates are screened by normalization by evaluation, comparing
    against the normal form of ``N`` lazily; a hit is confirmed with
    ``verify_solution``. Raises ``BudgetExceeded`` if the count cap truncated
    the search or some candidate ran out of fuel, and nothing was found.
    """
    stats = stats if stats is not None else SearchStats()
    target = normalize(instance.N, budget.fuel)
    if not isinstance(target, Normal):
        raise BudgetExceeded("N does not normalize within the fuel budget")
    machine = Machine()
    f_value = machine.eval(instance.F)
    for cand in enumerate_normal_inhabitants([], instance.sigma, budget):
        stats.enumerated += 1
        machine.fuel = budget.fuel
        try:
            hit = machine.matches(machine.apply(f_value, machine.eval(cand)), target.term)
        except OutOfFuel:
            stats.undetermined += 1
            continue
        if hit:
            verdict = verify_solution(instance, cand, budget.fuel)
            if not isinstance(verdict, Ok):
                raise RuntimeError(f"screening accepted a candidate the verifier rejects: {verdict}")
            return cand
    if stats.undetermined:
        raise BudgetExceeded(f"{stats.undetermined} candidates ran out of fuel")
    return None
