"""Involutive cones and completion of monomial sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, List, Tuple

from .divisions import DivisorFinder, FixtureError, _as_set, get_division
from .polyring import Monomial, MonomialOrdering


class NonTermination(Exception):
    """Raised when a completion or basis run exceeds its degree budget.

    ``partial`` holds the state reached so far; ``added`` lists the elements
    (monomials or leading monomials) appended, in order.
    """

    def __init__(self, message, *, budget, partial=(), added=(), stats=None):
        super().__init__(message)
        self.budget = budget
        self.partial = list(partial)
        self.added = list(added)
        self.stats = stats


@dataclass(frozen=True)
class CompletionBudget:
    """Cap on the total degree of any generated monomial."""

    max_total_degree: int

    def __post_init__(self):
        if not isinstance(self.max_total_degree, int) or self.max_total_degree < 1:
            raise ValueError("max_total_degree must be a positive integer")

    @classmethod
    def default_for(cls, degrees: Iterable[int]) -> "CompletionBudget":
        return cls(max(30, 3 * max(degrees, default=0)))


def resolve_budget(budget, degrees) -> CompletionBudget:
    degrees = list(degrees)
    if budget is None:
        return CompletionBudget.default_for(degrees)
    if isinstance(budget, int):
        budget = CompletionBudget(budget)
    if budget.max_total_degree < max(degrees, default=0):
        raise ValueError("budget %d is below the input degree %d" % (budget.max_total_degree, max(degrees)))
    return budget


@dataclass(frozen=True)
class CompletionResult:
    completed: Tuple[Monomial, ...]
    added: Tuple[Monomial, ...]


def involutive_cone_member(div, U, w: Monomial) -> bool:
    """True iff some element of ``U`` involutively divides ``w``."""
    U = _as_set(U)
    if not U:
        return False
    return DivisorFinder(div, U).find(tuple(w)) >= 0


def nonmultiplicative_prolongations(div, U):
    """Yield ``(u, i, u*x_i)`` for every non-multiplicative variable ``x_i`` of every ``u``."""
    div = get_division(div)
    U = _as_set(U)
    return _prolongations(div.multiplicative_map(U).items())


def _prolongations(pairs):
    for u, mult in pairs:
        for i in range(len(u)):
            if i not in mult:
                w = list(u)
                w[i] += 1
                yield u, i, tuple(w)


def is_locally_involutive(div, U) -> bool:
    """Every non-multiplicative prolongation has an involutive divisor in ``U``."""
    U = _as_set(U)
    if not U:
        return True
    finder = DivisorFinder(div, U)
    return all(finder.find(w) >= 0 for _, _, w in _prolongations(zip(finder.lms, finder.mults)))


def _monomials_up_to(n, degree):
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(n), d):
            m = [0] * n
            for i in combo:
                m[i] += 1
            yield tuple(m)


def is_involutive_bounded(div, U, degree_bound: int) -> bool:
    """Check the cone of ``U`` equals its involutive cone up to ``degree_bound``."""
    U = _as_set(U)
    if not U:
        return True
    finder = DivisorFinder(div, U)
    n = len(next(iter(U)))
    seen = set()
    for u in U:
        for m in _monomials_up_to(n, degree_bound - sum(u)):
            w = tuple(a + b for a, b in zip(u, m))
            if w in seen:
                continue
            seen.add(w)
            if finder.find(w) < 0:
                return False
    return True


def complete_monomial_set(div, U, ord: MonomialOrdering, budget=None) -> CompletionResult:
    """Minimal involutive completion of ``U`` by non-multiplicative prolongations.

    At each step the lowest prolongation ``u*x`` (under ``ord``) without an
    involutive divisor is added; ties go to the smallest ``u``, then the
    lowest variable index.  Raises :class:`NonTermination` once a prolongation
    would exceed the degree budget.
    """
    div = get_division(div)
    if not div.continuous:
        raise FixtureError("completion requires a continuous division, got %r" % (div,))
    U = _as_set(U)
    if not U:
        raise ValueError("cannot complete an empty monomial set")
    budget = resolve_budget(budget, (sum(u) for u in U))
    current = set(U)
    added: List[Monomial] = []
    key = ord.key
    finder = DivisorFinder(div, current)
    # prolongations without an involutive divisor, as (key(w), key(u), i, w)
    pending = None
    while True:
        if pending is None:
            fresh = zip(finder.lms, finder.mults)
            pending = []
        else:
            fresh = [(finder.lms[-1], finder.mults[-1])]
            pending = [c for c in pending if finder.find(c[3]) < 0]
        for u, i, w in _prolongations(fresh):
            if finder.find(w) < 0:
                pending.append((key(w), key(u), i, w))
        if not pending:
            break
        w = min(pending)[3]
        if sum(w) > budget.max_total_degree:
            raise NonTermination(
                "completion exceeded degree budget %d" % budget.max_total_degree,
                budget=budget.max_total_degree,
                partial=sorted(current, key=key),
                added=added,
            )
        current.add(w)
        added.append(w)
        mults = div.multiplicative_map(current)
        if all(mults[u] == m for u, m in zip(finder.lms, finder.mults)):
            finder.extend(w, mults[w])
        else:
            finder = DivisorFinder(div, current)
            pending = None
    return CompletionResult(tuple(sorted(current, key=key)), tuple(added))


def continuity_chain(div, U, start: Monomial, choices) -> List[Monomial]:
    """Follow ``u_{i+1} |_L u_i * x_j`` with ``x_j`` non-multiplicative for ``u_i``.

    ``choices`` picks one divisor from the list of candidates (e.g.
    ``random.choice``).  The chain
    stops when no prolongation has an involutive divisor; repeated elements
    would violate continuity, so the chain is also cut on a repeat.
    """
    U = _as_set(U)
    finder = DivisorFinder(div, U)
    mults = dict(zip(finder.lms, finder.mults))
    chain = [tuple(start)]
    seen = {chain[0]}
    while True:
        u = chain[-1]
        options = []
        for j in range(len(u)):
            if j in mults[u]:
                continue
            w = list(u)
            w[j] += 1
            pos = finder.find(tuple(w))
            if pos >= 0:
                options.append(finder.lms[pos])
        if not options:
            return chain
        nxt = choices(options)
        chain.append(nxt)
        if nxt in seen:
            return chain
        seen.add(nxt)
