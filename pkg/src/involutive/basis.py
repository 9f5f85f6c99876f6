"""Involutive bases of polynomial ideals.

:func:`involutive_basis` grows a basis by non-multiplicative prolongations,
always treating the lowest prolongation first.  Each basis element travels in
a :class:`Triple` with the leading monomial of the ancestor it descends from
and the set of variables already used to prolong it; the ancestors drive the
involutive form of Buchberger's chain criterion, which skips prolongations
whose normal form is known to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count
from typing import List, Optional, Set, Tuple

from .completion import CompletionBudget, NonTermination, resolve_budget
from .divisions import JANET, Division, DivisorFinder, FixtureError, get_division
from .polyring import Monomial, MonomialOrdering, Polynomial, monomial_lcm, sort_by_lm
from .reduction import (
    InputError,
    _prepare,
    _autoreduce,
    _reduce,
    _unique,
    buchberger_reduced_basis,
    conventional_autoreduce,
    conventional_normal_form,
    involutive_autoreduce,
    involutive_normal_form,
    s_polynomial,
)


@dataclass
class Triple:
    poly: Polynomial
    ancestor_lm: Monomial
    processed: Set[int] = field(default_factory=set)
    serial: int = 0


@dataclass
class BasisOptions:
    division: Division = JANET
    ordering: Optional[MonomialOrdering] = None
    budget: Optional[CompletionBudget] = None
    criterion_enabled: bool = True

    def __post_init__(self):
        self.division = get_division(self.division)
        if isinstance(self.budget, int):
            self.budget = CompletionBudget(self.budget)


@dataclass
class BasisStats:
    prolongations_examined: int = 0
    criterion_skips: int = 0
    nf_calls: int = 0
    zero_reductions: int = 0
    basis_size: int = 0

    def as_dict(self):
        return dict(self.__dict__)


@dataclass
class BasisResult:
    """Output of :func:`involutive_basis`.

    ``added_lms`` lists the leading monomials of the polynomials inserted by
    the main loop in order.  ``repeated_prolongations`` counts
    ``(lm, variable)`` pairs examined more than once and ``reappeared_lms``
    the leading monomials that came back after being reduced away; both are
    diagnostics and stay empty on a correct run.  ``events`` records every
    examined prolongation as ``(lm, variable, outcome)`` with outcome one of
    ``"skip"`` (criterion), ``"zero"``, ``"reduced"`` (new polynomial after a
    top reduction) or ``"irreducible"`` (no involutive divisor of the lm).
    """

    basis: List[Polynomial]
    stats: BasisStats
    added_lms: List[Monomial] = field(default_factory=list)
    repeated_prolongations: int = 0
    reappeared_lms: List[Monomial] = field(default_factory=list)
    events: List[Tuple[Monomial, int, str]] = field(default_factory=list)

    def __iter__(self):
        return iter((self.basis, self.stats))


def _prolong(p: Polynomial, i: int) -> Polynomial:
    x = [0] * p.ord.nvars
    x[i] = 1
    return p.mul_monomial(tuple(x))


def _criterion(t: Triple, other: Triple, w: Monomial) -> bool:
    """True when the prolongation ``lm(t.poly) * x == w`` provably reduces to zero.

    ``other`` holds the involutive divisor of ``w``.  The chain condition
    compares the ancestors' lcm with ``w``; the coprime case (the divisor's
    lm is the prolonging variable itself) is Buchberger's product criterion.
    """
    if monomial_lcm(t.ancestor_lm, other.ancestor_lm) != w:
        return True
    return all(a == 0 or b == 0 for a, b in zip(t.poly.LM, other.poly.LM))


def _options(opts, kwargs) -> BasisOptions:
    if opts is None:
        return BasisOptions(**kwargs)
    if kwargs:
        raise TypeError("pass either a BasisOptions instance or keyword options, not both")
    return opts


def involutive_basis(F, opts: Optional[BasisOptions] = None, **kwargs) -> BasisResult:
    """Compute an involutive basis of the ideal generated by ``F``.

    Options are given as a :class:`BasisOptions` or as its keyword fields
    (``division``, ``ordering``, ``budget``, ``criterion_enabled``).  The
    result basis is monic and sorted ascending by leading monomial.

    Raises :class:`NonTermination` when a new leading monomial exceeds the
    degree budget, which is how a Pommaret run on a set without a finite
    Pommaret completion ends.
    """
    opts = _options(opts, kwargs)
    div = opts.division
    if not div.continuous:
        raise FixtureError("involutive_basis requires a continuous division, got %r" % (div,))
    F, ord, _ = _prepare(F, opts.ordering) if F else ([], None, None)
    if not any(F):
        raise InputError("involutive_basis needs at least one nonzero polynomial")
    budget = resolve_budget(opts.budget, (f.degree() for f in F if f))
    key = ord.key
    serials = count()

    stats = BasisStats()
    added: List[Monomial] = []
    seen_pairs: Set[Tuple[Monomial, int]] = set()
    dropped: Set[Monomial] = set()
    result = BasisResult([], stats, added)

    G = conventional_autoreduce(F, ord)
    T = [Triple(g, g.LM, set(), next(serials)) for g in G]
    finder = DivisorFinder(div, [t.poly.LM for t in T])

    def fail(h):
        stats.basis_size = len(T)
        raise NonTermination(
            "leading monomial of degree %d exceeds budget %d" % (sum(h.LM), budget.max_total_degree),
            budget=budget.max_total_degree,
            partial=sort_by_lm(t.poly for t in T),
            added=added,
            stats=stats,
        )

    while True:
        best = None
        for pos, t in enumerate(T):
            lm = t.poly.LM
            mult = finder.mults[pos]
            for i in range(len(lm)):
                if i in mult or i in t.processed:
                    continue
                w = list(lm)
                w[i] += 1
                w = tuple(w)
                cand = (key(w), t.serial, i)
                if best is None or cand < best[0]:
                    best = (cand, pos, i, w)
        if best is None:
            break
        _, pos, i, w = best
        t = T[pos]
        t.processed.add(i)
        stats.prolongations_examined += 1
        if (t.poly.LM, i) in seen_pairs:
            result.repeated_prolongations += 1
        seen_pairs.add((t.poly.LM, i))

        polys = [s.poly for s in T]
        div_pos = finder.find(w)
        if div_pos >= 0:
            other = T[div_pos]
            if opts.criterion_enabled and _criterion(t, other, w):
                stats.criterion_skips += 1
                result.events.append((t.poly.LM, i, "skip"))
                continue
            stats.nf_calls += 1
            h = _reduce(_prolong(t.poly, i), polys, finder.find)
            if not h:
                stats.zero_reductions += 1
                result.events.append((t.poly.LM, i, "zero"))
                continue
            result.events.append((t.poly.LM, i, "reduced"))
            ancestor = h.LM
        else:
            stats.nf_calls += 1
            h = _reduce(_prolong(t.poly, i), polys, finder.find)
            result.events.append((t.poly.LM, i, "irreducible"))
            ancestor = t.ancestor_lm
        h = h.monic()
        if sum(h.LM) > budget.max_total_degree:
            fail(h)
        added.append(h.LM)

        # autoreduce the enlarged set and carry triple data over by leading monomial
        before = {s.poly.LM: s for s in T}
        before[h.LM] = Triple(h, ancestor, set(), next(serials))
        # every old element and h are irreducible w.r.t. the old leading monomials
        known = frozenset(finder.lms)
        G = _autoreduce(polys + [h], div, ord, [known] * (len(polys) + 1))
        G = sort_by_lm(_unique(g.monic() for g in G))
        lms = [g.LM for g in G]
        finder = DivisorFinder(div, lms)
        newT = []
        for g in G:
            old = before.get(g.LM)
            if old is None:
                if g.LM in dropped:
                    result.reappeared_lms.append(g.LM)
                newT.append(Triple(g, g.LM, set(), next(serials)))
                continue
            p = finder.find(old.ancestor_lm)
            anc = lms[p] if p >= 0 else g.LM
            newT.append(Triple(g, anc, old.processed, old.serial))
        dropped.update(set(before) - set(lms))
        T = newT

    basis = sort_by_lm(t.poly for t in T)
    stats.basis_size = len(basis)
    result.basis = basis
    return result


def _is_involutively_autoreduced(G, finder) -> bool:
    for idx, g in enumerate(G):
        if finder.find_excluding(g.LM, idx) >= 0:
            return False
        for t in g.terms[1:]:
            if finder.find(t.mono) >= 0:
                return False
    return True


def is_involutive_basis(G, div, ord: Optional[MonomialOrdering] = None) -> bool:
    """True iff ``G`` is involutively autoreduced and every non-multiplicative
    prolongation of every element has involutive normal form zero."""
    div = get_division(div)
    G, ord, _ = _prepare(G, ord) if G else ([], ord, None)
    if not G:
        return True
    if any(not g for g in G):
        return False
    finder = DivisorFinder(div, [g.LM for g in G], order_key=ord.key)
    if not _is_involutively_autoreduced(G, finder):
        return False
    for pos, g in enumerate(G):
        mult = finder.mults[pos]
        for i in range(ord.nvars):
            if i not in mult and _reduce(_prolong(g, i), G, finder.find):
                return False
    return True


def involutive_basis_from_groebner(F, div, ord: Optional[MonomialOrdering] = None, budget=None) -> List[Polynomial]:
    """Involutive basis obtained by completing the reduced Groebner basis of ``F``.

    The lowest involutively irreducible non-multiplicative prolongation is
    appended until the leading monomials form an involutive set; tails are
    then involutively autoreduced.
    """
    div = get_division(div)
    if not div.continuous:
        raise FixtureError("completion requires a continuous division, got %r" % (div,))
    F, ord, _ = _prepare(F, ord) if F else ([], ord, None)
    if not any(F):
        raise InputError("need at least one nonzero polynomial")
    budget = resolve_budget(budget, (f.degree() for f in F if f))
    key = ord.key
    current = buchberger_reduced_basis(F, ord)
    added: List[Monomial] = []
    while True:
        while True:
            finder = DivisorFinder(div, [g.LM for g in current])
            best = None
            for pos, g in enumerate(current):
                lm = g.LM
                for i in range(len(lm)):
                    if i in finder.mults[pos]:
                        continue
                    w = list(lm)
                    w[i] += 1
                    w = tuple(w)
                    if finder.find(w) >= 0:
                        continue
                    cand = (key(w), key(lm), i)
                    if best is None or cand < best[0]:
                        best = (cand, pos, i, w)
            if best is None:
                break
            _, pos, i, w = best
            if sum(w) > budget.max_total_degree:
                raise NonTermination(
                    "completion exceeded degree budget %d" % budget.max_total_degree,
                    budget=budget.max_total_degree,
                    partial=sort_by_lm(current),
                    added=added,
                )
            current.append(_prolong(current[pos], i))
            added.append(w)
        current = involutive_autoreduce(current, div, ord)
        if is_involutive_basis(current, div, ord):
            return current


def ideal_member(p: Polynomial, G, div, ord: Optional[MonomialOrdering] = None) -> bool:
    """Decide ``p in Id(G)`` for an involutive basis ``G``."""
    if not is_involutive_basis(G, div, ord):
        raise InputError("ideal_member needs an involutive basis")
    return not involutive_normal_form(p, G, div, ord)


def verify_groebner(G, ord: Optional[MonomialOrdering] = None) -> bool:
    """True iff every S-polynomial of ``G`` reduces to zero modulo ``G``.

    Pairs with coprime leading monomials always reduce to zero and are not formed.
    """
    G, ord, _ = _prepare(G, ord) if G else ([], ord, None)
    if any(not g for g in G):
        raise InputError("zero polynomial in a Groebner basis candidate")
    for a in range(len(G)):
        for b in range(a):
            u, v = G[a].LM, G[b].LM
            if all(x == 0 or y == 0 for x, y in zip(u, v)):
                continue
            if conventional_normal_form(s_polynomial(G[a], G[b], ord), G, ord):
                return False
    return True
