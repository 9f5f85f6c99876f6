"""Polynomial reduction: involutive and conventional normal forms.

Reducers are always scanned ascending by leading monomial and the highest
reducible term of the working polynomial is eliminated first.  The
Buchberger engine at the bottom is deliberately plain; it serves as an
independent check on the involutive algorithms, not as a fast path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from operator import add, sub
from typing import List, Optional, Sequence, Tuple

from .divisions import DivisorFinder, get_division
from .polyring import (
    MonomialOrdering,
    PolyError,
    Polynomial,
    Term,
    monomial_lcm,
    sort_by_lm,
)


class InputError(PolyError):
    """Invalid polynomial input (zero reducers, empty sets, mixed rings)."""


@dataclass
class ReductionTrace:
    """Steps ``(reducer index, eliminated monomial, multiplier term)`` and the result."""

    steps: List[Tuple[int, tuple, Term]] = field(default_factory=list)
    final: Optional[Polynomial] = None


def _prepare(F, ord: Optional[MonomialOrdering], p: Optional[Polynomial] = None):
    F = list(F)
    if ord is None:
        if p is not None:
            ord = p.ord
        elif F:
            ord = F[0].ord
        else:
            raise InputError("cannot infer an ordering from an empty input")
    out = []
    for f in F:
        if not isinstance(f, Polynomial):
            raise InputError("expected Polynomial, got %r" % (f,))
        if f.ord.vars != ord.vars:
            raise InputError("polynomial over a different variable table")
        out.append(f.reorder(ord))
    if p is not None:
        if p.ord.vars != ord.vars:
            raise InputError("polynomial over a different variable table")
        p = p.reorder(ord)
    return out, ord, p


def _check_nonzero(F):
    for f in F:
        if not f:
            raise InputError("zero polynomial among the reducers")


def _reduce(p: Polynomial, F: Sequence[Polynomial], find, trace: Optional[ReductionTrace] = None) -> Polynomial:
    """Top-down full reduction of ``p``; ``find(m)`` names a reducer index or -1."""
    ord = p.ord
    neg_key = ord.neg_key
    h = {m: c for c, m in p.terms}
    heap = [(neg_key(m), m) for m in h]
    heapify(heap)
    rem = []
    leads = [(f.terms[0].coeff, f.terms[0].mono, f.terms[1:]) for f in F]
    while heap:
        _, m = heappop(heap)
        c = h.pop(m)
        if not c:
            continue
        pos = find(m)
        if pos < 0:
            rem.append(Term(c, m))
            continue
        lc, lm, tail = leads[pos]
        q = tuple(map(sub, m, lm))
        a = c / lc
        if trace is not None:
            trace.steps.append((pos, m, Term(a, q)))
        for b, u in tail:
            w = tuple(map(add, u, q))
            old = h.get(w)
            if old is None:
                h[w] = -a * b
                heappush(heap, (neg_key(w), w))
            else:
                h[w] = old - a * b
    # terms were emitted in descending order
    return Polynomial._new(ord, tuple(rem))


def _conventional_finder(F, ord):
    order = sorted(range(len(F)), key=lambda i: ord.key(F[i].LM))
    lms = [(i, F[i].LM) for i in order]

    def find(m):
        for i, u in lms:
            for a, b in zip(u, m):
                if b < a:
                    break
            else:
                return i
        return -1

    return find


def involutive_normal_form(p: Polynomial, F, div, ord: Optional[MonomialOrdering] = None, trace: bool = False):
    """Involutive normal form of ``p`` modulo ``F``.

    Separations are taken relative to the leading monomial set of ``F``.
    With ``trace=True`` a ``(result, ReductionTrace)`` pair is returned.
    """
    F, ord, p = _prepare(F, ord, p)
    _check_nonzero(F)
    tr = ReductionTrace() if trace else None
    if not p or not F:
        result = p
    else:
        finder = DivisorFinder(div, [f.LM for f in F], order_key=ord.key)
        result = _reduce(p, F, finder.find, tr)
    if trace:
        tr.final = result
        return result, tr
    return result


def conventional_normal_form(p: Polynomial, F, ord: Optional[MonomialOrdering] = None, trace: bool = False):
    """Full normal form of ``p`` modulo ``F`` under ordinary divisibility."""
    F, ord, p = _prepare(F, ord, p)
    _check_nonzero(F)
    tr = ReductionTrace() if trace else None
    if not p or not F:
        result = p
    else:
        result = _reduce(p, F, _conventional_finder(F, ord), tr)
    if trace:
        tr.final = result
        return result, tr
    return result


def _reducible(h, idx, finder, among=None) -> bool:
    """Does ``h`` (at position ``idx``) have a term involutively divisible by another element?

    ``among`` restricts the candidate divisors to the given positions.
    """
    if among is None:
        if finder.find_excluding(h.terms[0].mono, idx) >= 0:
            return True
        return any(finder.find(t.mono) >= 0 for t in h.terms[1:])
    among = [p for p in among if p != idx]
    if not among:
        return False
    if finder.find_among(h.terms[0].mono, among) >= 0:
        return True
    return any(finder.find_among(t.mono, among) >= 0 for t in h.terms[1:])


def _autoreduce(H, div, ord, verified=None):
    """Involutive autoreduction loop.

    ``verified[i]``, when given, is a set of leading monomials that element
    ``i`` is already known to be irreducible against.  Multiplicative sets of
    the three built-in divisions only shrink as the set grows, so while that
    set stays inside the current leading monomials only the newcomers need
    checking.
    """
    H = list(H)
    verified = list(verified) if verified is not None else [None] * len(H)
    key = ord.key
    while H:
        lms = [h.LM for h in H]
        L = frozenset(lms)
        finder = DivisorFinder(div, lms, order_key=key)
        found = -1
        for idx in sorted(range(len(H)), key=lambda i: key(lms[i])):
            seen = verified[idx]
            if seen is not None and seen <= L:
                fresh = [p for p, m in enumerate(lms) if m not in seen]
                hit = _reducible(H[idx], idx, finder, fresh)
            else:
                hit = _reducible(H[idx], idx, finder)
            if hit:
                found = idx
                break
            verified[idx] = L
        if found < 0:
            break
        h = H.pop(found)
        verified.pop(found)
        r = involutive_normal_form(h, H, div, ord) if H else h
        if r:
            H.append(r)
            verified.append(None)
    return H


def involutive_autoreduce(F, div, ord: Optional[MonomialOrdering] = None) -> List[Polynomial]:
    """Involutively autoreduce ``F``; the result is monic and sorted ascending by lm."""
    div = get_division(div)
    F, ord, _ = _prepare(F, ord) if F else ([], ord, None)
    H = _autoreduce([f for f in F if f], div, ord)
    return sort_by_lm(_unique(h.monic() for h in H))


def _unique(polys):
    seen = set()
    out = []
    for p in polys:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def conventional_autoreduce(F, ord: Optional[MonomialOrdering] = None) -> List[Polynomial]:
    """Interreduce ``F``: monic, no term of any element divisible by another's lm."""
    F, ord, _ = _prepare(F, ord) if F else ([], ord, None)
    G = sort_by_lm(_unique(f.monic() for f in F if f))
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(G):
            others = G[:i] + G[i + 1:]
            if not others:
                break
            r = conventional_normal_form(g, others, ord)
            if r != g:
                G = others + ([r.monic()] if r else [])
                G = sort_by_lm(_unique(G))
                changed = True
                break
    return G


def s_polynomial(f: Polynomial, g: Polynomial, ord: Optional[MonomialOrdering] = None) -> Polynomial:
    """``lcm/lt(f) * f - lcm/lt(g) * g``."""
    (f, g), ord, _ = _prepare([f, g], ord)
    if not f or not g:
        raise InputError("S-polynomial of a zero polynomial")
    lf, lg = f.LT, g.LT
    w = monomial_lcm(lf.mono, lg.mono)
    return (f.mul_term(1 / lf.coeff, tuple(map(sub, w, lf.mono)))
            - g.mul_term(1 / lg.coeff, tuple(map(sub, w, lg.mono))))


def buchberger_reduced_basis(F, ord: Optional[MonomialOrdering] = None) -> List[Polynomial]:
    """Reduced monic Groebner basis by Buchberger's algorithm.

    Critical pairs are taken lowest lcm first; pairs with coprime leading
    monomials are skipped, and nothing else.
    """
    F, ord, _ = _prepare(F, ord) if F else ([], ord, None)
    G = _unique(f.monic() for f in F if f)
    if not G:
        return []
    key = ord.key
    pairs = {(i, j) for i in range(len(G)) for j in range(i)}
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(monomial_lcm(G[ij[0]].LM, G[ij[1]].LM)), ij))
        pairs.discard((i, j))
        u, v = G[i].LM, G[j].LM
        if all(a == 0 or b == 0 for a, b in zip(u, v)):
            continue
        r = conventional_normal_form(s_polynomial(G[i], G[j], ord), G, ord)
        if r:
            G.append(r.monic())
            k = len(G) - 1
            pairs.update((k, m) for m in range(k))
    return conventional_autoreduce(G, ord)
