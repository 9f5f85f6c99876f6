"""Involutive monomial divisions.

A division splits the variables into multiplicative and non-multiplicative
ones for each element ``u`` of a finite monomial set ``U``; ``u`` divides
``w`` involutively when ``u | w`` and ``w/u`` contains multiplicative
variables of ``u`` only.  Variables are referred to by their 0-based position.
"""

from __future__ import annotations

from collections import namedtuple
from typing import Dict, FrozenSet, Iterable, Mapping, Optional

from .polyring import DimensionError, Monomial


class DivisionError(ValueError):
    pass


class MembershipError(DivisionError):
    """Thomas and Janet separations are only defined for members of the set."""


class FixtureError(DivisionError):
    """A table division was queried outside its table, or used where it cannot be."""


Separation = namedtuple("Separation", "multiplicative nonmultiplicative")


class Division:
    """Base class; subclasses implement :meth:`multiplicative_map`."""

    name = "division"
    #: continuous divisions make local involutivity sufficient for completion
    continuous = True
    #: Pommaret and table divisions look at ``u`` alone
    needs_membership = True

    def multiplicative_map(self, U) -> Dict[Monomial, FrozenSet[int]]:
        raise NotImplementedError

    def multiplicative(self, u: Monomial, U) -> FrozenSet[int]:
        u = tuple(u)
        U = _as_set(U)
        if self.needs_membership and u not in U:
            raise MembershipError("%r is not an element of the monomial set" % (u,))
        return self.multiplicative_map(U | {u})[u]

    def __repr__(self):
        return self.name.capitalize()

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self))


def _as_set(U) -> FrozenSet[Monomial]:
    U = frozenset(tuple(u) for u in U)
    if U:
        n = len(next(iter(U)))
        if any(len(u) != n for u in U):
            raise DimensionError("monomials of different arity in one set")
    return U


class Thomas(Division):
    """``x_i`` is multiplicative for ``u`` iff ``deg_i(u)`` is maximal over ``U``."""

    name = "thomas"

    def multiplicative_map(self, U):
        U = list(_as_set(U))
        if not U:
            return {}
        h = tuple(map(max, *U)) if len(U) > 1 else U[0]
        return {u: frozenset(i for i, (e, top) in enumerate(zip(u, h)) if e == top) for u in U}


class Janet(Division):
    """Janet's division, computed by recursive partition on leading exponents."""

    name = "janet"

    def multiplicative_map(self, U):
        U = list(_as_set(U))
        result = {u: set() for u in U}
        if not U:
            return {}
        n = len(U[0])

        def split(group, i):
            top = max(u[i] for u in group)
            for u in group:
                if u[i] == top:
                    result[u].add(i)
            if i + 1 == n:
                return
            classes = {}
            for u in group:
                classes.setdefault(u[i], []).append(u)
            for sub in classes.values():
                split(sub, i + 1)

        split(U, 0)
        return {u: frozenset(s) for u, s in result.items()}


class Pommaret(Division):
    """For ``u = x_1^d_1 ... x_k^d_k`` with ``d_k > 0``, ``x_k .. x_n`` are multiplicative."""

    name = "pommaret"
    needs_membership = False

    @staticmethod
    def of(u: Monomial) -> FrozenSet[int]:
        n = len(u)
        k = 0
        for i in range(n - 1, -1, -1):
            if u[i]:
                k = i
                break
        return frozenset(range(k, n))

    def multiplicative_map(self, U):
        return {u: self.of(u) for u in _as_set(U)}


class TableDivision(Division):
    """A division given by an explicit table ``monomial -> multiplicative indices``.

    Monomials missing from the table get ``default`` if one is supplied,
    otherwise a :class:`FixtureError` is raised.  Table divisions are not
    assumed continuous, so completion refuses them.
    """

    name = "table"
    continuous = False
    needs_membership = False

    def __init__(self, table: Mapping[Monomial, Iterable[int]], default: Optional[Iterable[int]] = None):
        self.table = {tuple(m): frozenset(v) for m, v in table.items()}
        self.default = None if default is None else frozenset(default)

    def multiplicative_map(self, U):
        out = {}
        for u in _as_set(U):
            if u in self.table:
                out[u] = self.table[u]
            elif self.default is not None:
                out[u] = self.default
            else:
                raise FixtureError("table division undefined at %r" % (u,))
        return out

    def __eq__(self, other):
        return isinstance(other, TableDivision) and self.table == other.table and self.default == other.default

    def __hash__(self):
        return hash(frozenset(self.table.items()))


THOMAS = Thomas()
JANET = Janet()
POMMARET = Pommaret()

DIVISIONS = {"thomas": THOMAS, "janet": JANET, "pommaret": POMMARET}


def get_division(div) -> Division:
    if isinstance(div, Division):
        return div
    try:
        return DIVISIONS[str(div).lower()]
    except KeyError:
        raise DivisionError("unknown division %r (expected thomas, janet or pommaret)" % (div,)) from None


def separation(div, u: Monomial, U) -> Separation:
    """Multiplicative and non-multiplicative variable indices of ``u`` in ``U``."""
    div = get_division(div)
    u = tuple(u)
    mult = div.multiplicative(u, U)
    return Separation(mult, frozenset(range(len(u))) - mult)


def _divides_with(u, w, mult):
    for i, (a, b) in enumerate(zip(u, w)):
        if b < a or (b > a and i not in mult):
            return False
    return True


def involutive_divides(div, u: Monomial, U, w: Monomial) -> bool:
    """True iff ``u`` divides ``w`` and ``w/u`` uses only multiplicative variables of ``u``."""
    u, w = tuple(u), tuple(w)
    if len(u) != len(w):
        raise DimensionError("arity mismatch: %r vs %r" % (u, w))
    return _divides_with(u, w, get_division(div).multiplicative(u, U))


def _scan_order(U, ord):
    if ord is None:
        return sorted(U, key=lambda m: (sum(m), m))
    return sorted(U, key=ord.key)


def find_involutive_divisor(div, U, w: Monomial, ord=None) -> Optional[Monomial]:
    """Return an involutive divisor of ``w`` in ``U``, or None.

    Elements are scanned ascending under ``ord`` (degree then exponents when
    ``ord`` is None); on autoreduced sets the divisor is unique anyway.
    """
    div = get_division(div)
    U = _as_set(U)
    if not U:
        return None
    w = tuple(w)
    mults = div.multiplicative_map(U)
    for u in _scan_order(U, ord):
        if _divides_with(u, w, mults[u]):
            return u
    return None


def is_monomial_autoreduced(div, U) -> bool:
    """True iff no element of ``U`` is involutively divisible by another element."""
    div = get_division(div)
    U = _as_set(U)
    mults = div.multiplicative_map(U)
    for u in U:
        for v in U:
            if u != v and _divides_with(v, u, mults[v]):
                return False
    return True


class DivisorFinder:
    """Involutive divisor lookup against a fixed set of leading monomials.

    ``find(w)`` returns the position in ``lms`` of the first involutive divisor
    of ``w`` in scan order, or -1.  For every variable ``i`` and exponent ``e``
    a bit mask records which elements admit ``w[i] == e``; a query is the
    intersection of ``n`` masks, with bit order equal to scan order.
    """

    __slots__ = ("lms", "mults", "_masks", "_beyond", "_order", "_bit", "_all")

    def __init__(self, div, lms, order_key=None):
        div = get_division(div)
        self.lms = [tuple(m) for m in lms]
        mults = div.multiplicative_map(self.lms)
        self.mults = [mults[m] for m in self.lms]
        order = list(range(len(self.lms)))
        if order_key is not None:
            order.sort(key=lambda p: order_key(self.lms[p]))
        self._order = order
        self._bit = {pos: 1 << b for b, pos in enumerate(order)}
        self._all = (1 << len(order)) - 1
        n = len(self.lms[0]) if self.lms else 0
        masks, beyond = [], []
        for i in range(n):
            top = max(u[i] for u in self.lms)
            row = [0] * (top + 1)
            free = 0
            for b, pos in enumerate(order):
                a = self.lms[pos][i]
                bit = 1 << b
                if i in self.mults[pos]:
                    free |= bit
                    for e in range(a, top + 1):
                        row[e] |= bit
                else:
                    row[a] |= bit
            masks.append(row)
            beyond.append(free)
        self._masks = masks
        self._beyond = beyond

    def extend(self, u: Monomial, mult: FrozenSet[int]) -> int:
        """Append ``u`` with multiplicative set ``mult`` as the last element in scan order.

        Only valid when the other elements keep their multiplicative sets.
        """
        u = tuple(u)
        pos = b = len(self.lms)
        bit = 1 << b
        self.lms.append(u)
        self.mults.append(frozenset(mult))
        self._order.append(pos)
        self._bit[pos] = bit
        self._all |= bit
        if not self._masks:
            self._masks = [[0] for _ in u]
            self._beyond = [0] * len(u)
        for i, a in enumerate(u):
            row = self._masks[i]
            if a >= len(row):
                row.extend([self._beyond[i]] * (a + 1 - len(row)))
            if i in self.mults[pos]:
                self._beyond[i] |= bit
                for e in range(a, len(row)):
                    row[e] |= bit
            else:
                row[a] |= bit
        return pos

    def multiplicative(self, pos) -> FrozenSet[int]:
        return self.mults[pos]

    def _candidates(self, w: Monomial) -> int:
        c = self._all
        for row, free, e in zip(self._masks, self._beyond, w):
            c &= row[e] if e < len(row) else free
            if not c:
                return 0
        return c

    def _first(self, c: int) -> int:
        if not c:
            return -1
        return self._order[(c & -c).bit_length() - 1]

    def find(self, w: Monomial) -> int:
        return self._first(self._candidates(w))

    def find_excluding(self, w: Monomial, skip: int) -> int:
        return self._first(self._candidates(w) & ~self._bit.get(skip, 0))

    def find_among(self, w: Monomial, positions) -> int:
        allowed = 0
        for p in positions:
            allowed |= self._bit[p]
        return self._first(self._candidates(w) & allowed)
