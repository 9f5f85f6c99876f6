"""Exact multivariate polynomials over the rationals.

Monomials are dense exponent tuples over a fixed, ordered variable table.
Position ``i`` holds the exponent of the ``i``-th declared variable, and the
declaration order fixes the precedence ``x1 > x2 > ... > xn`` used by every
ordering and by the Janet and Pommaret divisions.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass, field
from fractions import Fraction
from operator import add, neg, sub
from typing import Callable, Iterable, Optional, Sequence, Tuple

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    QQ = Fraction

Monomial = Tuple[int, ...]
Term = namedtuple("Term", "coeff mono")

ORDERINGS = ("lex", "deglex", "degrevlex")


class PolyError(ValueError):
    """Base class for errors raised by the polynomial machinery."""


class DimensionError(PolyError):
    """Monomials or polynomials over different numbers of variables."""


class ZeroPolynomialError(PolyError):
    """The zero polynomial has no leading term."""


def to_rational(value):
    """Convert an int, Fraction, mpq or ``"a/b"`` string to an exact rational."""
    if isinstance(value, QQ):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not supported")
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        value = Fraction(value)
        return QQ(value.numerator, value.denominator)
    return QQ(value)


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names; earlier names are greater."""

    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise PolyError("a variable table needs at least one variable")
        if any(not isinstance(n, str) or not n for n in names):
            raise PolyError("variable names must be non-empty strings")
        if len(set(names)) != len(names):
            raise PolyError("duplicate variable names in %r" % (names,))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def monomial(self, **exponents) -> Monomial:
        """Build a monomial from keyword exponents, e.g. ``monomial(x=2, z=1)``."""
        exps = [0] * len(self.names)
        for name, e in exponents.items():
            exps[self.names.index(name)] = e
        return tuple(exps)


def _lex_key(m):
    return m


def _lex_neg_key(m):
    return tuple(map(neg, m))


def _deglex_key(m):
    return (sum(m), m)


def _deglex_neg_key(m):
    return (-sum(m), tuple(map(neg, m)))


def _degrevlex_key(m):
    # equal degree: the smaller exponent in the last differing variable wins
    return (sum(m), tuple(map(neg, reversed(m))))


def _degrevlex_neg_key(m):
    return (-sum(m), tuple(reversed(m)))


_KEYS = {
    "lex": (_lex_key, _lex_neg_key),
    "deglex": (_deglex_key, _deglex_neg_key),
    "degrevlex": (_degrevlex_key, _degrevlex_neg_key),
}


@dataclass(frozen=True)
class MonomialOrdering:
    """An admissible monomial ordering over a variable table.

    ``key(m)`` is increasing in the ordering, ``neg_key(m)`` decreasing; both
    are plain tuples so that sorting and heaps work without a comparator.
    """

    kind: str
    vars: VarTable
    key: Callable = field(init=False, repr=False, compare=False)
    neg_key: Callable = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in _KEYS:
            raise PolyError("unknown ordering %r (expected one of %s)"
                            % (self.kind, ", ".join(ORDERINGS)))
        if not isinstance(self.vars, VarTable):
            object.__setattr__(self, "vars", VarTable(tuple(self.vars)))
        key, neg_key = _KEYS[self.kind]
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "neg_key", neg_key)

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def one(self) -> Monomial:
        return (0,) * len(self.vars)

    def variable(self, i: int) -> Monomial:
        m = [0] * len(self.vars)
        m[i] = 1
        return tuple(m)

    def with_vars(self, vars) -> "MonomialOrdering":
        return MonomialOrdering(self.kind, vars if isinstance(vars, VarTable) else VarTable(tuple(vars)))

    def with_kind(self, kind: str) -> "MonomialOrdering":
        return MonomialOrdering(kind, self.vars)

    # polynomial constructors

    def zero(self) -> "Polynomial":
        return Polynomial._new(self, ())

    def constant(self, c) -> "Polynomial":
        return self.from_dict({self.one(): to_rational(c)})

    def gen(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.vars.index(i)
        return Polynomial._new(self, (Term(QQ(1), self.variable(i)),))

    def gens(self):
        return tuple(self.gen(i) for i in range(len(self.vars)))

    def from_dict(self, d) -> "Polynomial":
        """Build a polynomial from ``{monomial: coeff}``; zero entries are dropped."""
        key = self.key
        items = sorted(((m, c) for m, c in d.items() if c), key=lambda mc: key(mc[0]), reverse=True)
        return Polynomial._new(self, tuple(Term(c, m) for m, c in items))

    def monomial_poly(self, m: Monomial, c=1) -> "Polynomial":
        _check_arity(m, len(self.vars))
        return self.from_dict({tuple(m): to_rational(c)})


def _check_arity(m, n):
    if len(m) != n:
        raise DimensionError("monomial %r has %d exponents, expected %d" % (m, len(m), n))


def compare_monomials(ord: MonomialOrdering, u: Monomial, v: Monomial) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    n = ord.nvars
    _check_arity(u, n)
    _check_arity(v, n)
    ku, kv = ord.key(tuple(u)), ord.key(tuple(v))
    return (ku > kv) - (ku < kv)


def monomial_mul(u: Monomial, v: Monomial) -> Monomial:
    if len(u) != len(v):
        raise DimensionError("arity mismatch: %r vs %r" % (u, v))
    return tuple(map(add, u, v))


def monomial_divides(u: Monomial, v: Monomial) -> Optional[Monomial]:
    """Return ``v/u`` if ``u`` divides ``v``, else None."""
    if len(u) != len(v):
        raise DimensionError("arity mismatch: %r vs %r" % (u, v))
    q = tuple(map(sub, v, u))
    if min(q, default=0) < 0:
        return None
    return q


def monomial_lcm(u: Monomial, v: Monomial) -> Monomial:
    if len(u) != len(v):
        raise DimensionError("arity mismatch: %r vs %r" % (u, v))
    return tuple(map(max, u, v))


def monomial_deg(u: Monomial) -> int:
    return sum(u)


def canonicalize(raw: Iterable[Tuple[object, Monomial]], ord: MonomialOrdering) -> "Polynomial":
    """Merge like monomials, drop zeros and sort descending under ``ord``.

    ``raw`` is a sequence of ``(coeff, monomial)`` pairs.
    """
    n = ord.nvars
    acc = {}
    for c, m in raw:
        m = tuple(m)
        _check_arity(m, n)
        if any(e < 0 for e in m):
            raise PolyError("negative exponent in %r" % (m,))
        acc[m] = acc.get(m, 0) + to_rational(c)
    return ord.from_dict(acc)


class Polynomial:
    """An immutable polynomial with terms sorted descending under its ordering."""

    __slots__ = ("ord", "terms", "_dict", "_hash")

    def __init__(self, ord: MonomialOrdering, raw=()):
        p = canonicalize(raw, ord)
        self.ord = ord
        self.terms = p.terms
        self._dict = None
        self._hash = None

    @classmethod
    def _new(cls, ord, terms):
        self = object.__new__(cls)
        self.ord = ord
        self.terms = terms
        self._dict = None
        self._hash = None
        return self

    # leading data

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def LT(self) -> Term:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return self.terms[0]

    @property
    def LM(self) -> Monomial:
        return self.LT.mono

    @property
    def LC(self):
        return self.LT.coeff

    def monomials(self):
        return [t.mono for t in self.terms]

    def as_dict(self) -> dict:
        if self._dict is None:
            self._dict = {t.mono: t.coeff for t in self.terms}
        return dict(self._dict)

    def coeff(self, m: Monomial):
        if self._dict is None:
            self._dict = {t.mono: t.coeff for t in self.terms}
        return self._dict.get(tuple(m), QQ(0))

    def degree(self) -> int:
        return max((sum(t.mono) for t in self.terms), default=-1)

    def is_monic(self) -> bool:
        return bool(self.terms) and self.terms[0].coeff == 1

    # arithmetic

    def _check(self, other):
        if other.ord != self.ord:
            if other.ord.vars != self.ord.vars:
                raise DimensionError("polynomials over different variable tables")
            raise PolyError("polynomials under different orderings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ord.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        d = self.as_dict()
        for c, m in other.terms:
            d[m] = d.get(m, 0) + c
        return self.ord.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._new(self.ord, tuple(Term(-c, m) for c, m in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def mul_term(self, c, m: Monomial) -> "Polynomial":
        """Multiply by the term ``c * m``; ordering is preserved so no re-sort is needed."""
        c = to_rational(c)
        if not c:
            return self.ord.zero()
        _check_arity(m, self.ord.nvars)
        return Polynomial._new(self.ord, tuple(Term(a * c, tuple(map(add, u, m))) for a, u in self.terms))

    def mul_monomial(self, m: Monomial) -> "Polynomial":
        return self.mul_term(1, m)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = to_rational(other)
            if not c:
                return self.ord.zero()
            return Polynomial._new(self.ord, tuple(Term(a * c, u) for a, u in self.terms))
        self._check(other)
        acc = {}
        for a, u in self.terms:
            for b, v in other.terms:
                w = tuple(map(add, u, v))
                acc[w] = acc.get(w, 0) + a * b
        return self.ord.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a non-negative integer")
        result = self.ord.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0].coeff
        if lc == 1:
            return self
        inv = 1 / lc
        return Polynomial._new(self.ord, tuple(Term(c * inv, m) for c, m in self.terms))

    def reorder(self, ord: MonomialOrdering) -> "Polynomial":
        """The same polynomial sorted under another ordering on the same variables."""
        if ord == self.ord:
            return self
        if ord.vars != self.ord.vars:
            raise DimensionError("reorder needs the same variable table")
        return ord.from_dict({m: c for c, m in self.terms})

    def permute(self, ord: MonomialOrdering, perm: Sequence[int]) -> "Polynomial":
        """Rename variables: new variable ``j`` is old variable ``perm[j]``."""
        return ord.from_dict({tuple(m[i] for i in perm): c for c, m in self.terms})

    # comparison

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ord.vars == other.ord.vars and self.as_dict() == other.as_dict()
        if not self.terms:
            return other == 0
        try:
            return self == self.ord.constant(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((m, c) for c, m in self.terms))
        return self._hash

    def __repr__(self):
        from .sysio import format_polynomial
        return "Polynomial(%r)" % format_polynomial(self)

    def __str__(self):
        from .sysio import format_polynomial
        return format_polynomial(self)


def leading_data(p: Polynomial):
    """Return ``(lt, lm, lc)`` of a nonzero polynomial."""
    lt = p.LT
    return lt, lt.mono, lt.coeff


def lm_key(p: Polynomial):
    return p.ord.key(p.LM)


def sort_by_lm(polys: Iterable[Polynomial]):
    """Sort nonzero polynomials ascending by leading monomial."""
    return sorted(polys, key=lm_key)
