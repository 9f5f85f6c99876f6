import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from involutive.divisions import (
    JANET,
    POMMARET,
    THOMAS,
    DivisionError,
    DivisorFinder,
    FixtureError,
    MembershipError,
    TableDivision,
    find_involutive_divisor,
    get_division,
    involutive_divides,
    is_monomial_autoreduced,
    separation,
)
from involutive.polyring import DimensionError, MonomialOrdering, VarTable

from corpus import F1, U_EXAMPLE, all_monomials, random_monomial_set

XY, Y2, Z = U_EXAMPLE
X, Yv = 0, 1
LEX = MonomialOrdering("lex", VarTable(("x", "y", "z")))

# rows of the three-division example table: element -> (M, NM) as index sets
TABLE = {
    "thomas": {XY: ({0}, {1, 2}), Y2: ({1}, {0, 2}), Z: ({2}, {0, 1})},
    "janet": {XY: ({0, 1, 2}, set()), Y2: ({1, 2}, {0}), Z: ({2}, {0, 1})},
    "pommaret": {XY: ({1, 2}, {0}), Y2: ({1, 2}, {0}), Z: ({2}, {0, 1})},
}


@pytest.mark.parametrize("name", ["thomas", "janet", "pommaret"])
def test_example_table(name):
    for u, (m, nm) in TABLE[name].items():
        sep = separation(name, u, U_EXAMPLE)
        assert sep.multiplicative == m
        assert sep.nonmultiplicative == nm


def test_pommaret_of_one():
    assert separation(POMMARET, (0, 0, 0), U_EXAMPLE).multiplicative == {0, 1, 2}
    assert POMMARET.of((0, 0, 0)) == {0, 1, 2}


def test_membership_required():
    with pytest.raises(MembershipError):
        separation(THOMAS, (1, 0, 0), U_EXAMPLE)
    with pytest.raises(MembershipError):
        separation(JANET, (1, 0, 0), U_EXAMPLE)
    # Pommaret ignores U
    assert separation(POMMARET, (1, 0, 0), U_EXAMPLE).multiplicative == {0, 1, 2}


def test_get_division():
    assert get_division("Janet") is JANET
    assert get_division(THOMAS) is THOMAS
    with pytest.raises(DivisionError):
        get_division("riquier")


def test_involutive_divides_examples():
    assert involutive_divides(THOMAS, XY, U_EXAMPLE, (2, 1, 0))
    assert not involutive_divides(POMMARET, Z, U_EXAMPLE, (0, 1, 1))
    for d in (THOMAS, JANET, POMMARET):
        for u in U_EXAMPLE:
            assert involutive_divides(d, u, U_EXAMPLE, u)
    with pytest.raises(DimensionError):
        involutive_divides(JANET, XY, U_EXAMPLE, (1, 1))


def test_find_divisor_examples():
    assert find_involutive_divisor(JANET, U_EXAMPLE, (1, 1, 1)) == XY
    assert find_involutive_divisor(JANET, U_EXAMPLE, (1, 0, 1)) is None
    for d in (THOMAS, JANET, POMMARET):
        assert find_involutive_divisor(d, [(2, 0, 1)], (2, 0, 1)) == (2, 0, 1)
    assert find_involutive_divisor(JANET, [], (1, 0, 0)) is None


def test_find_divisor_scans_ascending():
    # x and x^2 both Pommaret-divide x^3 in one variable; the lower one wins
    assert find_involutive_divisor(POMMARET, [(2,), (1,)], (3,), LEX.with_vars(("x",))) == (1,)


def test_autoreduced_examples():
    assert is_monomial_autoreduced(THOMAS, U_EXAMPLE)
    assert not is_monomial_autoreduced(POMMARET, [(1, 0), (1, 1)])
    for d in (THOMAS, JANET, POMMARET):
        assert is_monomial_autoreduced(d, [(3, 1, 0)])


def test_f1_janet_nonmultiplicative():
    lms = [f.LM for f in F1()]
    nm = {u: separation(JANET, u, lms).nonmultiplicative for u in lms}
    assert nm == {(1, 3): set(), (1, 2): {Yv}, (1, 1): {Yv}, (1, 0): {Yv}, (0, 3): {X}}


def test_table_division():
    t = TableDivision({(1, 0): [0]})
    assert separation(t, (1, 0), [(1, 0)]).multiplicative == {0}
    with pytest.raises(FixtureError):
        separation(t, (0, 1), [(0, 1)])
    t = TableDivision({(1, 0): [0]}, default=())
    assert separation(t, (0, 1), [(0, 1)]).multiplicative == frozenset()


def test_divisor_finder_matches_naive():
    rng = random.Random(3)
    for _ in range(300):
        U = random_monomial_set(rng, 3, 4, rng.randint(1, 6))
        for d in (THOMAS, JANET, POMMARET):
            finder = DivisorFinder(d, U, order_key=LEX.key)
            mults = d.multiplicative_map(U)
            for w in all_monomials(3, 5):
                naive = [u for u in sorted(U, key=LEX.key)
                         if all(b >= a for a, b in zip(u, w))
                         and all(b == a or i in mults[u] for i, (a, b) in enumerate(zip(u, w)))]
                pos = finder.find(w)
                assert (U[pos] if pos >= 0 else None) == (naive[0] if naive else None)


monoset = st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=6, unique=True)


@settings(max_examples=150)
@given(monoset)
def test_separation_partitions(U):
    for d in (THOMAS, JANET, POMMARET):
        for u in U:
            m, nm = separation(d, u, U)
            assert m | nm == {0, 1, 2} and not m & nm


@settings(max_examples=150)
@given(monoset, st.permutations([0, 1, 2]))
def test_thomas_permutation_invariant(U, perm):
    def p(m):
        return tuple(m[i] for i in perm)

    PU = [p(u) for u in U]
    for u in U:
        m = separation(THOMAS, u, U).multiplicative
        pm = separation(THOMAS, p(u), PU).multiplicative
        assert pm == {j for j, i in enumerate(perm) if i in m}


@settings(max_examples=150)
@given(monoset)
def test_thomas_inside_janet(U):
    for u in U:
        assert separation(THOMAS, u, U).multiplicative <= separation(JANET, u, U).multiplicative


def test_janet_disjoint_cones_small():
    # every monomial up to degree 4 has at most one Janet divisor, for any set
    rng = random.Random(11)
    ws = all_monomials(3, 4)
    for _ in range(100):
        U = random_monomial_set(rng, 3, 3, rng.randint(1, 5))
        mults = JANET.multiplicative_map(U)
        for w in ws:
            hits = [u for u in U if all(b >= a and (b == a or i in mults[u]) for i, (a, b) in enumerate(zip(u, w)))]
            assert len(hits) <= 1


def test_permutations_of_example():
    # Janet depends on variable order, Thomas does not
    for perm in permutations(range(3)):
        PU = [tuple(u[i] for i in perm) for u in U_EXAMPLE]
        assert is_monomial_autoreduced(THOMAS, PU)
