"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the criterion lines are
printed even when output capture is on.
"""

import random
import time
from contextlib import contextmanager
from importlib.resources import files

import pytest

from involutive import (
    JANET,
    POMMARET,
    THOMAS,
    BasisOptions,
    MonomialOrdering,
    NonTermination,
    VarTable,
    bench_orderings,
    buchberger_reduced_basis,
    complete_monomial_set,
    conventional_autoreduce,
    cyclic_system,
    involutive_basis,
    involutive_basis_from_groebner,
    involutive_normal_form,
    is_involutive_basis,
    is_involutive_bounded,
    is_locally_involutive,
    is_monomial_autoreduced,
    separation,
    verify_groebner,
)
from involutive.cli import load_permutations
from involutive.completion import continuity_chain
from involutive.divisions import DivisorFinder
from involutive.sysio import parse_system

from corpus import (
    F1,
    F2,
    JANET_COMPLETION,
    THOMAS_COMPLETION,
    U_EXAMPLE,
    all_monomials,
    counterexample_table,
    cyclic4,
    cyclic4_basis,
    polys,
    random_corpus,
    random_monomial_set,
    random_polynomial,
)
from test_reduction import autoreduced_set, shuffled_nf

DIVISIONS = (THOMAS, JANET, POMMARET)


@contextmanager
def criterion(capsys, number, title, limit):
    """Time the block; print one PASS/FAIL line; fail on error or on exceeding ``limit`` seconds."""
    start = time.perf_counter()

    def emit(ok, note=""):
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print("\ncriterion %2d %s  %s  [%.4fs, limit %gs]%s"
                  % (number, "PASS" if ok else "FAIL", title, elapsed, limit, note))
        return elapsed

    try:
        yield
    except BaseException as exc:
        emit(False, "  %s" % type(exc).__name__)
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit
    emit(ok, "" if ok else "  too slow")
    assert ok, "criterion %d took %.4fs, limit %gs" % (number, elapsed, limit)


XY, Y2, Z = U_EXAMPLE
LEX3 = MonomialOrdering("lex", VarTable(("x", "y", "z")))
ZYX = MonomialOrdering("lex", VarTable(("z", "y", "x")))


def test_criterion_01_separation_tables(capsys):
    expected = {
        THOMAS: {XY: ({0}, {1, 2}), Y2: ({1}, {0, 2}), Z: ({2}, {0, 1})},
        JANET: {XY: ({0, 1, 2}, set()), Y2: ({1, 2}, {0}), Z: ({2}, {0, 1})},
        POMMARET: {XY: ({1, 2}, {0}), Y2: ({1, 2}, {0}), Z: ({2}, {0, 1})},
    }
    separation(JANET, XY, U_EXAMPLE)  # warm up
    with criterion(capsys, 1, "separation tables for {xy, y^2, z}", 1e-3):
        got = {d: {u: tuple(separation(d, u, U_EXAMPLE)) for u in U_EXAMPLE} for d in DIVISIONS}
        assert got == expected


def test_criterion_02_completions(capsys):
    with criterion(capsys, 2, "monomial completions of {xy, y^2, z}", 10e-3):
        assert set(complete_monomial_set(THOMAS, U_EXAMPLE, LEX3).completed) == THOMAS_COMPLETION
        assert set(complete_monomial_set(JANET, U_EXAMPLE, LEX3).completed) == JANET_COMPLETION
        with pytest.raises(NonTermination):
            complete_monomial_set(POMMARET, U_EXAMPLE, LEX3)
        U = [tuple(reversed(u)) for u in U_EXAMPLE]
        res = complete_monomial_set(POMMARET, U, ZYX)
        assert set(res.completed) == set(U) and not res.added


def test_criterion_03_two_janet_bases(capsys):
    with criterion(capsys, 3, "F1 and F2 are Janet bases with Groebner basis {x - y, y^3 - 1}", 0.1):
        G = set(polys(["x - y", "y^3 - 1"], ("x", "y")))
        for F in (F1(), F2()):
            assert is_involutive_basis(F, JANET)
            assert set(buchberger_reduced_basis(F)) == G
        assert set(involutive_basis(F1(), division=JANET).basis) == G


def test_criterion_04_pommaret(capsys):
    with criterion(capsys, 4, "Pommaret divergence and the basis {x - y, y^2 - 1, yz, z}", 1.0):
        F = polys(["x^2 - 1", "x*y - 1", "z"])
        with pytest.raises(NonTermination) as info:
            involutive_basis(F, division=POMMARET)
        assert info.value.added[:2] == [(0, 1, 1), (0, 2, 1)]
        G = polys(["x - y", "y^2 - 1", "y*z", "z"])
        assert is_involutive_basis(G, POMMARET)
        assert set(involutive_basis_from_groebner(F, POMMARET)) == set(G)


def test_criterion_05_cyclic4(capsys):
    with criterion(capsys, 5, "cyclic-4 Janet basis (7 polynomials, lm-ascending)", 5.0):
        res = involutive_basis(cyclic4(), division=JANET)
        assert res.basis == cyclic4_basis()
        assert verify_groebner(res.basis)


def test_criterion_06_oracle_equivalence(capsys):
    with criterion(capsys, 6, "involutive bases agree with Buchberger on 50 random systems + cyclic-4", 60.0):
        checked = 0
        for order in ("degrevlex", "lex"):
            systems = random_corpus(101, 50, order)
            c4 = cyclic4()
            ord4 = c4[0].ord.with_kind(order)
            systems.append(([p.reorder(ord4) for p in c4], ord4))
            for F, _ in systems:
                oracle = buchberger_reduced_basis(F)
                for div in (JANET, THOMAS):
                    assert conventional_autoreduce(involutive_basis(F, division=div).basis) == oracle
                    checked += 1
        assert checked == 2 * 51 * 2


def test_criterion_07_nf_uniqueness_linearity(capsys):
    rng = random.Random(7)
    o = MonomialOrdering("degrevlex", VarTable(("x", "y", "z")))
    with criterion(capsys, 7, "NF_L unique under reducer choice and additive (1000 trials)", 30.0):
        for trial in range(1000):
            div = DIVISIONS[trial % 3]
            F = autoreduced_set(rng, div, o)
            p = random_polynomial(rng, o, 4, 4)
            q = random_polynomial(rng, o, 4, 4)
            r = involutive_normal_form(p, F, div)
            assert shuffled_nf(p, F, div, rng) == r
            assert involutive_normal_form(p + q, F, div) == r + involutive_normal_form(q, F, div)


def test_criterion_08_chain_criterion(capsys):
    with criterion(capsys, 8, "criterion on/off give identical bases; fewer NF calls on cyclic-4", 30.0):
        on = involutive_basis(cyclic4(), division=JANET)
        off = involutive_basis(cyclic4(), division=JANET, criterion_enabled=False)
        assert on.basis == off.basis
        assert on.stats.nf_calls < off.stats.nf_calls
        for order in ("degrevlex", "lex"):
            for F, _ in random_corpus(101, 50, order):
                a = involutive_basis(F, division=JANET)
                b = involutive_basis(F, division=JANET, criterion_enabled=False)
                assert a.basis == b.basis


def _divides(u, w, mult):
    return all(b >= a and (b == a or i in mult) for i, (a, b) in enumerate(zip(u, w)))


def test_criterion_09_division_properties(capsys):
    rng = random.Random(9)
    ws = all_monomials(3, 5)
    ws6 = all_monomials(3, 6)
    cases = 0
    with criterion(capsys, 9, "division axioms, inclusions, uniqueness and continuity (>= 10^4 cases)", 60.0):
        for _ in range(200):
            U = random_monomial_set(rng, 3, 3, rng.randint(1, 5), nonconstant=False)
            maps = {d: d.multiplicative_map(U) for d in DIVISIONS}
            for d, mult in maps.items():
                for w in ws:
                    divs = [u for u in U if _divides(u, w, mult[u])]
                    for u in divs:  # (i)
                        assert all(b >= a for a, b in zip(u, w))
                    for u in divs:  # (iv)
                        for v in divs:
                            assert _divides(u, v, mult[u]) or _divides(v, u, mult[v])
                    cases += 1
                for u in U:  # (ii)
                    assert _divides(u, u, mult[u])
                    for u1 in U:  # (v)
                        if _divides(u, u1, mult[u]):
                            assert all(_divides(u, w, mult[u]) for w in ws if _divides(u1, w, mult[u1]))
                    V = [v for v in U if v == u or rng.random() < 0.5]  # (vi)
                    assert mult[u] <= d.multiplicative_map(V)[u]
                    cases += 3
            for u in U:
                assert maps[THOMAS][u] <= maps[JANET][u]
                cases += 1
            if is_monomial_autoreduced(POMMARET, U):
                for u in U:
                    assert maps[POMMARET][u] <= maps[JANET][u]
                    cases += 1
            for d in DIVISIONS:
                if is_monomial_autoreduced(d, U):
                    finder = DivisorFinder(d, U)
                    for w in ws6:
                        assert sum(1 for u in U if _divides(u, w, finder.mults[finder.lms.index(u)])) <= 1
                        cases += 1
                for u in U:
                    chain = continuity_chain(d, U, u, rng.choice)
                    assert len(chain) == len(set(chain))
                    cases += 1
        assert cases >= 10**4
    with capsys.disabled():
        print("criterion  9 cases checked: %d" % cases)


def test_criterion_10_counterexample(capsys):
    t = counterexample_table()
    U = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    is_locally_involutive(t, U)  # warm up
    with criterion(capsys, 10, "table division: locally involutive but not involutive", 1e-3):
        assert is_locally_involutive(t, U)
        assert not is_involutive_bounded(t, U, 3)


@pytest.mark.slow
def test_criterion_11_cyclic6(capsys):
    with criterion(capsys, 11, "cyclic-6 Janet basis terminates and is a Groebner basis", 600.0):
        F = cyclic_system(6, "degrevlex").polynomials
        res = involutive_basis(F, division=JANET)
        assert verify_groebner(res.basis)
    doc = parse_system(files("involutive").joinpath("data/cyclic6.txt").read_text())
    perms = load_permutations(str(files("involutive").joinpath("data/cyclic6_orders.txt")), doc.vars.names)
    assert len(perms) == 12
    with criterion(capsys, 11, "cyclic-6 sweep over the 12 variable orders, every row verified", 1800.0):
        rows = bench_orderings(doc, perms, BasisOptions(JANET))
        with capsys.disabled():
            for r in rows:
                print("  %-20s %s size=%s nf_calls=%s time=%.1fs verified=%s"
                      % (">".join(r.permutation), r.status, r.basis_size, r.nf_calls, r.wall_time or 0, r.verified))
        assert [r.permutation for r in rows] == perms
        assert all(r.status == "ok" and r.verified for r in rows)
