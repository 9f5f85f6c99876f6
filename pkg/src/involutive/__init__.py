"""Involutive and Groebner bases of polynomial ideals over the rationals."""

from .basis import (
    BasisOptions,
    BasisResult,
    BasisStats,
    Triple,
    ideal_member,
    involutive_basis,
    involutive_basis_from_groebner,
    is_involutive_basis,
    verify_groebner,
)
from .completion import (
    CompletionBudget,
    CompletionResult,
    NonTermination,
    complete_monomial_set,
    involutive_cone_member,
    is_involutive_bounded,
    is_locally_involutive,
)
from .divisions import (
    JANET,
    POMMARET,
    THOMAS,
    Division,
    Janet,
    Pommaret,
    Separation,
    TableDivision,
    Thomas,
    find_involutive_divisor,
    get_division,
    involutive_divides,
    is_monomial_autoreduced,
    separation,
)
from .polyring import (
    QQ,
    MonomialOrdering,
    Polynomial,
    Term,
    VarTable,
    canonicalize,
    compare_monomials,
    leading_data,
    monomial_divides,
    monomial_lcm,
)
from .reduction import (
    InputError,
    ReductionTrace,
    buchberger_reduced_basis,
    conventional_autoreduce,
    conventional_normal_form,
    involutive_autoreduce,
    involutive_normal_form,
    s_polynomial,
)
from .cli import BenchRow, bench_orderings
from .sysio import (
    ParseError,
    RunReport,
    SystemDocument,
    cyclic_system,
    emit_report,
    format_polynomial,
    parse_polynomial,
    parse_system,
)

__version__ = "0.1.0"
