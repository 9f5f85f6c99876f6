"""Command-line front end.

Usage::

    involutive separate --input system.txt --division janet
    involutive basis --input cyclic4.txt --division janet --output json
    involutive nf --input system.txt --poly "x^2*y - 1"
    involutive bench --input cyclic6.txt --perms orders.txt

Exit status is 0 on success, 1 on bad input and 2 when a completion or
basis computation runs past its degree budget (the report is still printed).
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

from .basis import BasisOptions, involutive_basis, verify_groebner
from .completion import CompletionBudget, NonTermination, complete_monomial_set
from .divisions import DivisionError, get_division
from .polyring import MonomialOrdering, PolyError, VarTable
from .reduction import involutive_normal_form
from .sysio import (
    ParseError,
    RunReport,
    SystemDocument,
    emit_report,
    format_monomial,
    format_polynomial,
    parse_polynomial,
    parse_system,
    separation_rows,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NONTERMINATION = 2

COMMANDS = ("separate", "complete", "nf", "basis", "groebner-check", "bench")


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="involutive", description="Involutive and Groebner bases over QQ.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", default="-", help="system file, or '-' for stdin")
        p.add_argument("--division", default="janet", choices=("thomas", "janet", "pommaret"))
        p.add_argument("--order", choices=("lex", "deglex", "degrevlex"), help="overrides the file's order")
        p.add_argument("--max-degree", type=int, help="degree budget for completion")
        p.add_argument("--output", default="text", choices=("text", "json"))
        if name in ("basis", "bench"):
            p.add_argument("--criterion", default="on", choices=("on", "off"))
        if name == "nf":
            p.add_argument("--poly", required=True, help="polynomial to reduce")
        if name == "bench":
            p.add_argument("--perms", help="file with one comma-separated variable order per line, or 'all'")
            p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def load_system(path: str, order: Optional[str] = None, stdin=None) -> SystemDocument:
    if path == "-":
        text = (stdin or sys.stdin).read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    doc = parse_system(text)
    if order and order != doc.ordering:
        ord = MonomialOrdering(order, doc.vars)
        doc = SystemDocument(doc.vars, order, [p.reorder(ord) for p in doc.polynomials])
    return doc


def _budget(args) -> Optional[CompletionBudget]:
    if args.max_degree is None:
        return None
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    return CompletionBudget(args.max_degree)


def _report(args, doc: SystemDocument, **kw) -> RunReport:
    return RunReport(
        command=args.command,
        division=args.division,
        ordering=doc.ordering,
        vars=list(doc.vars.names),
        input=[format_polynomial(p) for p in doc.polynomials],
        **kw,
    )


def _leading_monomials(doc: SystemDocument):
    lms = []
    for p in doc.polynomials:
        if not p:
            raise UsageError("zero polynomial has no leading monomial")
        if p.LM not in lms:
            lms.append(p.LM)
    return sorted(lms, key=doc.ord.key)


# bench


@dataclass
class BenchRow:
    permutation: List[str]
    status: str
    basis_size: Optional[int] = None
    nf_calls: Optional[int] = None
    wall_time: Optional[float] = None
    verified: Optional[bool] = None
    error: Optional[str] = None


def parse_permutation(text: str) -> List[str]:
    return [s.strip() for s in text.replace(">", ",").split(",") if s.strip()]


def load_permutations(spec: Optional[str], names: Sequence[str]) -> List[List[str]]:
    """``None`` gives the declared order, ``'all'`` every permutation, otherwise a file path."""
    if spec is None:
        return [list(names)]
    if spec == "all":
        return [list(p) for p in itertools.permutations(names)]
    with open(spec, encoding="utf-8") as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    return [parse_permutation(ln) for ln in lines if ln]


def permute_system(doc: SystemDocument, perm: Sequence[str]) -> SystemDocument:
    """The same system with variables declared in the order ``perm``."""
    perm = list(perm)
    unknown = [v for v in perm if v not in doc.vars.names]
    if unknown:
        raise UsageError("undeclared variable %r in permutation" % unknown[0])
    if len(set(perm)) != len(perm) or len(perm) != len(doc.vars.names):
        raise UsageError("not a permutation of %s" % ",".join(doc.vars.names))
    ord = MonomialOrdering(doc.ordering, VarTable(tuple(perm)))
    return SystemDocument(ord.vars, doc.ordering,
                          [parse_polynomial(format_polynomial(p), ord) for p in doc.polynomials])


def _bench_row(doc: SystemDocument, perm, opts: BasisOptions, verify: bool) -> BenchRow:
    perm = list(perm)
    try:
        sub = permute_system(doc, perm)
    except (UsageError, PolyError) as exc:
        return BenchRow(perm, "error", error=str(exc))
    start = time.perf_counter()
    try:
        res = involutive_basis(sub.polynomials, BasisOptions(opts.division, sub.ord, opts.budget,
                                                              opts.criterion_enabled))
    except NonTermination as exc:
        return BenchRow(perm, "non_termination", len(exc.partial), exc.stats.nf_calls if exc.stats else None,
                        time.perf_counter() - start, error=str(exc))
    wall = time.perf_counter() - start
    ok = verify_groebner(res.basis) if verify else None
    return BenchRow(perm, "ok", len(res.basis), res.stats.nf_calls, wall, ok)


def bench_orderings(system: SystemDocument, permutations, opts: Optional[BasisOptions] = None,
                    jobs: int = 1, verify: bool = True) -> List[BenchRow]:
    """Run the involutive basis computation once per variable order.

    Rows come back in input order; a malformed permutation or a budget
    overrun is reported in its row and the sweep goes on.  Wall times are
    informational.
    """
    opts = opts or BasisOptions()
    perms = [list(p) for p in permutations]
    if jobs > 1 and len(perms) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_bench_row, system, p, opts, verify) for p in perms]
            return [f.result() for f in futures]
    return [_bench_row(system, p, opts, verify) for p in perms]


def _bench_text(rows: List[BenchRow]) -> List[str]:
    out = []
    for r in rows:
        cells = [">".join(r.permutation), r.status]
        if r.status == "ok":
            cells += ["size=%d" % r.basis_size, "nf_calls=%d" % r.nf_calls, "time=%.2fs" % r.wall_time,
                      "verified=%s" % r.verified]
        else:
            cells.append(r.error or "")
        out.append("  ".join(cells))
    return out


# subcommands


def _cmd_separate(args, doc):
    lms = _leading_monomials(doc)
    return _report(args, doc, separations=separation_rows(lms, args.division, doc.vars)), EXIT_OK


def _cmd_complete(args, doc):
    lms = _leading_monomials(doc)
    names = doc.vars.names
    try:
        res = complete_monomial_set(get_division(args.division), lms, doc.ord, _budget(args))
    except NonTermination as exc:
        return _report(args, doc, status="non_termination", budget=exc.budget, partial_size=len(exc.partial),
                       result=[format_monomial(m, names) for m in exc.added],
                       message=str(exc)), EXIT_NONTERMINATION
    done = sorted(res.completed, key=doc.ord.key)
    return _report(args, doc, separations=separation_rows(done, args.division, doc.vars),
                   result=[format_monomial(m, names) for m in res.added]), EXIT_OK


def _cmd_nf(args, doc):
    p = parse_polynomial(args.poly, doc.ord)
    r = involutive_normal_form(p, doc.polynomials, args.division, doc.ord)
    return _report(args, doc, result=format_polynomial(r)), EXIT_OK


def _basis_options(args, doc):
    return BasisOptions(get_division(args.division), doc.ord, _budget(args), args.criterion == "on")


def _cmd_basis(args, doc):
    try:
        res = involutive_basis(doc.polynomials, _basis_options(args, doc))
    except NonTermination as exc:
        return _report(args, doc, status="non_termination", budget=exc.budget, partial_size=len(exc.partial),
                       basis=[format_polynomial(p) for p in exc.partial],
                       stats=exc.stats.as_dict() if exc.stats else None,
                       message=str(exc)), EXIT_NONTERMINATION
    return _report(args, doc, basis=[format_polynomial(p) for p in res.basis], stats=res.stats.as_dict(),
                   separations=separation_rows(res.basis, args.division, doc.vars)), EXIT_OK


def _cmd_groebner_check(args, doc):
    ok = verify_groebner(doc.polynomials, doc.ord)
    return _report(args, doc, result=ok), EXIT_OK


def _cmd_bench(args, doc):
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    perms = load_permutations(args.perms, doc.vars.names)
    rows = bench_orderings(doc, perms, _basis_options(args, doc), jobs=args.jobs)
    rep = _report(args, doc, result=[asdict(r) for r in rows])
    return rep, EXIT_OK, rows


_COMMANDS = {
    "separate": _cmd_separate,
    "complete": _cmd_complete,
    "nf": _cmd_nf,
    "basis": _cmd_basis,
    "groebner-check": _cmd_groebner_check,
    "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        doc = load_system(args.input, args.order, stdin)
        out = _COMMANDS[args.command](args, doc)
    except ParseError as exc:
        where = "<stdin>" if args.input == "-" else args.input
        print("error: %s: %s" % (where, exc), file=stderr)
        return EXIT_INPUT
    except (UsageError, PolyError, DivisionError, OSError) as exc:
        print("error: %s" % exc, file=stderr)
        return EXIT_INPUT
    report, code = out[0], out[1]
    if args.command == "bench" and args.output == "text":
        text = emit_report(RunReport(report.command, report.division, report.ordering, report.vars,
                                     report.input))
        stdout.write(text + "\n".join(_bench_text(out[2])) + "\n")
    else:
        stdout.write(emit_report(report, args.output))
    return code


run = main

if __name__ == "__main__":
    sys.exit(main())
