"""Text input and output: the polynomial grammar, system files and run reports.

System file format::

    # comment
    vars: x1, x2, x3, x4
    order: degrevlex
    x1 + x2 + x3 + x4
    x1*x2*x3*x4 - 1

Polynomials use integer or ``a/b`` literals, variable names, ``^`` with a
positive integer exponent, explicit ``*``, binary ``+``/``-``, unary ``-``
and parentheses.  Juxtaposition is rejected so that names like ``x12`` stay
unambiguous.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .divisions import get_division
from .polyring import ORDERINGS, QQ, MonomialOrdering, Polynomial, VarTable


class ParseError(ValueError):
    """Malformed input; ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=1, column=1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__("line %d, column %d: %s" % (line, column, message))


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize(text, line):
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError("unexpected character %r" % text[pos], line, pos + 1)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start + 1))
        pos = m.end()
    tokens.append(("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, text, ord: MonomialOrdering, line=1):
        self.ord = ord
        self.line = line
        self.tokens = _tokenize(text, line)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, self.line, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty input")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "name") or tok[1] == "(":
                raise self.error("expected an operator (write '*' for multiplication)")
            raise self.error("unexpected %r" % tok[1])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.next()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.next()[1]
            if op == "*":
                p = p * self.factor()
            else:
                tok = self.next()
                if tok[0] != "num":
                    raise self.error("division is only allowed by an integer literal", tok)
                d = int(tok[1])
                if d == 0:
                    raise self.error("division by zero", tok)
                p = p * QQ(1, d)
        return p

    def factor(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.next()
            p = self.factor()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.next()
            tok = self.next()
            if tok[0] != "num":
                raise self.error("exponent must be a positive integer literal", tok)
            k = int(tok[1])
            if k <= 0:
                raise self.error("exponent must be positive", tok)
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                raise self.error("chained exponents are ambiguous; use parentheses")
            return base ** k
        return base

    def atom(self):
        tok = self.next()
        kind, value = tok[0], tok[1]
        if kind == "num":
            return self.ord.constant(int(value))
        if kind == "name":
            try:
                return self.ord.gen(self.ord.vars.index(value))
            except ValueError:
                raise self.error("unknown variable %r" % value, tok) from None
        if value == "(":
            p = self.expr()
            close = self.next()
            if close[1] != ")":
                raise self.error("expected ')'", close)
            return p
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error("unexpected %r" % value, tok)


def _ordering(vars, order="degrevlex") -> MonomialOrdering:
    if isinstance(vars, MonomialOrdering):
        return vars
    if not isinstance(vars, VarTable):
        vars = VarTable(tuple(vars))
    return MonomialOrdering(order, vars)


def parse_polynomial(text: str, vars, order: str = "degrevlex", line: int = 1) -> Polynomial:
    """Parse ``text`` over ``vars`` (a VarTable, names, or a MonomialOrdering)."""
    return _Parser(text, _ordering(vars, order), line).parse()


@dataclass
class SystemDocument:
    vars: VarTable
    ordering: str
    polynomials: List[Polynomial]

    @property
    def ord(self) -> MonomialOrdering:
        return MonomialOrdering(self.ordering, self.vars)


def parse_system(text: str) -> SystemDocument:
    """Parse a system file (``vars:`` header, optional ``order:``, one polynomial per line)."""
    vars = None
    order = None
    order_line = None
    pending = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        head = re.match(r"\s*(vars|order)\s*:", body)
        if head:
            col = head.end() + 1
            value = body[head.end():]
            if head.group(1) == "vars":
                if vars is not None:
                    raise ParseError("duplicate vars header", lineno, 1)
                if pending:
                    raise ParseError("vars header must precede the polynomials", lineno, 1)
                names = [s.strip() for s in value.split(",")]
                for name in names:
                    if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                        raise ParseError("bad variable name %r" % name, lineno, col)
                seen = set()
                for name in names:
                    if name in seen:
                        raise ParseError("duplicate variable %r" % name, lineno, col)
                    seen.add(name)
                vars = VarTable(tuple(names))
            else:
                if order is not None:
                    raise ParseError("duplicate order header", lineno, 1)
                order = value.strip()
                order_line = lineno
                if order not in ORDERINGS:
                    raise ParseError("unknown ordering %r" % order, lineno, col)
            continue
        if vars is None:
            raise ParseError("missing 'vars:' header before the first polynomial", lineno, 1)
        pending.append((lineno, body))
    if vars is None:
        raise ParseError("missing 'vars:' header", 1, 1)
    if order_line is not None and pending and pending[0][0] < order_line:
        raise ParseError("order header must precede the polynomials", order_line, 1)
    order = order or "degrevlex"
    ord = MonomialOrdering(order, vars)
    polys = [_Parser(body, ord, lineno).parse() for lineno, body in pending]
    if not polys:
        raise ParseError("no polynomials", len(text.splitlines()) or 1, 1)
    return SystemDocument(vars, order, polys)


def format_system(doc: SystemDocument) -> str:
    lines = ["vars: " + ", ".join(doc.vars.names), "order: " + doc.ordering]
    lines.extend(format_polynomial(p) for p in doc.polynomials)
    return "\n".join(lines) + "\n"


def format_monomial(m, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial, vars=None) -> str:
    """Render ``p`` with terms in descending order, e.g. ``x2^2 + 2*x2*x4 + x4^2``."""
    if vars is None:
        names = p.ord.vars.names
    elif isinstance(vars, VarTable):
        names = vars.names
    else:
        names = tuple(vars)
    if not p.terms:
        return "0"
    out = []
    for k, (c, m) in enumerate(p.terms):
        neg = c < 0
        a = -c if neg else c
        if any(m):
            mono = format_monomial(m, names)
            body = mono if a == 1 else "%s*%s" % (a, mono)
        else:
            body = str(a)
        if k == 0:
            out.append("-" + body if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def cyclic_system(n: int, order: str = "degrevlex") -> SystemDocument:
    """The cyclic ``n``-roots system in variables ``x1..xn``."""
    names = tuple("x%d" % (i + 1) for i in range(n))
    ord = MonomialOrdering(order, VarTable(names))
    polys = []
    for d in range(1, n):
        acc = {}
        for start in range(n):
            m = [0] * n
            for k in range(d):
                m[(start + k) % n] += 1
            m = tuple(m)
            acc[m] = acc.get(m, 0) + 1
        polys.append(ord.from_dict({m: QQ(c) for m, c in acc.items()}))
    polys.append(ord.from_dict({(1,) * n: QQ(1), (0,) * n: QQ(-1)}))
    return SystemDocument(ord.vars, order, polys)


# reports


@dataclass
class RunReport:
    """Everything a CLI run reports; ``emit_report`` renders it."""

    command: str
    division: str
    ordering: str
    vars: List[str]
    input: List[str]
    status: str = "ok"
    basis: List[str] = field(default_factory=list)
    stats: Optional[dict] = None
    separations: List[dict] = field(default_factory=list)
    budget: Optional[int] = None
    partial_size: Optional[int] = None
    result: Optional[object] = None
    message: Optional[str] = None

    def as_dict(self):
        d = {
            "command": self.command,
            "status": self.status,
            "division": self.division,
            "ordering": self.ordering,
            "vars": list(self.vars),
            "input": list(self.input),
            "basis": list(self.basis),
            "stats": self.stats,
            "separations": list(self.separations),
        }
        if self.result is not None:
            d["result"] = self.result
        if self.status == "non_termination":
            d["budget"] = self.budget
            d["partial_size"] = self.partial_size
        if self.message:
            d["message"] = self.message
        return d


def separation_rows(monos_or_polys, div, vars: VarTable) -> List[dict]:
    """Multiplicative / non-multiplicative variable names per element.

    Separations are computed relative to the set of (leading) monomials.
    """
    div = get_division(div)
    items = list(monos_or_polys)
    lms = [x.LM if isinstance(x, Polynomial) else tuple(x) for x in items]
    mults = div.multiplicative_map(lms)
    names = vars.names
    rows = []
    for x, u in zip(items, lms):
        mult = mults[u]
        rows.append({
            "element": format_polynomial(x) if isinstance(x, Polynomial) else format_monomial(u, names),
            "multiplicative": [names[i] for i in range(len(names)) if i in mult],
            "nonmultiplicative": [names[i] for i in range(len(names)) if i not in mult],
        })
    return rows


def _table(rows, headers):
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return lines


def emit_report(report: RunReport, format: str = "text") -> str:
    """Serialize a report as ``"json"`` or human-readable ``"text"``; both are deterministic."""
    if format == "json":
        return json.dumps(report.as_dict(), indent=2) + "\n"
    if format != "text":
        raise ValueError("unknown report format %r" % format)
    lines = [
        "command:  %s" % report.command,
        "division: %s" % report.division,
        "ordering: %s (%s)" % (report.ordering, " > ".join(report.vars)),
        "status:   %s" % report.status,
    ]
    if report.message:
        lines.append("message:  %s" % report.message)
    if report.status == "non_termination":
        lines.append("budget:   max total degree %s, partial size %s" % (report.budget, report.partial_size))
    if report.result is not None:
        if isinstance(report.result, (list, tuple)):
            lines.append("result:")
            lines.extend("  " + str(r) for r in report.result)
        else:
            lines.append("result:   %s" % (report.result,))
    if report.separations:
        rows = [(", ".join(s["multiplicative"]) or "-", ", ".join(s["nonmultiplicative"]) or "-", s["element"])
                for s in report.separations]
        lines.append("")
        lines.extend(_table(rows, ("M", "NM", "element")))
    elif report.basis:
        lines.append("")
        lines.extend(report.basis)
    if report.stats:
        lines.append("")
        lines.append("stats: " + ", ".join("%s=%s" % kv for kv in report.stats.items()))
    return "\n".join(lines) + "\n"
