"""Problem-file parser and the equation homogeneity checker."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .analysis import DimensionalMatrix, build_matrix
from .errors import (
    DuplicateUnit,
    NotInvertible,
    ParseError,
    SemanticError,
    UnknownUnit,
    UnknownVariable,
)
from .quantity import ExpVec, ScalarMode
from .units import UnitRegistry, define_unit, format_unit_expr, parse_quantity_literal, parse_unit_expr

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class ProblemFile:
    bases: tuple[str, ...]
    variables: tuple[tuple[str, ExpVec], ...]
    dependent: str
    units: tuple[tuple[str, str], ...] = ()  # (name, definition text) in file order
    mode: ScalarMode = ScalarMode.POSITIVE

    def matrix(self) -> DimensionalMatrix:
        return build_matrix(self.bases, self.variables)

    def registry(self) -> UnitRegistry:
        reg = UnitRegistry.with_bases(self.bases, self.mode)
        for name, definition in self.units:
            reg = define_unit(reg, name, parse_quantity_literal(reg, definition))
        return reg

    def dimension(self, name: str) -> ExpVec:
        for n, v in self.variables:
            if n == name:
                return v
        raise UnknownVariable(f"unknown variable {name!r}")


def _dim_expr(text: str, bases: tuple[str, ...], line: int, col: int) -> ExpVec:
    try:
        expr = parse_unit_expr(text)
    except ParseError as exc:
        raise ParseError(exc.message, line, col + (exc.column or 1) - 1) from None
    vec = [0] * len(bases)
    for name, e in expr:
        if name not in bases:
            raise SemanticError(f"undeclared base {name!r}", line, col + text.find(name))
        vec[bases.index(name)] += e
    return tuple(vec)


def parse_problem(text: str) -> ProblemFile:
    """Parse the line-oriented problem language.

    ``base L T M`` declares base dimensions, ``var g : L*T^-2`` a variable,
    ``dependent t`` the dependent variable, ``unit N = 1 M*L*T^-2`` an optional
    unit over the bases and ``mode positive|nonnegative|real`` the scalar system.
    ``#`` starts a comment.
    """
    bases: list[str] = []
    variables: list[tuple[str, ExpVec]] = []
    units: list[tuple[str, str]] = []
    dependent: Optional[tuple[str, int]] = None
    mode = ScalarMode.POSITIVE
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        keyword, _, rest = line.strip().partition(" ")
        rest_col = indent + len(keyword) + 2 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if keyword == "base":
            if variables:
                raise SemanticError("'base' must come before any 'var'", lineno, indent + 1)
            names = rest.split()
            if not names:
                raise ParseError("'base' needs at least one name", lineno, rest_col)
            for n in names:
                if not _NAME.match(n):
                    raise ParseError(f"invalid base name {n!r}", lineno, line.find(n) + 1)
                if n in bases:
                    raise SemanticError(f"base {n!r} declared twice", lineno, line.find(n) + 1)
                bases.append(n)
        elif keyword == "var":
            name, colon, dim = rest.partition(":")
            name = name.strip()
            if not colon:
                raise ParseError("expected 'var <name> : <dimension>'", lineno, rest_col)
            if not _NAME.match(name):
                raise ParseError(f"invalid variable name {name!r}", lineno, rest_col)
            if any(n == name for n, _ in variables):
                raise SemanticError(f"variable {name!r} declared twice", lineno, rest_col)
            dim_col = line.index(":") + 2 + (len(dim) - len(dim.lstrip()))
            if not dim.strip():
                raise ParseError("missing dimension expression", lineno, dim_col)
            variables.append((name, _dim_expr(dim.strip(), tuple(bases), lineno, dim_col)))
        elif keyword == "dependent":
            if dependent is not None:
                raise SemanticError("only one 'dependent' line is allowed", lineno, indent + 1)
            if not _NAME.match(rest):
                raise ParseError("expected 'dependent <name>'", lineno, rest_col)
            dependent = (rest, lineno)
        elif keyword == "unit":
            name, eq, definition = rest.partition("=")
            if not eq or not _NAME.match(name.strip()):
                raise ParseError("expected 'unit <name> = <rational> <unit-expr>'", lineno, rest_col)
            units.append((name.strip(), definition.strip()))
        elif keyword == "mode":
            try:
                mode = ScalarMode(rest)
            except ValueError:
                raise ParseError(f"unknown scalar mode {rest!r}", lineno, rest_col) from None
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, indent + 1)
    if dependent is None:
        raise SemanticError("no 'dependent' declaration")
    if dependent[0] not in [n for n, _ in variables]:
        raise SemanticError(f"dependent {dependent[0]!r} is not a declared variable", dependent[1], 1)
    problem = ProblemFile(tuple(bases), tuple(variables), dependent[0], tuple(units), mode)
    try:
        problem.registry()
    except (ParseError, UnknownUnit, DuplicateUnit, NotInvertible) as exc:
        raise SemanticError(f"bad unit definition: {exc}") from None
    return problem


def format_dimension(vec: ExpVec, bases: tuple[str, ...]) -> str:
    return format_unit_expr(tuple((b, e) for b, e in zip(bases, vec) if e))


def format_problem(p: ProblemFile) -> str:
    """Canonical problem-file text; ``parse_problem`` reads it back unchanged."""
    lines = [f"base {' '.join(p.bases)}"]
    if p.mode is not ScalarMode.POSITIVE:
        lines.append(f"mode {p.mode.value}")
    lines += [f"var {n} : {format_dimension(v, p.bases)}" for n, v in p.variables]
    lines += [f"unit {n} = {d}" for n, d in p.units]
    lines.append(f"dependent {p.dependent}")
    return "\n".join(lines) + "\n"


# equation checking

_EQ_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()=]))"
)

DimVec = tuple[Fraction, ...]


@dataclass(frozen=True)
class Violation:
    """Two sides of a ``+``, ``-`` or ``=`` with different dimensions."""

    kind: str
    column: int
    left: DimVec
    right: DimVec


@dataclass
class CheckResult:
    terms: list[tuple[str, DimVec]] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    @property
    def homogeneous(self) -> bool:
        return not self.violations


class _EquationParser:
    def __init__(self, text: str, problem: ProblemFile):
        self.text = text
        self.problem = problem
        self.n = len(problem.bases)
        self.tokens = self._tokenize(text)
        self.i = 0
        self.result = CheckResult()

    @staticmethod
    def _tokenize(text):
        tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _EQ_TOKEN.match(text, pos)
            if not m:
                col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
                raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
            kind = m.lastgroup
            start = m.start(kind)
            tokens.append((kind, m.group(kind), start + 1))
            pos = m.end()
        tokens.append(("end", "", len(text) + 1))
        return tokens

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None):
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", column=tok[2])
        self.i += 1
        return tok

    def zero(self) -> DimVec:
        return (Fraction(0),) * self.n

    def equation(self):
        dims = [self.expr(top=True)]
        while self.peek()[1] == "=":
            col = self.take()[2]
            rhs = self.expr(top=True)
            if rhs != dims[0]:
                self.result.violations.append(Violation("=", col, dims[0], rhs))
            dims.append(rhs)
        if self.peek()[0] != "end":
            tok = self.peek()
            raise ParseError(f"unexpected {tok[1]!r}", column=tok[2])
        if len(dims) < 2:
            raise ParseError("an equation needs '='", column=len(self.text) + 1)

    def expr(self, top=False) -> DimVec:
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            self.take()
        start = self.peek()[2]
        dim = self.term()
        if top:
            self._record(start, dim)
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op, col = self.take()[1:]
            start = self.peek()[2]
            rhs = self.term()
            if top:
                self._record(start, rhs)
            if rhs != dim:
                self.result.violations.append(Violation(op, col, dim, rhs))
        return dim

    def _record(self, start, dim):
        end = self.peek()[2]
        self.result.terms.append((self.text[start - 1 : end - 1].strip(), dim))

    def term(self) -> DimVec:
        dim = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.factor()
            sign = 1 if op == "*" else -1
            dim = tuple(a + sign * b for a, b in zip(dim, rhs))
        return dim

    def factor(self) -> DimVec:
        dim = self.primary()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            e = self.exponent()
            dim = tuple(a * e for a in dim)
        return dim

    def exponent(self) -> Fraction:
        kind, value, col = self.peek()
        if value == "(":
            self.take()
            sign = self._sign()
            num = self._int()
            den = 1
            if self.peek()[1] == "/":
                self.take()
                den = self._int()
                if den == 0:
                    raise ParseError("zero denominator in exponent", column=col)
            self.take(")")
            return sign * Fraction(num, den)
        sign = self._sign()
        return Fraction(sign * self._int())

    def _sign(self) -> int:
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            return -1 if self.take()[1] == "-" else 1
        return 1

    def _int(self) -> int:
        kind, value, col = self.take()
        if kind != "num" or not value.isdigit():
            raise ParseError(f"expected an integer exponent, found {value or 'end of input'!r}", column=col)
        return int(value)

    def primary(self) -> DimVec:
        kind, value, col = self.take()
        if kind == "num":
            return self.zero()
        if kind == "name":
            try:
                return tuple(Fraction(x) for x in self.problem.dimension(value))
            except UnknownVariable:
                raise UnknownVariable(f"unknown variable {value!r} at column {col}") from None
        if value == "(":
            dim = self.expr()
            self.take(")")
            return dim
        raise ParseError(f"unexpected {value or 'end of input'!r}", column=col)


def check_equation(problem: ProblemFile, equation: str) -> CheckResult:
    """Dimension of every top-level term and every inhomogeneous junction.

    Inside a sum the first term's dimension stands for the whole sum.
    """
    p = _EquationParser(equation, problem)
    p.equation()
    return p.result
