"""Unit registry: named units resolved eagerly to base-exponent form."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .errors import DuplicateUnit, NotEquidimensional, NotInvertible, ParseError, UnknownUnit
from .quantity import ExpVec, Quantity, ScalarMode, SpaceSig, mul, powi, smul

# (name, exponent) pairs; an empty tuple is the dimensionless unit 1
UnitExpr = tuple[tuple[str, int], ...]

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")
_TOKEN = re.compile(
    r"""\s*(?:
        (?P<name>[A-Za-z_µμ°Ω][A-Za-z0-9_µμ°Ω]*)
      | (?P<pow>\^\s*\(?\s*[+-]?\d+\s*\)?|[⁻⁰¹²³⁴⁵⁶⁷⁸⁹]+)
      | (?P<op>[*/·])
      | (?P<one>1(?![0-9]))
    )""",
    re.VERBOSE,
)
_NUMBER = re.compile(r"\s*(?P<num>[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?)")


def parse_unit_expr(text: str) -> UnitExpr:
    """Parse ``kg*m*s^-2``, ``m/s²``, ``kg m / s^2`` or ``1``.

    ``/`` applies to the single factor that follows it.
    """
    factors: list[tuple[str, int]] = []
    pos = 0
    divide = False
    expect_factor = True
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} in unit expression", column=pos + 1)
        col = m.start() + 1 + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group("name"):
            factors.append((m.group("name"), -1 if divide else 1))
            divide = False
            expect_factor = False
        elif m.group("one"):
            if divide:
                raise ParseError("'/' must be followed by a unit name", column=col)
            expect_factor = False
        elif m.group("pow"):
            if not factors or expect_factor:
                raise ParseError("exponent without a unit", column=col)
            raw = m.group("pow").translate(_SUPERSCRIPTS).lstrip("^").strip().strip("()").strip()
            name, sign = factors[-1]
            factors[-1] = (name, sign * int(raw))
            expect_factor = True  # an exponent closes its factor
        else:
            if m.group("op") == "/":
                if divide:
                    raise ParseError("two '/' in a row", column=col)
                divide = True
            expect_factor = True
        pos = m.end()
    if divide:
        raise ParseError("unit expression ends with '/'", column=len(text) + 1)
    merged: dict[str, int] = {}
    for name, e in factors:
        merged[name] = merged.get(name, 0) + e
    return tuple((n, e) for n, e in merged.items() if e)


def format_unit_expr(expr: UnitExpr) -> str:
    if not expr:
        return "1"
    def factor(n, e):
        if e == 1:
            return n
        if isinstance(e, Fraction) and e.denominator != 1:
            return f"{n}^({e})"
        return f"{n}^{e}"

    return "*".join(factor(n, e) for n, e in expr)


def split_literal(text: str) -> tuple[Fraction, str]:
    """Split ``"<rational> <unit-expr>"`` into its measure and unit text."""
    m = _NUMBER.match(text)
    if not m:
        raise ParseError(f"quantity literal {text!r} must start with a number", column=1)
    try:
        value = Fraction(m.group("num"))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad number {m.group('num')!r}: {exc}", column=1) from None
    return value, text[m.end():]


@dataclass(frozen=True)
class UnitRegistry:
    space: SpaceSig
    units: Mapping[str, Quantity] = field(default_factory=dict)

    def __post_init__(self):
        units = dict(self.units)
        for i, name in enumerate(self.space.base_names):
            units.setdefault(name, Quantity(Fraction(1), self.space.unit_vector(i), self.space))
        object.__setattr__(self, "units", units)

    @classmethod
    def with_bases(cls, base_names: Sequence[str], mode: ScalarMode = ScalarMode.POSITIVE) -> "UnitRegistry":
        return cls(SpaceSig(tuple(base_names), mode))

    def __contains__(self, name: str) -> bool:
        return name in self.units

    def __getitem__(self, name: str) -> Quantity:
        try:
            return self.units[name]
        except KeyError:
            raise UnknownUnit(f"unknown unit {name!r}") from None

    def resolve(self, expr: UnitExpr | str) -> Quantity:
        if isinstance(expr, str):
            expr = parse_unit_expr(expr)
        q = self.space.one()
        for name, e in expr:
            q = mul(q, powi(self[name], e))
        return q

    def define(self, name: str, value: Quantity) -> "UnitRegistry":
        return define_unit(self, name, value)

    def parse(self, text: str) -> Quantity:
        return parse_quantity_literal(self, text)


def define_unit(reg: UnitRegistry, name: str, value: Quantity) -> UnitRegistry:
    if name in reg.units:
        raise DuplicateUnit(f"unit {name!r} is already defined")
    if value.measure == 0:
        raise NotInvertible(f"unit {name!r} would have measure 0")
    if not re.fullmatch(r"[A-Za-z_µμ°Ω][A-Za-z0-9_µμ°Ω]*", name):
        raise ParseError(f"invalid unit name {name!r}")
    units = dict(reg.units)
    units[name] = value
    return UnitRegistry(reg.space, units)


def parse_quantity_literal(reg: UnitRegistry, text: str) -> Quantity:
    value, rest = split_literal(text)
    try:
        expr = parse_unit_expr(rest)
    except ParseError as exc:
        if exc.column is not None:
            exc.column += len(text) - len(rest)
        raise
    return smul(value, reg.resolve(expr))


def convert(reg: UnitRegistry, q: Quantity, target: UnitExpr | str) -> Fraction:
    """The measure of ``q`` in the unit ``target``."""
    u = reg.resolve(target)
    if u.exps != q.exps:
        raise NotEquidimensional(
            f"cannot convert a quantity of dimension {q.exps} to a unit of dimension {u.exps}"
        )
    return q.measure / u.measure


def coherent_unit_for(reg: UnitRegistry, d: ExpVec) -> Quantity:
    return Quantity(Fraction(1), tuple(d), reg.space)


def parse_units(text: str, mode: ScalarMode = ScalarMode.POSITIVE) -> UnitRegistry:
    """Read a units file: one ``base`` header, then ``unit <name> = <literal>`` lines."""
    reg = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "base":
            if reg is not None:
                raise ParseError("only one 'base' line is allowed", lineno, 1)
            names = rest.split()
            try:
                reg = UnitRegistry.with_bases(names, mode)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, 6) from None
        elif keyword == "unit":
            if reg is None:
                raise ParseError("'unit' before the 'base' line", lineno, 1)
            name, eq, definition = rest.partition("=")
            name = name.strip()
            if not eq or not name:
                raise ParseError("expected 'unit <name> = <rational> <unit-expr>'", lineno, 1)
            try:
                value = parse_quantity_literal(reg, definition.strip())
                reg = define_unit(reg, name, value)
            except ParseError as exc:
                raise ParseError(exc.message, lineno, raw.index("=") + 2 + (exc.column or 1) - 1) from None
            except (UnknownUnit, DuplicateUnit, NotInvertible) as exc:
                raise type(exc)(f"line {lineno}: {exc}") from None
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, 1)
    if reg is None:
        raise ParseError("units file has no 'base' line", None, None)
    return reg


def load_units(path: str | Path, mode: ScalarMode = ScalarMode.POSITIVE) -> UnitRegistry:
    return parse_units(Path(path).read_text(encoding="utf-8"), mode)


def render_quantity(reg: UnitRegistry, q: Quantity, unit: UnitExpr | str) -> str:
    if isinstance(unit, str):
        unit = parse_unit_expr(unit)
    return f"{convert(reg, q, unit)} {format_unit_expr(unit)}"
