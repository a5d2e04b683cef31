"""Quantities as exact measures paired with integer exponent vectors.

A quantity ``mu * b1^k1 * ... * bn^kn`` over a fixed defining basis is stored
as ``(mu, (k1, ..., kn))``. Measures are ``fractions.Fraction``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Union

from . import intlinalg
from .errors import (
    ExponentsNotDivisible,
    InadmissibleMeasure,
    LengthMismatch,
    MeasureNotPerfectPower,
    ModeForbidsNegation,
    NonPositiveMeasure,
    NotABasis,
    NotEquidimensional,
    NotInvertible,
    SpaceMismatch,
)

ExpVec = tuple[int, ...]
RationalLike = Union[int, Fraction, str]


class ScalarMode(enum.Enum):
    REAL = "real"
    NONNEGATIVE = "nonnegative"
    POSITIVE = "positive"

    def admits(self, measure: Fraction) -> bool:
        if self is ScalarMode.POSITIVE:
            return measure > 0
        if self is ScalarMode.NONNEGATIVE:
            return measure >= 0
        return True


@dataclass(frozen=True)
class SpaceSig:
    base_names: tuple[str, ...]
    mode: ScalarMode = ScalarMode.REAL

    def __post_init__(self):
        object.__setattr__(self, "base_names", tuple(self.base_names))
        if any(not n for n in self.base_names):
            raise ValueError("base names must be nonempty")
        if len(set(self.base_names)) != len(self.base_names):
            raise ValueError("base names must be distinct")

    @property
    def n(self) -> int:
        return len(self.base_names)

    def zero(self) -> ExpVec:
        return (0,) * self.n

    def unit_vector(self, i: int) -> ExpVec:
        return tuple(int(j == i) for j in range(self.n))

    def one(self) -> "Quantity":
        return Quantity(Fraction(1), self.zero(), self)

    def base(self, name: str) -> "Quantity":
        return Quantity(Fraction(1), self.unit_vector(self.base_names.index(name)), self)


def to_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction, int or string")
    if isinstance(x, Rational):
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class Quantity:
    measure: Fraction
    exps: ExpVec
    space: SpaceSig

    def __post_init__(self):
        object.__setattr__(self, "measure", to_fraction(self.measure))
        object.__setattr__(self, "exps", tuple(int(k) for k in self.exps))
        if len(self.exps) != self.space.n:
            raise LengthMismatch(
                f"exponent vector of length {len(self.exps)} in a space of dimension {self.space.n}"
            )
        if not self.space.mode.admits(self.measure):
            raise InadmissibleMeasure(
                f"measure {self.measure} not allowed in {self.space.mode.value} mode"
            )

    @property
    def is_invertible(self) -> bool:
        return self.measure != 0

    @property
    def is_quasiscalar(self) -> bool:
        return not any(self.exps)

    def __mul__(self, other):
        if isinstance(other, Quantity):
            return mul(self, other)
        return smul(other, self)

    def __rmul__(self, other):
        return smul(other, self)

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            return mul(self, inv(other))
        return smul(1 / to_fraction(other), self)

    def __pow__(self, c: int):
        return powi(self, c)

    def __add__(self, other: "Quantity"):
        return add(self, other)

    def __sub__(self, other: "Quantity"):
        return sub(self, other)

    def __neg__(self):
        return smul(-1, self)

    def __str__(self):
        parts = []
        for name, k in zip(self.space.base_names, self.exps):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        unit = "*".join(parts)
        return f"{self.measure} {unit}".rstrip()


def q_new(measure: RationalLike, exps: Sequence[int], space: SpaceSig) -> Quantity:
    return Quantity(to_fraction(measure), tuple(exps), space)


def _same_space(p: Quantity, q: Quantity) -> None:
    if p.space != q.space:
        raise SpaceMismatch("quantities belong to different spaces")


def mul(p: Quantity, q: Quantity) -> Quantity:
    _same_space(p, q)
    return Quantity(p.measure * q.measure, tuple(a + b for a, b in zip(p.exps, q.exps)), p.space)


def smul(a: RationalLike, q: Quantity) -> Quantity:
    return Quantity(to_fraction(a) * q.measure, q.exps, q.space)


def inv(q: Quantity) -> Quantity:
    if q.measure == 0:
        raise NotInvertible("a quantity with measure 0 has no inverse")
    return Quantity(1 / q.measure, tuple(-k for k in q.exps), q.space)


def powi(q: Quantity, c: int) -> Quantity:
    c = int(c)
    if c < 0:
        q, c = inv(q), -c
    return Quantity(q.measure**c, tuple(k * c for k in q.exps), q.space)


def equidim(p: Quantity, q: Quantity) -> bool:
    _same_space(p, q)
    return p.exps == q.exps


def _require_equidim(p: Quantity, q: Quantity) -> None:
    if not equidim(p, q):
        raise NotEquidimensional(f"dimensions {p.exps} and {q.exps} differ")


def add(p: Quantity, q: Quantity) -> Quantity:
    _require_equidim(p, q)
    return Quantity(p.measure + q.measure, p.exps, p.space)


def sub(p: Quantity, q: Quantity) -> Quantity:
    _require_equidim(p, q)
    if p.space.mode is not ScalarMode.REAL:
        raise ModeForbidsNegation(f"subtraction needs negative scalars ({p.space.mode.value} mode)")
    return Quantity(p.measure - q.measure, p.exps, p.space)


def measure_of(q: Quantity) -> Fraction:
    return q.measure


def dimension_of(q: Quantity) -> ExpVec:
    return q.exps


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign, prev = 1, 1
    for c in range(n - 1):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) // prev
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def _solve_unimodular(rows: Sequence[ExpVec], target: ExpVec) -> ExpVec:
    """Integer x with sum(x[j] * rows[j]) == target; rows must be unimodular."""
    n = len(rows)
    cols = [list(r) for r in rows]
    mat = intlinalg.columns_to_matrix(cols, n)
    aug = [mat[i] + [-target[i]] for i in range(n)]
    (v,) = intlinalg.nullspace_primitive(aug, n + 1)
    # unimodularity makes the last entry +-1
    s = v[-1]
    return tuple(x // s for x in v[:-1])


def rebase(q: Quantity, new_basis: Sequence[Quantity]) -> Quantity:
    """Coordinates of ``q`` relative to ``new_basis``.

    The result carries the new measure and exponents in the same space
    signature; the j-th exponent refers to ``new_basis[j]``.
    """
    n = q.space.n
    if len(new_basis) != n:
        raise NotABasis(f"expected {n} basis quantities, got {len(new_basis)}")
    for b in new_basis:
        _same_space(q, b)
        if b.measure == 0:
            raise NotInvertible("basis quantities must be invertible")
    rows = [b.exps for b in new_basis]
    if abs(determinant(rows)) != 1:
        raise NotABasis("exponent matrix is not unimodular")
    if n == 0:
        return q
    k = _solve_unimodular(rows, q.exps)
    mu = q.measure
    for b, kj in zip(new_basis, k):
        mu /= b.measure**kj
    return Quantity(mu, k, q.space)


def integer_root(n: int, k: int) -> int | None:
    """Exact non-negative integer k-th root of n >= 0, or None."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def kth_root(q: Quantity, k: int) -> Quantity:
    if k <= 0:
        raise ValueError("root order must be a positive integer")
    if q.measure <= 0:
        raise NonPositiveMeasure("k-th roots are taken of positive measures only")
    if any(e % k for e in q.exps):
        raise ExponentsNotDivisible(f"exponents {q.exps} are not all divisible by {k}")
    num = integer_root(q.measure.numerator, k)
    den = integer_root(q.measure.denominator, k)
    if num is None or den is None:
        raise MeasureNotPerfectPower(f"{q.measure} has no rational {k}-th root")
    return Quantity(Fraction(num, den), tuple(e // k for e in q.exps), q.space)


def monomial_eval(
    coeff: RationalLike, args: Sequence[Quantity], exps: Sequence[int], space: SpaceSig | None = None
) -> Quantity:
    """``coeff * prod(args[i] ** exps[i])``; ``space`` is needed only for empty ``args``."""
    if len(args) != len(exps):
        raise LengthMismatch("one exponent per argument required")
    if space is None:
        if not args:
            raise ValueError("space required for an empty monomial")
        space = args[0].space
    result = space.one()
    for a, e in zip(args, exps):
        result = mul(result, powi(a, e))
    return smul(coeff, result)
