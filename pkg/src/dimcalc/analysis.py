"""Dimensional models and Pi-theorem relations for a dimensional matrix."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import dimension, intlinalg
from .errors import DuplicateName, LengthMismatch, ModelInvalid, UnknownName
from .quantity import ExpVec


@dataclass(frozen=True)
class DimensionalMatrix:
    base_names: tuple[str, ...]
    heads: tuple[tuple[str, ExpVec], ...]

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.heads]

    def column(self, name: str) -> ExpVec:
        for n, v in self.heads:
            if n == name:
                return v
        raise UnknownName(f"no variable named {name!r}")

    def rows(self) -> list[list[int]]:
        return [[v[i] for _, v in self.heads] for i in range(len(self.base_names))]

    @property
    def rank(self) -> int:
        return intlinalg.rank_int(self.rows()) if self.heads else 0


def build_matrix(bases: Sequence[str], variables: Sequence[tuple[str, Sequence[int]]]) -> DimensionalMatrix:
    bases = tuple(bases)
    if len(set(bases)) != len(bases):
        raise DuplicateName(f"duplicate base name in {bases}")
    seen = set()
    heads = []
    for name, vec in variables:
        if name in seen:
            raise DuplicateName(f"variable {name!r} declared twice")
        if len(vec) != len(bases):
            raise LengthMismatch(
                f"variable {name!r} has {len(vec)} exponents for {len(bases)} bases"
            )
        seen.add(name)
        heads.append((name, tuple(int(x) for x in vec)))
    return DimensionalMatrix(bases, tuple(heads))


@dataclass(frozen=True)
class DimensionalModel:
    dependent: str
    dependents: tuple[str, ...]
    independents: tuple[str, ...]


@dataclass(frozen=True)
class PiRow:
    """``name^c = prod(independent_j ^ c_j)`` up to a dimensionless factor."""

    name: str
    c: int
    c_j: tuple[int, ...]


@dataclass(frozen=True)
class PiGroup:
    """The dimensionless group ``numerator^power / prod(name^e for name, e in denominator)``."""

    numerator: str
    power: int
    denominator: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class PiRelation:
    dependent: str
    k: int
    independents: tuple[str, ...]
    k_j: tuple[int, ...]
    rows: tuple[PiRow, ...] = ()
    # None: the only model of its problem; otherwise 1-based model number
    phi_index: Optional[int] = None

    @property
    def pi_groups(self) -> list[PiGroup]:
        return [
            PiGroup(row.name, row.c, tuple((n, e) for n, e in zip(self.independents, row.c_j) if e))
            for row in self.rows
        ]

    @property
    def arity(self) -> int:
        return len(self.rows)


def enumerate_models(m: DimensionalMatrix, dependent: str) -> list[DimensionalModel]:
    """One model per maximal independent set avoiding ``dependent``; may be empty."""
    names = m.names
    if dependent not in names:
        raise UnknownName(f"no variable named {dependent!r}")
    models = []
    for subset in dimension.maximal_independent_subsets_excluding(m.heads, dependent):
        independents = tuple(names[i] for i in subset)
        dependents = tuple(n for n in names if n != dependent and n not in independents)
        models.append(DimensionalModel(dependent, dependents, independents))
    return models


def solve_model(m: DimensionalMatrix, model: DimensionalModel, phi_index: Optional[int] = None) -> PiRelation:
    listed = [model.dependent, *model.dependents, *model.independents]
    if sorted(listed) != sorted(m.names):
        raise ModelInvalid("model does not partition the matrix columns")
    basis = [(n, m.column(n)) for n in model.independents]
    if not dimension.independent_set(basis):
        raise ModelInvalid(f"{model.independents} are not independent")
    w = dimension.depends_on(m.column(model.dependent), basis)
    if w is None:
        raise ModelInvalid(f"{model.dependent} does not depend on {model.independents}")
    rows = []
    for name in model.dependents:
        wi = dimension.depends_on(m.column(name), basis)
        if wi is None:
            raise ModelInvalid(f"{name} does not depend on {model.independents}")
        rows.append(PiRow(name, wi.k, wi.coeffs))
    return PiRelation(model.dependent, w.k, model.independents, w.coeffs, tuple(rows), phi_index)


def analyze(m: DimensionalMatrix, dependent: str) -> list[tuple[DimensionalModel, PiRelation]]:
    """Enumerate and solve every model, numbering Phi when there are several."""
    models = enumerate_models(m, dependent)
    many = len(models) > 1
    return [
        (model, solve_model(m, model, i + 1 if many else None)) for i, model in enumerate(models)
    ]


def pi_group_exponents(m: DimensionalMatrix, r: PiRelation) -> list[ExpVec]:
    """Net exponent vector of every Pi group (all zero for a valid relation)."""
    out = []
    for g in r.pi_groups:
        v = [g.power * x for x in m.column(g.numerator)]
        for name, e in g.denominator:
            v = [a - e * b for a, b in zip(v, m.column(name))]
        out.append(tuple(v))
    return out


def relation_residual(m: DimensionalMatrix, r: PiRelation) -> ExpVec:
    """``k*[dependent] - sum(k_j*[independent_j])``; zero when the relation is homogeneous."""
    v = [r.k * x for x in m.column(r.dependent)]
    for name, e in zip(r.independents, r.k_j):
        v = [a - e * b for a, b in zip(v, m.column(name))]
    return tuple(v)


def check_homogeneous(lhs: Sequence[int], rhs: Sequence[int]) -> bool:
    if len(lhs) != len(rhs):
        raise LengthMismatch(f"exponent vectors of lengths {len(lhs)} and {len(rhs)}")
    return tuple(lhs) == tuple(rhs)


# rendering

_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")

FORMS = ("power", "root", "scalar")


@dataclass(frozen=True)
class _Style:
    mul: str
    ascii: bool

    def power(self, name: str, e, always: bool = False) -> str:
        if isinstance(e, Fraction) and e.denominator != 1:
            return f"{name}^({e})"
        e = int(e)
        if e == 1 and not always:
            return name
        return f"{name}^{e}" if self.ascii else name + str(e).translate(_SUP)

    def phi(self, index: Optional[int], scalar: bool) -> str:
        if self.ascii:
            base = "phi" if scalar else "Phi"
            return base + ("" if index is None else str(index))
        base = "φ" if scalar else "Φ"
        return base + ("" if index is None else str(index).translate(_SUB))

    def constant(self, index: Optional[int], root: bool) -> str:
        c = "C" if root else "K"
        if index is None:
            return c
        return c + (str(index) if self.ascii else str(index).translate(_SUB))


_PRETTY = _Style("·", ascii=False)
_ASCII = _Style(" * ", ascii=True)


def render_pi_group(g: PiGroup, ascii: bool = False) -> str:
    st = _ASCII if ascii else _PRETTY
    num = st.power(g.numerator, g.power)
    if not g.denominator:
        return num
    factors = [st.power(n, e) for n, e in g.denominator]
    if len(factors) == 1:
        return f"{num}/{factors[0]}"
    joiner = "*" if ascii else "·"
    return f"{num}/({joiner.join(factors)})"


def render_relation(r: PiRelation, form: str = "power", ascii: bool = False) -> str:
    """Text form of a relation.

    ``power``: ``q^k = prod(q_j^k_j) * Phi(Pi_1, ..., Pi_m)``;
    ``root``: the same solved for ``q`` with exponents ``k_j/k``;
    ``scalar``: the root form written for measures, with ``phi``.
    The pretty (non-ascii) style writes a nullary Phi as a constant.
    """
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")
    st = _ASCII if ascii else _PRETTY
    root = form != "power"
    if root:
        lhs = r.dependent
        exps = [Fraction(e, r.k) for e in r.k_j]
    else:
        lhs = st.power(r.dependent, r.k, always=ascii)
        exps = list(r.k_j)
    factors = [st.power(n, e, always=ascii) for n, e in zip(r.independents, exps) if e]
    if r.arity == 0 and not ascii:
        factors.insert(0, st.constant(r.phi_index, root))
    else:
        pis = ", ".join(render_pi_group(g, ascii) for g in r.pi_groups)
        factors.append(f"{st.phi(r.phi_index, form == 'scalar')}({pis})")
    return f"{lhs} = {st.mul.join(factors) if factors else '1'}"
