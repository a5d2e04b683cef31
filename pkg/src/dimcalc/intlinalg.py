"""Exact integer linear algebra for dimensional matrices.

Matrices are plain row-major lists of lists of Python ints. All elimination
is fraction-free, so no rationals appear and nothing can overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .errors import DependentColumns, IndexOutOfRange, LengthMismatch

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class DependenceWitness:
    """Canonical solution of ``k*target = sum(coeffs[j] * cols[j])``."""

    k: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.k <= 0:
            raise ValueError("witness must have k > 0")
        if gcd(self.k, *self.coeffs) != 1:
            raise ValueError("witness must be gcd-reduced")


def _shape(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for row in m:
        if len(row) != cols:
            raise LengthMismatch("matrix rows have different lengths")
    return rows, cols


def columns_to_matrix(cols: Sequence[Sequence[int]], nrows: int | None = None) -> IntMatrix:
    """Stack column vectors side by side."""
    if nrows is None:
        nrows = len(cols[0]) if cols else 0
    for c in cols:
        if len(c) != nrows:
            raise LengthMismatch(f"column of length {len(c)}, expected {nrows}")
    return [[int(c[i]) for c in cols] for i in range(nrows)]


def bareiss_echelon(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, list[int]]:
    """Fraction-free row echelon form.

    Returns the echelon matrix and the list of pivot columns. Every division
    performed is exact (Sylvester's identity), so entries stay integral.
    """
    nrows, ncols = _shape(m)
    a = [[int(x) for x in row] for row in m]
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            for j in range(c, ncols):
                a[i][j] = (piv * a[i][j] - f * a[r][j]) // prev
        # columns left of c are already zero below the pivot row
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def rank_int(m: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals."""
    if not m:
        return 0
    return len(bareiss_echelon(m)[1])


def _primitive(v: Sequence[int]) -> list[int]:
    g = gcd(*v)
    if g == 0:
        return list(v)
    return [x // g for x in v]


def reduced_echelon(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, list[int]]:
    """Integer Gauss-Jordan form: each pivot column has a single nonzero.

    Rows are kept primitive (gcd 1) and are not normalised to pivot 1.
    """
    a, pivots = bareiss_echelon(m)
    a = [_primitive(row) for row in a[: len(pivots)]]
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        for i in range(r):
            f = a[i][c]
            if f:
                piv = a[r][c]
                a[i] = _primitive([piv * x - f * y for x, y in zip(a[i], a[r])])
    return a, pivots


def nullspace_primitive(m: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Primitive integer basis of the rational nullspace, one vector per free column.

    ``ncols`` is needed only for a matrix with zero rows.
    """
    nrows, width = _shape(m)
    if nrows == 0:
        width = ncols or 0
        return [[int(i == j) for j in range(width)] for i in range(width)]
    a, pivots = reduced_echelon(m)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        scale = 1
        for r, c in enumerate(pivots):
            if a[r][f]:
                p = abs(a[r][c])
                scale = scale * p // gcd(scale, p)
        v = [0] * width
        v[f] = scale
        for r, c in enumerate(pivots):
            v[c] = -scale * a[r][f] // a[r][c]
        basis.append(_primitive(v))
    return basis


def columns_independent(m: Sequence[Sequence[int]], cols: Sequence[int]) -> bool:
    """True iff the selected columns are linearly independent."""
    nrows, ncols = _shape(m)
    for c in cols:
        if not 0 <= c < ncols:
            raise IndexOutOfRange(f"column index {c} out of range 0..{ncols - 1}")
    if len(set(cols)) != len(cols):
        return False
    if not cols:
        return True
    sub = [[row[c] for c in cols] for row in m]
    return rank_int(sub) == len(cols)


def solve_dependence(
    target: Sequence[int], cols: Sequence[Sequence[int]]
) -> Optional[DependenceWitness]:
    """Canonical witness that ``target`` lies in the span of ``cols``.

    ``cols`` must be independent. Returns None when ``target`` is outside
    their rational span.
    """
    n = len(target)
    mat = columns_to_matrix(cols, n)
    if cols and rank_int(mat) != len(cols):
        raise DependentColumns("the given columns are not independent")
    if not cols:
        if any(target):
            return None
        return DependenceWitness(1, ())
    # kernel of [target | -cols] is at most one-dimensional
    aug = [[int(target[i])] + [-x for x in mat[i]] for i in range(n)]
    kernel = nullspace_primitive(aug, len(cols) + 1)
    if not kernel:
        return None
    (v,) = kernel
    if v[0] < 0:
        v = [-x for x in v]
    return DependenceWitness(v[0], tuple(v[1:]))
