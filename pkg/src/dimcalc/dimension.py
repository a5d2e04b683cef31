"""Operations on sets of dimensions (exponent vectors) in a free abelian group."""
from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from . import intlinalg
from .errors import DuplicateName, LengthMismatch, UnknownName
from .intlinalg import DependenceWitness
from .quantity import ExpVec

# An ordered list of named dimensions, all of the same length.
DimSet = Sequence[tuple[str, ExpVec]]


def validate(s: DimSet) -> None:
    names = [n for n, _ in s]
    if len(set(names)) != len(names):
        raise DuplicateName(f"duplicate dimension names in {names}")
    if len({len(v) for _, v in s}) > 1:
        raise LengthMismatch("dimensions have different lengths")


def _columns(s: DimSet) -> list[ExpVec]:
    return [tuple(v) for _, v in s]


def _matrix(vectors: Sequence[ExpVec], nrows: int) -> list[list[int]]:
    return intlinalg.columns_to_matrix(list(vectors), nrows)


def depends_on(d: ExpVec, s: DimSet) -> Optional[DependenceWitness]:
    """Witness ``d^k = prod(s_j^k_j)`` or None; ``s`` must be independent."""
    validate(s)
    return intlinalg.solve_dependence(tuple(d), _columns(s))


def independent_set(s: DimSet) -> bool:
    validate(s)
    if not s:
        return True
    cols = _columns(s)
    return intlinalg.rank_int(_matrix(cols, len(cols[0]))) == len(cols)


def group_rank(s: DimSet) -> int:
    validate(s)
    if not s:
        return 0
    cols = _columns(s)
    return intlinalg.rank_int(_matrix(cols, len(cols[0])))


def maximal_independent_subsets_excluding(heads: DimSet, excluded: str) -> list[tuple[int, ...]]:
    """All maximal independent subsets of ``heads`` not containing ``excluded``
    on which every head, ``excluded`` included, depends.

    Returned as sorted index tuples into ``heads``. Order: lexicographic in
    the complementary (left-over) indices, so the set leaving out the
    earliest heads comes first.
    """
    validate(heads)
    names = [n for n, _ in heads]
    if excluded not in names:
        raise UnknownName(f"no dimension named {excluded!r}")
    ex = names.index(excluded)
    others = [i for i in range(len(heads)) if i != ex]
    nrows = len(heads[0][1])
    cols = _columns(heads)
    r = intlinalg.rank_int(_matrix([cols[i] for i in others], nrows)) if others else 0
    if intlinalg.rank_int(_matrix(cols, nrows)) != r:
        # excluded head is independent of all the others
        return []
    found = []
    for subset in combinations(others, r):
        if r and intlinalg.rank_int(_matrix([cols[i] for i in subset], nrows)) != r:
            continue
        found.append(subset)
    found.sort(key=lambda sub: tuple(i for i in others if i not in sub))
    return found
