"""Independent reference computations used by the tests.

Brute force over a box of integer coefficients; shares no code with
dimcalc.intlinalg.
"""
from functools import lru_cache
from itertools import product
from math import gcd

import numpy as np


@lru_cache(maxsize=None)
def _grid(r: int, bound: int) -> np.ndarray:
    return np.array(list(product(range(-bound, bound + 1), repeat=r)), dtype=np.int64).reshape(-1, r)


def brute_witness(target, cols, bound=12):
    """Smallest k in 1..bound with k*target = sum(c_j*cols_j), |c_j| <= bound."""
    target = np.array(target, dtype=np.int64)
    r = len(cols)
    if r == 0:
        return (1, ()) if not target.any() else None
    combos = _grid(r, bound) @ np.array(cols, dtype=np.int64)
    for k in range(1, bound + 1):
        hits = np.nonzero((combos == k * target).all(axis=1))[0]
        if hits.size:
            return k, tuple(int(x) for x in _grid(r, bound)[hits[0]])
    return None


def brute_dependent(cols, bound=12):
    """True if some nonzero coefficient vector in the box annihilates cols."""
    r = len(cols)
    if r == 0:
        return False
    grid = _grid(r, bound)
    combos = grid @ np.array(cols, dtype=np.int64)
    zero = (combos == 0).all(axis=1) & grid.any(axis=1)
    return bool(zero.any())


def brute_rank(rows):
    """Rank as the size of the largest nonsingular square minor (exact ints)."""
    from itertools import combinations

    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])

    def det(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1 :] for row in m[1:]]) for j in range(len(m)))

    for size in range(min(nr, nc), 0, -1):
        for rs in combinations(range(nr), size):
            for cs in combinations(range(nc), size):
                if det([[rows[i][j] for j in cs] for i in rs]):
                    return size
    return 0


def primitive(v):
    g = gcd(*v)
    return tuple(x // g for x in v) if g else tuple(v)
