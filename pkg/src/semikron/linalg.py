"""Exact rational linear algebra for small dense systems."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InternalConsistencyError


def solve_exact(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Unique solution of an overdetermined but consistent system ``rows @ x = rhs``.

    Raises InternalConsistencyError when the system is inconsistent or its
    columns are linearly dependent.
    """
    width = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(width):
        p = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if p is None:
            raise InternalConsistencyError(f"column {c} is dependent on the others")
        aug[r], aug[p] = aug[p], aug[r]
        lead = aug[r][c]
        aug[r] = [v / lead for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in aug[r:]):
        raise InternalConsistencyError("inconsistent linear system")
    return [aug[i][-1] for i in range(width)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def trace(a: Sequence[Sequence[int]]) -> int:
    return sum(a[i][i] for i in range(len(a)))
