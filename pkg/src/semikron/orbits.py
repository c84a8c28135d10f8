"""0/1 matrices up to independent row and column permutations.

A *bordered* matrix has an extra row 0 and column 0 (corner entry 0) that
are never permuted; only rows ``1..k`` and columns ``1..l`` move.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations, product
from math import comb, factorial, prod

from .subgroups import EmbeddedSubgroup, stabilizer_with_big_embedding

Matrix = tuple[tuple[int, ...], ...]


def _row_image(row, groups):
    out = []
    for g in groups:
        ones = sum(row[j] for j in g)
        out.extend([0] * (len(g) - ones))
        out.extend([1] * ones)
    return tuple(out)


def _refine(row, groups):
    out = []
    for g in groups:
        zeros = [j for j in g if not row[j]]
        ones = [j for j in g if row[j]]
        if zeros:
            out.append(zeros)
        if ones:
            out.append(ones)
    return out


def canonical_form(matrix, bordered: bool = False) -> Matrix:
    """Lexicographically least matrix (row-major) in the orbit of ``matrix``.

    Rows are placed one at a time; placing a row refines the ordered column
    classes, and only rows producing the least next row are branched on.
    """
    rows = [tuple(int(v) for v in r) for r in matrix]
    if not rows:
        return ()
    cols = len(rows[0])
    if bordered:
        groups = [[0], list(range(1, cols))] if cols > 1 else [[0]]
        first = _row_image(rows[0], groups)
        groups = _refine(rows[0], groups)
        movable, prefix = rows[1:], [first]
    else:
        groups, movable, prefix = [list(range(cols))], rows, []

    best: list = []

    def search(groups, remaining, prefix):
        nonlocal best
        if not remaining:
            if not best or prefix < best:
                best = list(prefix)
            return
        images = {}
        for r in set(remaining):
            images[r] = _row_image(r, groups)
        least = min(images.values())
        if best:
            depth = len(prefix)
            if prefix + [least] > best[: depth + 1]:
                return
        for r in sorted(r for r, img in images.items() if img == least):
            rest = list(remaining)
            rest.remove(r)
            search(_refine(r, groups), rest, prefix + [least])

    search(groups, movable, prefix)
    return tuple(best)


def stabilizer_order(matrix: Matrix, bordered: bool = False) -> int:
    """Order of the stabilizer, without listing its elements."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    off = 1 if bordered else 0
    columns = [tuple(matrix[i][j] for i in range(rows)) for j in range(cols)]
    wanted = Counter(columns[off:])
    total = 0
    for g in permutations(range(off, rows)):
        full_g = tuple(range(off)) + g
        if bordered and tuple(matrix[full_g[i]][0] for i in range(rows)) != columns[0]:
            continue
        moved = Counter(tuple(matrix[full_g[i]][j] for i in range(rows)) for j in range(off, cols))
        if moved == wanted:
            total += prod(factorial(c) for c in wanted.values())
    return total


def _feasible(k: int, l: int, m: int, bordered: bool) -> bool:
    top = (k + 1) * (l + 1) - 1 if bordered else k * l
    return max(k, l) <= m <= top


def _sorted_candidates(k: int, l: int, m: int, bordered: bool):
    """Matrices with nondecreasing movable rows and columns, m ones, no zero movable line."""
    off = 1 if bordered else 0
    cols = l + off
    movable_cols = list(range(off, cols))
    row_options = [r for r in product((0, 1), repeat=cols) if any(r)]

    def rec(rows, ties, ones_left, prev):
        placed = len(rows) - off
        left = k - placed
        if left == 0:
            if ones_left == 0 and all(any(r[j] for r in rows) for j in movable_cols):
                yield tuple(rows)
            return
        if ones_left < left or ones_left > left * cols:
            return
        for r in row_options:
            if prev is not None and r < prev:
                continue
            if any(t and r[j] > r[j + 1] for j, t in zip(movable_cols, ties)):
                continue
            s = sum(r)
            if s > ones_left:
                continue
            new_ties = [t and r[j] == r[j + 1] for j, t in zip(movable_cols, ties)]
            yield from rec(rows + [r], new_ties, ones_left - s, r)

    start_ties = [True] * max(len(movable_cols) - 1, 0)
    if bordered:
        for top in product((0, 1), repeat=l):
            row0 = (0,) + top
            ties = [t and row0[j] == row0[j + 1] for j, t in zip(movable_cols, start_ties)]
            # row 0 also orders the movable columns
            if any(row0[j] > row0[j + 1] for j in movable_cols[:-1]):
                continue
            yield from rec([row0], ties, m - sum(row0), None)
    else:
        yield from rec([], start_ties, m, None)


@dataclass(frozen=True)
class BinaryMatrixOrbit:
    canonical: Matrix
    k: int
    l: int
    m: int
    bordered: bool = False
    stabilizer_size: int = field(default=0, compare=False)

    @property
    def orbit_size(self) -> int:
        return factorial(self.k) * factorial(self.l) // self.stabilizer_size

    @cached_property
    def stabilizer(self) -> EmbeddedSubgroup:
        return stabilizer_with_big_embedding(self.canonical, bordered=self.bordered)

    def __str__(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.canonical)


@lru_cache(maxsize=None)
def enumerate_matrix_orbits(k: int, l: int, m: int, bordered: bool = False) -> tuple[BinaryMatrixOrbit, ...]:
    """One canonical representative per orbit of the matrix class with m ones."""
    if k < 0 or l < 0 or m < 0:
        raise ValueError("k, l, m must be nonnegative")
    if not bordered and (k == 0 or l == 0):
        return (BinaryMatrixOrbit((), k, l, 0, False, 1),) if k == l == m == 0 else ()
    if not _feasible(k, l, m, bordered):
        return ()
    found = []
    for cand in _sorted_candidates(k, l, m, bordered):
        if canonical_form(cand, bordered) == cand:
            found.append(BinaryMatrixOrbit(cand, k, l, m, bordered, stabilizer_order(cand, bordered)))
    return tuple(sorted(found, key=lambda o: o.canonical))


def count_matrices(k: int, l: int, m: int, bordered: bool = False) -> int:
    """Number of matrices in the class, by inclusion-exclusion over empty rows and columns."""
    total = 0
    for i in range(k + 1):
        for j in range(l + 1):
            cells = (i + 1) * (j + 1) - 1 if bordered else i * j
            sign = -1 if (k + l - i - j) % 2 else 1
            total += sign * comb(k, i) * comb(l, j) * comb(cells, m)
    return total


def count_orbits(k: int, l: int, m: int, bordered: bool = False) -> int:
    return len(enumerate_matrix_orbits(k, l, m, bordered))
