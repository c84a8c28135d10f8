"""Integer matrices of Specht modules built from polytabloids.

This deliberately avoids the character formulas elsewhere in the package so
that it can serve as an independent check.  Only small degrees are intended.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations, product

from .errors import InternalConsistencyError
from .linalg import solve_exact
from .partitions import Partition

Tableau = tuple[tuple[int, ...], ...]
Tabloid = tuple[tuple[int, ...], ...]


def standard_tableaux(shape: Partition) -> list[Tableau]:
    """Standard Young tableaux with entries ``0..|shape|-1``."""
    n = sum(shape)
    out = []

    def place(rows, k):
        if k == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, target in enumerate(shape):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(rows, k + 1)
                rows[i].pop()

    place([[] for _ in shape], 0)
    return out


def _tabloid(t: Tableau) -> Tabloid:
    return tuple(tuple(sorted(row)) for row in t)


def _sign(perm: tuple[int, ...]) -> int:
    seen, s = set(), 1
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def _polytabloid(t: Tableau) -> dict[Tabloid, int]:
    columns = [tuple(row[j] for row in t if len(row) > j) for j in range(len(t[0]) if t else 0)]
    vec: dict[Tabloid, int] = {}
    for choice in product(*(permutations(range(len(c))) for c in columns)):
        sign = 1
        relabel = {}
        for col, perm in zip(columns, choice):
            sign *= _sign(perm)
            for pos, target in enumerate(perm):
                relabel[col[pos]] = col[target]
        key = _tabloid(tuple(tuple(relabel[x] for x in row) for row in t))
        vec[key] = vec.get(key, 0) + sign
    return {k: v for k, v in vec.items() if v}


@dataclass(frozen=True)
class SpechtModule:
    shape: Partition

    @cached_property
    def tableaux(self) -> list[Tableau]:
        return standard_tableaux(self.shape)

    @property
    def dimension(self) -> int:
        return len(self.tableaux)

    @cached_property
    def _coordinates(self) -> tuple[list[Tabloid], list[list[int]]]:
        vecs = [_polytabloid(t) for t in self.tableaux]
        tabloids = sorted({k for v in vecs for k in v})
        columns = [[v.get(k, 0) for v in vecs] for k in tabloids]
        return tabloids, columns

    def matrix(self, perm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
        """Matrix of the permutation ``i -> perm[i]``; column j is the image of the j-th basis vector."""
        return _specht_matrix(self.shape, tuple(perm))


@lru_cache(maxsize=None)
def specht_module(shape: Partition) -> SpechtModule:
    return SpechtModule(Partition(shape))


@lru_cache(maxsize=None)
def _specht_matrix(shape: Partition, perm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    module = specht_module(shape)
    if len(perm) != sum(shape):
        raise ValueError("permutation degree does not match the shape")
    tabloids, rows = module._coordinates
    known = set(tabloids)
    cols = []
    for t in module.tableaux:
        image = _polytabloid(tuple(tuple(perm[x] for x in row) for row in t))
        if any(k not in known for k in image):
            raise InternalConsistencyError("image leaves the span of standard polytabloids")
        coords = solve_exact(rows, [image.get(k, 0) for k in tabloids])
        if any(c.denominator != 1 for c in coords):
            raise InternalConsistencyError("non-integral Specht matrix entry")
        cols.append([int(c) for c in coords])
    dim = len(cols)
    return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))
