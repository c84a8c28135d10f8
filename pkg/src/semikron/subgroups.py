"""Subgroups of S_k x S_l that also sit inside S_m, and Frobenius reciprocity over them.

Permutations are tuples of images of ``0..n-1``; composition is right to left,
``compose(p, q)[x] == p[q[x]]``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Sequence

from .characters import _mn
from .errors import InternalConsistencyError, exact_div
from .partitions import Partition, cycle_type

Perm = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def identity(n: int) -> Perm:
    return tuple(range(n))


@dataclass(frozen=True)
class EmbeddedSubgroup:
    """A finite group listed element by element.

    Each element is a triple ``(row, col, big)``: a permutation of ``k`` rows,
    of ``l`` columns, and the induced permutation of ``m`` labelled points.
    """

    k: int
    l: int
    m: int
    elements: tuple[tuple[Perm, Perm, Perm], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def check(self) -> None:
        """Raise if the list is not a group or the big embedding is not an injective homomorphism."""
        members = set(self.elements)
        if len(members) != len(self.elements):
            raise InternalConsistencyError("duplicate group elements")
        unit = (identity(self.k), identity(self.l), identity(self.m))
        if unit not in members:
            raise InternalConsistencyError("identity missing")
        bigs = {}
        for g in self.elements:
            if tuple(map(inverse, g)) not in members:
                raise InternalConsistencyError(f"inverse of {g} missing")
            bigs.setdefault(g[2], g)
        if len(bigs) != len(self.elements):
            raise InternalConsistencyError("big embedding is not injective")
        for g, h in product(self.elements, repeat=2):
            gh = (compose(g[0], h[0]), compose(g[1], h[1]), compose(g[2], h[2]))
            if gh not in members:
                raise InternalConsistencyError("not closed under composition")

    @cached_property
    def class_counts(self) -> Counter:
        """Multiplicities of the triples of cycle types over all elements."""
        return Counter(
            (cycle_type(a), cycle_type(b), cycle_type(c)) for a, b, c in self.elements
        )

    def generators(self) -> list[tuple[Perm, Perm, Perm]]:
        """A small generating set, picked greedily from the element list."""
        gens: list[tuple[Perm, Perm, Perm]] = []
        span = {(identity(self.k), identity(self.l), identity(self.m))}
        for g in self.elements:
            if g in span:
                continue
            gens.append(g)
            frontier = list(span)
            while frontier:
                new = []
                for x in frontier:
                    for s in gens:
                        y = (compose(s[0], x[0]), compose(s[1], x[1]), compose(s[2], x[2]))
                        if y not in span:
                            span.add(y)
                            new.append(y)
                frontier = new
        return gens


def _one_positions(matrix: Matrix) -> list[tuple[int, int]]:
    return [(i, j) for i, row in enumerate(matrix) for j, v in enumerate(row) if v]


def stabilizer_with_big_embedding(
    matrix: Sequence[Sequence[int]],
    bordered: bool = False,
    labeling: Sequence[tuple[int, int]] | None = None,
) -> EmbeddedSubgroup:
    """Stabilizer of a 0/1 matrix under row and column permutations.

    Each stabilizing pair also permutes the 1-entries; with the entries
    numbered by ``labeling`` (row-major by default) this gives the big
    embedding.  For ``bordered`` matrices row 0 and column 0 stay fixed and
    only the remaining ``k`` rows and ``l`` columns move.
    """
    mat = tuple(tuple(int(v) for v in row) for row in matrix)
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    off = 1 if bordered else 0
    k, l = rows - off, cols - off
    ones = list(labeling) if labeling is not None else _one_positions(mat)
    if sorted(ones) != _one_positions(mat):
        raise ValueError("labeling must enumerate exactly the 1-entries")
    label = {pos: t for t, pos in enumerate(ones)}

    columns = [tuple(mat[i][j] for i in range(rows)) for j in range(cols)]
    elements = []
    for g in permutations(range(k)):
        full_g = tuple(range(off)) + tuple(x + off for x in g)
        # column j must go to a column j' with mat[g(i)][j'] == mat[i][j]
        moved = defaultdict(list)
        for jp in range(off, cols):
            moved[tuple(mat[full_g[i]][jp] for i in range(rows))].append(jp)
        if bordered and tuple(mat[full_g[i]][0] for i in range(rows)) != columns[0]:
            continue
        groups = defaultdict(list)
        for j in range(off, cols):
            groups[columns[j]].append(j)
        if any(len(moved.get(key, ())) != len(src) for key, src in groups.items()):
            continue
        keys = list(groups)
        choices = [permutations(moved[key]) for key in keys]
        for picked in product(*choices):
            full_h = list(range(cols))
            for key, targets in zip(keys, picked):
                for j, jp in zip(groups[key], targets):
                    full_h[j] = jp
            big = [0] * len(ones)
            for (i, j), t in label.items():
                big[t] = label[(full_g[i], full_h[j])]
            elements.append((
                tuple(g),
                tuple(x - off for x in full_h[off:]),
                tuple(big),
            ))
    return EmbeddedSubgroup(k=k, l=l, m=len(ones), elements=tuple(sorted(elements)))


def grid_subgroup(k: int, l: int) -> EmbeddedSubgroup:
    """S_k x S_l acting on the cells of a k x l grid read row by row."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    elements = []
    for g in permutations(range(k)):
        for h in permutations(range(l)):
            big = tuple(g[c // l] * l + h[c % l] for c in range(k * l))
            elements.append((g, h, big))
    return EmbeddedSubgroup(k=k, l=l, m=k * l, elements=tuple(elements))


def ind_res_multiplicity(
    group: EmbeddedSubgroup, lam: Partition, mu: Partition, nu: Partition
) -> int:
    """[Ind_H^{S_m} Res_H^{S_k x S_l} (S^lam (x) S^mu) : S^nu] by Frobenius reciprocity."""
    if (sum(lam), sum(mu), sum(nu)) != (group.k, group.l, group.m):
        raise ValueError(
            f"sizes {(sum(lam), sum(mu), sum(nu))} do not match group {(group.k, group.l, group.m)}"
        )
    total = 0
    for (a, b, c), count in group.class_counts.items():
        x = _mn(tuple(lam), a)
        if not x:
            continue
        y = _mn(tuple(mu), b)
        if y:
            total += count * x * y * _mn(tuple(nu), c)
    value = exact_div(total, group.order)
    if value < 0:
        raise InternalConsistencyError(f"negative multiplicity {value}")
    return value

