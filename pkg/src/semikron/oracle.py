"""Brute-force models of the small inverse semigroups and their modules.

Every element is listed, simple modules are realised by explicit integer
matrices (cell bimodule tensored with a polytabloid Specht module), and tensor
products are decomposed by solving the exact linear system of traces.  None of
this goes through the character formulas used by the coefficient engines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb
from typing import Callable

from . import dual, isn
from .errors import InternalConsistencyError
from .linalg import matmul, solve_exact, trace
from .partitions import Partition, enumerate_partitions
from .specht import specht_module

ISN = "isn"
ISTAR = dual.ISTAR
PISTAR = dual.PISTAR
SEMIGROUPS = (ISN, ISTAR, PISTAR)
MAX_N = {ISN: 4, ISTAR: 4, PISTAR: 3}


@dataclass
class FiniteInverseSemigroup:
    """Element list of an inverse semigroup with its multiplication table."""

    name: str
    n: int
    elements: tuple
    _multiply: Callable = field(repr=False)

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def table(self) -> list[list[int]]:
        idx, els, mul = self.index, self.elements, self._multiply
        return [[idx[mul(a, b)] for b in els] for a in els]

    @cached_property
    def inverse(self) -> list[int]:
        return [self.index[x.inverse()] for x in self.elements]

    @cached_property
    def ranks(self) -> list[int]:
        return [x.rank for x in self.elements]

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    @cached_property
    def realizable_ranks(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.ranks)))

    @lru_cache(maxsize=None)
    def cell_data(self, k: int) -> "CellData":
        """Idempotent e of rank k, its left cell, right-orbit representatives and H-class."""
        inv, mul = self.inverse, self.multiply
        idempotents = [i for i in range(len(self.elements)) if self.ranks[i] == k and mul(inv[i], i) == i]
        if not idempotents:
            raise ValueError(f"{self.name} of degree {self.n} has no elements of rank {k}")
        e = idempotents[0]
        cell = [x for x in range(len(self.elements)) if mul(inv[x], x) == e]
        reps: dict[int, int] = {}
        for x in cell:
            reps.setdefault(mul(x, inv[x]), x)
        group = [x for x in cell if mul(x, inv[x]) == e]
        return CellData(e, tuple(cell), tuple(reps.items()), tuple(group))

    def __hash__(self) -> int:
        return hash((self.name, self.n))


@dataclass(frozen=True)
class CellData:
    idempotent: int
    cell: tuple[int, ...]
    reps: tuple[tuple[int, int], ...]  # (codomain idempotent, representative)
    group: tuple[int, ...]


@lru_cache(maxsize=None)
def build_semigroup(name: str, n: int) -> FiniteInverseSemigroup:
    if name not in SEMIGROUPS:
        raise ValueError(f"unknown semigroup {name!r}; expected one of {SEMIGROUPS}")
    if not 0 <= n <= MAX_N[name]:
        raise ValueError(f"the {name} oracle is limited to n <= {MAX_N[name]}")
    if name == ISN:
        return FiniteInverseSemigroup(name, n, isn.all_partial_bijections(n), isn.compose_is)
    return FiniteInverseSemigroup(name, n, dual.all_dual_elements(n, partial=name == PISTAR), dual.compose_dual)


@dataclass
class MatrixModule:
    """A simple module realised as k[L] tensored over the unit group with a Specht module."""

    semigroup: FiniteInverseSemigroup
    shape: Partition
    data: CellData

    @property
    def rank(self) -> int:
        return sum(self.shape)

    @property
    def dimension(self) -> int:
        return len(self.data.reps) * specht_module(self.shape).dimension

    @lru_cache(maxsize=None)
    def blocks(self, s: int) -> tuple[tuple[int, int, tuple], ...]:
        """Nonzero blocks ``(row, column, Specht matrix)`` of the action of element ``s``."""
        sg, d = self.semigroup, self.data
        inv, mul = sg.inverse, sg.multiply
        position = {f: t for t, (f, _) in enumerate(d.reps)}
        rep_of = dict(d.reps)
        specht = specht_module(self.shape)
        out = []
        for col, (_, r) in enumerate(d.reps):
            y = mul(s, r)
            if mul(inv[y], y) != d.idempotent:
                continue
            target = mul(y, inv[y])
            g = mul(inv[rep_of[target]], y)
            perm = sg.elements[g].unit_permutation()
            out.append((position[target], col, specht.matrix(perm)))
        return tuple(out)

    def matrix(self, s: int) -> list[list[int]]:
        size = specht_module(self.shape).dimension
        mat = [[0] * self.dimension for _ in range(self.dimension)]
        for row, col, block in self.blocks(s):
            for i in range(size):
                for j in range(size):
                    mat[row * size + i][col * size + j] = block[i][j]
        return mat

    def trace(self, s: int) -> int:
        return sum(trace(block) for row, col, block in self.blocks(s) if row == col)

    def check_action(self, pairs) -> None:
        """Raise unless matrix(st) == matrix(s) matrix(t) for each given pair."""
        for s, t in pairs:
            if self.matrix(self.semigroup.multiply(s, t)) != matmul(self.matrix(s), self.matrix(t)):
                raise InternalConsistencyError(f"action is not multiplicative on {s}, {t}")

    def __hash__(self) -> int:
        return id(self)


@lru_cache(maxsize=None)
def build_simple_module(semigroup: str, n: int, shape: Partition) -> MatrixModule:
    sg = build_semigroup(semigroup, n)
    shape = Partition(shape)
    if sum(shape) not in sg.realizable_ranks:
        raise ValueError(f"{semigroup} of degree {n} has no simple module indexed by {shape}")
    return MatrixModule(sg, shape, sg.cell_data(sum(shape)))


def simple_labels(semigroup: str, n: int) -> list[Partition]:
    sg = build_semigroup(semigroup, n)
    return [lam for k in sg.realizable_ranks for lam in enumerate_partitions(k)]


@lru_cache(maxsize=None)
def simple_trace_table(semigroup: str, n: int) -> tuple[tuple[int, ...], ...]:
    """``table[s][t]`` is the trace of element s on the t-th simple module."""
    sg = build_semigroup(semigroup, n)
    modules = [build_simple_module(semigroup, n, lam) for lam in simple_labels(semigroup, n)]
    return tuple(tuple(m.trace(s) for m in modules) for s in range(len(sg.elements)))


def _nonnegative_integers(solution, labels) -> dict:
    out = {}
    for lab, v in zip(labels, solution):
        if v.denominator != 1 or v < 0:
            raise InternalConsistencyError(f"multiplicity of {lab} is {v}")
        if v:
            out[lab] = int(v)
    return out


def decompose_tensor(semigroup: str, n: int, lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Multiplicities of the simple modules in N^lam (x) N^mu, from traces alone."""
    labels = simple_labels(semigroup, n)
    table = simple_trace_table(semigroup, n)
    a, b = labels.index(Partition(lam)), labels.index(Partition(mu))
    rhs = [row[a] * row[b] for row in table]
    return _nonnegative_integers(solve_exact(table, rhs), labels)


@lru_cache(maxsize=None)
def cell_trace_table(semigroup: str, n: int) -> tuple[tuple[int, ...], ...]:
    """``table[s][k]`` is the number of x in the rank-k left cell with s x = x."""
    sg = build_semigroup(semigroup, n)
    cells = [sg.cell_data(k).cell for k in sg.realizable_ranks]
    return tuple(
        tuple(sum(1 for x in cell if sg.multiply(s, x) == x) for cell in cells)
        for s in range(len(sg.elements))
    )


def decompose_cell_tensor(semigroup: str, n: int, k: int, l: int) -> dict[int, int]:
    """Cell-module multiplicities, by rank, in the tensor product of the rank-k and rank-l cells."""
    ranks = build_semigroup(semigroup, n).realizable_ranks
    table = cell_trace_table(semigroup, n)
    a, b = ranks.index(k), ranks.index(l)
    rhs = [row[a] * row[b] for row in table]
    return _nonnegative_integers(solve_exact(table, rhs), ranks)


def simple_dimension_audit(semigroup: str, n: int) -> dict[Partition, tuple[int, int]]:
    """Dimension of each simple module next to the count predicted from cell sizes."""
    out = {}
    for lam in simple_labels(semigroup, n):
        k = sum(lam)
        if semigroup == ISN:
            expected = comb(n, k) * specht_module(lam).dimension
        else:
            expected = dual.simple_dimension(lam, semigroup, n)
        out[lam] = (build_simple_module(semigroup, n, lam).dimension, expected)
    return out


# ------------------------------------------------------------- cross-checks


@dataclass(frozen=True)
class Mismatch:
    kind: str
    semigroup: str
    n: int
    args: tuple
    oracle: dict
    engine: dict

    def __str__(self) -> str:
        args = ", ".join(map(str, self.args))
        return f"{self.kind} {self.semigroup} n={self.n} ({args}): oracle={self.oracle} engine={self.engine}"


def engine_decompose(semigroup: str, n: int, lam: Partition, mu: Partition) -> dict[Partition, int]:
    if semigroup == ISN:
        return isn.isn_decompose(lam, mu, n)
    return dual.dual_decompose(lam, mu, semigroup, n)


def engine_cell_multiplicity(semigroup: str, n: int, k: int, l: int, m: int) -> int:
    if semigroup == ISN:
        return isn.cell_tensor_multiplicity(k, l, m, n)
    return dual.cell_tensor_multiplicity_dual(k, l, m, semigroup)


def verify(semigroup: str, n: int) -> list[Mismatch]:
    """Compare the oracle with the formula engines on every pair of simples and of cells."""
    bad = []
    labels = simple_labels(semigroup, n)
    for lam in labels:
        for mu in labels:
            got = decompose_tensor(semigroup, n, lam, mu)
            want = engine_decompose(semigroup, n, lam, mu)
            if got != want:
                bad.append(Mismatch("simple", semigroup, n, (lam, mu), got, want))
    ranks = build_semigroup(semigroup, n).realizable_ranks
    for k in ranks:
        for l in ranks:
            got = decompose_cell_tensor(semigroup, n, k, l)
            want = {m: engine_cell_multiplicity(semigroup, n, k, l, m) for m in ranks}
            want = {m: v for m, v in want.items() if v}
            if got != want:
                bad.append(Mismatch("cell", semigroup, n, (k, l), got, want))
    return bad
