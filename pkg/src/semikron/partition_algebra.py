"""Partition diagrams, their multiplication, cell modules of P_n(x), and the
restriction coefficients of S_{kl} to the grid-embedded S_k x S_l.

Points ``1..n`` form the upper row and ``n+1..2n`` the lower row.  In a
product ``d1 * d2`` the diagram ``d2`` acts first: it is drawn on top, its
lower row is glued to the upper row of ``d1``, and closed components in the
middle are removed, each contributing a factor of the parameter.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import factorial, gcd
from typing import Sequence

from .characters import _mn, class_size
from .dual import set_partitions
from .errors import InternalConsistencyError, exact_div
from .partitions import Partition, cycle_type, enumerate_partitions, grow_first_row
from .polynomial import Scalar, XPolynomial
from .subgroups import compose, inverse

Block = tuple[int, ...]

MAX_ENUMERATION_N = 4


@dataclass(frozen=True, order=True)
class PartitionDiagram:
    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        points = [p for b in blocks for p in b]
        if any(not b for b in blocks) or sorted(points) != list(range(1, 2 * self.n + 1)):
            raise ValueError(f"blocks must partition 1..{2 * self.n}: {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def identity(cls, n: int) -> "PartitionDiagram":
        return cls(n, tuple((i, i + n) for i in range(1, n + 1)))

    @property
    def propagating(self) -> tuple[Block, ...]:
        return tuple(
            b for b in self.blocks
            if any(p <= self.n for p in b) and any(p > self.n for p in b)
        )

    @property
    def rank(self) -> int:
        return len(self.propagating)

    def upper_key(self):
        """Upper-row partition and which of its parts propagate; constant on left cells."""
        parts, through = [], []
        for b in self.blocks:
            up = tuple(p for p in b if p <= self.n)
            if up:
                parts.append(up)
                if len(up) < len(b):
                    through.append(up)
        return tuple(sorted(parts)), tuple(sorted(through))

    def lower_key(self):
        parts, through = [], []
        for b in self.blocks:
            low = tuple(p - self.n for p in b if p > self.n)
            if low:
                parts.append(low)
                if len(low) < len(b):
                    through.append(low)
        return tuple(sorted(parts)), tuple(sorted(through))

    def through_permutation(self) -> tuple[int, ...]:
        """Matching of sorted upper propagating parts to sorted lower propagating parts."""
        uppers = self.upper_key()[1]
        lowers = self.lower_key()[1]
        where = {low: i for i, low in enumerate(lowers)}
        image = {}
        for b in self.propagating:
            up = tuple(p for p in b if p <= self.n)
            low = tuple(p - self.n for p in b if p > self.n)
            image[up] = where[low]
        return tuple(image[u] for u in uppers)

    def __mul__(self, other: "PartitionDiagram") -> tuple["PartitionDiagram", int]:
        return multiply_diagrams(self, other)

    def __str__(self) -> str:
        def name(p):
            return str(p) if p <= self.n else f"{p - self.n}'"
        return "{" + "|".join(",".join(name(p) for p in b) for b in self.blocks) + "}"


def parse_diagram(text: str, n: int) -> PartitionDiagram:
    """Parse ``"{1,1'|2,2'}"`` (or space-separated ``"{1,1'} {2,2'}"``)."""
    s = text.strip()
    if "|" in s or s.count("{") == 1:
        if not (s.startswith("{") and s.endswith("}")):
            raise ValueError(f"malformed diagram {text!r}")
        chunks = s[1:-1].split("|")
    else:
        chunks = [c.strip().strip("{}") for c in s.split("}") if c.strip()]
    blocks = []
    for chunk in chunks:
        block = []
        for tok in chunk.split(","):
            tok = tok.strip()
            block.append(int(tok[:-1]) + n if tok.endswith("'") else int(tok))
        blocks.append(tuple(block))
    return PartitionDiagram(n, tuple(blocks))


@lru_cache(maxsize=1 << 17)
def multiply_diagrams(d1: PartitionDiagram, d2: PartitionDiagram) -> tuple[PartitionDiagram, int]:
    """Return ``(d, r)`` with ``d1 * d2 = x^r d``; ``d2`` is on top."""
    if d1.n != d2.n:
        raise ValueError(f"size mismatch: {d1.n} vs {d2.n}")
    n = d1.n
    # 0..n-1 top, n..2n-1 middle, 2n..3n-1 bottom
    parent = list(range(3 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in d2.blocks:
        for p in b[1:]:
            parent[find(p - 1)] = find(b[0] - 1)
    for b in d1.blocks:
        for p in b[1:]:
            parent[find(n + p - 1)] = find(n + b[0] - 1)

    comps: dict[int, list[int]] = {}
    for x in range(3 * n):
        comps.setdefault(find(x), []).append(x)
    blocks, removed = [], 0
    for members in comps.values():
        outer = [x + 1 if x < n else x - n + 1 for x in members if x < n or x >= 2 * n]
        if outer:
            blocks.append(tuple(outer))
        else:
            removed += 1
    return PartitionDiagram(n, tuple(blocks)), removed


def _check_enumerable(n: int) -> None:
    if not 0 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"diagram enumeration is limited to 0 <= n <= {MAX_ENUMERATION_N}")


@lru_cache(maxsize=None)
def enumerate_diagrams(n: int) -> tuple[PartitionDiagram, ...]:
    """All Bell(2n) partition diagrams on 2n points, sorted."""
    _check_enumerable(n)
    return tuple(sorted(PartitionDiagram(n, p) for p in set_partitions(tuple(range(1, 2 * n + 1)))))


@lru_cache(maxsize=None)
def left_cells(n: int) -> tuple[tuple[PartitionDiagram, ...], ...]:
    """Left cells, ordered by decreasing rank and then by upper-row data."""
    groups: dict = {}
    for d in enumerate_diagrams(n):
        groups.setdefault((d.rank, d.upper_key()), []).append(d)
    keys = sorted(groups, key=lambda key: (-key[0], key[1]))
    return tuple(tuple(groups[key]) for key in keys)


def left_cell_of(d: PartitionDiagram) -> tuple[PartitionDiagram, ...]:
    for cell in left_cells(d.n):
        if d in cell:
            return cell
    raise InternalConsistencyError(f"{d} lies in no left cell")


@lru_cache(maxsize=None)
def product_table(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """``table[i][j] = (index of d_i * d_j, r)`` over ``enumerate_diagrams(n)``."""
    diagrams = enumerate_diagrams(n)
    index = {d: i for i, d in enumerate(diagrams)}
    rows = []
    for d1 in diagrams:
        row = []
        for d2 in diagrams:
            d, r = multiply_diagrams(d1, d2)
            row.append((index[d], r))
        rows.append(tuple(row))
    return tuple(rows)


def delta_check(d1: PartitionDiagram, d2: PartitionDiagram, a: Scalar, b: Scalar) -> bool:
    """Whether ``d -> d (x) d`` is multiplicative on the pair ``(d1, d2)``.

    The product is formed once in P_n(ab) and once factorwise in
    P_n(a) (x) P_n(b); both the diagrams and the scalars must agree.
    """
    if XPolynomial.lift(a).is_zero() or XPolynomial.lift(b).is_zero():
        raise ValueError("parameters must be nonzero")
    coeff, d = scaled_product(d1, d2, a * b)
    coeff_a, d_a = scaled_product(d1, d2, a)
    coeff_b, d_b = scaled_product(d1, d2, b)
    return d == d_a == d_b and XPolynomial.lift(coeff) == XPolynomial.lift(coeff_a * coeff_b)


def scaled_product(d1: PartitionDiagram, d2: PartitionDiagram, x: Scalar) -> tuple[Scalar, PartitionDiagram]:
    """The product in P_n(x) as ``(scalar, diagram)``."""
    d, r = multiply_diagrams(d1, d2)
    return x ** r, d


# ---------------------------------------------------------------- cell modules


@dataclass(frozen=True)
class CellModuleP:
    """The linearised left cell ``basis``; diagrams act by left multiplication,
    and a product of lower rank is zero."""

    basis: tuple[PartitionDiagram, ...]

    @property
    def n(self) -> int:
        return self.basis[0].n

    @property
    def rank(self) -> int:
        return self.basis[0].rank

    def act(self, d: PartitionDiagram, j: int) -> tuple[int, int] | None:
        """``d . basis[j]`` as ``(index, r)`` meaning ``x^r basis[index]``, or None for zero."""
        prod, r = multiply_diagrams(d, self.basis[j])
        if prod.rank < self.rank:
            return None
        return self._index[prod], r

    @cached_property
    def _index(self) -> dict[PartitionDiagram, int]:
        return {d: i for i, d in enumerate(self.basis)}


def cell_module(cell: Sequence[PartitionDiagram]) -> CellModuleP:
    cell = tuple(cell)
    if not cell or len({(d.rank, d.upper_key()) for d in cell}) != 1:
        raise ValueError("not a left cell")
    return CellModuleP(cell)


@dataclass(frozen=True)
class FiltrationLayer:
    vectors: tuple[tuple[int, int], ...]
    rank: int
    idempotent: PartitionDiagram
    generator: tuple[int, int]
    stabilizer_order: int
    standard_multiplicities: dict[Partition, int] = field(compare=False)

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    @property
    def is_cell_module(self) -> bool:
        return self.stabilizer_order == 1


@dataclass(frozen=True)
class FiltrationReport:
    """Layers of a standard filtration of a tensor product of two cell modules.

    ``cell_filtration`` is True when every layer is a cell module, False
    when the standard multiplicities rule out any cell filtration, and None
    when neither could be decided.
    """

    left: CellModuleP
    right: CellModuleP
    layers: tuple[FiltrationLayer, ...]
    rank_multiplicities: dict[int, dict[Partition, int]]
    cell_filtration: bool | None

    @property
    def layer_dimensions(self) -> tuple[int, ...]:
        return tuple(layer.dimension for layer in self.layers)


class _TensorAction:
    def __init__(self, left: CellModuleP, right: CellModuleP):
        if left.n != right.n:
            raise ValueError("modules over different partition algebras")
        self.left, self.right = left, right
        self.diagrams = enumerate_diagrams(left.n)
        self.vectors = [(i, j) for i in range(len(left.basis)) for j in range(len(right.basis))]
        self.position = {v: t for t, v in enumerate(self.vectors)}
        lacts = [[left.act(d, i) for i in range(len(left.basis))] for d in self.diagrams]
        racts = [[right.act(d, j) for j in range(len(right.basis))] for d in self.diagrams]
        # image[d][t] is the target vector index or None; the scalar is a^r1 b^r2, never zero
        self.image = []
        for ld, rd in zip(lacts, racts):
            row = []
            for i, j in self.vectors:
                if ld[i] is None or rd[j] is None:
                    row.append(None)
                else:
                    row.append(self.position[(ld[i][0], rd[j][0])])
            self.image.append(row)

    def successors(self, t: int) -> set[int]:
        return {row[t] for row in self.image if row[t] is not None}


def _strong_components(nodes: list[int], succ) -> list[list[int]]:
    """Tarjan's algorithm, iterative."""
    index, low, on_stack, stack, out = {}, {}, set(), [], []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(sorted(succ(root))))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(succ(w)))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
    return out


def _analyse_layer(action: _TensorAction, layer: set[int]) -> FiltrationLayer:
    diagrams = action.diagrams
    live = [
        d for k, d in enumerate(diagrams)
        if any(action.image[k][t] in layer for t in layer)
    ]
    j = min(d.rank for d in live)
    index = {d: k for k, d in enumerate(diagrams)}

    chosen = None
    for d in diagrams:
        if d.rank != j:
            continue
        dd, _ = multiply_diagrams(d, d)
        if dd != d:
            continue
        for t in sorted(layer):
            if action.image[index[d]][t] == t:
                chosen = (d, t)
                break
        if chosen:
            break
    if chosen is None:
        raise InternalConsistencyError("no idempotent fixes a vector of the layer")
    idem, t0 = chosen

    cell = left_cell_of(idem)
    reached = {action.image[index[c]][t0] for c in cell}
    if reached - {None} != layer:
        raise InternalConsistencyError("left cell of the idempotent does not generate the layer")

    group = [g for g in cell if g.lower_key() == idem.lower_key()]
    if len(group) != factorial(j):
        raise InternalConsistencyError("H-class of the idempotent is not a symmetric group")
    base_inv = inverse(idem.through_permutation())
    phi = {g: compose(base_inv, g.through_permutation()) for g in group}
    for g in group:
        for h in group:
            gh, _ = multiply_diagrams(g, h)
            if phi[gh] != compose(phi[g], phi[h]):
                raise InternalConsistencyError("H-class does not map homomorphically to S_j")
    stab = [g for g in group if action.image[index[g]][t0] == t0]
    if exact_div(len(cell), len(stab)) != len(layer):
        raise InternalConsistencyError("layer dimension differs from |L| / |H|")

    types = Counter(cycle_type(phi[h]) for h in stab)
    mults = {}
    for lam in enumerate_partitions(j):
        v = exact_div(sum(c * _mn(tuple(lam), rho) for rho, c in types.items()), len(stab))
        if v:
            mults[lam] = v
    return FiltrationLayer(
        vectors=tuple(action.vectors[t] for t in sorted(layer)),
        rank=j,
        idempotent=idem,
        generator=action.vectors[t0],
        stabilizer_order=len(stab),
        standard_multiplicities=mults,
    )


def standard_filtration(left: CellModuleP, right: CellModuleP) -> FiltrationReport:
    """Filter ``left (x) right`` by strongly connected pieces of its action graph.

    Layers are taken bottom-up (submodules first).  When several pieces are
    available at once, the one holding the earliest basis tensor goes first.
    """
    action = _TensorAction(left, right)
    nodes = list(range(len(action.vectors)))
    comps = _strong_components(nodes, action.successors)
    comp_of = {t: c for c, comp in enumerate(comps) for t in comp}
    targets = {
        c: {comp_of[w] for t in comp for w in action.successors(t)} - {c}
        for c, comp in enumerate(comps)
    }

    placed: set[int] = set()
    done: set[int] = set()
    layers = []
    while len(done) < len(comps):
        ready = [c for c in range(len(comps)) if c not in done and targets[c] <= done]
        pick = min(ready, key=lambda c: min(comps[c]))
        layers.append(_analyse_layer(_Quotient(action, placed), set(comps[pick])))
        done.add(pick)
        placed.update(comps[pick])

    totals: dict[int, Counter] = {}
    for layer in layers:
        totals.setdefault(layer.rank, Counter()).update(layer.standard_multiplicities)
    rank_mults = {r: dict(sorted(c.items(), reverse=True)) for r, c in sorted(totals.items())}

    if all(layer.is_cell_module for layer in layers):
        verdict: bool | None = True
    elif any(not _proportional_to_dimensions(r, m) for r, m in rank_mults.items()):
        verdict = False
    else:
        verdict = None
    return FiltrationReport(left, right, tuple(layers), rank_mults, verdict)


class _Quotient:
    """The action graph with already placed vectors sent to zero."""

    def __init__(self, action: _TensorAction, placed: set[int]):
        self.left, self.right = action.left, action.right
        self.diagrams = action.diagrams
        self.vectors = action.vectors
        self.image = [[None if v in placed else v for v in row] for row in action.image]


def _proportional_to_dimensions(rank: int, mults: dict[Partition, int]) -> bool:
    """A cell module of this rank contributes each standard C^lam dim(S^lam) times."""
    shapes = enumerate_partitions(rank)
    dims = [_mn(tuple(lam), (1,) * rank) for lam in shapes]
    counts = [mults.get(lam, 0) for lam in shapes]
    c, rem = divmod(counts[0], dims[0])
    return rem == 0 and all(x == c * d for x, d in zip(counts, dims))


# ------------------------------------------------- grid restriction coefficients


def _grid_cycle_type(rho: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    parts = []
    for p in rho:
        for q in sigma:
            g = gcd(p, q)
            parts.extend([p * q // g] * g)
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def b_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of S^lam (x) S^mu in S^nu restricted to the grid-embedded S_k x S_l."""
    k, l = sum(lam), sum(mu)
    if sum(nu) != k * l:
        raise ValueError(f"|nu| must equal |lam|*|mu| = {k * l}, got {sum(nu)}")
    total = 0
    for rho in enumerate_partitions(k):
        x = _mn(tuple(lam), rho)
        if not x:
            continue
        for sigma in enumerate_partitions(l):
            y = _mn(tuple(mu), sigma)
            if y:
                total += class_size(rho) * class_size(sigma) * x * y * _mn(
                    tuple(nu), _grid_cycle_type(rho, sigma)
                )
    value = exact_div(total, factorial(k) * factorial(l))
    if value < 0:
        raise InternalConsistencyError(f"negative multiplicity {value}")
    return value


@dataclass(frozen=True)
class StabilityScan:
    lam: Partition
    mu: Partition
    nu: Partition
    values: tuple[tuple[int, int], ...]

    @property
    def onset(self) -> int:
        """Least a from which the computed sequence stays constant."""
        seq = [v for _, v in self.values]
        a = len(seq) - 1
        while a > 0 and seq[a - 1] == seq[-1]:
            a -= 1
        return self.values[a][0]


def stability_scan(lam: Partition, mu: Partition, nu: Partition, a_max: int) -> StabilityScan:
    """b(lam grown by a, mu, nu grown by l*a) for a = 0..a_max."""
    if a_max < 0:
        raise ValueError("a_max must be nonnegative")
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    l = sum(mu)
    values = tuple(
        (a, b_coefficient(grow_first_row(lam, a), mu, grow_first_row(nu, l * a)))
        for a in range(a_max + 1)
    )
    return StabilityScan(lam, mu, nu, values)
