"""The dual symmetric inverse semigroup I_n^* and its partial analogue PI_n^*.

Elements are bijections between the blocks of two set partitions (of subsets
of ``{1..n}`` in the partial case).  Tensor-product multiplicities of simple
modules are sums over orbits of 0/1 matrices of an induction-restriction
multiplicity computed by Frobenius reciprocity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Iterator

from .characters import specht_dimension
from .orbits import count_matrices, enumerate_matrix_orbits
from .partitions import Partition, enumerate_partitions
from .subgroups import ind_res_multiplicity

Block = tuple[int, ...]

ISTAR = "istar"
PISTAR = "pistar"


def _normalize(blocks: Iterable[Iterable[int]]) -> tuple[Block, ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


@dataclass(frozen=True, order=True)
class SetPartition:
    """A set partition of a subset (the support) of ``{1..n}``."""

    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = _normalize(self.blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if seen.intersection(b):
                raise ValueError(f"blocks overlap: {blocks}")
            seen.update(b)
        if any(not 1 <= x <= self.n for x in seen):
            raise ValueError(f"points outside 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for b in self.blocks for x in b)

    @property
    def rank(self) -> int:
        return len(self.blocks)

    @property
    def is_total(self) -> bool:
        return len(self.support) == self.n

    def __str__(self) -> str:
        return "{" + "|".join(",".join(map(str, b)) for b in self.blocks) + "}"


def parse_set_partition(text: str, n: int | None = None) -> SetPartition:
    """Parse ``"{1,2|3|4,5}"``; ``n`` defaults to the largest point."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError(f"set partition must be written in braces, got {text!r}")
    body = s[1:-1].strip()
    blocks = [tuple(int(x) for x in part.split(",")) for part in body.split("|")] if body else []
    if n is None:
        n = max((x for b in blocks for x in b), default=0)
    return SetPartition(n, tuple(blocks))


@dataclass(frozen=True, order=True)
class DualElement:
    """A bijection from the blocks of ``dom`` to the blocks of ``cod``, stored as block pairs."""

    n: int
    pairs: tuple[tuple[Block, Block], ...]

    def __post_init__(self):
        pairs = tuple(sorted((tuple(sorted(a)), tuple(sorted(b))) for a, b in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        # validates both sides
        SetPartition(self.n, tuple(a for a, _ in pairs))
        SetPartition(self.n, tuple(b for _, b in pairs))

    @classmethod
    def from_partitions(cls, dom: SetPartition, cod: SetPartition, block_map: dict[Block, Block]) -> "DualElement":
        if dom.n != cod.n or dom.rank != cod.rank:
            raise ValueError("domain and codomain must share n and rank")
        if sorted(block_map) != list(dom.blocks) or sorted(block_map.values()) != list(cod.blocks):
            raise ValueError("block_map must be a bijection dom.blocks -> cod.blocks")
        return cls(dom.n, tuple(block_map.items()))

    @classmethod
    def idempotent(cls, rho: SetPartition) -> "DualElement":
        return cls(rho.n, tuple((b, b) for b in rho.blocks))

    @property
    def dom(self) -> SetPartition:
        return SetPartition(self.n, tuple(a for a, _ in self.pairs))

    @property
    def cod(self) -> SetPartition:
        return SetPartition(self.n, tuple(b for _, b in self.pairs))

    @property
    def block_map(self) -> dict[Block, Block]:
        return dict(self.pairs)

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def inverse(self) -> "DualElement":
        return DualElement(self.n, tuple((b, a) for a, b in self.pairs))

    def __mul__(self, other: "DualElement") -> "DualElement":
        return compose_dual(self, other)

    def unit_permutation(self) -> tuple[int, ...]:
        """For an element with equal domain and codomain, the permutation of its sorted blocks."""
        blocks = [a for a, _ in self.pairs]
        where = {b: i for i, b in enumerate(blocks)}
        return tuple(where[b] for _, b in self.pairs)

    def __str__(self) -> str:
        fmt = lambda b: "{" + ",".join(map(str, b)) + "}"  # noqa: E731
        return " ".join(f"{fmt(a)}->{fmt(b)}" for a, b in self.pairs)


def compose_dual(xi: DualElement, zeta: DualElement) -> DualElement:
    """The product ``xi zeta`` (``zeta`` acts first).

    Codomain blocks of ``zeta`` and domain blocks of ``xi`` are glued along
    shared points.  A glued component touching a point outside either
    support is discarded whole, together with everything attached to it.
    """
    if xi.n != zeta.n:
        raise ValueError(f"ambient mismatch: {xi.n} vs {zeta.n}")
    parent = list(range(xi.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, b in zeta.pairs:
        for x in b[1:]:
            parent[find(x)] = find(b[0])
    for a, _ in xi.pairs:
        for x in a[1:]:
            parent[find(x)] = find(a[0])

    covered_right = {x for _, b in zeta.pairs for x in b}
    covered_left = {x for a, _ in xi.pairs for x in a}
    dead = {find(x) for x in covered_right ^ covered_left}

    sources: dict[int, list[int]] = {}
    targets: dict[int, list[int]] = {}
    for a, b in zeta.pairs:
        root = find(b[0])
        if root not in dead:
            sources.setdefault(root, []).extend(a)
    for a, b in xi.pairs:
        root = find(a[0])
        if root not in dead:
            targets.setdefault(root, []).extend(b)
    return DualElement(xi.n, tuple((tuple(sources[r]), tuple(targets[r])) for r in sources))


def intersect_partitions(rho: SetPartition, sigma: SetPartition) -> SetPartition:
    """Nonempty intersections of blocks, plus the parts of each block lying outside the other support."""
    if rho.n != sigma.n:
        raise ValueError(f"ambient mismatch: {rho.n} vs {sigma.n}")
    u, v = rho.support, sigma.support
    blocks = [set(b) & set(c) for b in rho.blocks for c in sigma.blocks]
    blocks += [set(b) - v for b in rho.blocks]
    blocks += [set(c) - u for c in sigma.blocks]
    return SetPartition(rho.n, tuple(b for b in blocks if b))


def set_partitions(points: tuple[int, ...]) -> Iterator[tuple[Block, ...]]:
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i in range(len(part)):
            yield part[:i] + ((first,) + part[i],) + part[i + 1:]


@lru_cache(maxsize=None)
def partitions_of_rank(n: int, rank: int, partial: bool = False) -> tuple[SetPartition, ...]:
    """Set partitions of ``{1..n}`` (or of its subsets if ``partial``) with ``rank`` blocks."""
    supports = (
        [c for r in range(n + 1) for c in combinations(range(1, n + 1), r)]
        if partial
        else [tuple(range(1, n + 1))]
    )
    out = {SetPartition(n, p) for s in supports for p in set_partitions(s) if len(p) == rank}
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def all_dual_elements(n: int, partial: bool = False) -> tuple[DualElement, ...]:
    out = []
    for r in range(n + 1):
        parts = partitions_of_rank(n, r, partial)
        for dom in parts:
            for cod in parts:
                for image in permutations(cod.blocks):
                    out.append(DualElement(n, tuple(zip(dom.blocks, image))))
    return tuple(sorted(out, key=lambda e: (e.rank, e.pairs)))


def _check_semigroup(semigroup: str) -> bool:
    if semigroup not in (ISTAR, PISTAR):
        raise ValueError(f"semigroup must be {ISTAR!r} or {PISTAR!r}, got {semigroup!r}")
    return semigroup == PISTAR


def cell_tensor_multiplicity_dual(k: int, l: int, m: int, semigroup: str = ISTAR) -> int:
    """Multiplicity of the rank-m cell module in the tensor product of the rank-k and rank-l cells."""
    return count_matrices(k, l, m, bordered=_check_semigroup(semigroup))


def _realizable(rank: int, n: int, partial: bool) -> bool:
    return 0 <= rank <= n and (partial or rank >= 1 or n == 0)


def dual_kronecker(lam: Partition, mu: Partition, nu: Partition, semigroup: str, n: int) -> int:
    """Multiplicity of N^nu in N^lam (x) N^mu over I_n^* or PI_n^*."""
    partial = _check_semigroup(semigroup)
    k, l, m = sum(lam), sum(mu), sum(nu)
    if not all(_realizable(r, n, partial) for r in (k, l, m)):
        return 0
    return _orbit_sum(Partition(lam), Partition(mu), Partition(nu), partial)


@lru_cache(maxsize=None)
def _orbit_sum(lam: Partition, mu: Partition, nu: Partition, bordered: bool) -> int:
    k, l, m = sum(lam), sum(mu), sum(nu)
    return sum(
        ind_res_multiplicity(orbit.stabilizer, lam, mu, nu)
        for orbit in enumerate_matrix_orbits(k, l, m, bordered)
    )


def dual_decompose(lam: Partition, mu: Partition, semigroup: str, n: int) -> dict[Partition, int]:
    out = {}
    for m in range(n + 1):
        for nu in enumerate_partitions(m):
            v = dual_kronecker(lam, mu, nu, semigroup, n)
            if v:
                out[nu] = v
    return out


def simple_dimension(lam: Partition, semigroup: str, n: int) -> int:
    """Dimension of N^lam: (number of codomains of the given rank) * dim S^lam."""
    partial = _check_semigroup(semigroup)
    return len(partitions_of_rank(n, sum(lam), partial)) * specht_dimension(lam)


def unit_group_order(k: int) -> int:
    return factorial(k)
