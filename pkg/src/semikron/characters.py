"""Exact character theory of the symmetric groups.

Character values come from the Murnaghan-Nakayama rule on beta-sets,
memoized per ``(shape, cycle type)``.  Everything is integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .errors import InternalConsistencyError, exact_div
from .partitions import Partition, enumerate_partitions, z_factor


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    length = len(shape)
    beta = [shape[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for x in beta if t < x < b)
        moved = sorted((occupied - {b}) | {t}, reverse=True)
        smaller = tuple(
            p for p in (x - (length - 1 - i) for i, x in enumerate(moved)) if p > 0
        )
        term = _mn(smaller, rest)
        total += -term if height % 2 else term
    return total


def character_value(lam: Partition, rho: Partition) -> int:
    """chi^lam evaluated on the class of cycle type ``rho``."""
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(tuple(lam), tuple(rho))


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // z_factor(rho)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    shapes: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def value(self, lam: Partition, rho: Partition) -> int:
        return self.values[self.shapes.index(lam)][self.classes.index(rho)]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    parts = enumerate_partitions(n)
    return CharacterTable(
        n=n,
        shapes=parts,
        classes=parts,
        values=tuple(tuple(character_value(lam, rho) for rho in parts) for lam in parts),
        class_sizes=tuple(class_size(rho) for rho in parts),
    )


def specht_dimension(lam: Partition) -> int:
    """Dimension of the Specht module, by hook lengths and by the character."""
    n = sum(lam)
    by_hooks = exact_div(factorial(n), prod(Partition(lam).hook_lengths()))
    by_char = _mn(tuple(lam), (1,) * n)
    if by_hooks != by_char:
        raise InternalConsistencyError(f"dimension mismatch for {lam}: {by_hooks} vs {by_char}")
    return by_hooks


@lru_cache(maxsize=None)
def kronecker_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of S^nu in S^lam (x) S^mu."""
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError(f"size mismatch: {lam}, {mu}, {nu}")
    total = 0
    for rho in enumerate_partitions(n):
        a = _mn(tuple(lam), rho)
        if not a:
            continue
        total += class_size(rho) * a * _mn(tuple(mu), rho) * _mn(tuple(nu), rho)
    return exact_div(total, factorial(n))


def _merge(rho1: tuple[int, ...], rho2: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(rho1 + rho2, reverse=True))


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient, counted by LR tableaux of shape nu/lam."""
    if sum(nu) != sum(lam) + sum(mu):
        raise ValueError(f"size mismatch: |{nu}| != |{lam}| + |{mu}|")
    if len(lam) > len(nu) or any(p > q for p, q in zip(lam, nu)):
        return 0
    inner = list(lam) + [0] * (len(nu) - len(lam))
    cells = [(i, j) for i, row in enumerate(nu) for j in range(row - 1, inner[i] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = filling.get((i, j + 1), len(mu))
        lo = filling[(i - 1, j)] + 1 if i > 0 and j >= inner[i - 1] else 1
        found = 0
        for v in range(lo, min(hi, len(mu), i + 1) + 1):
            if counts[v] >= mu[v - 1] or (v > 1 and counts[v] >= counts[v - 1]):
                continue
            counts[v] += 1
            filling[(i, j)] = v
            found += fill(idx + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return found

    return fill(0)


@lru_cache(maxsize=None)
def lr_coefficient_by_characters(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Same coefficient via Frobenius reciprocity over the Young subgroup."""
    a, b = sum(lam), sum(mu)
    if sum(nu) != a + b:
        raise ValueError(f"size mismatch: |{nu}| != |{lam}| + |{mu}|")
    total = 0
    for rho1 in enumerate_partitions(a):
        x = _mn(tuple(lam), rho1)
        if not x:
            continue
        for rho2 in enumerate_partitions(b):
            y = _mn(tuple(mu), rho2)
            if y:
                total += class_size(rho1) * class_size(rho2) * x * y * _mn(tuple(nu), _merge(rho1, rho2))
    return exact_div(total, factorial(a) * factorial(b))
