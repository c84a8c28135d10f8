"""Integer partitions: enumeration, branching and first-row surgery."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves like a plain tuple (hashable, ordered, indexable).  The empty
    partition ``Partition()`` is the unique partition of 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate()
        return [
            (row - j - 1) + (conj[j] - i - 1) + 1
            for i, row in enumerate(self)
            for j in range(row)
        ]


def parse_partition(text: str) -> Partition:
    """Parse the bracketed text form, e.g. ``"[3,2,1]"`` or ``"[]"``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must be written in brackets, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Partition()
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition(parts)


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def remove_one_box(lam: Partition) -> set[Partition]:
    """Partitions obtained by deleting one removable corner of ``lam``."""
    out = set()
    for i, p in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < p:
            parts = list(lam)
            parts[i] -= 1
            out.add(Partition(q for q in parts if q))
    return out


def add_one_box(lam: Partition) -> set[Partition]:
    out = set()
    parts = list(lam) + [0]
    for i, p in enumerate(parts):
        if i == 0 or parts[i - 1] > p:
            grown = parts.copy()
            grown[i] += 1
            out.add(Partition(q for q in grown if q))
    return out


def grow_first_row(lam: Partition, a: int) -> Partition:
    """Lengthen the first row of ``lam`` by ``a`` boxes."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    if not lam:
        return Partition((a,) if a else ())
    return Partition((lam[0] + a,) + tuple(lam[1:]))


def drop_first_row(lam: Partition) -> Partition:
    # the empty partition maps to itself
    return Partition(lam[1:])


def cycle_type(perm: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation given as a tuple of images of 0..n-1."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def z_factor(rho: Partition) -> int:
    """Order of the centralizer of a permutation with cycle type ``rho``."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part ** mult * factorial(mult)
    return z
