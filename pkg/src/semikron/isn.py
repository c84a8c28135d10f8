"""The symmetric inverse semigroup IS_n: partial bijections, cell modules and
tensor-product multiplicities of its simple modules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Mapping

from .characters import kronecker_coefficient, lr_coefficient, specht_dimension
from .errors import exact_div
from .partitions import Partition, enumerate_partitions


@dataclass(frozen=True, order=True)
class PartialBijection:
    """A bijection between two subsets of ``{1..n}``, stored as sorted (source, target) pairs."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(self.pairs))
        sources = [s for s, _ in pairs]
        targets = [t for _, t in pairs]
        if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
            raise ValueError(f"not a partial bijection: {pairs}")
        if any(not 1 <= x <= self.n for x in sources + targets):
            raise ValueError(f"points outside 1..{self.n}: {pairs}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "PartialBijection":
        return cls(n, tuple(mapping.items()))

    @classmethod
    def identity_on(cls, n: int, subset: Iterable[int]) -> "PartialBijection":
        return cls(n, tuple((x, x) for x in subset))

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(s for s, _ in self.pairs)

    @property
    def codomain(self) -> frozenset[int]:
        return frozenset(t for _, t in self.pairs)

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def inverse(self) -> "PartialBijection":
        return PartialBijection(self.n, tuple((t, s) for s, t in self.pairs))

    def __mul__(self, other: "PartialBijection") -> "PartialBijection":
        return compose_is(self, other)

    def unit_permutation(self) -> tuple[int, ...]:
        """For an element with equal domain and codomain, the induced permutation
        of the sorted domain, as images of ``0..rank-1``."""
        points = sorted(self.domain)
        where = {x: i for i, x in enumerate(points)}
        f = self.as_dict()
        return tuple(where[f[x]] for x in points)

    def __str__(self) -> str:
        return "{" + ",".join(f"{s}->{t}" for s, t in self.pairs) + "}"


def compose_is(sigma: PartialBijection, pi: PartialBijection) -> PartialBijection:
    """``x -> sigma(pi(x))`` wherever both steps are defined (``pi`` acts first)."""
    if sigma.n != pi.n:
        raise ValueError(f"ambient mismatch: {sigma.n} vs {pi.n}")
    s = sigma.as_dict()
    return PartialBijection(sigma.n, tuple((x, s[y]) for x, y in pi.pairs if y in s))


@lru_cache(maxsize=None)
def all_partial_bijections(n: int) -> tuple[PartialBijection, ...]:
    out = []
    for r in range(n + 1):
        for dom in combinations(range(1, n + 1), r):
            for cod in permutations(range(1, n + 1), r):
                out.append(PartialBijection(n, tuple(zip(dom, cod))))
    return tuple(sorted(out, key=lambda s: (s.rank, s.pairs)))


def cell_tensor_multiplicity(k: int, l: int, m: int, n: int) -> int:
    """Multiplicity of the rank-m cell module in the tensor product of the rank-k and rank-l cells."""
    if not (0 <= k <= n and 0 <= l <= n and 0 <= m <= n):
        raise ValueError(f"ranks must lie in 0..{n}")
    if m < max(k, l) or m > k + l:
        return 0
    b = k + l - m
    a, c = k - b, l - b
    return exact_div(factorial(a + b) * factorial(b + c), factorial(a) * factorial(b) * factorial(c))


@lru_cache(maxsize=None)
def _isn_sum(lam: Partition, mu: Partition, nu: Partition) -> int:
    k, l, m = sum(lam), sum(mu), sum(nu)
    if m < max(k, l) or m > k + l:
        return 0
    b = k + l - m
    a, c = k - b, l - b
    total = 0
    for alpha in enumerate_partitions(a):
        for beta in enumerate_partitions(b):
            x = lr_coefficient(alpha, beta, lam)
            if not x:
                continue
            for gamma in enumerate_partitions(c):
                for delta in enumerate_partitions(b):
                    y = lr_coefficient(gamma, delta, mu)
                    if not y:
                        continue
                    for eps in enumerate_partitions(b):
                        g = kronecker_coefficient(beta, delta, eps)
                        if not g:
                            continue
                        for kappa in enumerate_partitions(a + b):
                            z = lr_coefficient(alpha, eps, kappa)
                            if z:
                                total += x * y * g * z * lr_coefficient(kappa, gamma, nu)
    return total


def isn_kronecker(lam: Partition, mu: Partition, nu: Partition, n: int) -> int:
    """Multiplicity of N^nu in N^lam (x) N^mu for simple IS_n-modules."""
    for p in (lam, mu, nu):
        if sum(p) > n:
            raise ValueError(f"partition {Partition(p)} is larger than n={n}")
    return _isn_sum(Partition(lam), Partition(mu), Partition(nu))


def isn_decompose(lam: Partition, mu: Partition, n: int) -> dict[Partition, int]:
    """All nonzero coefficients of N^lam (x) N^mu, keyed by nu."""
    out = {}
    for m in range(n + 1):
        for nu in enumerate_partitions(m):
            v = isn_kronecker(lam, mu, nu, n)
            if v:
                out[nu] = v
    return out


def simple_dimension(lam: Partition, n: int) -> int:
    return comb(n, sum(lam)) * specht_dimension(lam)


@dataclass(frozen=True)
class CellModule:
    """The linearised left cell of IS_n containing the identity on ``{1..k}``."""

    n: int
    k: int
    basis: tuple[PartialBijection, ...]

    def matrix(self, s: PartialBijection) -> list[list[int]]:
        """0/1 matrix of ``s``; column j holds the image of ``basis[j]``."""
        index = {x: i for i, x in enumerate(self.basis)}
        dim = len(self.basis)
        mat = [[0] * dim for _ in range(dim)]
        for j, x in enumerate(self.basis):
            y = s * x
            if y.rank == self.k:
                mat[index[y]][j] = 1
        return mat

    @property
    def generators(self) -> dict[str, PartialBijection]:
        n = self.n
        gens = {"e": PartialBijection.identity_on(n, range(1, n))}
        if n >= 2:
            gens["s"] = PartialBijection.from_mapping(n, {1: 2, 2: 1, **{x: x for x in range(3, n + 1)}})
            gens["c"] = PartialBijection.from_mapping(n, {x: x % n + 1 for x in range(1, n + 1)})
        else:
            gens["id"] = PartialBijection.identity_on(n, range(1, n + 1))
        return gens

    def generator_matrices(self) -> dict[str, list[list[int]]]:
        return {name: self.matrix(s) for name, s in self.generators.items()}


def build_cell_module(n: int, k: int) -> CellModule:
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    dom = tuple(range(1, k + 1))
    basis = tuple(
        PartialBijection(n, tuple(zip(dom, cod)))
        for cod in permutations(range(1, n + 1), k)
    )
    return CellModule(n=n, k=k, basis=tuple(sorted(basis)))
