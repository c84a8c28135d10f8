"""Exact tensor-product multiplicities for the symmetric inverse semigroup,
its dual, the partial dual, and related partition-algebra computations."""

__version__ = "0.1.0"
