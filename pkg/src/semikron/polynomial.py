"""Sparse multivariate polynomials with integer coefficients."""

from __future__ import annotations

from typing import Mapping, Union

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, "XPolynomial"]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    powers = dict(a)
    for var, e in b:
        powers[var] = powers.get(var, 0) + e
    return tuple(sorted(powers.items()))


class XPolynomial:
    """An exact polynomial such as ``3*x^2*y - 1``; the zero polynomial has no terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def variable(cls, name: str) -> "XPolynomial":
        return cls({((name, 1),): 1})

    @classmethod
    def constant(cls, c: int) -> "XPolynomial":
        return cls({(): c})

    @staticmethod
    def lift(value: Scalar) -> "XPolynomial":
        if isinstance(value, XPolynomial):
            return value
        if isinstance(value, int):
            return XPolynomial.constant(value)
        raise TypeError(f"cannot use {type(value).__name__} as a scalar")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Scalar) -> "XPolynomial":
        out = dict(self.terms)
        for m, c in self.lift(other).terms.items():
            out[m] = out.get(m, 0) + c
        return XPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "XPolynomial":
        return XPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Scalar) -> "XPolynomial":
        return self + (-self.lift(other))

    def __rsub__(self, other: Scalar) -> "XPolynomial":
        return self.lift(other) - self

    def __mul__(self, other: Scalar) -> "XPolynomial":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in self.lift(other).terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return XPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "XPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = XPolynomial.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, XPolynomial)):
            return self.terms == self.lift(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def evaluate(self, values: Mapping[str, int]) -> int:
        total = 0
        for m, c in self.terms.items():
            term = c
            for var, e in m:
                term *= values[var] ** e
            total += term
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
