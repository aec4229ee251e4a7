"""Canonical exact radicals: positive reals of the form m**(1/k).

An :class:`ExactRoot` stores a positive rational radicand and a positive
integer index, always reduced so the index is minimal (no divisor d > 1 of
the index leaves the radicand a d-th rational power).  That makes structural
equality coincide with equality of real values, and lets comparisons,
products, and powers stay bit-exact via big-integer cross-raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Mapping

from .factorization import factorize


def _canonical_parts(radicand: Fraction, index: int) -> tuple[Fraction, int]:
    if radicand <= 0:
        raise ValueError(f"radicand must be positive, got {radicand}")
    if index < 1:
        raise ValueError(f"root index must be >= 1, got {index}")
    if radicand == 1:
        return Fraction(1), 1
    if index == 1:
        return radicand, 1
    exponents = factorize(radicand).factors
    shrink = reduce(math.gcd, exponents.values(), index)
    if shrink == 1:
        return radicand, index
    new_index = index // shrink
    new_radicand = Fraction(1)
    for p, e in exponents.items():
        new_radicand *= Fraction(p) ** (e // shrink)
    return new_radicand, new_index


@dataclass(frozen=True)
class ExactRoot:
    """The positive real radicand**(1/index), kept in canonical form.

    Construction canonicalizes, so ExactRoot(8, 6) == ExactRoot(2, 2) and
    the value 1 is always ExactRoot(1, 1).
    """

    radicand: Fraction
    index: int = 1

    def __post_init__(self) -> None:
        radicand, index = _canonical_parts(Fraction(self.radicand), int(self.index))
        object.__setattr__(self, "radicand", radicand)
        object.__setattr__(self, "index", index)

    @classmethod
    def _from_exponents(cls, exponents: Mapping[int, Fraction]) -> "ExactRoot":
        """Build prod(p**e) for rational exponents; canonical by construction."""
        exponents = {p: Fraction(e) for p, e in exponents.items() if e != 0}
        index = reduce(math.lcm, (e.denominator for e in exponents.values()), 1)
        radicand = Fraction(1)
        for p, e in exponents.items():
            radicand *= Fraction(p) ** int(e * index)
        root = object.__new__(cls)
        object.__setattr__(root, "radicand", radicand)
        object.__setattr__(root, "index", index)
        return root

    def exponents(self) -> dict[int, Fraction]:
        """Prime-to-rational-exponent map of the value."""
        return {p: Fraction(e, self.index) for p, e in factorize(self.radicand).factors.items()}

    def is_rational(self) -> bool:
        return self.index == 1

    def as_fraction(self) -> Fraction:
        if self.index != 1:
            raise ValueError(f"{self} is irrational")
        return self.radicand

    def _compare(self, other: "ExactRoot") -> int:
        common = math.lcm(self.index, other.index)
        left = self.radicand ** (common // self.index)
        right = other.radicand ** (common // other.index)
        return (left > right) - (left < right)

    @staticmethod
    def _coerce(value: "ExactRoot | int | Fraction") -> "ExactRoot | None":
        if isinstance(value, ExactRoot):
            return value
        if isinstance(value, (int, Fraction)):
            return ExactRoot(Fraction(value))
        return None

    def __eq__(self, other: object) -> bool:
        coerced = self._coerce(other) if not isinstance(other, ExactRoot) else other
        if coerced is None:
            return NotImplemented
        return self.radicand == coerced.radicand and self.index == coerced.index

    def __hash__(self) -> int:
        return hash((self.radicand, self.index))

    def __lt__(self, other: "ExactRoot | int | Fraction") -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self._compare(coerced) < 0

    def __le__(self, other: "ExactRoot | int | Fraction") -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self._compare(coerced) <= 0

    def __gt__(self, other: "ExactRoot | int | Fraction") -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self._compare(coerced) > 0

    def __ge__(self, other: "ExactRoot | int | Fraction") -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self._compare(coerced) >= 0

    def __mul__(self, other: "ExactRoot | int | Fraction") -> "ExactRoot":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        common = math.lcm(self.index, coerced.index)
        radicand = self.radicand ** (common // self.index) * coerced.radicand ** (
            common // coerced.index
        )
        return ExactRoot(radicand, common)

    __rmul__ = __mul__

    def __truediv__(self, other: "ExactRoot | int | Fraction") -> "ExactRoot":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self * ExactRoot(1 / coerced.radicand, coerced.index)

    def __pow__(self, exponent: int | Fraction) -> "ExactRoot":
        exponent = Fraction(exponent)
        if exponent <= 0:
            raise ValueError(f"exponent must be positive, got {exponent}")
        return ExactRoot(
            self.radicand**exponent.numerator,
            self.index * exponent.denominator,
        )

    def log(self) -> float:
        """Natural log, accurate to double precision (>= 12 significant digits)."""
        return (
            math.log(self.radicand.numerator) - math.log(self.radicand.denominator)
        ) / self.index

    def __float__(self) -> float:
        return math.exp(self.log())

    def __str__(self) -> str:
        if self.index == 1:
            return str(self.radicand)
        return f"root({self.radicand},{self.index})"


ONE = ExactRoot(Fraction(1))


def exact_root(radicand: int | Fraction, index: int = 1) -> ExactRoot:
    """Canonical exact value radicand**(1/index); idempotent."""
    return ExactRoot(Fraction(radicand), index)


def exact_root_compare(a: ExactRoot, b: ExactRoot) -> int:
    """-1, 0, or +1 as the real value of a is <, ==, > that of b."""
    return a._compare(b)


def exact_root_mul(a: ExactRoot, b: ExactRoot) -> ExactRoot:
    return a * b


def exact_root_pow(a: ExactRoot, exponent: int | Fraction) -> ExactRoot:
    return a**exponent


def log_value(value: ExactRoot | int | Fraction) -> float:
    """Natural log of an exact root, integer, or rational."""
    if isinstance(value, ExactRoot):
        return value.log()
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f"log of nonpositive value {value}")
    return math.log(value.numerator) - math.log(value.denominator)
