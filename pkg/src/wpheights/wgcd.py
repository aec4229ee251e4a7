"""Weighted greatest common divisors of integer and rational tuples.

A weight system (q_0, ..., q_n) grades each coordinate of a tuple.  The
weighted gcd is the largest integer d with d**q_i dividing x_i for every i;
the absolute variant allows any positive real d whose powers d**q_i are
integers, and always comes out as a root of an integer with index dividing
gcd(q_0, ..., q_n).  Both are computed two ways: directly from the prime
factorization of every coordinate, and by factoring only gcd(x) and
recombining, which the tests hold to exact agreement.

Zero coordinates never constrain the divisor (d**q divides 0 for every d);
the all-zero tuple is rejected.  Signs are ignored: divisors are positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .factorization import factorize
from .radicals import ExactRoot


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights with their derived gcd, product, and reduction."""

    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]) -> None:
        ws = tuple(int(q) for q in weights)
        if not ws:
            raise ValueError("a weight system needs at least one weight")
        if any(q < 1 for q in ws):
            raise ValueError(f"weights must be positive integers, got {ws}")
        object.__setattr__(self, "weights", ws)

    @property
    def weight_gcd(self) -> int:
        return math.gcd(*self.weights)

    @property
    def weight_product(self) -> int:
        return math.prod(self.weights)

    @property
    def reduced_weights(self) -> tuple[int, ...]:
        g = self.weight_gcd
        return tuple(q // g for q in self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(q) for q in self.weights) + ")"


def as_weight_system(weights: WeightSystem | Iterable[int]) -> WeightSystem:
    if isinstance(weights, WeightSystem):
        return weights
    return WeightSystem(weights)


@dataclass(frozen=True)
class WeightedTuple:
    """Integer coordinates bound to a weight system; not all zero."""

    coords: tuple[int, ...]
    weights: WeightSystem

    def __init__(self, coords: Iterable[int], weights: WeightSystem | Iterable[int]) -> None:
        cs = tuple(_as_int(c) for c in coords)
        ws = as_weight_system(weights)
        if len(cs) != len(ws):
            raise ValueError(f"{len(cs)} coordinates but {len(ws)} weights")
        if not any(cs):
            raise ValueError("all coordinates are zero")
        object.__setattr__(self, "coords", cs)
        object.__setattr__(self, "weights", ws)


def _as_int(value) -> int:
    if isinstance(value, int):
        return value
    as_fraction = Fraction(value)
    if as_fraction.denominator != 1:
        raise ValueError(f"expected an integer coordinate, got {value}")
    return as_fraction.numerator


def _exponent_profile(x: WeightedTuple, divisors: Sequence[int]) -> dict[int, int]:
    """Per-prime min over nonzero coordinates of floor(v_p(x_i) / divisors[i])."""
    profile: dict[int, int] | None = None
    for coord, unit in zip(x.coords, divisors):
        if coord == 0:
            continue
        exponents = factorize(abs(coord)).factors
        local = {p: e // unit for p, e in exponents.items()}
        if profile is None:
            profile = local
        else:
            profile = {
                p: min(a, local.get(p, 0)) for p, a in profile.items() if local.get(p, 0) > 0
            }
    assert profile is not None  # not-all-zero is a type invariant
    return {p: a for p, a in profile.items() if a > 0}


def wgcd(x: WeightedTuple) -> int:
    """Largest integer d with d**q_i dividing x_i for every i.

    Computed from the factorization of each nonzero coordinate: per prime,
    take the minimum over coordinates of floor(v_p(x_i) / q_i).
    """
    profile = _exponent_profile(x, x.weights.weights)
    return math.prod(p**a for p, a in profile.items())


def awgcd(x: WeightedTuple) -> ExactRoot:
    """Largest real d with every d**q_i an integer dividing x_i.

    The result is the weight_gcd-th root of an integer, returned canonical;
    per prime the exponent is the minimum of floor(v_p(x_i) / qbar_i) over
    the reduced weights qbar_i = q_i / weight_gcd.
    """
    profile = _exponent_profile(x, x.weights.reduced_weights)
    radicand = math.prod(p**a for p, a in profile.items())
    return ExactRoot(Fraction(radicand), x.weights.weight_gcd)


def _recombine(x: WeightedTuple, divisors: Sequence[int]) -> int:
    """Factor only gcd(x), then lower per-prime caps by divisibility checks.

    The cap floor(s_p / min_i divisors[i]) bounds the attainable exponent;
    it is not always attained, so each prime descends until the power test
    p**(a * divisors[i]) | x_i holds for every nonzero coordinate.
    """
    nonzero = [(c, u) for c, u in zip(x.coords, divisors) if c != 0]
    g = math.gcd(*(c for c, _ in nonzero))
    if g == 1:
        return 1
    unit_min = min(u for _, u in nonzero)
    result = 1
    for p, s in factorize(g).factors.items():
        a = s // unit_min
        while a > 0 and not all(c % p ** (a * u) == 0 for c, u in nonzero):
            a -= 1
        result *= p**a
    return result


def wgcd_via_gcd(x: WeightedTuple) -> int:
    """Same value as :func:`wgcd`, factoring only gcd(x)."""
    return _recombine(x, x.weights.weights)


def awgcd_via_gcd(x: WeightedTuple) -> ExactRoot:
    """Same value as :func:`awgcd`, factoring only gcd(x)."""
    radicand = _recombine(x, x.weights.reduced_weights)
    return ExactRoot(Fraction(radicand), x.weights.weight_gcd)


def _plus_profile(
    coords: Sequence[Fraction], weights: WeightSystem, divisors: Sequence[int]
) -> dict[int, int]:
    """Per-prime min over nonzero coords of floor(max(v_p, 0) / divisors[i])."""
    support: set[int] = set()
    factored: list[tuple[dict[int, int], int] | None] = []
    for coord, unit in zip(coords, divisors):
        if coord == 0:
            factored.append(None)
            continue
        exponents = factorize(coord).factors
        factored.append((exponents, unit))
        support.update(p for p, e in exponents.items() if e > 0)
    profile: dict[int, int] = {}
    for p in support:
        best: int | None = None
        for entry in factored:
            if entry is None:
                continue
            exponents, unit = entry
            a = max(exponents.get(p, 0), 0) // unit
            best = a if best is None else min(best, a)
            if best == 0:
                break
        if best:
            profile[p] = best
    return profile


def generalized_wgcd(
    coords: Sequence[int | Fraction], weights: WeightSystem | Iterable[int]
) -> int:
    """Weighted gcd of a rational tuple through truncated plus-valuations.

    Zero coordinates are treated as divisible by every prime power; on
    integer tuples this reduces exactly to :func:`wgcd`.
    """
    ws = as_weight_system(weights)
    cs = _rational_coords(coords, ws)
    profile = _plus_profile(cs, ws, ws.weights)
    return math.prod(p**a for p, a in profile.items())


def generalized_awgcd(
    coords: Sequence[int | Fraction], weights: WeightSystem | Iterable[int]
) -> ExactRoot:
    """Absolute weighted gcd of a rational tuple, as a weight_gcd-indexed root."""
    ws = as_weight_system(weights)
    cs = _rational_coords(coords, ws)
    profile = _plus_profile(cs, ws, ws.reduced_weights)
    radicand = math.prod(p**a for p, a in profile.items())
    return ExactRoot(Fraction(radicand), ws.weight_gcd)


def _rational_coords(
    coords: Sequence[int | Fraction], weights: WeightSystem
) -> tuple[Fraction, ...]:
    cs = tuple(Fraction(c) for c in coords)
    if len(cs) != len(weights):
        raise ValueError(f"{len(cs)} coordinates but {len(weights)} weights")
    if not any(cs):
        raise ValueError("all coordinates are zero")
    return cs
