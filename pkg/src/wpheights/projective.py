"""Points of weighted projective space over the rationals.

A point is a rational coordinate tuple (not all zero) bound to a weight
system, up to the scaling x_i -> lambda**q_i * x_i.  This module provides
the scaling action, wgcd- and awgcd-normalization of integer representatives,
a decision procedure for rational equivalence with an explicit witness, a
canonical representative suitable for exact deduplication, the naive size,
and the weight well-forming algorithm.

The canonical representative is chosen so that two rational tuples receive
the same representative exactly when the ordinary projective points obtained
by raising coordinates to weight_product/q_i coincide.  That identification
is what the bounded-height enumeration needs; it can merge sign patterns
(such as (0,1,0,0) and (0,-1,0,0) for weights (1,2,3,5)) that admit no
rational scaling witness, so :func:`equivalent` is the strictly finer test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .factorization import factorize, valuation
from .radicals import ExactRoot
from .wgcd import WeightSystem, WeightedTuple, as_weight_system, awgcd, wgcd


@dataclass(frozen=True)
class WeightedPoint:
    """Rational coordinates bound to a weight system; not all zero."""

    coords: tuple[Fraction, ...]
    weights: WeightSystem

    def __init__(
        self,
        coords: Iterable[int | Fraction | str],
        weights: WeightSystem | Iterable[int],
    ) -> None:
        cs = tuple(Fraction(c) for c in coords)
        ws = as_weight_system(weights)
        if len(cs) != len(ws):
            raise ValueError(f"{len(cs)} coordinates but {len(ws)} weights")
        if not any(cs):
            raise ValueError("all coordinates are zero")
        object.__setattr__(self, "coords", cs)
        object.__setattr__(self, "weights", ws)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def as_weighted_tuple(self) -> WeightedTuple:
        if not self.is_integral:
            raise ValueError(f"point {self} has non-integer coordinates")
        return WeightedTuple((c.numerator for c in self.coords), self.weights)

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def scale(p: WeightedPoint, lam: int | Fraction) -> WeightedPoint:
    """Apply the scaling action: coordinate i is multiplied by lam**q_i."""
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("scaling factor must be nonzero")
    coords = tuple(c * lam**q for c, q in zip(p.coords, p.weights))
    return WeightedPoint(coords, p.weights)


def clear_denominators(p: WeightedPoint) -> WeightedPoint:
    """Scale by the least positive integer N making every N**q_i * x_i integral."""
    if p.is_integral:
        return p
    scale_factor = 1
    primes: set[int] = set()
    for c in p.coords:
        if c != 0 and c.denominator > 1:
            primes.update(_prime_support(c.denominator))
    for ell in primes:
        needed = 0
        for c, q in zip(p.coords, p.weights):
            if c == 0:
                continue
            deficit = -valuation(c, ell)
            if deficit > 0:
                needed = max(needed, -(-deficit // q))
        scale_factor *= ell**needed
    return scale(p, scale_factor)


def _prime_support(n: int) -> set[int]:
    return set(factorize(n).factors)


def normalize(p: WeightedPoint) -> WeightedPoint:
    """Divide an integral point by wgcd**q_i per coordinate; idempotent."""
    if not p.is_integral:
        raise ValueError("normalize needs integer coordinates; clear denominators first")
    d = wgcd(p.as_weighted_tuple())
    if d == 1:
        return p
    coords = tuple(c / Fraction(d) ** q for c, q in zip(p.coords, p.weights))
    return WeightedPoint(coords, p.weights)


def absolutely_normalize(p: WeightedPoint) -> WeightedPoint:
    """Divide an integral point by awgcd**q_i per coordinate; result has awgcd 1."""
    if not p.is_integral:
        raise ValueError("normalize needs integer coordinates; clear denominators first")
    root = awgcd(p.as_weighted_tuple())
    if root.radicand == 1:
        return p
    # awgcd = m**(1/k) with k dividing every weight, so each divisor is integral.
    coords = tuple(
        c / root.radicand ** (q // root.index) for c, q in zip(p.coords, p.weights)
    )
    return WeightedPoint(coords, p.weights)


def equivalent(p: WeightedPoint, r: WeightedPoint) -> Fraction | None:
    """Rational witness lam with scale(p, lam) == r, or None.

    Zero patterns must match; per prime the valuation of the coordinate
    ratio must be the same multiple of the corresponding weight, and both
    signs of the candidate are tried.
    """
    if p.weights != r.weights:
        raise ValueError(f"weight systems differ: {p.weights} vs {r.weights}")
    if any((a == 0) != (b == 0) for a, b in zip(p.coords, r.coords)):
        return None
    ratios = [
        (b / a, q) for a, b, q in zip(p.coords, r.coords, p.weights) if a != 0
    ]
    magnitude = Fraction(1)
    exponents: dict[int, int] = {}
    for ratio, q in ratios:
        for ell, e in factorize(ratio).factors.items():
            if e % q != 0:
                return None
            t = e // q
            if exponents.setdefault(ell, t) != t:
                return None
    for ell, t in exponents.items():
        magnitude *= Fraction(ell) ** t
    for lam in (magnitude, -magnitude):
        if scale(p, lam).coords == r.coords:
            return lam
    return None


def _reduce_magnitudes(p: WeightedPoint) -> WeightedPoint:
    """Divide out the absolute weighted gcd of the nonzero sub-tuple.

    Zero coordinates impose no constraint at all here (unlike
    :func:`absolutely_normalize`, where the divisor powers must still be
    integers at zero positions), so the resulting magnitudes are the unique
    smallest ones among tuples sharing the powered projective image.
    """
    live = [(c, q) for c, q in zip(p.coords, p.weights) if c != 0]
    root = awgcd(WeightedTuple((c.numerator for c, _ in live), (q for _, q in live)))
    if root.radicand == 1:
        return p
    coords = tuple(
        c / root.radicand ** (q // root.index) if c != 0 else c
        for c, q in zip(p.coords, p.weights)
    )
    return WeightedPoint(coords, p.weights)


def canonical_rep(p: WeightedPoint) -> WeightedPoint:
    """Deterministic representative identifying points with equal powered images.

    Clears denominators, divides out the absolute weighted gcd of the nonzero
    coordinates (pinning the magnitudes of the class), then fixes signs:
    coordinates whose powering exponent weight_product/q_i is even lose their
    sign entirely, and when every nonzero coordinate has an odd exponent the
    whole tuple may flip, so the first nonzero coordinate is made positive.
    Idempotent and invariant under scaling.
    """
    integral = _reduce_magnitudes(clear_denominators(p))
    product = p.weights.weight_product
    powering = [product // q for q in p.weights]
    coords = list(integral.coords)
    odd_positions = [
        i for i, c in enumerate(coords) if c != 0 and powering[i] % 2 == 1
    ]
    nonzero_count = sum(1 for c in coords if c != 0)
    coords = [abs(c) if powering[i] % 2 == 0 else c for i, c in enumerate(coords)]
    if odd_positions and len(odd_positions) == nonzero_count:
        if coords[odd_positions[0]] < 0:
            coords = [-c for c in coords]
    return WeightedPoint(coords, p.weights)


def naive_size(p: WeightedPoint) -> ExactRoot:
    """Largest |x_i|**(1/q_i) over the wgcd-normalized integer representative.

    This is the archimedean-only magnitude; it dominates the weighted height
    and agrees with it exactly when the powered tuple of the normalized
    representative has gcd 1.
    """
    reduced = normalize(clear_denominators(p))
    best: ExactRoot | None = None
    for c, q in zip(reduced.coords, reduced.weights):
        if c == 0:
            continue
        candidate = ExactRoot(abs(c), q)
        if best is None or candidate > best:
            best = candidate
    assert best is not None
    return best


def is_well_formed(weights: WeightSystem | Iterable[int]) -> bool:
    """True when dropping any single weight leaves the rest with gcd 1.

    A single-weight system is well-formed exactly when its weight is 1.
    """
    ws = as_weight_system(weights).weights
    if len(ws) == 1:
        return ws[0] == 1
    return all(math.gcd(*ws[:i], *ws[i + 1 :]) == 1 for i in range(len(ws)))


@dataclass(frozen=True)
class WellFormingStep:
    """One truncation: divide the weights by divisor, except a kept pivot.

    pivot None means the global step (every weight divided).
    """

    divisor: int
    pivot: int | None


@dataclass(frozen=True)
class WellFormingResult:
    new_weights: WeightSystem
    steps: tuple[WellFormingStep, ...]


def well_form(weights: WeightSystem | Iterable[int]) -> WellFormingResult:
    """Reduce a weight system to a well-formed one, recording each truncation.

    The global common-divisor step runs first, then pivot steps in increasing
    pivot order; the weight product strictly decreases, so this terminates.
    """
    ws = list(as_weight_system(weights).weights)
    steps: list[WellFormingStep] = []
    while True:
        g = math.gcd(*ws)
        if g > 1:
            ws = [q // g for q in ws]
            steps.append(WellFormingStep(g, None))
            continue
        if is_well_formed(ws):
            break
        for j in range(len(ws)):
            others = ws[:j] + ws[j + 1 :]
            d = math.gcd(*others)
            if d > 1:
                ws = [q if i == j else q // d for i, q in enumerate(ws)]
                steps.append(WellFormingStep(d, j))
                break
    return WellFormingResult(WeightSystem(ws), tuple(steps))


def replay_well_forming(
    weights: WeightSystem | Iterable[int], steps: Sequence[WellFormingStep]
) -> WeightSystem:
    """Apply recorded truncation steps to a weight system."""
    ws = list(as_weight_system(weights).weights)
    for step in steps:
        for i in range(len(ws)):
            if step.pivot is not None and i == step.pivot:
                continue
            if ws[i] % step.divisor:
                raise ValueError(f"step {step} does not divide weights {ws}")
            ws[i] //= step.divisor
    return WeightSystem(ws)


def apply_well_forming(p: WeightedPoint, result: WellFormingResult) -> WeightedPoint:
    """Carry a point along the well-forming truncations.

    The global step leaves coordinates alone; a pivot step raises the pivot
    coordinate to the divisor-th power.  Heights before and after are not
    asserted equal anywhere.
    """
    coords = list(p.coords)
    ws = list(p.weights.weights)
    for step in result.steps:
        if step.pivot is None:
            ws = [q // step.divisor for q in ws]
        else:
            coords[step.pivot] = coords[step.pivot] ** step.divisor
            ws = [q if i == step.pivot else q // step.divisor for i, q in enumerate(ws)]
    if WeightSystem(ws) != result.new_weights:
        raise ValueError("well-forming steps do not reproduce the recorded weights")
    return WeightedPoint(coords, result.new_weights)
