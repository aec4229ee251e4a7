"""Brute-force reference implementations the library is tested against.

Everything here is deliberately naive: divisor sweeps and box scans whose
correctness is obvious from the definitions, used as independent oracles for
the factorization-based production routes.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from wpheights import (
    ExactRoot,
    WeightedPoint,
    as_weight_system,
    canonical_rep,
    iroot,
)
from wpheights.heights import _floor_power


def wgcd_brute(coords, weights) -> int:
    """Largest d >= 1 with d**q_i dividing x_i, by descending divisor sweep."""
    live = [(abs(c), q) for c, q in zip(coords, weights) if c != 0]
    cap = min(iroot(c, q) for c, q in live)
    for d in range(cap, 0, -1):
        if all(c % d**q == 0 for c, q in live):
            return d
    raise AssertionError("unreachable: d = 1 always divides")


def awgcd_brute(coords, weights) -> ExactRoot:
    """Largest real d with all d**q_i integral divisors of x_i.

    Such a d satisfies d**r in Z for r = gcd(weights), so sweep integer
    candidates m for d**r and keep the largest with m**(q_i/r) | x_i.
    """
    ws = as_weight_system(weights)
    r = ws.weight_gcd
    live = [(abs(c), q // r) for c, q in zip(coords, ws) if c != 0]
    cap = min(iroot(c, qr) for c, qr in live)
    best = 1
    for m in range(cap, 0, -1):
        if all(c % m**qr == 0 for c, qr in live):
            best = m
            break
    return ExactRoot(Fraction(best), r)


def weil_height_of_raw(coords, weights) -> int:
    """H(phi(x)) for an integer tuple, with plain integer arithmetic."""
    ws = as_weight_system(weights)
    q = ws.weight_product
    powered = [abs(c) ** (q // w) for c, w in zip(coords, ws)]
    g = math.gcd(*powered)
    return max(powered) // g


def bounded_classes_brute(weights, bound: ExactRoot, box: int) -> set[tuple[Fraction, ...]]:
    """Canonical representatives of every box tuple of weighted height <= bound.

    The height test is the exact integer comparison H(phi(x)) <= floor(B**q),
    so no radical arithmetic is involved until a survivor is canonicalized.
    """
    ws = as_weight_system(weights)
    cap = _floor_power(bound, ws.weight_product)
    reps: set[tuple[Fraction, ...]] = set()
    for raw in itertools.product(range(-box, box + 1), repeat=len(ws)):
        if not any(raw):
            continue
        if weil_height_of_raw(raw, ws) > cap:
            continue
        reps.add(canonical_rep(WeightedPoint(raw, ws)).coords)
    return reps
