"""Exact factorization of integers and rationals, with deterministic primality.

Everything here is exact: a result is either a proven prime decomposition or
an explicit :class:`IncompleteFactorizationError`, never a silently wrong
answer.  The factoring pipeline is trial division by small primes, a
deterministic strong-pseudoprime certificate, and a seeded Brent/Pollard rho
stage for the composite cofactors, with a final trial-division sweep up to the
configured bound before giving up.  All stages are deterministic functions of
the input and the configuration seed, so results are reproducible and safe to
share between threads.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction


class IncompleteFactorizationError(RuntimeError):
    """A composite cofactor survived the configured factoring effort."""


# Largest n for which the fixed Miller-Rabin base set below is a proven
# deterministic primality certificate.
_MR_PROVEN_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_PROVEN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Primes up to this bound are always tried before anything clever happens.
_BASE_TRIAL_LIMIT = 1 << 12


@dataclass(frozen=True)
class FactorConfig:
    """Effort knobs for :func:`factorize`.

    trial_bound caps the trial-division sweep, rho_iterations the cycle
    length per rho attempt, rho_attempts the number of re-seeded attempts
    per stubborn cofactor.  seed feeds the per-cofactor rho RNG, keeping
    runs deterministic while still randomizing the polynomial constants.
    """

    trial_bound: int = 10**6
    rho_iterations: int = 1 << 18
    rho_attempts: int = 32
    seed: int = 0


_default_config = FactorConfig()


def default_config() -> FactorConfig:
    return _default_config


def set_default_config(config: FactorConfig) -> None:
    """Install a process-wide default effort configuration."""
    global _default_config
    _default_config = config


def _sieve(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


_prime_cache: list[int] = _sieve(_BASE_TRIAL_LIMIT)
_prime_cache_limit = _BASE_TRIAL_LIMIT


def primes_up_to(limit: int) -> list[int]:
    """Ascending primes <= limit (cached, grow-only)."""
    global _prime_cache, _prime_cache_limit
    if limit > _prime_cache_limit:
        _prime_cache = _sieve(limit)
        _prime_cache_limit = limit
    if limit == _prime_cache_limit:
        return _prime_cache
    cut = 0
    for cut, p in enumerate(_prime_cache):
        if p > limit:
            return _prime_cache[:cut]
    return list(_prime_cache)


def _is_strong_probable_prime(n: int, base: int) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Below ~3.3e24 this is the proven twelve-base strong-pseudoprime
    certificate; above it falls back to testing every prime base up to
    2*ln(n)^2, which inputs at the scale this library targets never reach.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n < _MR_PROVEN_LIMIT:
        bases: tuple[int, ...] | list[int] = _MR_PROVEN_BASES
    else:
        bases = primes_up_to(int(2 * math.log(n) ** 2) + 1)
    return all(_is_strong_probable_prime(n, a) for a in bases)


def _pollard_rho(n: int, config: FactorConfig) -> int | None:
    """Brent-style rho; returns a nontrivial factor of odd composite n."""
    for attempt in range(config.rho_attempts):
        rng = random.Random(f"{n}:{attempt}:{config.seed}")
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        count = 0
        while g == 1 and count < config.rho_iterations:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            count += r
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def _extract(n: int, p: int) -> tuple[int, int]:
    """Divide out p from n, doubling the divisor to cope with huge exponents."""
    exponent = 0
    power = p
    step = 1
    while True:
        quotient, remainder = divmod(n, power)
        if remainder:
            if step == 1:
                return n, exponent
            power = p
            step = 1
        else:
            n = quotient
            exponent += step
            if power <= n:
                power *= power
                step *= 2


def _factor_positive(n: int, config: FactorConfig) -> dict[int, int]:
    factors: dict[int, int] = {}
    if n == 1:
        return factors
    sweep_limit = min(config.trial_bound, _BASE_TRIAL_LIMIT)
    for p in primes_up_to(sweep_limit):
        if p * p > n:
            break
        if n % p == 0:
            n, factors[p] = _extract(n, p)
            if n == 1:
                return factors
    if n > 1 and n < (sweep_limit + 1) ** 2:
        # No factor up to the sweep limit and below its square: prime.
        factors[n] = factors.get(n, 0) + 1
        return factors

    pending = [n] if n > 1 else []
    stubborn: list[int] = []
    while pending:
        m = pending.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m, config)
        if d is None:
            stubborn.append(m)
            continue
        pending.append(d)
        pending.append(m // d)

    for m in stubborn:
        # Last resort: the full trial sweep up to the configured bound.
        for p in primes_up_to(config.trial_bound):
            if p * p > m:
                break
            if m % p == 0:
                m, e = _extract(m, p)
                factors[p] = factors.get(p, 0) + e
                if m == 1 or is_prime(m):
                    break
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        raise IncompleteFactorizationError(
            f"factorization incomplete: composite cofactor {m} exceeded the "
            f"configured effort (trial_bound={config.trial_bound}, "
            f"rho_attempts={config.rho_attempts})"
        )
    return factors


@dataclass(frozen=True)
class Factorization:
    """Signed prime-power decomposition of a nonzero rational.

    sign is +1 or -1; factors maps each prime to its nonzero exponent
    (negative exponents carry the denominator).  The represented value is
    sign * prod(p**e).
    """

    sign: int
    factors: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        for p, e in self.factors.items():
            if e == 0:
                raise ValueError(f"exponent of {p} is zero")
            if not is_prime(p):
                raise ValueError(f"factor key {p} is not prime")

    def value(self) -> Fraction:
        """Reconstruct the exact rational this factorization encodes."""
        result = Fraction(self.sign)
        for p, e in self.factors.items():
            result *= Fraction(p) ** e
        return result

    def __str__(self) -> str:
        if not self.factors:
            body = "1"
        else:
            body = " * ".join(
                f"{p}^{e}" if e != 1 else str(p) for p, e in sorted(self.factors.items())
            )
        return body if self.sign > 0 else f"-{body}"


def factorize(value: int | Fraction, config: FactorConfig | None = None) -> Factorization:
    """Exact prime decomposition of a nonzero integer or rational.

    Raises ValueError on zero and IncompleteFactorizationError when a
    cofactor resists the configured effort.
    """
    if config is None:
        config = _default_config
    value = Fraction(value)
    if value == 0:
        raise ValueError("cannot factor zero")
    sign = 1 if value > 0 else -1
    factors = _factor_positive(abs(value.numerator), config)
    for p, e in _factor_positive(value.denominator, config).items():
        factors[p] = factors.get(p, 0) - e
    factors = {p: e for p, e in factors.items() if e != 0}
    return Factorization(sign, factors)


def valuation(value: int | Fraction, p: int) -> int:
    """Exponent of the prime p in the nonzero rational value (may be negative)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    value = Fraction(value)
    if value == 0:
        raise ValueError("valuation of zero is undefined here; handle zeros at the call site")
    # Fractions are reduced, so p divides at most one of numerator/denominator.
    if value.denominator % p == 0:
        return -_extract(value.denominator, p)[1]
    return _extract(abs(value.numerator), p)[1]


def plus_valuation(value: int | Fraction, p: int) -> int:
    """max(valuation(value, p), 0)."""
    return max(valuation(value, p), 0)


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("iroot of a negative number")
    if k < 1:
        raise ValueError("root index must be >= 1")
    if k == 1 or n in (0, 1):
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    return x


def nth_root_rational(value: Fraction, k: int) -> Fraction | None:
    """Exact positive rational k-th root of a positive rational, if one exists."""
    if value <= 0:
        raise ValueError("root of a nonpositive rational")
    num = iroot(value.numerator, k)
    if num**k != value.numerator:
        return None
    den = iroot(value.denominator, k)
    if den**k != value.denominator:
        return None
    return Fraction(num, den)
