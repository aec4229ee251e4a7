"""Weighted gcds, normalization, and exact heights on weighted projective spaces.

All arithmetic is exact: arbitrary-precision integers and rationals, with
irrational values carried as canonical radicals m**(1/k).  The library covers
weighted greatest common divisors (plain and absolute, with an independent
gcd-recombining route), normalization and canonical representatives of points
in weighted projective space over the rationals, weight well-forming, naive
sizes, weighted heights by two independent routes, and a complete enumerator
of all points of bounded weighted height.
"""

from .factorization import (
    FactorConfig,
    Factorization,
    IncompleteFactorizationError,
    default_config,
    factorize,
    iroot,
    is_prime,
    nth_root_rational,
    plus_valuation,
    primes_up_to,
    set_default_config,
    valuation,
)
from .radicals import (
    ONE,
    ExactRoot,
    exact_root,
    exact_root_compare,
    exact_root_mul,
    exact_root_pow,
    log_value,
)
from .wgcd import (
    WeightSystem,
    WeightedTuple,
    as_weight_system,
    awgcd,
    awgcd_via_gcd,
    generalized_awgcd,
    generalized_wgcd,
    wgcd,
    wgcd_via_gcd,
)
from .projective import (
    WeightedPoint,
    WellFormingResult,
    WellFormingStep,
    absolutely_normalize,
    apply_well_forming,
    canonical_rep,
    clear_denominators,
    equivalent,
    is_well_formed,
    naive_size,
    normalize,
    replay_well_forming,
    scale,
    well_form,
)
from .heights import (
    KroneckerResult,
    ProjectivePoint,
    bounded_points,
    counting_function,
    enumerate_bounded,
    kronecker_check,
    log_weighted_height,
    phi,
    phi_preimage,
    weighted_height,
    weighted_height_direct,
    weil_height,
)

__version__ = "0.1.0"

__all__ = [
    "ExactRoot",
    "FactorConfig",
    "Factorization",
    "IncompleteFactorizationError",
    "KroneckerResult",
    "ONE",
    "ProjectivePoint",
    "WeightSystem",
    "WeightedPoint",
    "WeightedTuple",
    "WellFormingResult",
    "WellFormingStep",
    "absolutely_normalize",
    "apply_well_forming",
    "as_weight_system",
    "awgcd",
    "awgcd_via_gcd",
    "bounded_points",
    "canonical_rep",
    "clear_denominators",
    "counting_function",
    "default_config",
    "enumerate_bounded",
    "equivalent",
    "exact_root",
    "exact_root_compare",
    "exact_root_mul",
    "exact_root_pow",
    "factorize",
    "generalized_awgcd",
    "generalized_wgcd",
    "iroot",
    "is_prime",
    "is_well_formed",
    "kronecker_check",
    "log_value",
    "log_weighted_height",
    "naive_size",
    "normalize",
    "nth_root_rational",
    "phi",
    "phi_preimage",
    "plus_valuation",
    "primes_up_to",
    "replay_well_forming",
    "scale",
    "set_default_config",
    "valuation",
    "weighted_height",
    "weighted_height_direct",
    "weil_height",
    "well_form",
    "wgcd",
    "wgcd_via_gcd",
]
