"""Exact toolkit for the prime-generating family (1 + 2n)(p - 2n) + 2.

The family is seeded by twin-prime lower members p and, for the five
seeds below 41, produces a prime magnitude at all (3p - 5)/2 integers
of its admissible range: 85 prime values in total. This package
evaluates the family exactly, verifies those runs, measures prime run
lengths of general integer quadratics (Euler's n**2 + n + 41 and its
mirrored double), and scans for the first failures beyond 41.
"""

from .analysis import (
    AggregateReport,
    DEFAULT_RUN_CAP,
    EvaluationRecord,
    FamilyRunReport,
    FirstFailure,
    SCAN_CEILING,
    SeedScanResult,
    multiplicity_table,
    run_length,
    scan_seeds,
    verify_all,
    verify_family,
)
from .polynomial import (
    AdmissibleRange,
    EULER_POLYNOMIAL,
    QuadraticPolynomial,
    TwinPrimeSeed,
    admissible_range,
    endpoint_magnitude,
    evaluate_family,
    evaluate_quadratic,
    expanded_family,
    reflect,
)
from .primality import (
    MAX_MAGNITUDE,
    PrimalityVerdict,
    SIEVE_CEILING,
    is_prime,
    primes_up_to,
    trial_division_oracle,
    twin_prime_lower_members,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleRange",
    "AggregateReport",
    "DEFAULT_RUN_CAP",
    "EULER_POLYNOMIAL",
    "EvaluationRecord",
    "FamilyRunReport",
    "FirstFailure",
    "MAX_MAGNITUDE",
    "PrimalityVerdict",
    "QuadraticPolynomial",
    "SCAN_CEILING",
    "SIEVE_CEILING",
    "SeedScanResult",
    "TwinPrimeSeed",
    "admissible_range",
    "endpoint_magnitude",
    "evaluate_family",
    "evaluate_quadratic",
    "expanded_family",
    "is_prime",
    "multiplicity_table",
    "primes_up_to",
    "reflect",
    "run_length",
    "scan_seeds",
    "trial_division_oracle",
    "twin_prime_lower_members",
    "verify_all",
    "verify_family",
]
