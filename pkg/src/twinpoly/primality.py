"""Exact primality testing and prime enumeration for 64-bit magnitudes.

Responsibility: primality only. Everything here is deterministic; the
strong-pseudoprime test uses witness sets proven complete below 2**64,
so there is no probabilistic caveat anywhere in the package.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

MAX_MAGNITUDE = 2**63 - 1
SIEVE_CEILING = 10**8

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Graded witness sets for the deterministic strong-pseudoprime test.
# Each row (bound, witnesses) is exact for every m < bound; the last row
# covers all of [0, 2**64), which contains the supported range.
_WITNESSES = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (4_759_123_141, (2, 7, 61)),
    (1_122_004_669_633, (2, 13, 23, 1662803)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (2**64, _SMALL_PRIMES),
)


@dataclass(frozen=True, slots=True)
class PrimalityVerdict:
    """Outcome of a primality check.

    ``witness`` is the smallest prime factor and is present exactly when
    the value is composite and greater than 1 (0 and 1 are non-prime but
    have no nontrivial factor).
    """

    value: int
    is_prime: bool
    witness: int | None = None


def _check_range(m: int) -> None:
    if m < 0 or m > MAX_MAGNITUDE:
        raise ValueError(f"value {m} outside supported range [0, 2**63 - 1]")


def is_prime(m: int) -> bool:
    """Decide primality of ``m`` exactly.

    Parameters
    ----------
    m : int
        Nonnegative integer, at most 2**63 - 1.

    Returns
    -------
    bool
        True iff ``m`` is prime. Agrees with ``trial_division_oracle``
        on every input; 0 and 1 are not prime.
    """
    _check_range(m)
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m == p:
            return True
        if m % p == 0:
            return False
    for bound, witnesses in _WITNESSES:
        if m < bound:
            break
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in witnesses:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def trial_division_oracle(m: int) -> PrimalityVerdict:
    """Decide primality of ``m`` by trial division.

    Divides by candidates up to isqrt(m) (2, 3, then the 6k+-1 wheel),
    so the witness on a composite is always the smallest prime factor.
    Slow but independent of ``is_prime``; kept as a cross-check oracle.
    """
    _check_range(m)
    if m < 4:
        return PrimalityVerdict(m, m in (2, 3))
    if m % 2 == 0:
        return PrimalityVerdict(m, False, 2)
    if m % 3 == 0:
        return PrimalityVerdict(m, False, 3)
    r = isqrt(m)
    d = 5
    while d <= r:
        if m % d == 0:
            return PrimalityVerdict(m, False, d)
        if d + 2 <= r and m % (d + 2) == 0:
            return PrimalityVerdict(m, False, d + 2)
        d += 6
    return PrimalityVerdict(m, True)


def _prime_flags(limit: int, ceiling: int) -> np.ndarray:
    """Boolean sieve array of length limit + 1; flags[i] iff i prime."""
    if limit < 0:
        raise ValueError(f"limit must be nonnegative, got {limit}")
    if limit > ceiling:
        raise ValueError(f"limit {limit} exceeds sieve ceiling {ceiling}")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


def primes_up_to(limit: int, *, ceiling: int = SIEVE_CEILING) -> list[int]:
    """All primes p <= limit, strictly ascending.

    Plain sieve of Eratosthenes on a boolean array; ``limit`` may not
    exceed ``ceiling`` (default 10**8).
    """
    return np.flatnonzero(_prime_flags(limit, ceiling)).tolist()


def twin_prime_lower_members(limit: int, *, ceiling: int = SIEVE_CEILING) -> list[int]:
    """All p < limit with p and p + 2 both prime, strictly ascending.

    The smallest such p is 3, so every entry already satisfies p > 2.
    """
    if limit < 0:
        raise ValueError(f"limit must be nonnegative, got {limit}")
    if limit < 4:
        return []
    flags = _prime_flags(limit + 2, ceiling + 2)
    return np.flatnonzero(flags[:limit] & flags[2 : limit + 2]).tolist()
