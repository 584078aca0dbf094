"""Run verification, aggregate counts, multiplicities, and seed scans.

This layer applies the "prime in absolute value" convention: a value
counts as prime iff its magnitude is prime, so 0 and +-1 never count.
Failure searches move outward from n = 0 (smallest |n| first, negative
before positive on ties) because the family's story grows outward from
the center of its range.
"""

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from .primality import is_prime, trial_division_oracle, twin_prime_lower_members
from .polynomial import (
    AdmissibleRange,
    QuadraticPolynomial,
    TwinPrimeSeed,
    admissible_range,
    evaluate_family,
    evaluate_quadratic,
)

DEFAULT_RUN_CAP = 10_000
SCAN_CEILING = 10**6


@dataclass(frozen=True, slots=True)
class EvaluationRecord:
    """One family evaluation: magnitude = |raw|, primality of the magnitude."""

    p: int
    n: int
    raw: int
    magnitude: int
    is_prime: bool


@dataclass(frozen=True, slots=True)
class FirstFailure:
    """First composite magnitude in outward order; factor is its smallest
    prime factor, or None for magnitudes 0 and 1."""

    n: int
    magnitude: int
    factor: int | None


@dataclass(frozen=True, slots=True)
class FamilyRunReport:
    """Full evaluation of one seed over its admissible range."""

    p: int
    range: AdmissibleRange
    records: tuple[EvaluationRecord, ...]
    all_prime: bool
    distinct_primes: tuple[int, ...]
    first_failure: FirstFailure | None


@dataclass(frozen=True, slots=True)
class SeedScanResult:
    """Scan outcome for one seed: count is the admissible-range size."""

    p: int
    count: int
    all_prime: bool
    first_failure: FirstFailure | None


@dataclass(frozen=True, slots=True)
class AggregateReport:
    """Combined verification of every seed below a limit."""

    seeds: tuple[int, ...]
    reports: tuple[FamilyRunReport, ...]
    total_evaluations: int
    total_all_prime: bool
    overall_distinct_primes: tuple[int, ...]


def _outward(rng: AdmissibleRange) -> Iterator[int]:
    """Yield the range's integers ordered by |n|, negative first on ties.

    Every admissible range contains 0, so the walk starts there.
    """
    yield 0
    k = 1
    while -k >= rng.n_min or k <= rng.n_max:
        if -k >= rng.n_min:
            yield -k
        if k <= rng.n_max:
            yield k
        k += 1


def _failure_at(n: int, magnitude: int) -> FirstFailure:
    return FirstFailure(n, magnitude, trial_division_oracle(magnitude).witness)


def verify_family(seed: TwinPrimeSeed) -> FamilyRunReport:
    """Evaluate the whole admissible range and test every magnitude.

    Records are ordered by ascending n. first_failure, when present, is
    the failing n closest to 0 (negative wins ties), not the smallest n.
    """
    rng = admissible_range(seed)
    records = []
    for n in rng.integers():
        raw = evaluate_family(seed, n)
        magnitude = abs(raw)
        records.append(EvaluationRecord(seed.p, n, raw, magnitude, is_prime(magnitude)))
    failing = [r for r in records if not r.is_prime]
    first_failure = None
    if failing:
        worst = min(failing, key=lambda r: (abs(r.n), r.n > 0))
        first_failure = _failure_at(worst.n, worst.magnitude)
    return FamilyRunReport(
        p=seed.p,
        range=rng,
        records=tuple(records),
        all_prime=not failing,
        distinct_primes=tuple(sorted({r.magnitude for r in records if r.is_prime})),
        first_failure=first_failure,
    )


def verify_all(limit: int) -> AggregateReport:
    """Verify every twin lower member p < limit.

    For limit = 41 this reproduces the family's headline numbers:
    5 seeds, 85 evaluations, every magnitude prime.
    """
    if limit < 3:
        raise ValueError(f"limit must be at least 3, got {limit}")
    seeds = twin_prime_lower_members(limit)
    reports = tuple(verify_family(TwinPrimeSeed(p)) for p in seeds)
    overall: set[int] = set()
    for report in reports:
        overall.update(report.distinct_primes)
    return AggregateReport(
        seeds=tuple(seeds),
        reports=reports,
        total_evaluations=sum(r.range.count for r in reports),
        total_all_prime=all(r.all_prime for r in reports),
        overall_distinct_primes=tuple(sorted(overall)),
    )


def run_length(
    poly: QuadraticPolynomial, start: int, cap: int = DEFAULT_RUN_CAP
) -> int:
    """Length of the prime run of |poly| beginning at ``start``.

    Returns the largest k <= cap with |poly(start)|, ...,
    |poly(start + k - 1)| all prime; k = cap means the run was cut off
    by the cap, not by a composite.
    """
    if cap < 0:
        raise ValueError(f"cap must be nonnegative, got {cap}")
    k = 0
    while k < cap:
        if not is_prime(abs(evaluate_quadratic(poly, start + k))):
            break
        k += 1
    return k


def multiplicity_table(report: FamilyRunReport) -> list[tuple[int, int]]:
    """(prime, occurrence count) pairs, most frequent first, then ascending.

    Only prime magnitudes are counted, so for an all-prime report the
    counts add up to the range size. The symmetry n <-> (p-1)/2 - n
    pairs values up; a seed with p = 1 (mod 4) has an integer vertex
    whose value therefore shows odd multiplicity.
    """
    counts = Counter(r.magnitude for r in report.records if r.is_prime)
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def scan_seeds(limit: int, *, ceiling: int = SCAN_CEILING) -> list[SeedScanResult]:
    """First-failure scan over every twin lower member p < limit.

    Walks each seed's range outward from n = 0 and stops at the first
    composite magnitude, so a failing seed costs only a few evaluations.
    """
    if limit > ceiling:
        raise ValueError(f"limit {limit} exceeds scan ceiling {ceiling}")
    results = []
    for p in twin_prime_lower_members(limit):
        seed = TwinPrimeSeed(p)
        rng = admissible_range(seed)
        first_failure = None
        for n in _outward(rng):
            magnitude = abs(evaluate_family(seed, n))
            if not is_prime(magnitude):
                first_failure = _failure_at(n, magnitude)
                break
        results.append(
            SeedScanResult(p, rng.count, first_failure is None, first_failure)
        )
    return results
