import pytest

from twinpoly.analysis import (
    DEFAULT_RUN_CAP,
    FirstFailure,
    multiplicity_table,
    run_length,
    scan_seeds,
    verify_all,
    verify_family,
)
from twinpoly.polynomial import (
    EULER_POLYNOMIAL,
    QuadraticPolynomial,
    TwinPrimeSeed,
    admissible_range,
    evaluate_family,
    reflect,
)
from twinpoly.primality import is_prime, trial_division_oracle

SEEDS_BELOW_41 = (3, 5, 11, 17, 29)


def outward_first_failure(p):
    """Independent re-derivation: walk |n| outward, trial division only."""
    seed = TwinPrimeSeed(p)
    rng = admissible_range(seed)
    order = [0]
    for k in range(1, max(-rng.n_min, rng.n_max) + 1):
        if -k >= rng.n_min:
            order.append(-k)
        if k <= rng.n_max:
            order.append(k)
    for n in order:
        verdict = trial_division_oracle(abs(evaluate_family(seed, n)))
        if not verdict.is_prime:
            return FirstFailure(n, verdict.value, verdict.witness)
    return None


class TestVerifyFamily:
    def test_p3(self):
        report = verify_family(TwinPrimeSeed(3))
        assert [r.magnitude for r in report.records] == [5, 5]
        assert report.all_prime
        assert report.distinct_primes == (5,)
        assert report.first_failure is None

    def test_p11(self):
        report = verify_family(TwinPrimeSeed(11))
        assert len(report.records) == 14
        assert report.all_prime
        assert report.distinct_primes == (11, 13, 29, 37, 43, 83, 131)

    def test_p41_first_failure(self):
        report = verify_family(TwinPrimeSeed(41))
        assert not report.all_prime
        assert report.first_failure == FirstFailure(1, 119, 7)

    def test_failure_order_is_outward_not_ascending(self):
        # in ascending order p = 41 breaks first at n = -19; the report
        # must instead pick the failure closest to 0
        report = verify_family(TwinPrimeSeed(41))
        by_n = {r.n: r for r in report.records}
        assert not by_n[-19].is_prime
        assert by_n[-19].magnitude == 2921  # 23 * 127
        assert report.first_failure.n == 1

    def test_record_invariants(self):
        for p in (3, 17, 41):
            report = verify_family(TwinPrimeSeed(p))
            rng = report.range
            assert len(report.records) == rng.count
            assert [r.n for r in report.records] == list(rng.integers())
            for record in report.records:
                assert record.p == p
                assert record.magnitude == abs(record.raw)
                assert record.is_prime == is_prime(record.magnitude)
            assert report.all_prime == all(r.is_prime for r in report.records)
            assert report.all_prime == (report.first_failure is None)
            expected = tuple(sorted({r.magnitude for r in report.records if r.is_prime}))
            assert report.distinct_primes == expected


class TestVerifyAll:
    def test_aggregate_below_41(self):
        aggregate = verify_all(41)
        assert aggregate.seeds == (3, 5, 11, 17, 29)
        assert [r.range.count for r in aggregate.reports] == [2, 5, 14, 23, 41]
        assert aggregate.total_evaluations == 85
        assert aggregate.total_all_prime
        assert len(aggregate.overall_distinct_primes) == 38
        assert list(aggregate.overall_distinct_primes) == sorted(
            set().union(*(r.distinct_primes for r in aggregate.reports))
        )

    def test_single_seed_limit(self):
        aggregate = verify_all(4)
        assert aggregate.seeds == (3,)
        assert aggregate.total_evaluations == 2

    def test_limit_42_breaks(self):
        aggregate = verify_all(42)
        assert not aggregate.total_all_prime
        assert aggregate.total_evaluations == 85 + 59

    def test_empty_limit(self):
        aggregate = verify_all(3)
        assert aggregate.seeds == ()
        assert aggregate.total_evaluations == 0
        assert aggregate.total_all_prime  # vacuously

    def test_limit_below_three_rejected(self):
        with pytest.raises(ValueError):
            verify_all(2)

    def test_monotone_totals(self):
        totals = [verify_all(limit).total_evaluations for limit in (3, 4, 6, 12, 18, 30, 42, 100)]
        assert totals == sorted(totals)


class TestRunLength:
    def test_euler_run(self):
        assert run_length(EULER_POLYNOMIAL, 0) == 40

    def test_mirrored_run(self):
        doubled = reflect(EULER_POLYNOMIAL, 39)  # (n - 40)**2 + (n - 40) + 41
        assert run_length(doubled, 0) == 80

    def test_start_offset(self):
        assert run_length(EULER_POLYNOMIAL, 1) == 39
        # starting at -40 walks the same doubled run in place
        assert run_length(EULER_POLYNOMIAL, -40) == 80

    def test_composite_at_start(self):
        assert run_length(QuadraticPolynomial(0, 0, 4), 0) == 0

    def test_cap_reached(self):
        always_prime = QuadraticPolynomial(0, 0, 7)
        assert run_length(always_prime, 0, cap=50) == 50
        assert run_length(always_prime, 0) == DEFAULT_RUN_CAP

    def test_zero_and_negative_cap(self):
        assert run_length(EULER_POLYNOMIAL, 0, cap=0) == 0
        with pytest.raises(ValueError):
            run_length(EULER_POLYNOMIAL, 0, cap=-1)

    def test_magnitude_convention(self):
        # |value| decides: raw -5 counts as prime, 0 and 1 never do
        assert run_length(QuadraticPolynomial(0, 0, -5), 0, cap=3) == 3
        assert run_length(QuadraticPolynomial(0, 0, 0), 0) == 0
        assert run_length(QuadraticPolynomial(0, 0, 1), 0) == 0


class TestMultiplicityTable:
    def test_small_seeds(self):
        assert multiplicity_table(verify_family(TwinPrimeSeed(3))) == [(5, 2)]
        assert multiplicity_table(verify_family(TwinPrimeSeed(5))) == [(5, 2), (7, 2), (11, 1)]

    def test_p17_vertex_odd_multiplicity(self):
        table = multiplicity_table(verify_family(TwinPrimeSeed(17)))
        counts = dict(table)
        assert counts[83] == 1  # vertex value at n = (p - 1)/4 = 4
        assert all(count == 2 for prime, count in table if prime != 83)

    def test_p29_vertex_odd_multiplicity(self):
        counts = dict(multiplicity_table(verify_family(TwinPrimeSeed(29))))
        assert counts[227] == 1
        assert sum(counts.values()) == 41

    def test_ordering_and_conservation(self):
        for p in SEEDS_BELOW_41:
            report = verify_family(TwinPrimeSeed(p))
            table = multiplicity_table(report)
            assert sum(count for _, count in table) == report.range.count
            keys = [(-count, prime) for prime, count in table]
            assert keys == sorted(keys)

    def test_symmetric_pairing(self):
        # magnitudes pair up under n <-> (p - 1)/2 - n, so every
        # multiplicity is even except possibly the vertex value
        for p in SEEDS_BELOW_41:
            vertex, remainder = divmod(p - 1, 4)
            report = verify_family(TwinPrimeSeed(p))
            odd = [prime for prime, count in multiplicity_table(report) if count % 2]
            if remainder == 0:  # p = 1 (mod 4): integer vertex
                expected = abs(evaluate_family(TwinPrimeSeed(p), vertex))
                assert odd == [expected]
            else:
                assert odd == []


class TestScanSeeds:
    def test_seeds_below_41_all_prime(self):
        rows = scan_seeds(41)
        assert [row.p for row in rows] == [3, 5, 11, 17, 29]
        assert all(row.all_prime for row in rows)
        assert all(row.first_failure is None for row in rows)

    def test_limit_42(self):
        last = scan_seeds(42)[-1]
        assert last.p == 41
        assert last.count == 59
        assert not last.all_prime
        assert last.first_failure == FirstFailure(1, 119, 7)

    def test_limit_100_failures(self):
        rows = {row.p: row for row in scan_seeds(100)}
        assert rows[59].first_failure == FirstFailure(-2, 187, 11)
        assert rows[71].first_failure == FirstFailure(1, 209, 11)

    def test_matches_independent_oracle(self):
        for row in scan_seeds(300):
            assert row.first_failure == outward_first_failure(row.p)
            assert row.count == admissible_range(TwinPrimeSeed(row.p)).count
            assert row.all_prime == (row.first_failure is None)

    def test_empty_scan(self):
        assert scan_seeds(3) == []

    def test_ceiling(self):
        with pytest.raises(ValueError):
            scan_seeds(10**6 + 1)
        with pytest.raises(ValueError):
            scan_seeds(50, ceiling=40)
        assert scan_seeds(40, ceiling=40)  # boundary accepted
