"""Why the family stops at 41: first failures of the larger seeds.

Every twin lower member below 41 gives an all-prime run. From 41 on,
each seed breaks somewhere; this script scans outward from n = 0 and
reports where. It also shows the endpoint identity that explains the
open interval: at the excluded endpoints the magnitude is p(2p - 5),
a multiple of p.
"""

from twinpoly import (
    TwinPrimeSeed,
    admissible_range,
    endpoint_magnitude,
    evaluate_family,
    is_prime,
    scan_seeds,
)

print("first failures for twin seeds below 300")
print("(search order: smallest |n| first, negative before positive)")
for row in scan_seeds(300):
    if row.all_prime:
        print(f"  p = {row.p:3d}: all {row.count} magnitudes prime")
    else:
        f = row.first_failure
        print(
            f"  p = {row.p:3d}: fails at n = {f.n:3d}, "
            f"|{f.magnitude}| = {f.factor} * {f.magnitude // f.factor}"
        )
print()

print("endpoint magnitudes p(2p - 5) at the excluded n")
for p in (3, 5, 11, 17, 29):
    seed = TwinPrimeSeed(p)
    rng = admissible_range(seed)
    low = abs(evaluate_family(seed, rng.n_min - 1))
    high = abs(evaluate_family(seed, rng.n_max + 1))
    assert low == high == endpoint_magnitude(seed)
    kind = "prime!" if is_prime(low) else f"composite ({p} divides it)"
    print(f"  p = {p:2d}: |value| at both endpoints = {low} -> {kind}")
print()
print("only p = 3 has a prime endpoint value; the open interval is")
print("what keeps the all-prime statement uniform across seeds.")
