"""The three coordinate systems of one family: product, quadratic, range.

(1 + 2n)(p - 2n) + 2 expands to -4n**2 + 2(p - 1)n + (p + 2), a
downward parabola with vertex at n = (p - 1)/4 and exact symmetry
f(n) = f((p - 1)/2 - n). The admissible n are the integers strictly
between (1 - p)/2 and p - 1. This script shows the pieces agreeing.
"""

from twinpoly import (
    TwinPrimeSeed,
    admissible_range,
    evaluate_family,
    evaluate_quadratic,
    expanded_family,
)

for p in (3, 5, 11, 17, 29):
    seed = TwinPrimeSeed(p)
    poly = expanded_family(seed)
    rng = admissible_range(seed)
    print(f"p = {p}")
    print(f"  expanded form: {poly.a}n**2 + {poly.b}n + {poly.c}")
    print(f"  admissible n: {rng.n_min}..{rng.n_max} ({rng.count} integers)")

    # product form and expanded form agree well beyond the range
    assert all(
        evaluate_family(seed, n) == evaluate_quadratic(poly, n)
        for n in range(rng.n_min - 20, rng.n_max + 21)
    )

    # the mirror identity pairs the range up around (p - 1)/4
    axis2 = (p - 1) // 2  # n and axis2 - n are mirror images
    assert all(
        evaluate_family(seed, n) == evaluate_family(seed, axis2 - n)
        for n in rng.integers()
    )
    mid = (p - 1) / 4
    print(f"  symmetric about n = {mid}: f(n) == f({axis2} - n) checked")
    print()
