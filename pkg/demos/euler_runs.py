"""Prime runs of n**2 + n + 41 and of its mirrored double.

The classic quadratic is prime for n = 0..39 and first fails at
n = 40, where it hits 41**2. Reflecting the argument about the end of
that run produces (n - 40)**2 + (n - 40) + 41, which walks the same 40
primes down and then back up: an 80-long run from n = 0.
"""

from twinpoly import EULER_POLYNOMIAL, evaluate_quadratic, reflect, run_length

base = EULER_POLYNOMIAL
print(f"base polynomial: a={base.a} b={base.b} c={base.c}")
print(f"run length from 0: {run_length(base, 0)}")
first = evaluate_quadratic(base, 40)
print(f"first composite: n=40 -> {first} = 41 * 41")
print()

# reflect(f, 39) substitutes 39 - n, reversing the 40-run; because f
# is symmetric about -1/2 this equals the shift f(n - 40).
doubled = reflect(base, 39)
print(f"mirrored polynomial: a={doubled.a} b={doubled.b} c={doubled.c}")
print(f"run length from 0: {run_length(doubled, 0)}")
print(f"its n=0 value is {evaluate_quadratic(doubled, 0)}, the top of the original run")
print(f"its n=79 value is {evaluate_quadratic(doubled, 79)}, back to the top again")
print(f"first composite: n=80 -> {evaluate_quadratic(doubled, 80)}")
print()

# Reflection is an involution: applying it twice at the same point
# gives back the original coefficients.
print(f"reflect twice at 39: {reflect(doubled, 39) == base}")

# Each value of the mirrored run really is a value of the base run.
assert all(
    evaluate_quadratic(doubled, n) == evaluate_quadratic(base, n - 40)
    for n in range(0, 81)
)
print("mirrored values match base values shifted by 40: True")
