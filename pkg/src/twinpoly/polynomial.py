"""Exact integer quadratics: the twin-seeded family, reflection, ranges.

The central object is the one-parameter family

    f_p(n) = (1 + 2n)(p - 2n) + 2 = -4n**2 + 2(p - 1)n + (p + 2)

where the seed p is the lower member of a twin-prime pair. Values are
kept signed here; taking absolute values is a concern of the analysis
layer. All arithmetic is exact and guarded against leaving the signed
64-bit range, so results never wrap silently.
"""

from dataclasses import dataclass

from .primality import is_prime

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

EULER_A, EULER_B, EULER_C = 1, 1, 41


def _checked(value: int, what: str) -> int:
    if value < INT64_MIN or value > INT64_MAX:
        raise OverflowError(f"{what} {value} leaves the signed 64-bit range")
    return value


@dataclass(frozen=True, slots=True)
class TwinPrimeSeed:
    """Lower member p of a twin-prime pair (p, p + 2), with p > 2.

    Construction validates all three conditions, so holding a seed is
    proof of twin membership. p > 2 forces p odd, which keeps the
    symmetry axis (p - 1)/2 an integer.
    """

    p: int

    def __post_init__(self) -> None:
        if self.p <= 2:
            raise ValueError(f"seed must exceed 2, got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"seed {self.p} is not prime")
        if not is_prime(self.p + 2):
            raise ValueError(f"seed {self.p} + 2 = {self.p + 2} is not prime")
        assert self.p % 2 == 1


@dataclass(frozen=True, slots=True)
class QuadraticPolynomial:
    """Integer quadratic a*n**2 + b*n + c with 64-bit coefficients."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name, coeff in (("a", self.a), ("b", self.b), ("c", self.c)):
            _checked(coeff, f"coefficient {name} =")

    def __call__(self, n: int) -> int:
        return evaluate_quadratic(self, n)


@dataclass(frozen=True, slots=True)
class AdmissibleRange:
    """Integers n_min..n_max strictly inside the open interval ((1-p)/2, p-1)."""

    n_min: int
    n_max: int
    count: int

    def integers(self) -> range:
        return range(self.n_min, self.n_max + 1)


EULER_POLYNOMIAL = QuadraticPolynomial(EULER_A, EULER_B, EULER_C)


def evaluate_family(seed: TwinPrimeSeed, n: int) -> int:
    """Evaluate (1 + 2n)(p - 2n) + 2 exactly, sign preserved.

    Parameters
    ----------
    seed : TwinPrimeSeed
        Validated twin lower member p.
    n : int
        Any integer for which the product stays within signed 64 bits.

    Returns
    -------
    int
        The signed value; no absolute value is taken here.

    Raises
    ------
    OverflowError
        If the result leaves [-2**63, 2**63 - 1].
    """
    return _checked((1 + 2 * n) * (seed.p - 2 * n) + 2, "family value")


def expanded_family(seed: TwinPrimeSeed) -> QuadraticPolynomial:
    """Expanded form of the family: (-4, 2(p - 1), p + 2).

    Evaluating the returned polynomial agrees with ``evaluate_family``
    at every n.
    """
    return QuadraticPolynomial(-4, 2 * (seed.p - 1), seed.p + 2)


def admissible_range(seed: TwinPrimeSeed) -> AdmissibleRange:
    """Integer bounds of the open interval ((1 - p)/2, p - 1).

    n_min = (3 - p)/2 and n_max = p - 2, which makes the count
    (3p - 5)/2; p odd keeps every quantity an integer.
    """
    p = seed.p
    return AdmissibleRange((3 - p) // 2, p - 2, (3 * p - 5) // 2)


def evaluate_quadratic(poly: QuadraticPolynomial, n: int) -> int:
    """a*n**2 + b*n + c exactly, overflow checked."""
    return _checked(poly.a * n * n + poly.b * n + poly.c, "quadratic value")


def reflect(poly: QuadraticPolynomial, x: int) -> QuadraticPolynomial:
    """Reflected polynomial q with q(n) = poly(x - n) for all n.

    Substituting x - n for n gives coefficients
    (a, -2ax - b, ax**2 + bx + c). Reflection is an involution:
    reflecting twice at the same x returns the original polynomial.
    A prime run of poly over 0..x becomes a prime run of q over 0..x
    in reverse order.
    """
    q_b = _checked(-2 * poly.a * x - poly.b, "reflected coefficient b =")
    q_c = _checked(poly.a * x * x + poly.b * x + poly.c, "reflected coefficient c =")
    return QuadraticPolynomial(poly.a, q_b, q_c)


def endpoint_magnitude(seed: TwinPrimeSeed) -> int:
    """|family value| at the excluded endpoints n = (1 - p)/2 and n = p - 1.

    Both endpoints give magnitude p(2p - 5), divisible by p and hence
    composite for every seed p >= 5; that is why the admissible
    interval is open. The sole exception is p = 3, where the endpoint
    value is the prime 3 itself.
    """
    p = seed.p
    return _checked(p * (2 * p - 5), "endpoint magnitude")
