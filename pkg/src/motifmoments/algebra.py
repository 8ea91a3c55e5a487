"""Exact rational scalars and dense univariate polynomials over them.

The scalar type is `fractions.Fraction`, which keeps every value in canonical
form (positive denominator, numerator and denominator coprime) and never
rounds.  A polynomial in the integer variable n is stored densely as a tuple
of coefficients, index i holding the coefficient of n**i; degrees in this
package stay small (at most ~16), so a sparse representation would not pay.

Decimal strings are produced from the exact value only at the very end:
rounding is half-even at the requested significant digit, switching to
scientific notation (``2.0833e16``) once the rounded magnitude reaches 10**6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

# Canonical exact scalar: positive denominator, gcd(numerator, denominator) = 1,
# zero stored as 0/1.  Fraction maintains all three on every operation.
ExactRational = Fraction

Coefficient = Union[int, Fraction]

# Exponent at which decimal rendering switches to scientific notation.
_SCIENTIFIC_EXPONENT = 6


def rat_add(a: Coefficient, b: Coefficient) -> Fraction:
    """Exact sum of two rationals."""
    return Fraction(a) + Fraction(b)


def rat_sub(a: Coefficient, b: Coefficient) -> Fraction:
    """Exact difference of two rationals."""
    return Fraction(a) - Fraction(b)


def rat_mul(a: Coefficient, b: Coefficient) -> Fraction:
    """Exact product of two rationals."""
    return Fraction(a) * Fraction(b)


def rat_div(a: Coefficient, b: Coefficient) -> Fraction:
    """Exact quotient of two rationals; the divisor must be nonzero."""
    b = Fraction(b)
    if b == 0:
        raise ZeroDivisionError("division of exact rationals by zero")
    return Fraction(a) / b


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in n with exact rational coefficients, stored densely.

    ``coeffs[i]`` is the coefficient of n**i.  Trailing zero coefficients are
    trimmed on construction, so the zero polynomial stores an empty tuple and
    compares equal however it was produced.  Instances are immutable and safe
    to share between threads.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Index of the highest nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of n**power (zero beyond the stored degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Coefficient | RationalPolynomial) -> RationalPolynomial:
        if isinstance(other, RationalPolynomial):
            if not self.coeffs or not other.coeffs:
                return RationalPolynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RationalPolynomial(out)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return RationalPolynomial(coeff * c for coeff in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, n: Coefficient) -> Fraction:
        """Exact value at n, by Horner's rule in rational arithmetic."""
        value = Fraction(0)
        point = Fraction(n)
        for coeff in reversed(self.coeffs):
            value = value * point + coeff
        return value


def poly_add(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Exact coefficient-wise sum."""
    return p + q


def poly_sub(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Exact coefficient-wise difference."""
    return p - q


def poly_mul(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Exact product by coefficient convolution."""
    return p * q


def poly_scale(p: RationalPolynomial, c: Coefficient) -> RationalPolynomial:
    """Every coefficient multiplied by the scalar c."""
    return p * Fraction(c)


def poly_eval_exact(p: RationalPolynomial, n: Coefficient) -> Fraction:
    """Exact rational value of p at n."""
    return p(n)


def poly_eval_decimal(p: RationalPolynomial, n: Coefficient, significant_digits: int = 5) -> str:
    """Decimal rendering of the exact value of p at n (see format_rational_decimal)."""
    return format_rational_decimal(p(n), significant_digits)


@lru_cache(maxsize=None)
def falling_factorial_poly(k: int) -> RationalPolynomial:
    """The monic degree-k polynomial n(n-1)...(n-k+1); the empty product (k=0) is 1.

    Counts ordered injective placements of k items among n, so it vanishes at
    every integer 0 <= n < k and equals k! at n = k.
    """
    if k < 0:
        raise ValueError("falling factorial requires k >= 0")
    result = RationalPolynomial((1,))
    for j in range(k):
        result = result * RationalPolynomial((-j, 1))
    return result


def _pow10_at_most(numerator: int, denominator: int, exponent: int) -> bool:
    """True iff 10**exponent <= numerator/denominator, all integer arithmetic."""
    if exponent >= 0:
        return denominator * 10**exponent <= numerator
    return denominator <= numerator * 10 ** (-exponent)


def _round_ratio_half_even(numerator: int, denominator: int) -> int:
    """Nearest integer to numerator/denominator (both positive), ties to even."""
    q, r = divmod(numerator, denominator)
    if 2 * r > denominator or (2 * r == denominator and q % 2 == 1):
        q += 1
    return q


def _render_digits(sign: str, digit_str: str, exponent: int, digits: int) -> str:
    """Place the decimal point of a `digits`-digit significand at 10**exponent."""
    if exponent >= _SCIENTIFIC_EXPONENT:
        mantissa = digit_str[0] + ("." + digit_str[1:] if digits > 1 else "")
        return f"{sign}{mantissa}e{exponent}"
    if exponent < 0:
        return f"{sign}0.{'0' * (-exponent - 1)}{digit_str}"
    if exponent >= digits - 1:
        return sign + digit_str + "0" * (exponent - digits + 1)
    return sign + digit_str[: exponent + 1] + "." + digit_str[exponent + 1 :]


def format_rational_decimal(value: Coefficient, significant_digits: int = 5) -> str:
    """Round an exact rational half-even to `significant_digits` significant
    digits and render it in decimal.

    Scientific notation (``2.0833e16``) is used once the rounded magnitude
    reaches 10**6; below that the value prints positionally, keeping trailing
    zeros up to the significant-digit count (``2.50`` at three digits).  Zero
    prints as ``0``.
    """
    if significant_digits < 1:
        raise ValueError("significant_digits must be >= 1")
    value = Fraction(value)
    if value == 0:
        return "0"
    sign = "-" if value < 0 else ""
    num, den = abs(value.numerator), value.denominator
    exponent = len(str(num)) - len(str(den))
    while not _pow10_at_most(num, den, exponent):
        exponent -= 1
    while _pow10_at_most(num, den, exponent + 1):
        exponent += 1
    shift = significant_digits - 1 - exponent
    if shift >= 0:
        mantissa = _round_ratio_half_even(num * 10**shift, den)
    else:
        mantissa = _round_ratio_half_even(num, den * 10 ** (-shift))
    if mantissa == 10**significant_digits:
        mantissa //= 10
        exponent += 1
    return _render_digits(sign, str(mantissa), exponent, significant_digits)


def sqrt_decimal(value: Coefficient, significant_digits: int = 5) -> str:
    """Decimal rendering of the square root of a non-negative exact rational.

    The significand is correctly rounded half-even at the requested digit:
    the comparison against the true square root is done in exact integer
    arithmetic, so no intermediate floating point is involved.
    """
    if significant_digits < 1:
        raise ValueError("significant_digits must be >= 1")
    value = Fraction(value)
    if value < 0:
        raise ValueError("square root of a negative value")
    if value == 0:
        return "0"
    num, den = value.numerator, value.denominator
    # exponent with 10**exponent <= sqrt(value) < 10**(exponent + 1)
    exponent = (len(str(num)) - len(str(den))) // 2
    while not _pow10_at_most(num, den, 2 * exponent):
        exponent -= 1
    while _pow10_at_most(num, den, 2 * (exponent + 1)):
        exponent += 1
    shift = significant_digits - 1 - exponent
    if shift >= 0:
        a, b = num * 10 ** (2 * shift), den
    else:
        a, b = num, den * 10 ** (-2 * shift)
    # floor of sqrt(a/b), then half-even rounding against the exact midpoint
    m = math.isqrt(a // b)
    while (m + 1) * (m + 1) * b <= a:
        m += 1
    while m * m * b > a:
        m -= 1
    midpoint = 4 * a - (2 * m + 1) ** 2 * b
    if midpoint > 0 or (midpoint == 0 and m % 2 == 1):
        m += 1
    if m == 10**significant_digits:
        m //= 10
        exponent += 1
    return _render_digits("", str(m), exponent, significant_digits)
