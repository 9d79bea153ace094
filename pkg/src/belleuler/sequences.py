"""Sequence families: Bell, Euler (any exact order), Stirling-2, and the hybrid
Bell-based Euler polynomials, each with a generating-function path and an
independent recurrence/summation path.

The generating-function path expands the defining series with the truncated
engine from :mod:`.algebra`; the recurrence path uses only binomials and
triangle recurrences.  Tests hold the two against each other and against
brute-force enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import Poly, XY, Series

X = Poly.gen("x")
Y = Poly.gen("y")


def validate_order(alpha):
    """Normalize the family order: exact int or Fraction only."""
    if isinstance(alpha, bool) or not isinstance(alpha, (int, Fraction)):
        raise ValueError(
            f"order must be an exact int or Fraction, got {type(alpha).__name__}")
    if isinstance(alpha, Fraction) and alpha.denominator == 1:
        return int(alpha)
    return alpha


def _gf_order(n: int) -> int:
    # round the cached truncation order up so grid sweeps share one series
    return max(16, n + 1)


# -- generating-function path ---------------------------------------------

@lru_cache(maxsize=None)
def mixed_exponential(order: int) -> Series:
    """e^{x t + y (e^t - 1)} over the (x, y) polynomial ring."""
    expm1 = Series.exp_t(XY, order) - 1
    return (Series.t(XY, order) * X + expm1 * Y).exp()


@lru_cache(maxsize=None)
def euler_factor(alpha, order: int) -> Series:
    """(2 / (e^t + 1))^alpha over the (x, y) polynomial ring."""
    base = (Series.exp_t(XY, order) + 1) / 2
    return base.pow(-validate_order(alpha))


@lru_cache(maxsize=None)
def _euler_gf(alpha, order: int) -> Series:
    return euler_factor(alpha, order) * (Series.t(XY, order) * X).exp()


@lru_cache(maxsize=None)
def _bell_euler_gf(alpha, order: int) -> Series:
    return euler_factor(alpha, order) * mixed_exponential(order)


@lru_cache(maxsize=None)
def _stirling_gf(k: int, order: int) -> Series:
    expm1 = Series.exp_t(XY, order) - 1
    return expm1.pow(k) / factorial(k) * (Series.t(XY, order) * X).exp()


@lru_cache(maxsize=None)
def _bell_euler_y_gf(alpha, order: int) -> Series:
    # the x=0 member family: (2/(e^t+1))^alpha * e^{y(e^t-1)}
    expm1 = Series.exp_t(XY, order) - 1
    return euler_factor(alpha, order) * (expm1 * Y).exp()


def bivariate_bell(n: int) -> Poly:
    """n-th polynomial of e^{xt + y(e^t - 1)}: mixes powers of x with partition counts."""
    return factorial(n) * mixed_exponential(_gf_order(n)).coefficient(n)


def bell_poly(n: int) -> Poly:
    """Classical Bell polynomial: bivariate value at x = 0."""
    return bivariate_bell(n).subs({"x": 0})


def bell_number(n: int) -> Fraction:
    """Number of set partitions of an n-element set."""
    return bivariate_bell(n).evaluate({"x": 0, "y": 1})


def euler_poly_order(n: int, alpha) -> Poly:
    """Euler polynomial of order alpha (univariate in x)."""
    return factorial(n) * _euler_gf(validate_order(alpha), _gf_order(n)).coefficient(n)


def euler_number_order(n: int, alpha) -> Fraction:
    return euler_poly_order(n, alpha).evaluate({"x": 0, "y": 0})


def stirling2_poly(n: int, k: int) -> Poly:
    """n-th polynomial of (e^t - 1)^k / k! * e^{xt}."""
    if k < 0:
        raise ValueError("block count k must be non-negative")
    return factorial(n) * _stirling_gf(k, _gf_order(n)).coefficient(n)


def stirling2_number(n: int, k: int) -> Fraction:
    """Partitions of an n-set into k nonempty blocks."""
    return stirling2_poly(n, k).evaluate({"x": 0, "y": 0})


def bell_euler_poly(n: int, alpha) -> Poly:
    """Hybrid family: n-th polynomial of (2/(e^t+1))^alpha * e^{xt + y(e^t-1)}."""
    return factorial(n) * _bell_euler_gf(
        validate_order(alpha), _gf_order(n)).coefficient(n)


def bell_euler_number(n: int, alpha) -> Fraction:
    return bell_euler_poly(n, alpha).evaluate({"x": 0, "y": 1})


def falling_factorial(k: int) -> Poly:
    """x(x-1)...(x-k+1); the empty product is 1."""
    result = Poly.constant(1)
    for i in range(k):
        result = result * (X - i)
    return result


_SPECIAL_CASES = ("x_zero", "y_zero", "y_zero_alpha_one")


def special_case(n: int, alpha, which: str) -> Poly:
    """Named specializations of the hybrid family, cross-checked against the
    dedicated generator for each case."""
    if which == "x_zero":
        value = bell_euler_poly(n, alpha).subs({"x": 0})
        dedicated = factorial(n) * _bell_euler_y_gf(
            validate_order(alpha), _gf_order(n)).coefficient(n)
    elif which == "y_zero":
        value = bell_euler_poly(n, alpha).subs({"y": 0})
        dedicated = euler_poly_order(n, alpha)
    elif which == "y_zero_alpha_one":
        value = bell_euler_poly(n, 1).subs({"y": 0})
        dedicated = euler_poly_order(n, 1)
    else:
        raise ValueError(f"which must be one of {_SPECIAL_CASES}, got {which!r}")
    if value != dedicated:
        raise AssertionError(
            f"special case {which} disagrees with its dedicated generator at n={n}")
    return value


# -- recurrence / summation path ------------------------------------------

def bell_number_triangle(n: int) -> Fraction:
    """Bell number from the Bell-triangle recurrence (no series involved)."""
    row = [Fraction(1)]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


@lru_cache(maxsize=None)
def stirling2_recurrence(n: int, k: int) -> Fraction:
    if k == n:
        return Fraction(1)
    if k == 0 or k > n or k < 0:
        return Fraction(0)
    return k * stirling2_recurrence(n - 1, k) + stirling2_recurrence(n - 1, k - 1)


def bell_poly_from_stirling(n: int) -> Poly:
    terms = {(0, k): stirling2_recurrence(n, k) for k in range(n + 1)}
    return Poly(("x", "y"), terms)


@lru_cache(maxsize=None)
def euler_poly_recurrence(n: int) -> Poly:
    """Order-1 Euler polynomial from the triangular relation
    E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x)."""
    result = X ** n
    for k in range(n):
        result = result - Fraction(1, 2) * comb(n, k) * euler_poly_recurrence(k)
    return result


@lru_cache(maxsize=None)
def euler_numbers_of_order(alpha: int, n_max: int) -> tuple:
    """Euler numbers of integer order via convolution (alpha >= 0) or the
    closed binomial sum for the reciprocal factor (alpha < 0)."""
    if alpha == 0:
        return tuple(Fraction(1 if n == 0 else 0) for n in range(n_max + 1))
    if alpha < 0:
        m = -alpha
        return tuple(
            Fraction(sum(comb(m, i) * i ** n for i in range(m + 1)), 2 ** m)
            if n else Fraction(1)
            for n in range(n_max + 1))
    prev = euler_numbers_of_order(alpha - 1, n_max)
    base = [euler_poly_recurrence(n).evaluate({"x": 0, "y": 0})
            for n in range(n_max + 1)]
    return tuple(
        sum((comb(n, k) * prev[k] * base[n - k] for k in range(n + 1)), Fraction(0))
        for n in range(n_max + 1))


def euler_poly_order_convolution(n: int, alpha: int) -> Poly:
    """E_n^{(alpha)}(x) = sum_k C(n,k) E_k^{(alpha)} x^{n-k} (numbers from recurrences)."""
    numbers = euler_numbers_of_order(alpha, n)
    result = Poly.zero()
    for k in range(n + 1):
        result = result + comb(n, k) * numbers[k] * X ** (n - k)
    return result


def bivariate_bell_convolution(n: int) -> Poly:
    result = Poly.zero()
    for k in range(n + 1):
        result = result + comb(n, k) * X ** (n - k) * bell_poly_from_stirling(k)
    return result


def bell_euler_convolution(n: int, alpha: int) -> Poly:
    """Binomial convolution of Euler polynomials with Bell polynomials,
    entirely on the recurrence path."""
    result = Poly.zero()
    for k in range(n + 1):
        result = result + (comb(n, k) * euler_poly_order_convolution(k, alpha)
                           * bell_poly_from_stirling(n - k))
    return result


# -- family dispatch --------------------------------------------------------

class Family(str, Enum):
    BELL_NUMBER = "bell_number"
    BELL_POLY = "bell_poly"
    BIVARIATE_BELL = "bivariate_bell"
    EULER_NUMBER = "euler_number_order"
    EULER_POLY = "euler_poly_order"
    STIRLING2_NUMBER = "stirling2_number"
    STIRLING2_POLY = "stirling2_poly"
    BELL_EULER_POLY = "bell_euler_poly"
    BELL_EULER_NUMBER = "bell_euler_number"


ORDER_PARAMETERIZED = frozenset({
    Family.EULER_NUMBER, Family.EULER_POLY,
    Family.BELL_EULER_POLY, Family.BELL_EULER_NUMBER,
})

BLOCK_PARAMETERIZED = frozenset({Family.STIRLING2_NUMBER, Family.STIRLING2_POLY})


@dataclass(frozen=True)
class FamilySpec:
    """One requested family member: which family, degree n, and parameters."""

    family: Family
    n: int
    alpha: "int | Fraction | None" = None
    k: "int | None" = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if (self.alpha is not None) != (self.family in ORDER_PARAMETERIZED):
            raise ValueError(
                f"alpha must be given exactly for order-parameterized families "
                f"(family={self.family.value})")
        if (self.k is not None) != (self.family in BLOCK_PARAMETERIZED):
            raise ValueError(
                f"k must be given exactly for the Stirling families "
                f"(family={self.family.value})")

    def value(self):
        f = self.family
        if f is Family.BELL_NUMBER:
            return bell_number(self.n)
        if f is Family.BELL_POLY:
            return bell_poly(self.n)
        if f is Family.BIVARIATE_BELL:
            return bivariate_bell(self.n)
        if f is Family.EULER_NUMBER:
            return euler_number_order(self.n, self.alpha)
        if f is Family.EULER_POLY:
            return euler_poly_order(self.n, self.alpha)
        if f is Family.STIRLING2_NUMBER:
            return stirling2_number(self.n, self.k)
        if f is Family.STIRLING2_POLY:
            return stirling2_poly(self.n, self.k)
        if f is Family.BELL_EULER_POLY:
            return bell_euler_poly(self.n, self.alpha)
        if f is Family.BELL_EULER_NUMBER:
            return bell_euler_number(self.n, self.alpha)
        raise ValueError(f)
