"""Dual-space layer: truncated series double as linear functionals on
polynomials in x, and as shift/derivative operators acting on them.

The pairing <f | x^n> = n! * (coefficient of t^n in f) identifies the dual of
the polynomial space with formal series; t^k acts on polynomials as the k-th
x-derivative, so e^{yt} acts as the shift x -> x+y.  On top of that sit the
Appell-sequence constructions for the Bell-based Euler family: the series
h(t) = ((e^t+1)/2)^mu * e^{-y(e^t-1)} is invertible, its inverse applied to
x^n reproduces the family, and <h t^k | .> extracts expansion coefficients.
The parameter y is carried formally (a polynomial generator) unless a rational
value is supplied.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import factorial

from .algebra import Poly, QQ, XY, Series
from .identities import Grid, IdentityReport, run_cases
from . import sequences as seq


def pair(f: Series, q: Poly):
    """Dual pairing <f | q>, reading q as a polynomial in x.

    Returns a Fraction when everything is scalar, otherwise a polynomial in
    the carried parameters.  The truncation order of f must cover deg_x(q).
    """
    deg = q.degree("x")
    if deg > f.order:
        raise ValueError(
            f"functional truncated at order {f.order} cannot pair with a "
            f"degree-{deg} polynomial")
    total = Fraction(0)
    for n in range(max(deg, 0) + 1):
        qn = q.coefficient_in("x", n)
        if qn:
            total = total + factorial(n) * f.coefficient(n) * qn
    if isinstance(total, Poly) and total.is_constant():
        return total.constant_value()
    return total


def pair_product(factors, q: Poly):
    """Pairing of a product of functionals: multiply the series, pair once."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one functional")
    return pair(reduce(lambda a, b: a * b, factors), q)


def apply_operator(g: Series, q: Poly) -> Poly:
    """Act with g(t) on q: t^k differentiates k times in x.

    e.g. applying the series of e^{ct} shifts x -> x + c.
    """
    deg = q.degree("x")
    if deg > g.order:
        raise ValueError(
            f"operator truncated at order {g.order} cannot act on a "
            f"degree-{deg} polynomial")
    result = Poly.zero(q.names)
    d = q
    for k in range(max(deg, 0) + 1):
        gk = g.coefficient(k)
        if gk and d:
            result = result + gk * d
        d = d.derivative("x")
    return result


def difference_quotient_operator(z, order: int) -> Series:
    """The series (e^{zt} - 1)/t, realized by an exact coefficient shift."""
    z = Fraction(z)
    ez = (Series.t(QQ, order + 1) * z).exp()
    return (ez - 1).shift(-1)


@dataclass(frozen=True)
class AppellContext:
    """Invertible base series for the order-mu Bell-based Euler family."""

    mu: int
    order: int
    y_param: "Poly | Fraction"
    h: Series

    @classmethod
    def create(cls, mu: int, order: int, y=None) -> "AppellContext":
        if isinstance(mu, bool) or not isinstance(mu, int):
            raise ValueError("mu must be an integer order")
        if y is None:
            y = Poly.gen("y")
        ring = XY if isinstance(y, Poly) else QQ
        base = (Series.exp_t(ring, order) + 1) / 2
        expm1 = Series.exp_t(ring, order) - 1
        h = base.pow(mu) * (expm1 * (-y)).exp()
        if h.coefficient(0) != ring.one:
            raise AssertionError("base series must have constant term 1")
        return cls(mu, order, y, h)

    def family_member(self, n: int) -> Poly:
        member = seq.bell_euler_poly(n, self.mu)
        if isinstance(self.y_param, Poly):
            return member
        return member.subs({"y": self.y_param})


def appell_inverse_apply(ctx: AppellContext, n: int) -> Poly:
    """(1/h(t)) x^n: the umbral route to the degree-n family member."""
    return apply_operator(ctx.h.inverse(), Poly.gen("x") ** n)


@dataclass(frozen=True)
class AppellExpansion:
    """Coefficients b_0..b_n of a polynomial in the order-mu Appell basis."""

    mu: int
    coeffs: tuple

    def to_json_dict(self):
        return {
            "mu": self.mu,
            "coeffs": [c.pretty() if isinstance(c, Poly) else str(c)
                       for c in self.coeffs],
        }


def expand_in_appell(q: Poly, ctx: AppellContext) -> AppellExpansion:
    """b_k = (1/k!) <h(t) t^k | q>; reconstruction is exact by orthogonality."""
    degree = max(q.degree("x"), 0)
    coeffs = tuple(pair(ctx.h.shift(k), q) / factorial(k)
                   for k in range(degree + 1))
    return AppellExpansion(ctx.mu, coeffs)


def reconstruct(expansion: AppellExpansion, ctx: AppellContext) -> Poly:
    total = Poly.zero()
    for k, b in enumerate(expansion.coeffs):
        total = total + b * ctx.family_member(k)
    return total


def sheffer_orthogonality_check(ctx: AppellContext, n_max: int) -> IdentityReport:
    """<h(t) t^k | S_n> = n! delta_{n,k} over the full (n, k) square."""
    if n_max > ctx.order:
        raise ValueError("context order too small for requested square")

    def cases():
        for n in range(n_max + 1):
            for k in range(n_max + 1):
                def pair_nk(n=n, k=k):
                    value = pair(ctx.h.shift(k), ctx.family_member(n))
                    expected = Fraction(factorial(n) if n == k else 0)
                    lhs = value if isinstance(value, Poly) else Poly.constant(value)
                    return lhs, Poly.constant(expected)
                yield {"n": n, "k": k, "mu": ctx.mu}, pair_nk

    return run_cases("orthogonality", cases())


def integral_via_operator(n: int, z, y=None):
    """Both routes to the running integral of the order-1 family member:
    exact antiderivative from x to x+z, and the (e^{zt}-1)/t operator."""
    z = Fraction(z)
    member = seq.bell_euler_poly(n, 1)
    if y is not None:
        member = member.subs({"y": Fraction(y)})
    anti = member.antiderivative("x")
    lhs = anti.subs({"x": seq.X + z}) - anti
    rhs = apply_operator(difference_quotient_operator(z, n + 1), member)
    return lhs, rhs


def integral_pairing_form(n: int, z, y=None):
    """Corollary form: the integral from 0 to z equals the pairing of
    (e^{zt}-1)/t against the member, read as a polynomial in x."""
    z = Fraction(z)
    member = seq.bell_euler_poly(n, 1)
    if y is not None:
        member = member.subs({"y": Fraction(y)})
    anti = member.antiderivative("x")
    lhs = anti.subs({"x": z}) - anti.subs({"x": 0})
    rhs = pair(difference_quotient_operator(z, n + 1), member)
    if not isinstance(rhs, Poly):
        rhs = Poly.constant(rhs)
    if not isinstance(lhs, Poly):
        lhs = Poly.constant(lhs)
    return lhs, rhs


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def multinomial_decomposition(n: int, mu: int):
    """x=0 member of order mu versus the composition sum over order-1 members
    weighted by order-1 Euler numbers."""
    if mu < 1:
        raise ValueError("mu must be at least 1")
    lhs = seq.special_case(n, mu, "x_zero")
    rhs = Poly.zero()
    for parts in _compositions(n, mu):
        weight = Fraction(factorial(n))
        for i in parts:
            weight /= factorial(i)
        for i in parts[:-1]:
            weight *= seq.euler_number_order(i, 1)
        if weight:
            rhs = rhs + weight * seq.special_case(parts[-1], 1, "x_zero")
    return lhs, rhs


# -- registry wrappers ------------------------------------------------------

def _integer_orders(alphas, default):
    if alphas is None:
        return default
    orders = []
    for a in alphas:
        a = seq.validate_order(a)
        if not isinstance(a, int):
            raise ValueError(f"umbral checks need integer orders, got {a}")
        orders.append(a)
    return tuple(orders)


def check_orthogonality(grid: Grid = Grid()) -> IdentityReport:
    n_max = grid.n_max if grid.n_max is not None else 6
    mus = _integer_orders(grid.alphas, (1, 2, 3))

    def cases():
        for mu in mus:
            ctx = AppellContext.create(mu, n_max + 1)
            for n in range(n_max + 1):
                for k in range(n_max + 1):
                    def pair_nk(ctx=ctx, n=n, k=k):
                        value = pair(ctx.h.shift(k), ctx.family_member(n))
                        lhs = (value if isinstance(value, Poly)
                               else Poly.constant(value))
                        return lhs, Poly.constant(factorial(n) if n == k else 0)
                    yield {"mu": mu, "n": n, "k": k}, pair_nk

    return run_cases("orthogonality", cases())


INTEGRAL_Z_VALUES = (Fraction(1), Fraction(1, 2), Fraction(-2, 3))


def check_integral(grid: Grid = Grid()) -> IdentityReport:
    n_max = grid.n_max if grid.n_max is not None else 8

    def cases():
        for n in range(n_max + 1):
            for z in INTEGRAL_Z_VALUES:
                yield ({"n": n, "z": str(z), "form": "operator"},
                       lambda n=n, z=z: integral_via_operator(n, z))
                yield ({"n": n, "z": str(z), "form": "pairing"},
                       lambda n=n, z=z: integral_pairing_form(n, z))

    return run_cases("integral", cases())


def check_multinomial(grid: Grid = Grid()) -> IdentityReport:
    n_max = grid.n_max if grid.n_max is not None else 8
    mus = _integer_orders(grid.alphas, (2, 3))

    def cases():
        for n in range(n_max + 1):
            for mu in mus:
                yield ({"n": n, "mu": mu},
                       lambda n=n, mu=mu: multinomial_decomposition(n, mu))

    return run_cases("multinomial", cases())


ROUNDTRIP_COUNT = 100
ROUNDTRIP_SEED = 271828


def random_rational_poly(rng: random.Random, degree: int) -> Poly:
    terms = {}
    for i in range(degree + 1):
        num = rng.randint(-10**6, 10**6)
        den = rng.randint(1, 10**6)
        if num:
            terms[(i, 0)] = Fraction(num, den)
    return Poly(("x", "y"), terms)


def check_roundtrip(grid: Grid = Grid()) -> IdentityReport:
    """Expansion followed by reconstruction returns the input exactly, for
    seeded random rational polynomials across the allowed orders."""
    max_degree = grid.n_max if grid.n_max is not None else 8
    mus = _integer_orders(grid.alphas, (1, 2, 3))
    rng = random.Random(ROUNDTRIP_SEED)
    contexts = {mu: AppellContext.create(mu, max_degree + 1) for mu in mus}

    def cases():
        for index in range(ROUNDTRIP_COUNT):
            mu = mus[index % len(mus)]
            degree = rng.randint(0, max_degree)
            q = random_rational_poly(rng, degree)

            def roundtrip(q=q, mu=mu):
                ctx = contexts[mu]
                return q, reconstruct(expand_in_appell(q, ctx), ctx)
            yield {"instance": index, "mu": mu, "degree": degree}, roundtrip

    return run_cases("roundtrip", cases())


CHECKS = {
    "orthogonality": check_orthogonality,
    "integral": check_integral,
    "multinomial": check_multinomial,
    "roundtrip": check_roundtrip,
}
