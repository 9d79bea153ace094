"""Dual-pairing layer: pairing axioms, operator actions, Appell-sequence
constructions, and the section's identity checks."""

import random
from fractions import Fraction as F
from math import factorial

import pytest

from belleuler import sequences as seq
from belleuler.algebra import Poly, QQ, Series, XY
from belleuler.identities import Grid
from belleuler.umbral import (
    AppellContext,
    appell_inverse_apply,
    apply_operator,
    check_integral,
    check_multinomial,
    check_orthogonality,
    check_roundtrip,
    difference_quotient_operator,
    expand_in_appell,
    integral_pairing_form,
    integral_via_operator,
    multinomial_decomposition,
    pair,
    pair_product,
    random_rational_poly,
    reconstruct,
    sheffer_orthogonality_check,
)

X, Y = Poly.gens("x", "y")


def t_power(k, order, ring=QQ):
    return Series.one(ring, order).shift(k)


class TestPairing:
    def test_monomial_duality(self):
        # <t^k | x^n> = n! delta_{n,k}
        for n in range(7):
            for k in range(7):
                value = pair(t_power(k, 6), X**n)
                assert value == (factorial(n) if n == k else 0)

    def test_exponential_evaluates(self):
        e2t = (Series.t(QQ, 4) * 2).exp()
        assert pair(e2t, X**3) == 8
        # <e^{ct} | q(x)> = q(c)
        q = X**2 - 3 * X + F(1, 4)
        for c in (F(0), F(1), F(-2, 5)):
            ect = (Series.t(QQ, 3) * c).exp()
            assert pair(ect, q) == q.evaluate({"x": c, "y": 0})

    def test_linearity_example(self):
        expm1 = Series.exp_t(QQ, 3) - 1
        assert pair(expm1, X**2 + 1) == 1   # (1^2+1) - (0^2+1)

    def test_truncation_bound(self):
        with pytest.raises(ValueError):
            pair(Series.one(QQ, 2), X**3)

    def test_polynomial_valued_pairing(self):
        # against a series with formal-y coefficients the result carries y
        h = Series(XY, [Poly.constant(1), Y, Y**2])
        assert pair(h, X) == Y
        assert pair(h, X**2) == 2 * Y**2

    def test_product_pairing_multinomial_oracle(self):
        rng = random.Random(9)
        order = 5
        for _ in range(10):
            f1 = Series(QQ, [F(rng.randint(-9, 9), rng.randint(1, 9))
                             for _ in range(order + 1)])
            f2 = Series(QQ, [F(rng.randint(-9, 9), rng.randint(1, 9))
                             for _ in range(order + 1)])
            for n in range(order + 1):
                direct = pair_product([f1, f2], X**n)
                expanded = sum(
                    (F(factorial(n), factorial(i) * factorial(n - i))
                     * pair(f1, X**i) * pair(f2, X**(n - i))
                     for i in range(n + 1)), F(0))
                assert direct == expanded


class TestOperators:
    def test_t_differentiates(self):
        assert apply_operator(Series.t(QQ, 3), X**3) == 3 * X**2

    def test_exp_shifts(self):
        assert apply_operator(Series.exp_t(QQ, 2), X**2) == (X + 1) ** 2

    def test_difference_quotient(self):
        for z in (F(1), F(1, 3), F(-2, 7)):
            op = difference_quotient_operator(z, 2)
            assert apply_operator(op, X**2) == \
                z * X**2 + z**2 * X + Poly.constant(z**3 / 3)

    def test_degree_lowering_on_family(self):
        t_big = Series.t(QQ, 12)
        for mu in (0, 1, 2, 3):
            for n in range(11):
                lhs = apply_operator(t_big, seq.bell_euler_poly(n, mu))
                rhs = n * seq.bell_euler_poly(n - 1, mu) if n else Poly.zero()
                assert lhs == rhs

    def test_truncation_bound(self):
        with pytest.raises(ValueError):
            apply_operator(Series.one(QQ, 1), X**3)


class TestAppellContext:
    def test_formal_base_series_is_invertible(self):
        ctx = AppellContext.create(2, 6)
        assert ctx.h.coefficient(0) == 1
        assert ctx.h.is_invertible()

    def test_numeric_y_context(self):
        ctx = AppellContext.create(1, 5, y=F(2, 3))
        assert ctx.h.ring == QQ
        member = ctx.family_member(2)
        assert member == seq.bell_euler_poly(2, 1).subs({"y": F(2, 3)})

    def test_non_integer_order_rejected(self):
        with pytest.raises(ValueError):
            AppellContext.create(F(1, 2), 4)


class TestInversePath:
    def test_matches_series_path(self):
        for mu in (1, 2, 3):
            ctx = AppellContext.create(mu, 11)
            for n in range(11):
                assert appell_inverse_apply(ctx, n) == seq.bell_euler_poly(n, mu)

    def test_degree_zero(self):
        ctx = AppellContext.create(1, 2)
        assert appell_inverse_apply(ctx, 0) == 1


class TestOrthogonality:
    def test_context_check_full_square(self):
        ctx = AppellContext.create(1, 7)
        report = sheffer_orthogonality_check(ctx, 6)
        assert report.passed and report.checked == 49

    def test_registry_check(self):
        report = check_orthogonality(Grid(n_max=4, alphas=(1, 2)))
        assert report.passed and report.checked == 2 * 25

    def test_numeric_y_square(self):
        ctx = AppellContext.create(2, 5, y=F(1, 3))
        report = sheffer_orthogonality_check(ctx, 4)
        assert report.passed

    def test_rational_mu_rejected_in_grid(self):
        with pytest.raises(ValueError):
            check_orthogonality(Grid(alphas=(F(1, 2),)))


class TestExpansion:
    def test_family_members_expand_to_delta(self):
        ctx = AppellContext.create(1, 6)
        for m in range(5):
            expansion = expand_in_appell(seq.bell_euler_poly(m, 1), ctx)
            for k, b in enumerate(expansion.coeffs):
                assert b == (1 if k == m else 0)

    def test_expand_x_frozen(self):
        ctx = AppellContext.create(1, 2)
        expansion = expand_in_appell(X, ctx)
        assert expansion.coeffs == (F(1, 2) - Y, F(1))
        assert expansion.to_json_dict() == {"mu": 1, "coeffs": ["1/2 - y", "1"]}

    def test_reconstruction_roundtrip_random(self):
        rng = random.Random(31)
        for mu in (1, 2, 3):
            ctx = AppellContext.create(mu, 9)
            for _ in range(5):
                q = random_rational_poly(rng, rng.randint(0, 8))
                expansion = expand_in_appell(q, ctx)
                assert reconstruct(expansion, ctx) == q

    def test_numeric_y_roundtrip(self):
        ctx = AppellContext.create(2, 7, y=F(-3, 5))
        q = X**4 - F(2, 3) * X + 1
        expansion = expand_in_appell(q, ctx)
        assert all(not isinstance(b, Poly) for b in expansion.coeffs)
        assert reconstruct(expansion, ctx) == q

    def test_registry_roundtrip_is_100_instances(self):
        report = check_roundtrip()
        assert report.passed and report.checked == 100


class TestIntegral:
    def test_degree_zero_gives_z(self):
        lhs, rhs = integral_via_operator(0, F(1))
        assert lhs == rhs == 1
        lhs, rhs = integral_via_operator(0, F(5, 4))
        assert lhs == rhs == F(5, 4)

    def test_degree_one_frozen(self):
        for z in (F(1), F(1, 2), F(-2, 3)):
            lhs, rhs = integral_via_operator(1, z)
            assert lhs == rhs == z * (X + Y - F(1, 2)) + Poly.constant(z**2 / 2)

    def test_z_zero_trivial(self):
        lhs, rhs = integral_via_operator(3, 0)
        assert lhs == rhs == Poly.zero()

    def test_pairing_form(self):
        for n in range(6):
            for z in (F(1), F(1, 2), F(-2, 3)):
                lhs, rhs = integral_pairing_form(n, z)
                assert lhs == rhs

    def test_registry_grid(self):
        report = check_integral(Grid(n_max=8))
        assert report.passed and report.checked == 9 * 3 * 2


class TestMultinomial:
    def test_mu_one_trivial(self):
        lhs, rhs = multinomial_decomposition(4, 1)
        assert lhs == rhs

    def test_n_zero(self):
        lhs, rhs = multinomial_decomposition(0, 3)
        assert lhs == rhs == 1

    def test_frozen_small_value(self):
        lhs, rhs = multinomial_decomposition(1, 2)
        assert lhs == rhs == Y - 1

    def test_registry_grid(self):
        report = check_multinomial(Grid(n_max=8, alphas=(2, 3)))
        assert report.passed and report.checked == 18

    def test_mu_zero_rejected(self):
        with pytest.raises(ValueError):
            multinomial_decomposition(3, 0)
