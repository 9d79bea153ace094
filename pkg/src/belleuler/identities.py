"""Executable identity checks: each theorem becomes an exact polynomial
equality verified over a parameter grid, reported with counterexamples.

Check ids are opaque registry labels (``T3_3`` ... ``T5_2``); the docstring of
each check states the identity it verifies.  ``T4_4_literal`` is a negative
control: an uncorrected double-sum form that is *not* an identity, kept to
prove the harness detects false statements.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import Poly
from . import sequences as seq

DEFAULT_N_MAX = 8
DEFAULT_ALPHAS = (0, 1, 2, 3)
DEFAULT_PAIRS = tuple((a1, a2) for a1 in (0, 1, 2) for a2 in (0, 1, 2))


@dataclass(frozen=True)
class Grid:
    """Parameter grid for a check; None fields fall back to per-check defaults."""

    n_max: "int | None" = None
    alphas: "tuple | None" = None
    alpha_pairs: "tuple | None" = None

    def resolve(self, n_default=DEFAULT_N_MAX, alphas_default=DEFAULT_ALPHAS):
        n_max = self.n_max if self.n_max is not None else n_default
        alphas = self.alphas if self.alphas is not None else alphas_default
        if n_max < 1:
            raise ValueError("n_max must be at least 1")
        if not alphas:
            raise ValueError("alpha list must be non-empty")
        return n_max, tuple(alphas)


@dataclass(frozen=True)
class Counterexample:
    params: dict
    lhs: Poly
    rhs: Poly

    def to_json_dict(self):
        return {
            "params": dict(self.params),
            "lhs": self.lhs.to_json_map(),
            "rhs": self.rhs.to_json_map(),
        }


@dataclass(frozen=True)
class IdentityReport:
    id: str
    passed: bool
    checked: int
    counterexample: "Counterexample | None"
    elapsed: float

    def __post_init__(self):
        assert self.passed == (self.counterexample is None)

    def to_json_dict(self):
        out = {"id": self.id, "pass": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json_dict()
        out["elapsed_ms"] = round(self.elapsed * 1000.0, 3)
        return out


def run_cases(check_id: str, cases) -> IdentityReport:
    """Evaluate (params, thunk) pairs in order; stop at the first failing
    equality so the reported counterexample is grid-minimal."""
    start = time.perf_counter()
    checked = 0
    for params, thunk in cases:
        lhs, rhs = thunk()
        checked += 1
        if lhs != rhs:
            elapsed = time.perf_counter() - start
            return IdentityReport(check_id, False, checked,
                                  Counterexample(params, lhs, rhs), elapsed)
    return IdentityReport(check_id, True, checked, None,
                          time.perf_counter() - start)


def _grid_cases(grid: Grid, pair_fn, n_default=DEFAULT_N_MAX):
    n_max, alphas = grid.resolve(n_default)
    for n in range(n_max + 1):
        for alpha in alphas:
            yield ({"n": n, "alpha": str(alpha)},
                   lambda n=n, a=alpha: pair_fn(n, a))


def check_T3_3(grid: Grid = Grid()) -> IdentityReport:
    """Hybrid polynomial = binomial convolution of Euler polynomials of the
    same order with Bell polynomials."""
    def pair(n, a):
        rhs = Poly.zero()
        for k in range(n + 1):
            rhs = rhs + (comb(n, k) * seq.euler_poly_order(k, a)
                         * seq.bell_poly(n - k))
        return seq.bell_euler_poly(n, a), rhs
    return run_cases("T3_3", _grid_cases(grid, pair))


def check_T3_4(grid: Grid = Grid()) -> IdentityReport:
    """Hybrid polynomial = convolution of Euler numbers with bivariate Bell
    polynomials."""
    def pair(n, a):
        rhs = Poly.zero()
        for k in range(n + 1):
            rhs = rhs + (comb(n, k) * seq.euler_number_order(k, a)
                         * seq.bivariate_bell(n - k))
        return seq.bell_euler_poly(n, a), rhs
    return run_cases("T3_4", _grid_cases(grid, pair))


def check_T3_5(grid: Grid = Grid()) -> IdentityReport:
    """Hybrid polynomial = convolution of its own x=0 specialization with
    powers of x."""
    def pair(n, a):
        rhs = Poly.zero()
        for k in range(n + 1):
            rhs = rhs + (comb(n, k) * seq.special_case(k, a, "x_zero")
                         * seq.X ** (n - k))
        return seq.bell_euler_poly(n, a), rhs
    return run_cases("T3_5", _grid_cases(grid, pair))


_FOUR_VARS = ("x1", "x2", "y1", "y2")


def _sample_points(count: int):
    # distinct small rationals, avoiding any special values
    return [Fraction(2 * i + 1, 3) for i in range(count)]


def check_T4_1(grid: Grid = Grid(), mode: str = "ring") -> IdentityReport:
    """Addition theorem in four formal variables: the order-(a1+a2) polynomial
    at (x1+x2, y1+y2) equals the binomial convolution of the order-a1 and
    order-a2 polynomials at the split arguments.

    ``mode="ring"`` expands exactly in the 4-variable polynomial ring;
    ``mode="sampling"`` checks on (n+2)^4 exact rational points per case,
    which exceeds the (n+1) abscissae per variable needed for degree n.
    """
    if mode not in ("ring", "sampling"):
        raise ValueError(f"unknown T4_1 mode {mode!r}")
    n_max, _ = grid.resolve(n_default=6)
    pairs = grid.alpha_pairs if grid.alpha_pairs is not None else DEFAULT_PAIRS

    x1, x2, y1, y2 = Poly.gens(*_FOUR_VARS)

    def ring_pair(n, a1, a2):
        lhs = seq.bell_euler_poly(n, a1 + a2).subs({"x": x1 + x2, "y": y1 + y2})
        rhs = Poly.zero(_FOUR_VARS)
        for k in range(n + 1):
            left = seq.bell_euler_poly(k, a1).subs({"x": x1, "y": y1})
            right = seq.bell_euler_poly(n - k, a2).subs({"x": x2, "y": y2})
            rhs = rhs + comb(n, k) * left * right
        return lhs, rhs

    def sampling_pair(n, a1, a2):
        points = _sample_points(n + 2)
        whole = seq.bell_euler_poly(n, a1 + a2)
        parts = [(seq.bell_euler_poly(k, a1), seq.bell_euler_poly(n - k, a2))
                 for k in range(n + 1)]
        for p1 in points:
            for p2 in points:
                for q1 in points:
                    for q2 in points:
                        lhs = whole.evaluate({"x": p1 + p2, "y": q1 + q2})
                        rhs = sum(
                            (comb(n, k)
                             * left.evaluate({"x": p1, "y": q1})
                             * right.evaluate({"x": p2, "y": q2})
                             for k, (left, right) in enumerate(parts)),
                            Fraction(0))
                        if lhs != rhs:
                            return (Poly.constant(lhs, _FOUR_VARS),
                                    Poly.constant(rhs, _FOUR_VARS))
        zero = Poly.zero(_FOUR_VARS)
        return zero, zero

    def cases():
        for n in range(n_max + 1):
            for a1, a2 in pairs:
                params = {"n": n, "alpha1": str(a1), "alpha2": str(a2)}
                if mode == "ring":
                    yield params, (lambda n=n, a1=a1, a2=a2: ring_pair(n, a1, a2))
                else:
                    yield params, (lambda n=n, a1=a1, a2=a2: sampling_pair(n, a1, a2))

    return run_cases("T4_1", cases())


def check_R4_2(grid: Grid = Grid()) -> IdentityReport:
    """Unit shift in x equals the full binomial sum of lower members."""
    def pair(n, a):
        lhs = seq.bell_euler_poly(n, a).subs({"x": seq.X + 1})
        rhs = Poly.zero()
        for k in range(n + 1):
            rhs = rhs + comb(n, k) * seq.bell_euler_poly(k, a)
        return lhs, rhs
    return run_cases("R4_2", _grid_cases(grid, pair))


def check_T4_2(grid: Grid = Grid()) -> IdentityReport:
    """Forward difference of the degree-(n+1) member equals the truncated
    binomial sum with C(n+1, k), k <= n."""
    def pair(n, a):
        top = seq.bell_euler_poly(n + 1, a)
        lhs = top.subs({"x": seq.X + 1}) - top
        rhs = Poly.zero()
        for k in range(n + 1):
            rhs = rhs + comb(n + 1, k) * seq.bell_euler_poly(k, a)
        return lhs, rhs
    return run_cases("T4_2", _grid_cases(grid, pair))


def check_T4_3(grid: Grid = Grid()) -> IdentityReport:
    """Bivariate Bell polynomial is the average of the order-1 hybrid at x and
    x+1; its y=0 shadow is the classical 'average equals x^n' relation."""
    n_max, _ = grid.resolve()

    def cases():
        for n in range(n_max + 1):
            def bivariate(n=n):
                be = seq.bell_euler_poly(n, 1)
                return seq.bivariate_bell(n), (be.subs({"x": seq.X + 1}) + be) / 2
            yield {"n": n, "part": "bivariate"}, bivariate

            def classical(n=n):
                e = seq.euler_poly_order(n, 1)
                return seq.X ** n, (e.subs({"x": seq.X + 1}) + e) / 2
            yield {"n": n, "part": "classical"}, classical

    return run_cases("T4_3", cases())


def _stirling_weight(j: int) -> Poly:
    # sum_k (x)_k S2(j, k): the change of basis from falling factorials
    total = Poly.zero()
    for k in range(j + 1):
        total = total + seq.falling_factorial(k) * seq.stirling2_number(j, k)
    return total


def check_T4_4_corrected(grid: Grid = Grid()) -> IdentityReport:
    """Hybrid polynomial rebuilt from its x=0 family through the
    falling-factorial/Stirling change of basis (the index-corrected form)."""
    def pair(n, a):
        rhs = Poly.zero()
        for j in range(n + 1):
            rhs = rhs + (comb(n, j) * _stirling_weight(j)
                         * seq.special_case(n - j, a, "x_zero"))
        return seq.bell_euler_poly(n, a), rhs
    return run_cases("T4_4_corrected", _grid_cases(grid, pair))


def check_T4_4_literal(grid: Grid = Grid()) -> IdentityReport:
    """Negative control: the uncorrected form whose summand keeps the degree-n
    member independent of the summation index.  Not an identity; the k-sum is
    finite because the Stirling factors vanish for k > j.  Expected to fail
    with a counterexample at n = 1."""
    def pair(n, a):
        base = seq.special_case(n, a, "x_zero")
        rhs = Poly.zero()
        for j in range(n + 1):
            rhs = rhs + comb(n, j) * _stirling_weight(j) * base
        return seq.bell_euler_poly(n, a), rhs
    return run_cases("T4_4_literal", _grid_cases(grid, pair))


def check_T5_1(grid: Grid = Grid()) -> IdentityReport:
    """d/dx lowers the degree: derivative of the n-th member is n times the
    (n-1)-th.  n = 0 checks that the derivative vanishes."""
    def pair(n, a):
        lhs = seq.bell_euler_poly(n, a).derivative("x")
        rhs = n * seq.bell_euler_poly(n - 1, a) if n else Poly.zero()
        return lhs, rhs
    return run_cases("T5_1", _grid_cases(grid, pair))


def check_T5_2(grid: Grid = Grid()) -> IdentityReport:
    """d/dy acts as -2 times the difference between consecutive orders."""
    def pair(n, a):
        lhs = seq.bell_euler_poly(n, a).derivative("y")
        rhs = -2 * (seq.bell_euler_poly(n, a) - seq.bell_euler_poly(n, a - 1))
        return lhs, rhs
    return run_cases("T5_2", _grid_cases(grid, pair))


CHECKS = {
    "T3_3": check_T3_3,
    "T3_4": check_T3_4,
    "T3_5": check_T3_5,
    "T4_1": check_T4_1,
    "R4_2": check_R4_2,
    "T4_2": check_T4_2,
    "T4_3": check_T4_3,
    "T4_4_corrected": check_T4_4_corrected,
    "T5_1": check_T5_1,
    "T5_2": check_T5_2,
    "T4_4_literal": check_T4_4_literal,
}

# the negative control only runs when asked for by name
NEGATIVE_CONTROLS = frozenset({"T4_4_literal"})
