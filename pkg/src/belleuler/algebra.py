"""Exact coefficient algebra: sparse polynomials and truncated power series.

Everything is computed over arbitrary-precision rationals
(:class:`fractions.Fraction`); there is no floating point anywhere.  Two value
types do all the work:

* :class:`Poly` -- a sparse polynomial in a fixed tuple of named variables
  (the default ring is ``("x", "y")``), stored as a canonical exponent-map with
  no explicit zero coefficients.  Equality is coefficient-map equality, which
  is the library's notion of "identity holds".

* :class:`Series` -- a formal power series in ``t``, truncated at a fixed
  order ``N``, over either plain Fractions or a polynomial ring.  Position
  ``k`` holds the raw coefficient of ``t^k`` (never divided by ``k!``);
  ``n! * s.coefficient(n)`` is the single conversion point for the
  exponential-generating-function convention.

All binary series operations insist on equal truncation orders; use
:meth:`Series.truncate` to align operands explicitly.  Asking for a
coefficient beyond the truncation order raises instead of silently
returning zero.
"""

from __future__ import annotations

import re
from fractions import Fraction

_FRACTION_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction; reject anything else."""
    text = text.strip()
    if not _FRACTION_RE.match(text):
        raise ValueError(f"not an exact rational: {text!r} (expected 'p' or 'p/q')")
    return Fraction(text)


def format_fraction(value: Fraction) -> str:
    """Canonical "p/q" form (sign on p, q > 0) or plain "p" when q = 1."""
    return str(value)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise ValueError(f"exact scalar required, got {type(value).__name__}")


class Poly:
    """Sparse polynomial with Fraction coefficients in named variables.

    Instances are immutable values: every operation returns a new Poly and
    never stores a zero coefficient.

    >>> x, y = Poly.gens("x", "y")
    >>> (x + y) * (x - y) == x**2 - y**2
    True
    >>> (x**2 * y).derivative("x").pretty()
    '2*x*y'
    """

    __slots__ = ("names", "terms")

    def __init__(self, names, terms):
        self.names = tuple(names)
        clean = {}
        for exps, coeff in terms.items():
            coeff = _as_fraction(coeff)
            if coeff:
                exps = tuple(exps)
                if len(exps) != len(self.names):
                    raise ValueError("exponent tuple does not match variables")
                clean[exps] = coeff
        self.terms = clean

    # -- construction -----------------------------------------------------

    @classmethod
    def constant(cls, value, names=("x", "y")) -> "Poly":
        value = _as_fraction(value)
        zero = (0,) * len(names)
        return cls(names, {zero: value} if value else {})

    @classmethod
    def zero(cls, names=("x", "y")) -> "Poly":
        return cls(names, {})

    @classmethod
    def gen(cls, name, names=("x", "y")) -> "Poly":
        exps = tuple(1 if n == name else 0 for n in names)
        if sum(exps) != 1:
            raise ValueError(f"{name!r} is not one of {names}")
        return cls(names, {exps: Fraction(1)})

    @classmethod
    def gens(cls, *names) -> "tuple[Poly, ...]":
        return tuple(cls.gen(n, names) for n in names)

    # -- ring structure ---------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.names != self.names:
                raise ValueError(f"variable mismatch: {self.names} vs {other.names}")
            return other
        return Poly.constant(other, self.names)

    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return Poly(self.names, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return Poly(self.names, terms)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = _as_fraction(scalar)
        return Poly(self.names, {e: c / scalar for e, c in self.terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Poly.constant(1, self.names)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other, self.names)
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.pretty()!r})"

    # -- structure queries ------------------------------------------------

    def degree(self, var=None) -> int:
        """Largest exponent of ``var`` (total degree if None); -1 for the zero poly."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.names.index(var)
        return max(e[i] for e in self.terms)

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def coefficient_in(self, var, k: int) -> "Poly":
        """Coefficient of ``var**k`` as a polynomial in the remaining variables."""
        i = self.names.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == k:
                key = e[:i] + (0,) + e[i + 1:]
                terms[key] = c
        return Poly(self.names, terms)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self.pretty()}")
        return self.coefficient((0,) * len(self.names))

    # -- calculus ---------------------------------------------------------

    def derivative(self, var) -> "Poly":
        i = self.names.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                key = e[:i] + (e[i] - 1,) + e[i + 1:]
                terms[key] = terms.get(key, Fraction(0)) + c * e[i]
        return Poly(self.names, terms)

    def antiderivative(self, var) -> "Poly":
        """Formal antiderivative with zero constant term in ``var``."""
        i = self.names.index(var)
        terms = {}
        for e, c in self.terms.items():
            key = e[:i] + (e[i] + 1,) + e[i + 1:]
            terms[key] = c / (e[i] + 1)
        return Poly(self.names, terms)

    # -- substitution -----------------------------------------------------

    def subs(self, mapping) -> "Poly":
        """Substitute polynomials or scalars for variables.

        ``mapping`` sends variable names to replacement values; replacements
        that are Polys fix the target ring (they must all share one variable
        tuple).  Unmapped variables must exist in the target ring and are
        carried through unchanged.
        """
        target = None
        for value in mapping.values():
            if isinstance(value, Poly):
                if target is not None and value.names != target:
                    raise ValueError("substitution images live in different rings")
                target = value.names
        if target is None:
            target = self.names

        images = []
        for name in self.names:
            if name in mapping:
                value = mapping[name]
                images.append(value if isinstance(value, Poly)
                              else Poly.constant(value, target))
            else:
                images.append(Poly.gen(name, target))

        # power tables keep repeated exponentiation out of the inner loop
        powers = []
        for i, img in enumerate(images):
            top = self.degree(self.names[i])
            table = [Poly.constant(1, target)]
            for _ in range(max(top, 0)):
                table.append(table[-1] * img)
            powers.append(table)

        result = Poly.zero(target)
        for e, c in self.terms.items():
            term = Poly.constant(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * powers[i][k]
            result = result + term
        return result

    def evaluate(self, assignments) -> Fraction:
        """Evaluate at an exact rational point; every variable must be assigned."""
        point = [_as_fraction(assignments[name]) for name in self.names]
        total = Fraction(0)
        for e, c in self.terms.items():
            value = c
            for v, k in zip(point, e):
                if k:
                    value *= v ** k
            total += value
        return total

    # -- serialization ----------------------------------------------------

    def _json_order(self):
        return sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e)))

    def _pretty_order(self):
        return sorted(self.terms, key=lambda e: (-e[0],) + e[1:] if e else ())

    def _monomial_key(self, exps) -> str:
        parts = [f"{n}^{k}" for n, k in zip(self.names, exps) if k]
        return "*".join(parts) if parts else "1"

    def to_json_map(self) -> "dict[str, str]":
        """Ordered monomial-key map, e.g. {"x^2": "1", "x^1*y^1": "2"}."""
        return {self._monomial_key(e): format_fraction(self.terms[e])
                for e in self._json_order()}

    def pretty(self) -> str:
        """Human-readable form: "x^2 - x", "1/2 - y", "0" for the zero poly."""
        if not self.terms:
            return "0"
        chunks = []
        for e in self._pretty_order():
            coeff = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}"
                            for n, k in zip(self.names, e) if k)
            if not mono:
                body = format_fraction(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{format_fraction(abs(coeff))}*{mono}"
            chunks.append(("-" if coeff < 0 else "+", body))
        sign, body = chunks[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text


class CoefficientRing:
    """Descriptor for a series coefficient ring: Fractions, or Polys in fixed vars."""

    __slots__ = ("names",)

    def __init__(self, names=None):
        self.names = tuple(names) if names is not None else None

    @property
    def zero(self):
        return Fraction(0) if self.names is None else Poly.zero(self.names)

    @property
    def one(self):
        return Fraction(1) if self.names is None else Poly.constant(1, self.names)

    def coerce(self, value):
        if isinstance(value, float):
            raise ValueError("floats are not exact; use Fraction")
        if self.names is None:
            if isinstance(value, Poly):
                raise ValueError("polynomial coefficient in a rational series")
            return _as_fraction(value)
        if isinstance(value, Poly):
            if value.names != self.names:
                raise ValueError(f"variable mismatch: {value.names} vs {self.names}")
            return value
        return Poly.constant(value, self.names)

    def gen(self, name) -> Poly:
        return Poly.gen(name, self.names)

    def __eq__(self, other):
        return isinstance(other, CoefficientRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "QQ" if self.names is None else f"CoefficientRing({self.names})"


QQ = CoefficientRing()
XY = CoefficientRing(("x", "y"))


def _invert_coefficient(value):
    if isinstance(value, Fraction):
        if not value:
            raise ValueError("constant term is zero; series not invertible")
        return 1 / value
    if isinstance(value, Poly):
        if not value.is_constant() or not value:
            raise ValueError("constant term is not an invertible polynomial "
                             f"(got {value.pretty()})")
        return Poly.constant(1 / value.constant_value(), value.names)
    raise TypeError(type(value))


class Series:
    """Formal power series in t over an exact ring, truncated at fixed order.

    ``coeffs[k]`` is the raw coefficient of ``t^k``.  Binary operations
    require equal truncation orders.

    >>> t = Series.t(QQ, 4)
    >>> e = t.exp()
    >>> e.coefficient(3)
    Fraction(1, 6)
    >>> (e * e).coefficient(3)   # e^{2t}
    Fraction(4, 3)
    >>> e.log() == t
    True
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CoefficientRing, coeffs):
        if not coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")
        self.ring = ring
        self.coeffs = [ring.coerce(c) for c in coeffs]

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, ring, order) -> "Series":
        return cls(ring, [ring.zero] * (order + 1))

    @classmethod
    def one(cls, ring, order) -> "Series":
        return cls(ring, [ring.one] + [ring.zero] * order)

    @classmethod
    def t(cls, ring, order) -> "Series":
        if order < 1:
            raise ValueError("order must be at least 1 to represent t")
        return cls(ring, [ring.zero, ring.one] + [ring.zero] * (order - 1))

    @classmethod
    def constant(cls, value, ring, order) -> "Series":
        return cls(ring, [value] + [ring.zero] * order)

    @classmethod
    def exp_t(cls, ring, order) -> "Series":
        """The series of e^t: coefficient 1/k! at t^k."""
        coeffs, fact = [], 1
        for k in range(order + 1):
            fact = fact * k if k else 1
            coeffs.append(Fraction(1, fact))
        return cls(ring, coeffs)

    # -- basic queries ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        """Coefficient of t^k.  Out-of-range k is an error, never a silent zero."""
        if not 0 <= k <= self.order:
            raise ValueError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def valuation(self):
        """Index of the lowest nonzero coefficient; None if zero up to order."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_invertible(self) -> bool:
        return self.valuation() == 0

    def is_delta(self) -> bool:
        return self.valuation() == 1

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend truncation order {self.order} to {order}")
        return Series(self.ring, self.coeffs[: order + 1])

    # -- ring operations --------------------------------------------------

    def _align(self, other) -> "Series":
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.ring != self.ring:
            raise ValueError("series live over different coefficient rings")
        if other.order != self.order:
            raise ValueError(
                f"truncation orders differ ({self.order} vs {other.order}); "
                "truncate explicitly first")
        return other

    def __add__(self, other):
        if isinstance(other, Series):
            other = self._align(other)
            return Series(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + self.ring.coerce(other)
        return Series(self.ring, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, Series):
            return self + (-self._align(other))
        return self + (-self.ring.coerce(other) if isinstance(other, Poly) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            other = self._align(other)
            n = self.order
            out = [self.ring.zero] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
            return Series(self.ring, out)
        scalar = self.ring.coerce(other)
        return Series(self.ring, [c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / _as_fraction(scalar))

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.ring == other.ring and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring, tuple(self.coeffs)))

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:5])
        tail = ", ..." if self.order > 4 else ""
        return f"Series[{self.order}]({shown}{tail})"

    # -- transcendental operations ----------------------------------------

    def exp(self) -> "Series":
        """exp of a series with zero constant term."""
        if self.coeffs[0]:
            raise ValueError("exp needs a zero constant term")
        n = self.order
        out = [self.ring.one] + [self.ring.zero] * n
        for m in range(1, n + 1):
            acc = self.ring.zero
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    acc = acc + k * self.coeffs[k] * out[m - k]
            out[m] = acc / m
        return Series(self.ring, out)

    def log(self) -> "Series":
        """log of a series with constant term one."""
        if self.coeffs[0] != self.ring.one:
            raise ValueError("log needs constant term 1")
        n = self.order
        out = [self.ring.zero] * (n + 1)
        for m in range(1, n + 1):
            acc = self.ring.zero
            for k in range(1, m):
                if out[k] and self.coeffs[m - k]:
                    acc = acc + k * out[k] * self.coeffs[m - k]
            out[m] = self.coeffs[m] - acc / m
        return Series(self.ring, out)

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires an invertible constant term."""
        inv0 = _invert_coefficient(self.coeffs[0])
        n = self.order
        out = [inv0] + [self.ring.zero] * n
        for m in range(1, n + 1):
            acc = self.ring.zero
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * out[m - k]
            out[m] = -(inv0 * acc)
        return Series(self.ring, out)

    def pow(self, alpha) -> "Series":
        """f**alpha for integer alpha, or exact rational alpha via exp(alpha*log f)."""
        if isinstance(alpha, Fraction) and alpha.denominator == 1:
            alpha = int(alpha)
        if isinstance(alpha, int):
            base = self.inverse() if alpha < 0 else self
            result = Series.one(self.ring, self.order)
            k = abs(alpha)
            while k:
                if k & 1:
                    result = result * base
                k >>= 1
                if k:
                    base = base * base
            return result
        if isinstance(alpha, Fraction):
            if self.coeffs[0] != self.ring.one:
                raise ValueError("rational powers need constant term 1")
            return (self.log() * alpha).exp()
        raise ValueError(f"exponent must be an int or Fraction, got {type(alpha).__name__}")

    __pow__ = pow

    def compose(self, inner: "Series") -> "Series":
        """Substitute a delta series (valuation >= 1) for t."""
        inner = self._align(inner)
        if inner.coeffs[0]:
            raise ValueError("composition needs inner constant term 0")
        result = Series.constant(self.coeffs[self.order], self.ring, self.order)
        for k in range(self.order - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def shift(self, k: int) -> "Series":
        """Multiply by t^k (k > 0, top coefficients fall off) or divide by t^|k|.

        Division requires the low coefficients to vanish and lowers the
        truncation order, so it stays exact at every order.
        """
        if k >= 0:
            return Series(self.ring, [self.ring.zero] * k
                          + self.coeffs[: self.order + 1 - k])
        k = -k
        if k > self.order:
            raise ValueError("shift below t^0")
        if any(self.coeffs[i] for i in range(k)):
            raise ValueError(f"cannot divide by t^{k}: low coefficients nonzero")
        return Series(self.ring, self.coeffs[k:])
