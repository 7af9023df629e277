"""Truncated Laurent series in lambda with tau-Laurent-polynomial coefficients.

A :class:`LambdaSeries` stores the coefficients of ``lambda**k`` for
``valuation <= k <= order``; everything above ``order`` is unknown. Binary
operations compute the order up to which the result is still exact, so a
series can never claim more precision than its inputs carried.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from hodgeint.algebra.gaussian import GaussianRational, ONE
from hodgeint.algebra.taupoly import TauPoly
from hodgeint.errors import NonPositiveValuation, NonUnitLeadingCoefficient, OutOfRange

_ZERO_POLY = TauPoly()
_SCALARS = (int, Rational, GaussianRational)


def _poly(value) -> TauPoly:
    if isinstance(value, TauPoly):
        return value
    return TauPoly.const(value)


class LambdaSeries:
    """Immutable truncated Laurent series ``sum_{k=v}^{N} c_k lambda^k + O(lambda^{N+1})``.

    The zero series has ``valuation == 0`` and no stored coefficients, but it
    still remembers its order.
    """

    __slots__ = ("valuation", "coeffs", "order")

    def __init__(self, coeffs, valuation: int = 0, order: int | None = None):
        """``coeffs`` is either a sequence starting at ``valuation`` or a dict ``{exponent: coeff}``."""
        if isinstance(coeffs, dict):
            if order is None:
                raise ValueError("order is required when building from a dict")
            keys = [k for k, c in coeffs.items() if k <= order and c]
            if keys:
                valuation = min(keys)
                seq = [_poly(coeffs.get(k, 0)) for k in range(valuation, order + 1)]
            else:
                valuation, seq = 0, []
        else:
            seq = [_poly(c) for c in coeffs]
            if order is None:
                order = valuation + len(seq) - 1
            seq = seq[: max(0, order - valuation + 1)]
            seq.extend(_ZERO_POLY for _ in range(order - valuation + 1 - len(seq)))
        start = 0
        while start < len(seq) and not seq[start]:
            start += 1
        if start == len(seq):
            self.valuation, self.coeffs = 0, ()
        else:
            self.valuation = valuation + start
            self.coeffs = tuple(seq[start:])
        self.order = order

    @classmethod
    def _raw(cls, valuation: int, coeffs: list, order: int) -> LambdaSeries:
        obj = object.__new__(cls)
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        if start == len(coeffs):
            obj.valuation, obj.coeffs = 0, ()
        else:
            obj.valuation = valuation + start
            obj.coeffs = tuple(coeffs[start:])
        obj.order = order
        return obj

    # ----------------------------------------------------------- constructors
    @classmethod
    def zero(cls, order: int) -> LambdaSeries:
        return cls._raw(0, [], order)

    @classmethod
    def const(cls, value, order: int) -> LambdaSeries:
        return cls({0: _poly(value)}, order=order)

    @classmethod
    def monomial(cls, value, exponent: int, order: int) -> LambdaSeries:
        return cls({exponent: _poly(value)}, order=order)

    # ----------------------------------------------------------------- access
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def effective_valuation(self) -> int:
        """Lowest exponent that can be nonzero; ``order + 1`` for the zero series."""
        return self.valuation if self.coeffs else self.order + 1

    def coeff(self, k: int) -> TauPoly:
        if k > self.order:
            raise OutOfRange(f"lambda^{k} requested but series is known only to lambda^{self.order}")
        if not self.coeffs or k < self.valuation:
            return _ZERO_POLY
        idx = k - self.valuation
        return self.coeffs[idx] if idx < len(self.coeffs) else _ZERO_POLY

    def items(self):
        """Nonzero ``(exponent, TauPoly)`` pairs in increasing exponent."""
        return [(self.valuation + i, c) for i, c in enumerate(self.coeffs) if c]

    def exponents(self):
        return [k for k, _ in self.items()]

    def __repr__(self):
        body = ", ".join(f"{k}: {c}" for k, c in self.items())
        return f"LambdaSeries({{{body}}}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return (self.order == other.order and self.valuation == other.valuation
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.valuation, self.coeffs, self.order))

    def first_difference(self, other: LambdaSeries, order: int | None = None):
        """Smallest exponent where the two series differ, up to their common order.

        Returns ``None`` when they agree on the whole common window.
        """
        top = min(self.order, other.order)
        if order is not None:
            top = min(top, order)
        lows = [s.valuation for s in (self, other) if s.coeffs]
        if not lows:
            return None
        for k in range(min(lows), top + 1):
            if self.coeff(k) != other.coeff(k):
                return k
        return None

    def agrees_with(self, other: LambdaSeries, order: int | None = None) -> bool:
        return self.first_difference(other, order) is None

    def truncate(self, order: int) -> LambdaSeries:
        if order > self.order:
            raise OutOfRange(f"cannot raise order from {self.order} to {order}")
        if not self.coeffs:
            return LambdaSeries.zero(order)
        keep = max(0, order - self.valuation + 1)
        return LambdaSeries._raw(self.valuation, list(self.coeffs[:keep]), order)

    # ------------------------------------------------------------- arithmetic
    def _dense(self, lo: int, hi: int) -> list:
        return [self.coeff(k) if k <= self.order else _ZERO_POLY for k in range(lo, hi + 1)]

    def __neg__(self):
        return LambdaSeries._raw(self.valuation, [-c for c in self.coeffs], self.order)

    def __add__(self, other):
        if isinstance(other, _SCALARS) or isinstance(other, TauPoly):
            other = LambdaSeries.const(other, self.order)
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        order = min(self.order, other.order)
        if not self.coeffs:
            return other.truncate(order)
        if not other.coeffs:
            return self.truncate(order)
        lo = min(self.valuation, other.valuation)
        coeffs = [self.coeff(k) + other.coeff(k) for k in range(lo, order + 1)]
        return LambdaSeries._raw(lo, coeffs, order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _SCALARS) or isinstance(other, TauPoly):
            other = LambdaSeries.const(other, self.order)
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor) -> LambdaSeries:
        """Multiply every coefficient by a scalar or a TauPoly."""
        if isinstance(factor, TauPoly) or factor:
            return LambdaSeries._raw(self.valuation, [c * factor for c in self.coeffs], self.order)
        return LambdaSeries.zero(self.order)

    def __mul__(self, other):
        if isinstance(other, _SCALARS) or isinstance(other, TauPoly):
            return self.scale(other)
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(ONE / GaussianRational.coerce(other))
        if isinstance(other, TauPoly):
            return self.scale(other.monomial_inverse())
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return series_div(self, other)

    def __rtruediv__(self, other):
        if isinstance(other, _SCALARS) or isinstance(other, TauPoly):
            return series_inverse(self).scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return series_inverse(self) ** (-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else series_mul(result, base)
            n >>= 1
            if n:
                base = series_mul(base, base)
        if result is None:
            return LambdaSeries.const(1, self.order - self.effective_valuation)
        return result

    def shift(self, n: int) -> LambdaSeries:
        """Multiply by ``lambda**n``."""
        return LambdaSeries._raw(self.valuation + n, list(self.coeffs), self.order + n)

    def map_coeffs(self, fn) -> LambdaSeries:
        """Apply ``fn`` to every TauPoly coefficient (must be additive to be meaningful)."""
        return LambdaSeries._raw(self.valuation, [fn(c) for c in self.coeffs], self.order)

    def tau_derivative(self) -> LambdaSeries:
        return self.map_coeffs(TauPoly.derivative)

    def at_tau(self, tau) -> LambdaSeries:
        """Substitute a numeric value for tau in every coefficient."""
        return self.map_coeffs(lambda c: c.substitute(tau))

    def invert_tau(self) -> LambdaSeries:
        return self.map_coeffs(TauPoly.invert_variable)

    def is_tau_free(self) -> bool:
        return all(c.is_const() for c in self.coeffs)


def series_mul(a: LambdaSeries, b: LambdaSeries) -> LambdaSeries:
    """Product of two series, exact up to the common reliable order."""
    order = min(a.order + b.effective_valuation, b.order + a.effective_valuation)
    if not a.coeffs or not b.coeffs:
        return LambdaSeries.zero(order)
    v = a.valuation + b.valuation
    na = min(len(a.coeffs), order - v + 1)
    nb = min(len(b.coeffs), order - v + 1)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(order - v + 1):
        total = _ZERO_POLY
        lo = max(0, n - nb + 1)
        hi = min(n, na - 1)
        for i in range(lo, hi + 1):
            x = ac[i]
            if x:
                y = bc[n - i]
                if y:
                    total = total + x * y
        out.append(total)
    return LambdaSeries._raw(v, out, order)


def series_inverse(b: LambdaSeries) -> LambdaSeries:
    """``1/b`` for a series whose leading coefficient is a tau-monomial."""
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero series")
    lead = b.coeffs[0]
    if not lead.is_monomial():
        raise NonUnitLeadingCoefficient(f"leading coefficient {lead} is not a unit")
    rel = b.order - b.valuation
    inv0 = lead.monomial_inverse()
    neg_inv0 = -inv0
    bc = b.coeffs
    c = [inv0]
    for k in range(1, rel + 1):
        total = _ZERO_POLY
        for j in range(1, min(k, len(bc) - 1) + 1):
            if bc[j]:
                total = total + bc[j] * c[k - j]
        c.append(total * neg_inv0 if total else _ZERO_POLY)
    return LambdaSeries._raw(-b.valuation, c, rel - b.valuation)


def series_div(a: LambdaSeries, b: LambdaSeries) -> LambdaSeries:
    """Quotient ``a / b``; ``b`` must have a unit (monomial) leading coefficient."""
    return series_mul(a, series_inverse(b))


def series_exp(a: LambdaSeries) -> LambdaSeries:
    """Exponential of a series with no terms at non-positive lambda-exponents."""
    if a.coeffs and a.valuation <= 0:
        raise NonPositiveValuation(f"exp needs valuation >= 1, got {a.valuation}")
    order = a.order
    if order < 0:
        return LambdaSeries.zero(order)
    ak = [a.coeff(k) for k in range(order + 1)]
    e = [TauPoly.const(1)]
    # n e_n = sum_k k a_k e_{n-k}
    for n in range(1, order + 1):
        total = _ZERO_POLY
        for k in range(1, n + 1):
            if ak[k]:
                total = total + ak[k] * (e[n - k] * k)
        e.append(total * Fraction(1, n) if total else _ZERO_POLY)
    return LambdaSeries._raw(0, e, order)


def series_log(a: LambdaSeries) -> LambdaSeries:
    """Logarithm of a series with constant term 1."""
    if a.coeff(0) != 1 or (a.coeffs and a.valuation < 0):
        raise ValueError("log needs a series of the form 1 + O(lambda)")
    order = a.order
    ak = [a.coeff(k) for k in range(order + 1)]
    lg = [_ZERO_POLY]
    # n a_n = sum_k k l_k a_{n-k}
    for n in range(1, order + 1):
        total = ak[n] * n
        for k in range(1, n):
            if lg[k] and ak[n - k]:
                total = total - lg[k] * ak[n - k] * k
        lg.append(total * Fraction(1, n))
    return LambdaSeries._raw(0, lg, order)


def exp_linear(c, order: int) -> LambdaSeries:
    """``exp(c * lambda)`` for a scalar or TauPoly ``c``."""
    c = _poly(c)
    coeffs = [TauPoly.const(1)]
    term = TauPoly.const(1)
    for k in range(1, order + 1):
        term = term * c * Fraction(1, k)
        coeffs.append(term)
    return LambdaSeries._raw(0, coeffs, order)
