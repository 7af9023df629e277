"""Rational functions in ``x = q**(1/2)`` and their expansion at ``q = exp(i*lambda)``."""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm
from numbers import Rational

from hodgeint.algebra import upoly
from hodgeint.algebra.gaussian import GaussianRational, i_power
from hodgeint.algebra.series import LambdaSeries, series_mul, series_inverse
from hodgeint.algebra.taupoly import TauPoly


def _integerize(coeffs: dict):
    """Split ``{exp: Fraction}`` into ``(Fraction content, shift, primitive int poly)``."""
    coeffs = {k: Fraction(c) for k, c in coeffs.items() if c}
    if not coeffs:
        return Fraction(0), 0, ()
    lo = min(coeffs)
    hi = max(coeffs)
    den = 1
    for c in coeffs.values():
        den = lcm(den, c.denominator)
    poly = upoly.trim([int(coeffs.get(k, 0) * den) for k in range(lo, hi + 1)])
    prim = upoly.primitive(poly)
    factor = Fraction(poly[-1], prim[-1] * den)
    return factor, lo, prim


class QRat:
    """Immutable rational function ``coef * x**shift * num(x) / den(x)``.

    ``num`` and ``den`` are primitive integer polynomials with positive
    leading coefficient, nonzero constant term and no common factor, so the
    representation is canonical and ``==`` is structural.
    """

    __slots__ = ("coef", "shift", "num", "den", "_hash")

    def __init__(self, numerator=None, denominator=None):
        """Build from ``{exponent: rational}`` dicts for numerator and denominator."""
        if numerator is None:
            numerator = {}
        if denominator is None:
            denominator = {0: 1}
        cn, sn, pn = _integerize(numerator)
        cd, sd, pd = _integerize(denominator)
        if not pd:
            raise ZeroDivisionError("QRat with zero denominator")
        self._set(*QRat._reduce(cn / cd, sn - sd, pn, pd))

    def _set(self, coef, shift, num, den):
        self.coef, self.shift, self.num, self.den = coef, shift, num, den
        self._hash = None

    @staticmethod
    def _reduce(coef, shift, num, den):
        if not coef or not num:
            return Fraction(0), 0, (1,), (1,)
        kn, kd = upoly.low_order(num), upoly.low_order(den)
        num, den = num[kn:], den[kd:]
        shift += kn - kd
        g = upoly.gcd(num, den)
        if len(g) > 1:
            num = upoly.divexact(num, g)
            den = upoly.divexact(den, g)
        pn, pd = upoly.primitive(num), upoly.primitive(den)
        coef = coef * Fraction(num[-1], pn[-1]) / Fraction(den[-1], pd[-1])
        return coef, shift, pn, pd

    @classmethod
    def _make(cls, coef, shift, num, den) -> QRat:
        obj = object.__new__(cls)
        obj._set(*cls._reduce(coef, shift, num, den))
        return obj

    # ----------------------------------------------------------- constructors
    @classmethod
    def const(cls, c) -> QRat:
        return cls._make(Fraction(c), 0, (1,), (1,))

    @classmethod
    def xpow(cls, n: int) -> QRat:
        """``x**n``."""
        return cls._make(Fraction(1), n, (1,), (1,))

    @classmethod
    def quantum(cls, m: int) -> QRat:
        """The quantum integer ``[m] = x**m - x**(-m)``."""
        if m == 0:
            return cls.const(0)
        return cls({m: 1, -m: -1})

    @classmethod
    def coerce(cls, value) -> QRat:
        if isinstance(value, QRat):
            return value
        if isinstance(value, (int, Rational)):
            return cls.const(value)
        raise TypeError(f"cannot coerce {value!r} to QRat")

    # ----------------------------------------------------------------- access
    @property
    def numerator(self) -> dict:
        """Numerator as ``{exponent: Fraction}`` (carries the constant and x-shift)."""
        if not self.coef:
            return {}
        return {k + self.shift: self.coef * c for k, c in enumerate(self.num) if c}

    @property
    def denominator(self) -> dict:
        return {k: Fraction(c) for k, c in enumerate(self.den) if c}

    def is_zero(self) -> bool:
        return not self.coef

    def __bool__(self):
        return bool(self.coef)

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = QRat.const(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return (self.coef == other.coef and self.shift == other.shift
                and self.num == other.num and self.den == other.den)

    def equals_by_cross_multiplication(self, other: QRat) -> bool:
        """Equality check that does not rely on canonical form."""
        lhs = upoly.mul(self.num, other.den)
        rhs = upoly.mul(other.num, self.den)
        # compare coef * x^shift * lhs with other.coef * x^other.shift * rhs
        lo = min(self.shift, other.shift)
        a = {k + self.shift - lo: self.coef * c for k, c in enumerate(lhs) if c} if self.coef else {}
        b = {k + other.shift - lo: other.coef * c for k, c in enumerate(rhs) if c} if other.coef else {}
        return a == b

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.coef, self.shift, self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"QRat({self.numerator!r}, {self.denominator!r})"

    def __str__(self):
        return f"({_laurent_str(self.numerator)})/({_laurent_str(self.denominator)})"

    # ------------------------------------------------------------- arithmetic
    def _with_coef(self, coef) -> QRat:
        if not coef:
            return QRat.const(0)
        obj = object.__new__(QRat)
        obj._set(coef, self.shift, self.num, self.den)
        return obj

    def __neg__(self):
        return self._with_coef(-self.coef)

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = QRat.const(other)
        if not isinstance(other, QRat):
            return NotImplemented
        if not self.coef:
            return other
        if not other.coef:
            return self
        g = upoly.gcd(self.den, other.den)
        d1 = upoly.divexact(self.den, g) if len(g) > 1 else self.den
        d2 = upoly.divexact(other.den, g) if len(g) > 1 else other.den
        den = upoly.mul(d1, other.den)
        lo = min(self.shift, other.shift)
        c1, c2 = self.coef, other.coef
        common = Fraction(1, lcm(c1.denominator, c2.denominator))
        i1 = int(c1 / common)
        i2 = int(c2 / common)
        t1 = upoly.shift(upoly.scale(upoly.mul(self.num, d2), i1), self.shift - lo)
        t2 = upoly.shift(upoly.scale(upoly.mul(other.num, d1), i2), other.shift - lo)
        num = upoly.add(t1, t2)
        if not num:
            return QRat.const(0)
        return QRat._make(common, lo, num, den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            other = QRat.const(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self._with_coef(self.coef * other)
        if not isinstance(other, QRat):
            return NotImplemented
        if not self.coef or not other.coef:
            return QRat.const(0)
        g1 = upoly.gcd(self.num, other.den)
        g2 = upoly.gcd(other.num, self.den)
        n1, d2 = (upoly.divexact(self.num, g1), upoly.divexact(other.den, g1)) if len(g1) > 1 else (self.num, other.den)
        n2, d1 = (upoly.divexact(other.num, g2), upoly.divexact(self.den, g2)) if len(g2) > 1 else (other.num, self.den)
        obj = object.__new__(QRat)
        num, den = upoly.mul(n1, n2), upoly.mul(d1, d2)
        pn, pd = upoly.primitive(num), upoly.primitive(den)
        coef = self.coef * other.coef * Fraction(num[-1], pn[-1]) / Fraction(den[-1], pd[-1])
        obj._set(coef, self.shift + other.shift, pn, pd)
        return obj

    __rmul__ = __mul__

    def inverse(self) -> QRat:
        if not self.coef:
            raise ZeroDivisionError("QRat division by zero")
        return QRat._make(1 / self.coef, -self.shift, self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, QRat):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QRat.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x) -> Fraction:
        """Value at a rational point ``x`` (for sanity checks)."""
        x = Fraction(x)
        num = sum((c * x ** k for k, c in enumerate(self.num)), Fraction(0))
        den = sum((c * x ** k for k, c in enumerate(self.den)), Fraction(0))
        return self.coef * x ** self.shift * num / den

    def x_expansion(self, order: int) -> dict:
        """Laurent expansion around ``x = 0`` as ``{exponent: Fraction}`` through ``x**order``."""
        if not self.coef:
            return {}
        top = order - self.shift
        if top < 0:
            return {}
        d0 = Fraction(self.den[0])
        out = []
        for n in range(top + 1):
            acc = Fraction(self.num[n]) if n < len(self.num) else Fraction(0)
            for j in range(1, min(n, len(self.den) - 1) + 1):
                if self.den[j]:
                    acc -= self.den[j] * out[n - j]
            out.append(acc / d0)
        return {n + self.shift: self.coef * c for n, c in enumerate(out) if c}

    def to_series(self, order: int) -> LambdaSeries:
        return qrat_to_series(self, order)


def _laurent_str(terms: dict) -> str:
    if not terms:
        return "0"
    out = []
    for k in sorted(terms):
        c = terms[k]
        if k == 0:
            out.append(f"{c}")
        else:
            out.append(f"{c}*x^{k}")
    return " + ".join(out)


def _power_sum_series(exponents_coeffs, order: int):
    """Expansion of ``sum c_k exp(i*k*lambda/2)`` as ``{n: GaussianRational}`` for n <= order."""
    out = {}
    for n in range(0, order + 1):
        s = 0
        for k, c in exponents_coeffs:
            s += c * k ** n
        if s:
            val = Fraction(s, 2 ** n * factorial(n))
            out[n] = i_power(n) * val
    return out


def _laurent_valuation(exponents_coeffs) -> int:
    """Order of vanishing at lambda = 0 of ``sum c_k exp(i*k*lambda/2)``."""
    n = 0
    limit = len(exponents_coeffs)
    while n <= limit:
        if sum(c * k ** n for k, c in exponents_coeffs):
            return n
        n += 1
    raise ZeroDivisionError("zero exponential polynomial")


def exp_poly_series(terms: dict, order: int) -> LambdaSeries:
    """Series of ``sum c_k x**k`` at ``x = exp(i*lambda/2)`` (integer c_k)."""
    items = [(k, c) for k, c in terms.items() if c]
    if not items:
        return LambdaSeries.zero(order)
    coeffs = _power_sum_series(items, order)
    return LambdaSeries({n: TauPoly.const(c) for n, c in coeffs.items()}, order=order)


def qrat_to_series(f: QRat, order: int) -> LambdaSeries:
    """Laurent expansion of ``f(exp(i*lambda/2))`` exact through ``lambda**order``."""
    if not f.coef:
        return LambdaSeries.zero(order)
    num_items = [(k + f.shift, c) for k, c in enumerate(f.num) if c]
    den_items = [(k, c) for k, c in enumerate(f.den) if c]
    vn = _laurent_valuation(num_items)
    vd = _laurent_valuation(den_items)
    n_order = order + vd
    d_order = order + 2 * vd - vn
    num = LambdaSeries({n: TauPoly.const(c) for n, c in _power_sum_series(num_items, n_order).items()},
                       order=n_order)
    den = LambdaSeries({n: TauPoly.const(c) for n, c in _power_sum_series(den_items, d_order).items()},
                       order=d_order)
    result = series_mul(num, series_inverse(den))
    return result.scale(GaussianRational(f.coef)).truncate(order)
