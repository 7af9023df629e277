"""Exact complex numbers ``a + b*i`` with rational ``a`` and ``b``."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class GaussianRational:
    """Immutable Gaussian rational.

    Mixed arithmetic with ``int`` and ``Fraction`` is supported on both
    sides. Equality with plain rationals holds when the imaginary part is 0.

    >>> I * I
    GaussianRational(-1, 0)
    >>> GaussianRational(1, 2) / GaussianRational(0, 1)
    GaussianRational(2, -1)
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {value!r} to GaussianRational")

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Rational)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                return GaussianRational(a * c, a * d)
            if not d:
                return GaussianRational(a * c, b * c)
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return GaussianRational(other) * self.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)

_I_POWERS = (ONE, I, GaussianRational(-1, 0), GaussianRational(0, -1))


def i_power(n: int) -> GaussianRational:
    """Return ``i**n`` for any integer ``n``."""
    return _I_POWERS[n % 4]
