"""Laurent polynomials in a formal variable tau over the Gaussian rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from hodgeint.algebra.gaussian import GaussianRational, ZERO, ONE


def _gauss(value) -> GaussianRational:
    if type(value) is GaussianRational:
        return value
    return GaussianRational.coerce(value)


class TauPoly:
    """Immutable sparse Laurent polynomial ``sum c_k tau^k``.

    Zero coefficients are never stored, so two polynomials are equal iff their
    term dictionaries are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                c = _gauss(c)
                if c:
                    prev = clean.get(k)
                    if prev is None:
                        clean[k] = c
                    else:
                        s = prev + c
                        if s:
                            clean[k] = s
                        else:
                            del clean[k]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> TauPoly:
        # terms already free of zeros
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> TauPoly:
        c = _gauss(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, c, k: int) -> TauPoly:
        c = _gauss(c)
        return cls._raw({k: c} if c else {})

    @classmethod
    def coerce(cls, value) -> TauPoly:
        if isinstance(value, TauPoly):
            return value
        return cls.const(value)

    # ------------------------------------------------------------------ access
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms sorted by exponent."""
        return sorted(self._terms.items())

    def coeff(self, k: int) -> GaussianRational:
        return self._terms.get(k, ZERO)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of zero TauPoly")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of zero TauPoly")
        return min(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_const(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant(self) -> GaussianRational:
        return self._terms.get(0, ZERO)

    # -------------------------------------------------------------- comparison
    def __eq__(self, other):
        if isinstance(other, TauPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational, GaussianRational)):
            return self._terms == TauPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"TauPoly({dict(self.items())!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*t")
            else:
                parts.append(f"({c})*t^{k}")
        return " + ".join(parts)

    # -------------------------------------------------------------- arithmetic
    def __neg__(self):
        return TauPoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, TauPoly):
            if isinstance(other, (int, Rational, GaussianRational)):
                other = TauPoly.const(other)
            else:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                s = prev + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return TauPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, TauPoly):
            if isinstance(other, (int, Rational, GaussianRational)):
                other = TauPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TauPoly):
            a, b = self._terms, other._terms
            if not a or not b:
                return TauPoly._raw({})
            if len(b) == 1:
                (kb, cb), = b.items()
                return TauPoly._raw({ka + kb: ca * cb for ka, ca in a.items()})
            if len(a) == 1:
                (ka, ca), = a.items()
                return TauPoly._raw({ka + kb: ca * cb for kb, cb in b.items()})
            out = {}
            for ka, ca in a.items():
                for kb, cb in b.items():
                    k = ka + kb
                    prev = out.get(k)
                    out[k] = ca * cb if prev is None else prev + ca * cb
            return TauPoly._raw({k: c for k, c in out.items() if c})
        if isinstance(other, (int, Rational, GaussianRational)):
            if not other:
                return TauPoly._raw({})
            return TauPoly._raw({k: c * other for k, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a scalar or by a monomial only."""
        if isinstance(other, (int, Rational, GaussianRational)):
            inv = ONE / _gauss(other)
            return TauPoly._raw({k: c * inv for k, c in self._terms.items()})
        if isinstance(other, TauPoly):
            if not other.is_monomial():
                raise ZeroDivisionError("TauPoly division by a non-monomial")
            return self * other.monomial_inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.monomial_inverse() ** (-n)
        result = TauPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monomial_inverse(self) -> TauPoly:
        if not self.is_monomial():
            raise ZeroDivisionError("only monomials are units in the Laurent ring")
        (k, c), = self._terms.items()
        return TauPoly._raw({-k: ONE / c})

    def shift(self, n: int) -> TauPoly:
        """Multiply by ``tau**n``."""
        if not n:
            return self
        return TauPoly._raw({k + n: c for k, c in self._terms.items()})

    def derivative(self) -> TauPoly:
        return TauPoly._raw({k - 1: c * k for k, c in self._terms.items() if k})

    def invert_variable(self) -> TauPoly:
        """Substitute ``tau -> 1/tau``."""
        return TauPoly._raw({-k: c for k, c in self._terms.items()})

    def conjugate(self) -> TauPoly:
        """Conjugate coefficients (tau treated as real)."""
        return TauPoly._raw({k: c.conjugate() for k, c in self._terms.items()})

    def evaluate(self, tau) -> GaussianRational:
        tau = _gauss(tau)
        if not self._terms:
            return ZERO
        if not tau:
            if self.valuation() < 0:
                raise ZeroDivisionError("evaluating a Laurent polynomial with poles at 0")
            return self.constant()
        total = ZERO
        for k, c in self._terms.items():
            total = total + c * tau ** k
        return total

    def substitute(self, tau) -> TauPoly:
        return TauPoly.const(self.evaluate(tau))

    def divmod(self, divisor: TauPoly):
        """Euclidean division of Laurent polynomials.

        Both operands are shifted to ordinary polynomials, divided, and the
        quotient is shifted back. The remainder is returned on the dividend's
        scale, so ``self == q * divisor + r`` always holds.
        """
        if not divisor:
            raise ZeroDivisionError("TauPoly division by zero")
        if not self:
            return TauPoly._raw({}), TauPoly._raw({})
        s, t = self.valuation(), divisor.valuation()
        num = {k - s: c for k, c in self._terms.items()}
        den = {k - t: c for k, c in divisor._terms.items()}
        dd = max(den)
        lead_inv = ONE / den[dd]
        quot = {}
        while num and max(num) >= dd:
            top = max(num)
            factor = num[top] * lead_inv
            quot[top - dd] = factor
            for k, c in den.items():
                key = k + top - dd
                v = num.get(key, ZERO) - factor * c
                if v:
                    num[key] = v
                else:
                    num.pop(key, None)
        q = TauPoly._raw(quot).shift(s - t)
        r = TauPoly._raw(num).shift(s)
        return q, r

    def exact_div(self, divisor: TauPoly) -> TauPoly:
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def real_part(self) -> TauPoly:
        return TauPoly({k: GaussianRational(c.re) for k, c in self._terms.items()})

    def imag_part(self) -> TauPoly:
        return TauPoly({k: GaussianRational(c.im) for k, c in self._terms.items()})

    def is_real(self) -> bool:
        return all(not c.im for c in self._terms.values())


TAU = TauPoly.monomial(1, 1)


def tau_poly(*coeffs, start: int = 0) -> TauPoly:
    """Build ``coeffs[0]*tau^start + coeffs[1]*tau^(start+1) + ...``."""
    return TauPoly({start + k: c for k, c in enumerate(coeffs)})


def as_fraction(c: GaussianRational) -> Fraction:
    if c.im:
        raise ValueError(f"{c} is not real")
    return c.re
