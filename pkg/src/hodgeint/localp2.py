"""Partition function and free energy of local P^2, degree by degree.

``Z_d`` sums ``(-1)**d x**(kappa_1+kappa_2+kappa_3) W_{12} W_{23} W_{31}``
over triples of partitions with total size ``d``; each triple is summed as a
rational function in ``x`` and expanded once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from hodgeint.algebra.qrat import QRat, qrat_to_series
from hodgeint.algebra.series import LambdaSeries
from hodgeint.errors import BadConstantTerm, HodgeError, OutOfRange
from hodgeint.partitions import enumerate_partitions, kappa_mu
from hodgeint.qschur import w_two
from hodgeint.reports import Report, check_series


@dataclass(frozen=True)
class LocalCYSeries:
    """``per_degree[d]`` is the coefficient of ``exp(-d t)``."""

    max_degree: int
    per_degree: tuple

    def __getitem__(self, d: int) -> LambdaSeries:
        return self.per_degree[d]

    @property
    def order(self) -> int:
        return min(s.order for s in self.per_degree)


def _triples(d: int):
    for a in range(d + 1):
        for b in range(d - a + 1):
            for m1 in enumerate_partitions(a):
                for m2 in enumerate_partitions(b):
                    for m3 in enumerate_partitions(d - a - b):
                        yield m1, m2, m3


def z_degree(d: int) -> QRat:
    """Exact degree-``d`` coefficient of the partition function as a function of ``x``."""
    total = QRat.const(0)
    for m1, m2, m3 in _triples(d):
        term = w_two(m1, m2) * w_two(m2, m3) * w_two(m3, m1)
        total = total + term * QRat.xpow(kappa_mu(m1) + kappa_mu(m2) + kappa_mu(m3))
    return -total if d % 2 else total


def z_local_p2(max_degree: int, order: int) -> LocalCYSeries:
    """Degree-graded partition function through ``lambda**order``."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    per = [LambdaSeries.const(1, order)]
    for d in range(1, max_degree + 1):
        per.append(qrat_to_series(z_degree(d), order))
    return LocalCYSeries(max_degree, tuple(per))


def free_energy(z: LocalCYSeries) -> LocalCYSeries:
    """Degree-graded logarithm ``F_d = Z_d - (1/d) sum_{k<d} k F_k Z_{d-k}``.

    Products lose precision when ``Z`` has poles in lambda; the result orders
    reflect that.
    """
    z0 = z[0]
    if z0.items() != [(0, z0.coeff(0))] or z0.coeff(0) != 1:
        raise BadConstantTerm("degree-0 entry of the partition function must be 1")
    f = [LambdaSeries.zero(z0.order)]
    for d in range(1, z.max_degree + 1):
        acc = z[d]
        for k in range(1, d):
            acc = acc - (f[k] * z[d - k]).scale(Fraction(k, d))
        f.append(acc)
    return LocalCYSeries(z.max_degree, tuple(f))


def local_p2_free_energy(max_degree: int, order: int) -> LocalCYSeries:
    """Free energy through ``lambda**order`` in every degree, with enough working precision."""
    working = order + 2 * max_degree
    while True:
        f = free_energy(z_local_p2(max_degree, working))
        if all(s.order >= order for s in f.per_degree):
            return LocalCYSeries(max_degree, tuple(s.truncate(order) for s in f.per_degree))
        working += 2


def gw_invariants(f: LocalCYSeries, g: int, d: int) -> Fraction:
    """``N_{g,d}``: the real coefficient of ``lambda**(2g-2)`` in ``F_d``."""
    if d < 1 or d > f.max_degree or g < 0:
        raise OutOfRange(f"(g, d) = ({g}, {d}) outside 0 <= g, 1 <= d <= {f.max_degree}")
    series = f[d]
    k = 2 * g - 2
    if k > series.order:
        raise OutOfRange(f"lambda^{k} beyond computed order {series.order}")
    c = series.coeff(k)
    if not c.is_const() and c:
        raise HodgeError(f"coefficient of lambda^{k} depends on tau")
    value = c.constant()
    if value.im:
        raise HodgeError(f"N_({g},{d}) = {value} is not real")
    return value.re


def verify_local_p2(max_degree: int, order: int) -> Report:
    """Closed form of ``F_1``, its first invariants, and the shape of every ``F_d``."""
    from hodgeint.onepartition import sine_ratio

    report = Report("local-p2", params={"max_degree": max_degree, "order": order})
    f = local_p2_free_energy(max_degree, order)
    # 3/(4 sin^2(lambda/2)) = 3 lambda^-2 ((lambda/2)/sin(lambda/2))^2
    closed = (sine_ratio(1, order + 2) ** 2).scale(3).shift(-2).truncate(order)
    check_series(report, "F_1 closed form", closed, f[1], order)
    for g, expected in ((0, Fraction(3)), (1, Fraction(1, 4)), (2, Fraction(1, 80))):
        if 2 * g - 2 <= order:
            report.checked += 1
            actual = gw_invariants(f, g, 1)
            if actual != expected:
                report.fail(key=f"N_{g},1", expected=str(expected), actual=str(actual))
    for d in range(1, max_degree + 1):
        for k, c in f[d].items():
            report.checked += 1
            if k < -2:
                report.fail(key=d, lambda_exp=k, reason="valuation below -2")
            if k % 2:
                report.fail(key=d, lambda_exp=k, reason="odd exponent")
            if not c.is_const() or not c.is_real():
                report.fail(key=d, lambda_exp=k, reason="coefficient not a real rational")
    return report


__all__ = ["LocalCYSeries", "free_energy", "gw_invariants", "local_p2_free_energy", "verify_local_p2", "z_degree", "z_local_p2"]
