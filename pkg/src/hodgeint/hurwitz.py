"""Hurwitz numbers: character sums, permutation counts, and the Phi kernel.

Normalisation: ``H^bullet_{chi,nu,mu} = r! [lambda^r] Phi_{nu,mu}`` with
``r = -chi + l(nu) + l(mu)``. Expanding ``e^{kappa lambda / 2}`` and using the
central character of the transposition class shows this equals

    #{(alpha, t_1..t_r) : alpha in C_nu, t_i transpositions, alpha t_1...t_r in C_mu} / d!

which is what :func:`brute_force_double` counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from hodgeint import kernels
from hodgeint._jit import apply_thread_cap
from hodgeint.algebra.series import LambdaSeries, exp_linear
from hodgeint.characters import character_table
from hodgeint.errors import NegativeR, SizeMismatch, TooLarge
from hodgeint.genfun import PartitionMap, connect
from hodgeint.partitions import Partition, enumerate_partitions, kappa_mu, z_mu
from hodgeint.reports import Report

DEFAULT_MAX_DEGREE = 5
DEFAULT_MAX_R = 5


@dataclass(frozen=True)
class PhiSeries:
    nu: Partition
    mu: Partition
    series: LambdaSeries

    def coeff(self, k: int) -> Fraction:
        c = self.series.coeff(k).constant()
        return c.re


def _phi_series(nu: Partition, mu: Partition, order: int) -> LambdaSeries:
    d = nu.size
    table = character_table(d)
    scale = Fraction(1, z_mu(nu) * z_mu(mu))
    total = LambdaSeries.zero(order)
    for eta in table.partitions:
        weight = table.value(eta, nu) * table.value(eta, mu)
        if weight:
            total = total + exp_linear(Fraction(kappa_mu(eta), 2), order).scale(weight * scale)
    return total


def phi(nu, mu, order: int) -> PhiSeries:
    """``Phi_{nu,mu}(lambda) = sum_eta chi_eta(C_nu) chi_eta(C_mu) / (z_nu z_mu) e^{kappa_eta lambda/2}``."""
    nu, mu = Partition(nu), Partition(mu)
    if nu.size != mu.size:
        raise SizeMismatch(f"|nu| = {nu.size} but |mu| = {mu.size}")
    return PhiSeries(nu, mu, _phi_series(nu, mu, order))


def branch_count(chi: int, nu, mu) -> int:
    """Number of simple branch points ``r = -chi + l(nu) + l(mu)``."""
    return -chi + len(nu) + len(mu)


def double_hurwitz(chi: int, nu, mu) -> Fraction:
    """``H^bullet_{chi,nu,mu}`` from the character formula.

    >>> double_hurwitz(0, (2,), (2,))
    Fraction(1, 2)
    """
    nu, mu = Partition(nu), Partition(mu)
    if nu.size != mu.size:
        raise SizeMismatch(f"|nu| = {nu.size} but |mu| = {mu.size}")
    r = branch_count(chi, nu, mu)
    if r < 0:
        raise NegativeR(f"chi = {chi} gives r = {r} < 0")
    return factorial(r) * phi(nu, mu, r).coeff(r)


def _representative(nu: Partition) -> np.ndarray:
    """A permutation of cycle type ``nu`` on ``range(|nu|)``."""
    perm = np.arange(nu.size, dtype=np.int64)
    start = 0
    for part in nu:
        for i in range(part):
            perm[start + i] = start + (i + 1) % part
        start += part
    return perm


def _padded(mu: Partition, d: int) -> np.ndarray:
    out = np.zeros(d, dtype=np.int64)
    out[: len(mu)] = mu
    return out


def _check_bounds(d: int, r: int, max_degree: int, max_r: int) -> None:
    if d > max_degree or r > max_r:
        raise TooLarge(f"brute force limited to d <= {max_degree}, r <= {max_r}; got d = {d}, r = {r}")


def brute_force_double(chi: int, nu, mu, max_degree: int = DEFAULT_MAX_DEGREE,
                       max_r: int = DEFAULT_MAX_R) -> Fraction:
    """Direct count of transposition factorisations, divided by ``d!``.

    The class ``C_nu`` is handled by one representative times the class size
    ``d!/z_nu``, so the result is ``count(rep) / z_nu``.
    """
    nu, mu = Partition(nu), Partition(mu)
    if nu.size != mu.size:
        raise SizeMismatch(f"|nu| = {nu.size} but |mu| = {mu.size}")
    r = branch_count(chi, nu, mu)
    if r < 0:
        raise NegativeR(f"chi = {chi} gives r = {r} < 0")
    d = nu.size
    _check_bounds(d, r, max_degree, max_r)
    apply_thread_cap()
    count = kernels.count_factorizations(_representative(nu), _padded(mu, d), r, transitive=False)
    return Fraction(count, z_mu(nu))


def _single_family(d_max: int, order: int) -> PartitionMap:
    entries = {}
    for d in range(1, d_max + 1):
        ones = Partition((1,) * d)
        for mu in enumerate_partitions(d):
            entries[mu] = _phi_series(ones, mu, order)
    entries[Partition(())] = LambdaSeries.const(1, order)
    return PartitionMap(entries, d_max)


def connected_single(g: int, mu) -> Fraction:
    """Connected single Hurwitz number ``H_{g,mu}``.

    Obtained as ``r! [lambda^r]`` of the logarithm of ``sum_mu Phi_{(1^d),mu} p_mu``,
    with ``r = 2g - 2 + |mu| + l(mu)``.
    """
    mu = Partition(mu)
    r = 2 * g - 2 + mu.size + len(mu)
    if r < 0:
        raise NegativeR(f"g = {g} gives r = {r} < 0")
    family = connect(_single_family(mu.size, r))
    return factorial(r) * family[mu].coeff(r).constant().re


def brute_force_connected_single(g: int, mu, max_degree: int = DEFAULT_MAX_DEGREE,
                                 max_r: int = DEFAULT_MAX_R) -> Fraction:
    """Transitive factorisations ``t_1...t_r`` of cycle type ``mu``, divided by ``d!``."""
    mu = Partition(mu)
    d = mu.size
    r = 2 * g - 2 + d + len(mu)
    if r < 0:
        raise NegativeR(f"g = {g} gives r = {r} < 0")
    _check_bounds(d, r, max_degree, max_r)
    apply_thread_cap()
    identity = np.arange(d, dtype=np.int64)
    count = kernels.count_factorizations(identity, _padded(mu, d), r, transitive=True)
    return Fraction(count, factorial(d))


def verify_phi_composition(d: int, order: int) -> Report:
    """Semigroup law ``sum_sigma Phi_{nu,sigma}(a) z_sigma Phi_{sigma,mu}(b) = Phi_{nu,mu}(a+b)``.

    Compared coefficientwise in ``a**i b**j``, which on the right is
    ``binom(i+j, i) [lambda^{i+j}] Phi_{nu,mu}``. The initial value
    ``Phi_{nu,mu}(0) = delta / z_nu`` is checked alongside.
    """
    report = Report("phi-composition", params={"d": d, "order": order})
    parts = enumerate_partitions(d)
    table = {(a, b): phi(a, b, order) for a in parts for b in parts}
    for nu in parts:
        for mu in parts:
            report.checked += 1
            expected = Fraction(1, z_mu(nu)) if nu == mu else Fraction(0)
            if table[nu, mu].coeff(0) != expected:
                report.fail(key=[list(nu), list(mu)], identity="initial value",
                            expected=str(expected), actual=str(table[nu, mu].coeff(0)))
            for i in range(order + 1):
                for j in range(order + 1 - i):
                    lhs = sum((table[nu, s].coeff(i) * z_mu(s) * table[s, mu].coeff(j) for s in parts), Fraction(0))
                    rhs = comb(i + j, i) * table[nu, mu].coeff(i + j)
                    report.checked += 1
                    if lhs != rhs:
                        report.fail(key=[list(nu), list(mu)], a_exp=i, b_exp=j, expected=str(rhs), actual=str(lhs))
    return report


def verify_hurwitz_grid(max_degree: int = 4, max_r: int = 4) -> Report:
    """Character formula against brute force on every ``(nu, mu, r)`` in range."""
    report = Report("hurwitz-grid", params={"max_degree": max_degree, "max_r": max_r})
    for d in range(1, max_degree + 1):
        parts = enumerate_partitions(d)
        for nu in parts:
            for mu in parts:
                for r in range(max_r + 1):
                    chi = len(nu) + len(mu) - r
                    report.checked += 1
                    a = double_hurwitz(chi, nu, mu)
                    b = brute_force_double(chi, nu, mu, max_degree, max_r)
                    if a != b:
                        report.fail(key=[list(nu), list(mu)], r=r, burnside=str(a), brute=str(b))
    return report


__all__ = [
    "PhiSeries", "branch_count", "brute_force_connected_single", "brute_force_double",
    "connected_single", "double_hurwitz", "phi", "verify_hurwitz_grid", "verify_phi_composition",
]
