"""Two-partition character side ``R_{mu+,mu-}(lambda; tau)``.

Coefficients are Laurent polynomials in tau: the minus slot contributes
``exp(i kappa lambda / (2 tau))``, so ``lambda**k`` carries tau-exponents down
to ``-k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from hodgeint.algebra.gaussian import GaussianRational, I, i_power
from hodgeint.algebra.qrat import qrat_to_series
from hodgeint.algebra.series import LambdaSeries, exp_linear
from hodgeint.algebra.taupoly import TAU, TauPoly
from hodgeint.characters import character_table
from hodgeint.errors import BothEmpty, InsufficientOrder, ZeroTau0
from hodgeint.genfun import PairMap, connect
from hodgeint.onepartition import b_g, phi_at_i_lambda_tau, r_bullet
from hodgeint.partitions import Partition, enumerate_partitions, kappa_mu, partitions_up_to, sub_multisets, z_mu
from hodgeint.qschur import w_two
from hodgeint.reports import Report, check_series

TAU_INV = TauPoly.monomial(1, -1)


@lru_cache(maxsize=None)
def _w2_series(nu_plus: Partition, nu_minus: Partition, order: int) -> LambdaSeries:
    return qrat_to_series(w_two(nu_plus, nu_minus), order)


@lru_cache(maxsize=None)
def r2_bullet(mu_plus, mu_minus, order: int) -> LambdaSeries:
    """Disconnected pair series through ``lambda**order``."""
    mu_plus, mu_minus = Partition(mu_plus), Partition(mu_minus)
    total_size = mu_plus.size + mu_minus.size
    if not total_size:
        return LambdaSeries.const(1, order)
    tp, tm = character_table(mu_plus.size), character_table(mu_minus.size)
    exp_order = order + total_size
    scale = Fraction(1, z_mu(mu_plus) * z_mu(mu_minus))
    total = LambdaSeries.zero(order)
    for nu_p in tp.partitions:
        cp = tp.value(nu_p, mu_plus)
        if not cp:
            continue
        for nu_m in tm.partitions:
            cm = tm.value(nu_m, mu_minus)
            if not cm:
                continue
            rate = (TAU * kappa_mu(nu_p) + TAU_INV * kappa_mu(nu_m)) * (I * Fraction(1, 2))
            e = exp_linear(rate, exp_order)
            total = total + (e * _w2_series(nu_p, nu_m, order)).scale(cp * cm * scale)
    return total.truncate(order)


def _pair_keys(mu_plus: Partition, mu_minus: Partition) -> set:
    return {(a, b) for a, _ in sub_multisets(mu_plus) for b, _ in sub_multisets(mu_minus)}


def _connect_pairs(keys: set, order: int) -> PairMap:
    depth = max((len(a) + len(b) for a, b in keys), default=0)
    bound = max((a.size + b.size for a, b in keys), default=0)
    working = order + depth
    while True:
        entries = {(a, b): r2_bullet(a, b, working) for a, b in keys if a or b}
        entries[(Partition(()), Partition(()))] = LambdaSeries.const(1, working)
        conn = connect(PairMap(entries, bound))
        if all(v.order >= order for v in conn.entries.values()):
            return PairMap({k: v.truncate(order) for k, v in conn.items()}, bound)
        working += 1
        if working > order + 4 * depth + 8:
            raise InsufficientOrder(f"could not reach lambda order {order}")


@lru_cache(maxsize=None)
def r2_connected(mu_plus, mu_minus, order: int) -> LambdaSeries:
    """Connected pair series: the ``(mu+, mu-)`` entry of the pair logarithm."""
    mu_plus, mu_minus = Partition(mu_plus), Partition(mu_minus)
    if not mu_plus and not mu_minus:
        raise BothEmpty("the connected pair series needs a nonempty slot")
    return _connect_pairs(_pair_keys(mu_plus, mu_minus), order)[(mu_plus, mu_minus)]


def pair_family(max_size: int, order: int) -> PairMap:
    """Connected pair series for all ``1 <= |mu+| + |mu-| <= max_size``."""
    keys = set()
    for total in range(max_size + 1):
        for a in range(total + 1):
            for p in enumerate_partitions(a):
                for m in enumerate_partitions(total - a):
                    keys.add((p, m))
    return _connect_pairs(keys, order)


@dataclass(frozen=True)
class TwoPartitionSeries:
    mu_plus: Partition
    mu_minus: Partition
    series: LambdaSeries
    connected: bool


def two_partition_series(mu_plus, mu_minus, order: int, connected: bool = True) -> TwoPartitionSeries:
    fn = r2_connected if connected else r2_bullet
    return TwoPartitionSeries(Partition(mu_plus), Partition(mu_minus), fn(mu_plus, mu_minus, order), connected)


# ------------------------------------------------------------------- genus 0
def two_prefactor(mu_plus, mu_minus) -> TauPoly:
    """Tau-dependent prefactor of the pair Hodge integral (Laurent in tau)."""
    mu_plus, mu_minus = Partition(mu_plus), Partition(mu_minus)
    n = len(mu_plus) + len(mu_minus)
    value = TauPoly.const(-i_power(n) * Fraction(1, mu_plus.aut_order() * mu_minus.aut_order()))
    value = value * (TAU * (TAU + 1)) ** (n - 1)
    for part in mu_plus:
        for a in range(1, part):
            value = value * (TAU * part + a)
        value = value * Fraction(1, factorial(part - 1))
    for part in mu_minus:
        for a in range(1, part):
            value = value * (TAU_INV * part + a)
        value = value * Fraction(1, factorial(part - 1))
    return value


def g0_two_oracle(mu_plus, mu_minus) -> TauPoly:
    """Genus-0 pair value.

    Each minus slot contributes ``1/(tau(tau - m psi)) = tau**-2 / (1 - (m/tau) psi)``,
    so the integral is ``tau**(-2 l-) (|mu+| + |mu-|/tau)**(n-3)``. For ``n < 3``
    the negative power divides the prefactor exactly.

    >>> str(g0_two_oracle((1,), (1,)))
    '(1)'
    """
    mu_plus, mu_minus = Partition(mu_plus), Partition(mu_minus)
    if not mu_plus and not mu_minus:
        raise BothEmpty("the genus-0 pair value needs a nonempty slot")
    n = len(mu_plus) + len(mu_minus)
    weight_sum = TauPoly.const(mu_plus.size) + TAU_INV * mu_minus.size
    value = two_prefactor(mu_plus, mu_minus) * TauPoly.monomial(1, -2 * len(mu_minus))
    if n >= 3:
        return value * weight_sum ** (n - 3)
    return value.exact_div(weight_sum ** (3 - n))


# -------------------------------------------------------------------- checks
def verify_reduction(max_size: int, order: int) -> Report:
    """``i**|mu| R_{mu,empty} = R_mu`` for ``|mu| <= max_size``."""
    report = Report("two-reduction", params={"max_size": max_size, "order": order})
    for mu in partitions_up_to(max_size, include_empty=True):
        lhs = r2_bullet(mu, (), order).scale(i_power(mu.size))
        check_series(report, list(mu), r_bullet(mu, order), lhs, order)
    return report


def verify_slot_symmetry(max_size: int, order: int) -> Report:
    """``R_{mu+,mu-}(tau) = R_{mu-,mu+}(1/tau)``."""
    report = Report("two-slot-symmetry", params={"max_size": max_size, "order": order})
    for total in range(1, max_size + 1):
        for a in range(total + 1):
            for p in enumerate_partitions(a):
                for m in enumerate_partitions(total - a):
                    check_series(report, [list(p), list(m)], r2_bullet(p, m, order),
                                 r2_bullet(m, p, order).invert_tau(), order)
    return report


def verify_convolution2(max_size: int, order: int, tau0) -> Report:
    """Pair convolution about ``tau0`` as an exact tau-Laurent identity."""
    tau0 = Fraction(tau0)
    if tau0 == 0:
        raise ZeroTau0("the pair series has a pole at tau = 0")
    report = Report("two-convolution", params={"max_size": max_size, "order": order, "tau0": str(tau0)})
    shift_plus = TAU - tau0
    shift_minus = TAU_INV - 1 / tau0
    for total in range(1, max_size + 1):
        for a in range(total + 1):
            for p in enumerate_partitions(a):
                for m in enumerate_partitions(total - a):
                    rhs = LambdaSeries.zero(order)
                    kernels_plus = {nu: phi_at_i_lambda_tau(nu, p, order + total, shift_plus).scale(z_mu(nu))
                                    for nu in enumerate_partitions(a)}
                    kernels_minus = {nu: phi_at_i_lambda_tau(nu, m, order + total, shift_minus).scale(z_mu(nu))
                                     for nu in enumerate_partitions(total - a)}
                    for nu_p, kp in kernels_plus.items():
                        for nu_m, km in kernels_minus.items():
                            start = r2_bullet(nu_p, nu_m, order).at_tau(tau0)
                            if start:
                                rhs = rhs + start * kp * km
                    check_series(report, [list(p), list(m)], r2_bullet(p, m, order), rhs, order)
    return report


def verify_genus0_two(max_size: int, order: int) -> Report:
    """``[lambda^{n-2}] R_{mu+,mu-} = G_{0,mu+,mu-}`` for ``|mu+| + |mu-| <= max_size``."""
    report = Report("two-genus0", params={"max_size": max_size, "order": order})
    family = pair_family(max_size, order)
    for (p, m), series in family.items():
        k = len(p) + len(m) - 2
        if order < k:
            report.note(f"insufficient order for ({p.format()}; {m.format()})")
            continue
        report.checked += 1
        expected = g0_two_oracle(p, m)
        actual = series.coeff(k)
        if actual != expected:
            report.fail(key=[list(p), list(m)], lambda_exp=k, expected=str(expected), actual=str(actual))
    return report


def verify_structure_two(max_size: int, order: int) -> Report:
    """Valuation and parity of the connected pair series."""
    report = Report("two-structure", params={"max_size": max_size, "order": order})
    for (p, m), series in pair_family(max_size, order).items():
        n = len(p) + len(m)
        for k, _ in series.items():
            report.checked += 1
            if k < n - 2:
                report.fail(key=[list(p), list(m)], lambda_exp=k, reason="below genus-0 valuation")
            if (k - n) % 2:
                report.fail(key=[list(p), list(m)], lambda_exp=k, reason="wrong parity")
    return report


def check_tau_minus_one(max_size: int, order: int) -> Report:
    """Connected pair series at ``tau = -1``.

    For ``l+ + l- >= 2`` every coefficient above the genus-0 one vanishes and
    the genus-0 coefficient equals the oracle's value at ``-1``. That value is
    zero except for ``((a), (a))``, where ``a + a/tau`` cancels the ``tau + 1``
    of the prefactor. For one-part ``((d), empty)`` and ``(empty, (d))`` the series is odd
    and ``[lambda^{2g-1}] = c_d d**(2g-2) b_g`` with ``c_d`` read at ``g = 0``.
    """
    report = Report("two-tau-minus-one", params={"max_size": max_size, "order": order})
    for (p, m), series in pair_family(max_size, order).items():
        key = [list(p), list(m)]
        at = series.at_tau(-1)
        n = len(p) + len(m)
        if n >= 2:
            k0 = n - 2
            report.checked += 1
            expected = g0_two_oracle(p, m).evaluate(-1)
            if at.coeff(k0).constant() != expected:
                report.fail(key=key, lambda_exp=k0, expected=str(expected), actual=str(at.coeff(k0)))
            higher = LambdaSeries({k: c for k, c in at.items() if k > k0}, order=order)
            check_series(report, key, LambdaSeries.zero(order), higher, order)
            continue
        d = (p or m)[0]
        # calibrate so that the g = 0 term reproduces the lambda^-1 coefficient
        c = at.coeff(-1).constant() * (d * d)
        report.checked += 1
        if not c:
            report.fail(key=key, reason="vanishing genus-0 coefficient")
            continue
        expected = {}
        for g in range(0, (order + 1) // 2 + 1):
            if 2 * g - 1 <= order:
                expected[2 * g - 1] = TauPoly.const(c * (b_g(g) * Fraction(d) ** (2 * g - 2)))
        check_series(report, key, LambdaSeries(expected, order=order), at, order)
    return report


__all__ = [
    "TwoPartitionSeries", "check_tau_minus_one", "g0_two_oracle", "pair_family", "r2_bullet",
    "r2_connected", "two_partition_series", "two_prefactor", "verify_convolution2",
    "verify_genus0_two", "verify_reduction", "verify_slot_symmetry", "verify_structure_two",
]
