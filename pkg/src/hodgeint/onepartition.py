"""The one-partition character side ``R_mu(lambda; tau)`` and its closed-form limits.

``r_bullet`` is the finite character sum over ``|nu| = |mu|``; ``r_connected``
is its logarithm in the power-sum variables. The checks below compare these
exact series against genus-0 closed forms, the ``tau = 0`` cosecant, the
``lambda_g`` sine ratio, Hurwitz numbers, the cut-and-join equation and the
convolution with the Phi kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from hodgeint.algebra.gaussian import GaussianRational, I, i_power
from hodgeint.algebra.qrat import QRat, qrat_to_series
from hodgeint.algebra.series import LambdaSeries, exp_linear
from hodgeint.algebra.taupoly import TAU, TauPoly
from hodgeint.characters import character_table
from hodgeint.errors import EmptyPartition, InsufficientOrder
from hodgeint.genfun import PartitionMap, connect, cutjoin_apply
from hodgeint.hurwitz import _phi_series, connected_single
from hodgeint.partitions import Partition, enumerate_partitions, kappa_mu, partitions_up_to, sub_multisets, z_mu
from hodgeint.qschur import w_one
from hodgeint.reports import Report, check_series


# ------------------------------------------------------------------ b_g data
@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` (``B_1 = -1/2``) from the standard recurrence."""
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0)) / (n + 1)


def b_g(g: int) -> Fraction:
    """``(2**(2g-1) - 1) / 2**(2g-1) * |B_2g| / (2g)!``, with ``b_0 = 1``."""
    if g == 0:
        return Fraction(1)
    p = Fraction(2) ** (2 * g - 1)
    return (p - 1) / p * abs(bernoulli(2 * g)) / factorial(2 * g)


def sine_ratio(scale: int, order: int) -> LambdaSeries:
    """``(scale*lambda/2) / sin(scale*lambda/2)``, via ``2i sin(d lambda/2) = [d]``."""
    quantum = qrat_to_series(QRat.quantum(scale), order + 1)
    return (LambdaSeries.monomial(I * scale, 1, order + 2) / quantum).truncate(order)


def cosecant_term(d: int, order: int) -> LambdaSeries:
    """``-i**(d+1) / (2 d sin(d lambda / 2))``, the ``tau = 0`` value of ``R_(d)``."""
    quantum = qrat_to_series(QRat.quantum(d), order + 2)
    return (LambdaSeries.const(i_power(d) * Fraction(1, d), order + 2) / quantum).truncate(order)


# ------------------------------------------------------------- the R series
@lru_cache(maxsize=None)
def _w_series(nu: Partition, order: int) -> LambdaSeries:
    return qrat_to_series(w_one(nu), order)


@lru_cache(maxsize=None)
def r_bullet(mu, order: int) -> LambdaSeries:
    """Disconnected series ``R^bullet_mu`` through ``lambda**order``.

    >>> r_bullet((1,), 3)
    LambdaSeries({-1: (1), 1: (1/24), 3: (7/5760)}, order=3)
    """
    mu = Partition(mu)
    if not mu:
        return LambdaSeries.const(1, order)
    d = mu.size
    table = character_table(d)
    # W_nu starts at lambda^{-d}; the exponential is carried d orders further
    exp_order = order + d
    total = LambdaSeries.zero(order)
    for nu in table.partitions:
        ch = table.value(nu, mu)
        if not ch:
            continue
        w = _w_series(nu, order)
        e = exp_linear(TauPoly.monomial(I * Fraction(kappa_mu(nu), 2), 1), exp_order)
        total = total + (e * w).scale(Fraction(ch, 1))
    return total.scale(i_power(d) * Fraction(1, z_mu(mu))).truncate(order)


def _connect_up_to(keys, order: int, bullet) -> PartitionMap:
    """Connected entries for ``keys`` (closed under sub-multisets) at a working order."""
    depth = max((len(k) for k in keys), default=0)
    working = order + depth
    while True:
        entries = {k: bullet(k, working) for k in keys if k}
        entries[Partition(())] = LambdaSeries.const(1, working)
        conn = connect(PartitionMap(entries, max((k.size for k in keys), default=0)))
        if all(v.order >= order for v in conn.entries.values()):
            return PartitionMap({k: v.truncate(order) for k, v in conn.items()}, conn.max_size)
        working += 1
        if working > order + 4 * depth + 8:
            raise InsufficientOrder(f"could not reach lambda order {order}")


@lru_cache(maxsize=None)
def r_connected(mu, order: int) -> LambdaSeries:
    """Connected series ``R_mu``: the ``mu`` entry of ``log sum R^bullet_nu p_nu``."""
    mu = Partition(mu)
    if not mu:
        raise EmptyPartition("the connected series is indexed by nonempty partitions")
    keys = {nu for nu, _ in sub_multisets(mu)}
    return _connect_up_to(keys, order, r_bullet)[mu]


def connected_family(max_size: int, order: int) -> PartitionMap:
    """All ``R_mu`` with ``1 <= |mu| <= max_size`` through ``lambda**order``."""
    keys = set(partitions_up_to(max_size, include_empty=True))
    return _connect_up_to(keys, order, r_bullet)


@dataclass(frozen=True)
class OnePartitionSeries:
    mu: Partition
    series: LambdaSeries
    connected: bool
    order: int


def one_partition_series(mu, order: int, connected: bool = True) -> OnePartitionSeries:
    fn = r_connected if connected else r_bullet
    return OnePartitionSeries(Partition(mu), fn(mu, order), connected, order)


# ----------------------------------------------------------- genus 0 oracle
def hodge_prefactor(mu) -> TauPoly:
    """``-i**(|mu|+l) (tau(tau+1))**(l-1) / |Aut| * prod_i prod_{a<mu_i} (mu_i tau + a) / (mu_i - 1)!``."""
    mu = Partition(mu)
    value = TauPoly.const(-i_power(mu.size + len(mu)) * Fraction(1, mu.aut_order()))
    value = value * (TAU * (TAU + 1)) ** (len(mu) - 1)
    for part in mu:
        for a in range(1, part):
            value = value * (TAU * part + a)
        value = value * Fraction(1, factorial(part - 1))
    return value


def g0_oracle(mu) -> TauPoly:
    """Genus-0 value ``G_{0,mu}(tau)`` with the integral ``|mu|**(l-3)``.

    >>> str(g0_oracle((2,)))
    '(1/4*i) + (1/2*i)*t'
    """
    mu = Partition(mu)
    if not mu:
        raise EmptyPartition("the genus-0 value needs a nonempty partition")
    return hodge_prefactor(mu) * (Fraction(mu.size) ** (len(mu) - 3))


# ------------------------------------------------------------------- checks
def verify_genus0(max_size: int, order: int) -> Report:
    """``[lambda^{l-2}] R_mu = G_{0,mu}`` for ``1 <= |mu| <= max_size``."""
    report = Report("mv-genus0", params={"max_size": max_size, "order": order})
    for mu in partitions_up_to(max_size):
        k = len(mu) - 2
        if order < k:
            report.note(f"insufficient order for {mu.format()}: lambda^{k} needs order >= {k}")
            continue
        report.checked += 1
        actual = r_connected(mu, order).coeff(k)
        expected = g0_oracle(mu)
        if actual != expected:
            report.fail(key=list(mu), lambda_exp=k, expected=str(expected), actual=str(actual))
    return report


def verify_tau0(max_size: int, order: int) -> Report:
    """The ``tau = 0`` specialisation of the connected series.

    Checks vanishing for ``l(mu) >= 2``, the cosecant for one-part ``mu``, and
    that the cosecant equals ``-i**(d+1)/(lambda d**2) sum_g b_g (lambda d)**(2g)``.
    """
    report = Report("mv-tau0", params={"max_size": max_size, "order": order})
    for mu in partitions_up_to(max_size):
        at0 = r_connected(mu, order).at_tau(0)
        if len(mu) >= 2:
            check_series(report, list(mu), LambdaSeries.zero(order), at0, order)
            continue
        d = mu[0]
        closed = cosecant_term(d, order)
        check_series(report, list(mu), closed, at0, order)
        bern = {}
        for g in range(0, (order + 1) // 2 + 1):
            k = 2 * g - 1
            if k <= order:
                bern[k] = TauPoly.const(-i_power(d + 1) * (b_g(g) * Fraction(d) ** (2 * g - 2)))
        check_series(report, [d, "b_g form"], closed, LambdaSeries(bern, order=order), order)
    return report


@dataclass(frozen=True)
class BgComparison:
    from_characters: tuple
    closed_form: tuple

    @property
    def matches(self) -> bool:
        return self.from_characters == self.closed_form


def extract_bg(max_g: int) -> BgComparison:
    """``b_g`` read from ``R_(1) = sum b_g lambda^{2g-1}`` and from the Bernoulli closed form."""
    series = r_connected((1,), 2 * max_g - 1)
    read = []
    for g in range(max_g + 1):
        c = series.coeff(2 * g - 1)
        read.append(c.constant().re if c.is_real() else c.constant())
    return BgComparison(tuple(read), tuple(b_g(g) for g in range(max_g + 1)))


def verify_bg(max_g: int) -> Report:
    cmp = extract_bg(max_g)
    report = Report("mv-bg", params={"max_g": max_g})
    for g, (a, b) in enumerate(zip(cmp.from_characters, cmp.closed_form)):
        report.checked += 1
        if a != b:
            report.fail(key=g, expected=str(b), actual=str(a))
    return report


def lambda_g_integral(g: int, ks) -> Fraction:
    """``int lambda_g psi_1^{k_1} ... psi_n^{k_n}`` on the genus-g moduli space, ``g >= 1``.

    Equals ``binom(2g-3+n; k_1, ..., k_n) b_g``; zero unless ``sum k = 2g - 3 + n``.
    """
    n = len(ks)
    total = 2 * g - 3 + n
    if g < 1 or sum(ks) != total or min(ks, default=0) < 0:
        return Fraction(0)
    multinomial = factorial(total)
    for k in ks:
        multinomial //= factorial(k)
    return multinomial * b_g(g)


def _compositions(total: int, n: int):
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, n - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class LambdaGExtraction:
    mu: Partition
    extracted: LambdaSeries
    sine_form: LambdaSeries
    integral_form: LambdaSeries
    below_window: bool

    @property
    def matches(self) -> bool:
        return (not self.below_window and self.extracted == self.sine_form
                and self.extracted == self.integral_form)


def extract_lambda_g(mu, order: int) -> LambdaGExtraction:
    """Lowest-tau part of ``R_mu`` against ``|mu|**(n-3) (|mu| lambda/2)/sin(|mu| lambda/2)``.

    The tau-degree ``l - 1`` coefficient of ``R_mu`` is stripped of
    ``-i**(|mu|+l)/|Aut| * lambda**(l-2)``; the comparison series is also
    rebuilt from individual ``lambda_g`` integrals via :func:`lambda_g_integral`.
    ``order`` refers to the stripped series.
    """
    mu = Partition(mu)
    if not mu:
        raise EmptyPartition("need a nonempty partition")
    n, d = len(mu), mu.size
    raw = r_connected(mu, order + n - 2)
    strip = -i_power(d + n) * Fraction(1, mu.aut_order())
    below = any(c.valuation() < n - 1 for _, c in raw.items())
    coeffs = {}
    for k, c in raw.items():
        v = c.coeff(n - 1)
        if v:
            coeffs[k - (n - 2)] = TauPoly.const(v / strip)
    extracted = LambdaSeries(coeffs, order=order)
    sine = sine_ratio(d, order).scale(Fraction(d) ** (n - 3))
    integrals = {0: TauPoly.const(Fraction(d) ** (n - 3))}
    for g in range(1, order // 2 + 1):
        total = Fraction(0)
        for ks in _compositions(2 * g - 3 + n, n):
            weight = 1
            for part, k in zip(mu, ks):
                weight *= part ** k
            total += weight * lambda_g_integral(g, ks)
        integrals[2 * g] = TauPoly.const(total)
    return LambdaGExtraction(mu, extracted, sine, LambdaSeries(integrals, order=order), below)


@dataclass(frozen=True)
class ElsvComparison:
    g: int
    mu: Partition
    top_coefficient: GaussianRational
    hodge_integral: GaussianRational
    hurwitz: Fraction

    @property
    def r(self) -> int:
        return 2 * self.g - 2 + self.mu.size + len(self.mu)

    @property
    def matches(self) -> bool:
        stripped = self.top_coefficient / elsv_sign(self.g, self.mu)
        return stripped == GaussianRational(self.hurwitz / factorial(self.r))


def elsv_sign(g: int, mu) -> GaussianRational:
    """``-(-1)**g i**(|mu|+l)``; the ``(-1)**g`` is the top tau-coefficient of the two tau-dependent Lambda factors."""
    sign = -i_power(sum(mu) + len(mu))
    return -sign if g % 2 else sign


def elsv_weight(mu) -> Fraction:
    """``prod mu_i**mu_i / mu_i! / |Aut(mu)|``."""
    mu = Partition(mu)
    w = Fraction(1, mu.aut_order())
    for part in mu:
        w *= Fraction(part ** part, factorial(part))
    return w


def extract_elsv(g: int, mu) -> ElsvComparison:
    """Top-tau coefficient of ``[lambda^{2g-2+l}] R_mu`` against ``H_{g,mu} / r!``.

    After removing :func:`elsv_sign` the top coefficient is ``H_{g,mu}/r!``;
    removing the remaining ``prod mu_i**mu_i/mu_i!/|Aut|`` leaves the Hodge
    integral, reported as ``hodge_integral``.
    """
    mu = Partition(mu)
    n = len(mu)
    k = 2 * g - 2 + n
    r = 2 * g - 2 + mu.size + n
    coeff = r_connected(mu, k).coeff(k)
    top = coeff.coeff(r)
    integral = top / elsv_sign(g, mu) / GaussianRational(elsv_weight(mu))
    return ElsvComparison(g, mu, top, integral, connected_single(g, mu))


def verify_elsv(max_size: int, max_g: int) -> Report:
    report = Report("mv-elsv", params={"max_size": max_size, "max_g": max_g})
    for mu in partitions_up_to(max_size):
        for g in range(max_g + 1):
            report.checked += 1
            cmp = extract_elsv(g, mu)
            if not cmp.matches:
                report.fail(key=list(mu), g=g, top=str(cmp.top_coefficient), hurwitz=str(cmp.hurwitz))
    return report


def verify_lambda_g(max_size: int, order: int) -> Report:
    report = Report("mv-lambda-g", params={"max_size": max_size, "order": order})
    for mu in partitions_up_to(max_size):
        ext = extract_lambda_g(mu, order)
        report.checked += 1
        if ext.below_window:
            report.fail(key=list(mu), reason="tau-degree below l(mu) - 1")
        check_series(report, [list(mu), "sine"], ext.sine_form, ext.extracted, order)
        check_series(report, [list(mu), "integrals"], ext.integral_form, ext.extracted, order)
    return report


def verify_cutjoin(max_size: int, order: int) -> Report:
    """``dR/dtau`` against the cut-and-join right-hand side, entrywise."""
    report = Report("mv-cutjoin", params={"max_size": max_size, "order": order})
    family = connected_family(max_size, order) if max_size >= 1 else PartitionMap({}, 0)
    rhs = cutjoin_apply(family)
    for mu, series in family.items():
        expected = rhs.get(mu, LambdaSeries.zero(order + 1))
        check_series(report, list(mu), expected, series.tau_derivative(), order)
    for mu in rhs:
        if mu not in family:
            report.checked += 1
            if rhs[mu]:
                report.fail(key=list(mu), reason="cut-and-join output outside the family")
    return report


def phi_at_i_lambda_tau(nu, mu, order: int, shift: TauPoly = TAU) -> LambdaSeries:
    """``Phi_{nu,mu}(i lambda s)`` for a tau-Laurent polynomial ``s`` (default ``tau``)."""
    base = _phi_series(Partition(nu), Partition(mu), order)
    factor = shift * I
    coeffs = {}
    power = TauPoly.const(1)
    for k in range(order + 1):
        c = base.coeff(k)
        if c:
            coeffs[k] = c * power
        power = power * factor
    return LambdaSeries(coeffs, order=order)


def verify_convolution(max_size: int, order: int) -> Report:
    """``R^bullet_mu(tau) = sum_nu R^bullet_nu(0) z_nu Phi_{nu,mu}(i lambda tau)``."""
    report = Report("mv-convolution", params={"max_size": max_size, "order": order})
    for mu in partitions_up_to(max_size):
        d = mu.size
        total = LambdaSeries.zero(order)
        for nu in enumerate_partitions(d):
            start = r_bullet(nu, order).at_tau(0)
            kernel = phi_at_i_lambda_tau(nu, mu, order + d)
            total = total + (start * kernel).scale(z_mu(nu))
        check_series(report, list(mu), r_bullet(mu, order), total, order)
    return report


def verify_structure(max_size: int, order: int) -> Report:
    """Valuation, parity, tau-degree window and reality of every ``R_mu``."""
    report = Report("mv-structure", params={"max_size": max_size, "order": order})
    family = connected_family(max_size, order)
    for mu, series in family.items():
        n, d = len(mu), mu.size
        rot = i_power(d + n)
        for k, c in series.items():
            report.checked += 1
            if k < n - 2:
                report.fail(key=list(mu), lambda_exp=k, reason="below genus-0 valuation")
            if (k - n) % 2:
                report.fail(key=list(mu), lambda_exp=k, reason="wrong parity")
            g2 = k + 2 - n  # equals 2g
            if c.valuation() < n - 1 or c.degree() > g2 - 2 + d + n:
                report.fail(key=list(mu), lambda_exp=k, reason="tau-degree outside window")
            if not (c * rot).is_real():
                report.fail(key=list(mu), lambda_exp=k, reason="not real after rotation")
    return report


__all__ = [
    "BgComparison", "ElsvComparison", "LambdaGExtraction", "OnePartitionSeries",
    "b_g", "bernoulli", "connected_family", "cosecant_term", "elsv_sign", "elsv_weight", "extract_bg",
    "extract_elsv", "extract_lambda_g", "g0_oracle", "hodge_prefactor", "lambda_g_integral",
    "one_partition_series", "phi_at_i_lambda_tau", "r_bullet", "r_connected", "sine_ratio",
    "verify_bg", "verify_convolution", "verify_cutjoin", "verify_elsv", "verify_genus0", "verify_lambda_g",
    "verify_structure", "verify_tau0",
]
