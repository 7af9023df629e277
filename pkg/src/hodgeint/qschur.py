"""Quantum integers and q-Schur quantities as rational functions of ``x = q**(1/2)``.

Principal specialisation means evaluating at the variables
``x, x**3, x**5, ...``, expanded as formal power series in ``x``.
"""

from __future__ import annotations

from functools import lru_cache

from hodgeint.algebra.qrat import QRat
from hodgeint.partitions import Partition, kappa_mu, subdiagrams
from hodgeint.reports import Report


@lru_cache(maxsize=None)
def quantum(m: int) -> QRat:
    """``[m] = x**m - x**(-m)``."""
    return QRat.quantum(m)


@lru_cache(maxsize=None)
def w_one(mu) -> QRat:
    """The unknot quantity ``W_mu``.

    ``x**(kappa/2) * prod_{i<j} [mu_i-mu_j+j-i]/[j-i] * prod_i 1/prod_{v=1}^{mu_i} [v-i+l]``
    with 1-based row indices.
    """
    mu = tuple(mu)
    length = len(mu)
    value = QRat.xpow(kappa_mu(mu) // 2)
    for i in range(1, length + 1):
        for j in range(i + 1, length + 1):
            value = value * quantum(mu[i - 1] - mu[j - 1] + j - i) / quantum(j - i)
    for i in range(1, length + 1):
        for v in range(1, mu[i - 1] + 1):
            value = value / quantum(v - i + length)
    return value


@lru_cache(maxsize=None)
def h_principal(k: int) -> QRat:
    """Complete homogeneous ``h_k(x, x**3, x**5, ...)`` in closed form.

    Summing the geometric series gives ``x**k / prod_{i<=k} (1 - x**(2i))``,
    which rewrites as ``(-1)**k x**(k(1-k)/2) / prod_{i<=k} [i]``.
    """
    if k < 0:
        return QRat.const(0)
    value = QRat.xpow(k * (1 - k) // 2)
    if k % 2:
        value = -value
    for i in range(1, k + 1):
        value = value / quantum(i)
    return value


def h_principal_bruteforce(k: int, x_order: int) -> dict:
    """Truncated direct summation of ``h_k`` over the variables ``x**(2j+1)``.

    Sums ``prod x**(2 j_s + 1)`` over all multisets ``j_1 <= ... <= j_k`` whose
    total x-degree is at most ``x_order``. Returns ``{exponent: count}``.
    """
    out: dict = {}

    def rec(remaining, smallest, degree):
        if remaining == 0:
            out[degree] = out.get(degree, 0) + 1
            return
        j = smallest
        # all later variables are at least x**(2j+1)
        while degree + remaining * (2 * j + 1) <= x_order:
            rec(remaining - 1, j, degree + 2 * j + 1)
            j += 1

    rec(k, 0, 0)
    return out


def _det(matrix: list) -> QRat:
    """Determinant over the field of rational functions by Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return QRat.const(1)
    a = [list(row) for row in matrix]
    det = QRat.const(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return QRat.const(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] * inv
                for c in range(col + 1, n):
                    if a[col][c]:
                        a[r][c] = a[r][c] - factor * a[col][c]
    return det


@lru_cache(maxsize=None)
def skew_schur_principal(mu, eta=()) -> QRat:
    """``s_{mu/eta}`` at ``x, x**3, x**5, ...`` via the Jacobi-Trudi determinant.

    Zero unless ``eta`` fits inside ``mu``.
    """
    mu, eta = Partition(mu), Partition(eta)
    if not mu.contains(eta):
        return QRat.const(0)
    n = len(mu)
    eta_padded = list(eta) + [0] * (n - len(eta))
    matrix = [[h_principal(mu[i] - eta_padded[j] - i + j) for j in range(n)] for i in range(n)]
    return _det(matrix)


@lru_cache(maxsize=None)
def w_two(mu, nu) -> QRat:
    """The Hopf-link quantity ``W_{mu,nu}``.

    ``(-1)**(|mu|+|nu|) x**(kappa_mu+kappa_nu) sum_eta s_{mu/eta} s_{nu/eta}``, the
    sum running over ``eta`` contained in both shapes.
    """
    mu, nu = Partition(mu), Partition(nu)
    small, big = (mu, nu) if mu.size <= nu.size else (nu, mu)
    total = QRat.const(0)
    for eta in subdiagrams(small):
        if big.contains(eta):
            total = total + skew_schur_principal(mu, eta) * skew_schur_principal(nu, eta)
    value = total * QRat.xpow(kappa_mu(mu) + kappa_mu(nu))
    return -value if (mu.size + nu.size) % 2 else value


def verify_h_principal(max_k: int = 6, x_order: int = 40) -> Report:
    """Closed form of ``h_k`` against direct truncated summation."""
    report = Report("h-principal", params={"max_k": max_k, "x_order": x_order})
    for k in range(max_k + 1):
        report.checked += 1
        closed = h_principal(k).x_expansion(x_order)
        brute = h_principal_bruteforce(k, x_order)
        closed = {e: c for e, c in closed.items() if c}
        brute = {e: c for e, c in brute.items() if c}
        if closed != brute:
            first = min(e for e in set(closed) | set(brute) if closed.get(e, 0) != brute.get(e, 0))
            report.fail(key=k, x_exp=first, expected=str(brute.get(first, 0)), actual=str(closed.get(first, 0)))
    return report


def verify_w_identities(max_total: int = 8) -> Report:
    """Symmetry ``W_{mu,nu} = W_{nu,mu}`` and reduction ``W_{mu,empty} = W_mu``."""
    from hodgeint.partitions import partitions_up_to

    report = Report("w-identities", params={"max_total": max_total})
    parts = partitions_up_to(max_total, include_empty=True)
    for i, mu in enumerate(parts):
        report.checked += 1
        if w_two(mu, ()) != w_one(mu):
            report.fail(key=[list(mu), []], identity="reduction")
        for nu in parts[i + 1:]:
            if mu.size + nu.size > max_total:
                continue
            report.checked += 1
            if w_two(mu, nu) != w_two(nu, mu):
                report.fail(key=[list(mu), list(nu)], identity="symmetry")
    return report
