import pytest

from hodgeint.algebra import I, QRat, qrat_to_series
from hodgeint.partitions import kappa_mu, partitions_up_to
from hodgeint.qschur import (
    h_principal, h_principal_bruteforce, quantum, skew_schur_principal, verify_h_principal,
    verify_w_identities, w_one, w_two,
)

x = QRat.xpow(1)


def test_w_one_examples():
    assert w_one((1,)) == 1 / quantum(1)
    assert w_one((2,)) == x / (quantum(1) * quantum(2))
    assert w_one((1, 1)) == x.inverse() / (quantum(1) * quantum(2))


def test_h_principal_examples():
    assert h_principal(0) == QRat.const(1)
    assert h_principal(1) == -1 / quantum(1)
    assert h_principal(2) == x.inverse() / (quantum(1) * quantum(2))


@pytest.mark.parametrize("k", range(0, 7))
def test_h_principal_against_summation(k):
    expected = h_principal(k).x_expansion(40)
    brute = h_principal_bruteforce(k, 40)
    keys = set(expected) | set(brute)
    assert all(expected.get(e, 0) == brute.get(e, 0) for e in keys if e <= 40)


def test_verify_h_principal():
    assert verify_h_principal(6, 40).passed


def test_skew_schur_examples():
    assert skew_schur_principal((2, 1), (2, 1)) == QRat.const(1)
    assert skew_schur_principal((1,), ()) == -1 / quantum(1)
    assert skew_schur_principal((2,), (1,)) == -1 / quantum(1)


def test_w_two_examples():
    assert w_two((), ()) == QRat.const(1)
    assert w_two((1,), ()) == w_one((1,))
    assert w_two((1,), (1,)) == 1 + 1 / (quantum(1) * quantum(1))


def test_w_identities():
    assert verify_w_identities(8).passed


@pytest.mark.parametrize("mu", partitions_up_to(8))
def test_w_one_valuation_and_reality(mu):
    s = qrat_to_series(w_one(mu), 0)
    assert s.valuation == -mu.size
    lead = s.coeff(-mu.size).constant() * (I ** mu.size)
    assert lead.im == 0 and lead.re != 0


@pytest.mark.parametrize("mu", partitions_up_to(6))
def test_skew_reduction(mu):
    sign = -1 if mu.size % 2 else 1
    assert skew_schur_principal(mu, ()) * QRat.xpow(kappa_mu(mu)) * sign == w_one(mu)
