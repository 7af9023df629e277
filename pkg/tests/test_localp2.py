from fractions import Fraction

import pytest

from hodgeint.algebra import LambdaSeries, QRat
from hodgeint.errors import BadConstantTerm, OutOfRange
from hodgeint.localp2 import (
    LocalCYSeries, free_energy, gw_invariants, local_p2_free_energy, verify_local_p2, z_degree, z_local_p2,
)
from hodgeint.qschur import quantum


def test_z_examples():
    assert z_degree(0) == QRat.const(1)
    assert z_degree(1) == -3 / (quantum(1) * quantum(1))
    z = z_local_p2(2, 4)
    assert z[0] == LambdaSeries.const(1, 4)


def test_free_energy_low_degrees():
    z = z_local_p2(2, 6)
    f = free_energy(z)
    assert f[1] == z[1]
    assert f[2].agrees_with(z[2] - (z[1] * z[1]).scale(Fraction(1, 2)))


def test_f1_expansion():
    f = local_p2_free_energy(1, 4)
    assert [f[1].coeff(k) for k in (-2, 0, 2)] == [3, Fraction(1, 4), Fraction(1, 80)]


def test_invariants():
    f = local_p2_free_energy(3, 2)
    assert [gw_invariants(f, g, 1) for g in range(3)] == [3, Fraction(1, 4), Fraction(1, 80)]
    assert gw_invariants(f, 0, 2) == Fraction(-45, 8)
    assert gw_invariants(f, 0, 3) == Fraction(244, 9)


def test_invariant_errors():
    f = local_p2_free_energy(1, 2)
    for g, d in ((0, 0), (0, 2), (-1, 1), (3, 1)):
        with pytest.raises(OutOfRange):
            gw_invariants(f, g, d)


def test_bad_constant_term():
    z = LocalCYSeries(1, (LambdaSeries.const(2, 4), LambdaSeries.zero(4)))
    with pytest.raises(BadConstantTerm):
        free_energy(z)


def test_suite():
    report = verify_local_p2(3, 8)
    assert report.passed and report.checked > 10
