from fractions import Fraction

import pytest

from hodgeint.algebra import GaussianRational, I, LambdaSeries, QRat, TAU, TauPoly, qrat_to_series
from hodgeint.errors import BothEmpty, ZeroTau0
from hodgeint.onepartition import g0_oracle
from hodgeint.qschur import quantum
from hodgeint.twopartition import (
    TAU_INV, check_tau_minus_one, g0_two_oracle, pair_family, r2_bullet, r2_connected, two_partition_series,
    verify_convolution2, verify_genus0_two, verify_reduction, verify_slot_symmetry, verify_structure_two,
)
from hodgeint.onepartition import r_bullet

ORDER = 6


def test_r2_bullet_examples():
    assert r2_bullet((), (), ORDER) == LambdaSeries.const(1, ORDER)
    assert r2_bullet((1,), (), ORDER).scale(I) == r_bullet((1,), ORDER)
    one_plus = qrat_to_series(1 + 1 / (quantum(1) * quantum(1)), ORDER)
    assert r2_bullet((1,), (1,), ORDER) == one_plus


def test_r2_connected_examples():
    assert r2_connected((1,), (1,), 8) == LambdaSeries.const(1, 8)
    assert r2_connected((1,), (), ORDER) == r2_bullet((1,), (), ORDER)
    expected = r2_bullet((1, 1), (), ORDER + 2) - (r2_bullet((1,), (), ORDER + 2) ** 2).scale(Fraction(1, 2))
    assert r2_connected((1, 1), (), ORDER).agrees_with(expected, ORDER)
    with pytest.raises(BothEmpty):
        r2_connected((), (), ORDER)


def test_minus_slot_carries_inverse_tau():
    s = r2_bullet((), (2,), 2)
    assert any(e < 0 for _, c in s.items() for e, _ in c.items())


def test_wrapper():
    s = two_partition_series((1,), (1,), 4)
    assert s.series == LambdaSeries.const(1, 4) and s.connected


def test_g0_two_examples():
    assert g0_two_oracle((1,), (1,)) == TauPoly.const(1)
    assert g0_two_oracle((1,), ()) == TauPoly.const(-I)
    assert g0_two_oracle((2,), ()) == g0_oracle((2,)) * GaussianRational(-1)
    with pytest.raises(BothEmpty):
        g0_two_oracle((), ())


def test_g0_two_is_laurent_in_tau():
    value = g0_two_oracle((), (2,))
    assert value.valuation() < 0


def test_reduction():
    assert verify_reduction(5, 6).passed


def test_slot_symmetry():
    assert verify_slot_symmetry(4, 6).passed


def test_convolution_hand_case_and_suite():
    assert verify_convolution2(2, 6, Fraction(-1)).passed
    assert verify_convolution2(3, 4, Fraction(1, 2)).passed
    with pytest.raises(ZeroTau0):
        verify_convolution2(2, 4, 0)


def test_genus0_two():
    assert verify_genus0_two(4, 2).passed


def test_structure_two():
    assert verify_structure_two(4, 6).passed


def test_tau_minus_one_examples():
    assert r2_connected((1, 1), (), 8).at_tau(-1) == LambdaSeries.zero(8)
    odd = r2_connected((1,), (), 8).at_tau(-1)
    assert odd and all(k % 2 for k, _ in odd.items())
    assert check_tau_minus_one(3, 6).passed


def test_tau_minus_one_genus0_exceptions_are_equal_one_part_pairs():
    nonzero = {(p, m) for (p, m), s in pair_family(4, 4).items()
               if len(p) + len(m) >= 2 and s.at_tau(-1)}
    assert nonzero == {((1,), (1,)), ((2,), (2,))}
