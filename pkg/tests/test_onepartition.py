from fractions import Fraction

import pytest

from hodgeint.algebra import GaussianRational, I, LambdaSeries, QRat, TAU, TauPoly, qrat_to_series
from hodgeint.errors import EmptyPartition
from hodgeint.onepartition import (
    b_g, bernoulli, connected_family, cosecant_term, extract_bg, extract_elsv, extract_lambda_g, g0_oracle,
    lambda_g_integral, one_partition_series, r_bullet, r_connected, sine_ratio, verify_convolution,
    verify_cutjoin, verify_elsv, verify_genus0, verify_lambda_g, verify_structure, verify_tau0,
)

ORDER = 6


def test_bernoulli():
    assert [bernoulli(n) for n in range(5)] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert [b_g(g) for g in range(3)] == [1, Fraction(1, 24), Fraction(7, 5760)]


def test_r_bullet_examples():
    assert r_bullet((), ORDER) == LambdaSeries.const(1, ORDER)
    r1 = r_bullet((1,), 5)
    assert r1.coeff(-1) == 1 and r1.coeff(1) == Fraction(1, 24) and r1.coeff(3) == Fraction(7, 5760)
    assert r1.is_tau_free()
    assert r_bullet((2,), ORDER).coeff(-1) == (TAU * 2 + 1) * GaussianRational(0, Fraction(1, 4))


def test_r_bullet_two_in_closed_form():
    # R_(2) [1][2] = -i sin((tau + 1/2) lambda)
    closed = (r_bullet((2,), ORDER) * qrat_to_series(QRat.quantum(1) * QRat.quantum(2), ORDER + 3)).truncate(3)
    shift = TAU + Fraction(1, 2)
    assert closed.coeff(1) == shift * -I
    assert closed.coeff(2) == 0
    assert closed.coeff(3) == shift ** 3 * I * Fraction(1, 6)


def test_r_connected_examples():
    assert r_connected((1,), ORDER) == r_bullet((1,), ORDER)
    assert r_connected((2,), ORDER) == r_bullet((2,), ORDER)
    expected = r_bullet((1, 1), ORDER + 2) - (r_bullet((1,), ORDER + 2) ** 2).scale(Fraction(1, 2))
    assert r_connected((1, 1), ORDER).agrees_with(expected, ORDER)
    with pytest.raises(EmptyPartition):
        r_connected((), ORDER)


def test_one_partition_series_wrapper():
    s = one_partition_series((2, 1), 4)
    assert s.connected and s.mu == (2, 1) and s.series == r_connected((2, 1), 4)


def test_g0_oracle_examples():
    assert g0_oracle((1,)) == TauPoly.const(1)
    assert g0_oracle((2,)) == (TAU * 2 + 1) * GaussianRational(0, Fraction(1, 4))
    assert g0_oracle((1, 1)) == TAU * (TAU + 1) * Fraction(-1, 4)
    with pytest.raises(EmptyPartition):
        g0_oracle(())


def test_genus0():
    assert verify_genus0(2, 4).passed
    assert verify_genus0(5, 3).passed


def test_genus0_insufficient_order_is_a_note():
    report = verify_genus0(3, 0)
    assert report.passed and any("insufficient order" in n for n in report.notes)


def test_tau0():
    assert verify_tau0(5, 6).passed
    assert r_connected((1, 1), 6).at_tau(0) == LambdaSeries.zero(6)
    assert r_connected((1,), 6) == cosecant_term(1, 6)
    assert r_connected((2,), 6).at_tau(0).coeff(-1) == g0_oracle((2,)).evaluate(0)


def test_bg_extraction():
    cmp = extract_bg(5)
    assert cmp.matches
    assert cmp.from_characters[:3] == (1, Fraction(1, 24), Fraction(7, 5760))


def test_lambda_g_examples():
    ext = extract_lambda_g((1,), 6)
    assert ext.matches and ext.extracted.coeff(2) == Fraction(1, 24)
    assert lambda_g_integral(1, (0,)) == Fraction(1, 24)
    ext2 = extract_lambda_g((2,), 6)
    assert ext2.extracted == sine_ratio(2, 6).scale(Fraction(1, 4))
    assert ext2.extracted.coeff(0) == Fraction(1, 4)


def test_lambda_g_suite():
    assert verify_lambda_g(5, 6).passed


@pytest.mark.parametrize("mu", [(1,), (2,), (1, 1)])
def test_elsv_genus0_anchors(mu):
    cmp = extract_elsv(0, mu)
    assert cmp.matches
    assert cmp.hurwitz == (1 if mu == (1,) else Fraction(1, 2))


def test_elsv_suite():
    assert verify_elsv(4, 2).passed


def test_cutjoin():
    assert verify_cutjoin(2, 4).passed
    assert verify_cutjoin(4, 8).passed
    assert verify_cutjoin(0, 4).passed


def test_convolution():
    assert verify_convolution(4, 6).passed


def test_structure():
    assert verify_structure(5, 7).passed


def test_family_entries_match_single_calls():
    family = connected_family(3, 4)
    for mu, series in family.items():
        assert series == r_connected(mu, 4)
