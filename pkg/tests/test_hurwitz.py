from fractions import Fraction

import pytest

from hodgeint.errors import NegativeR, SizeMismatch, TooLarge
from hodgeint.hurwitz import (
    brute_force_connected_single, brute_force_double, connected_single, double_hurwitz, phi,
    verify_hurwitz_grid, verify_phi_composition,
)
from hodgeint.partitions import enumerate_partitions, partitions_up_to


def test_phi_examples():
    assert [phi((1,), (1,), 4).coeff(k) for k in range(5)] == [1, 0, 0, 0, 0]
    cosh_half = [Fraction(1, 2), 0, Fraction(1, 4), 0, Fraction(1, 48)]
    assert [phi((2,), (2,), 4).coeff(k) for k in range(5)] == cosh_half


@pytest.mark.parametrize("d", range(1, 5))
def test_phi_symmetry_and_parity(d):
    parts = enumerate_partitions(d)
    for nu in parts:
        for mu in parts:
            p, q = phi(nu, mu, 6), phi(mu, nu, 6)
            assert all(p.coeff(k) == q.coeff(k) for k in range(7))
            forced = (d - len(nu) + d - len(mu)) % 2
            assert all(p.coeff(k) == 0 for k in range(7) if k % 2 != forced)


def test_double_hurwitz_examples():
    assert double_hurwitz(2, (1,), (1,)) == 1
    assert double_hurwitz(0, (2,), (2,)) == Fraction(1, 2)
    assert double_hurwitz(1, (2,), (2,)) == 0
    assert double_hurwitz(-1, (2,), (2,)) == 0


def test_double_hurwitz_errors():
    with pytest.raises(SizeMismatch):
        double_hurwitz(0, (2,), (1,))
    with pytest.raises(NegativeR):
        double_hurwitz(5, (1,), (1,))


def test_brute_force_examples():
    assert brute_force_double(2, (1,), (1,)) == 1
    assert brute_force_double(0, (2,), (2,)) == Fraction(1, 2)
    assert brute_force_double(2, (1, 1), (1, 1)) == Fraction(1, 2)


def test_brute_force_bounds():
    with pytest.raises(TooLarge):
        brute_force_double(0, (6,), (6,))
    with pytest.raises(TooLarge):
        brute_force_double(-20, (2,), (2,))


def test_connected_single_examples():
    assert connected_single(0, (1,)) == 1
    assert connected_single(0, (2,)) == Fraction(1, 2)
    assert connected_single(0, (1, 1)) == Fraction(1, 2)
    assert connected_single(0, (2, 1)) == 4
    assert connected_single(1, (3,)) == 9


@pytest.mark.parametrize("mu", partitions_up_to(4))
@pytest.mark.parametrize("g", [0, 1])
def test_connected_single_matches_brute_force(g, mu):
    assert connected_single(g, mu) == brute_force_connected_single(g, mu, max_degree=4, max_r=8)


def test_grid():
    report = verify_hurwitz_grid(4, 4)
    assert report.passed and report.checked > 100


@pytest.mark.parametrize("d", range(1, 5))
def test_phi_composition(d):
    assert verify_phi_composition(d, 6).passed
