from fractions import Fraction
from math import factorial

import pytest

from hodgeint.partitions import (
    Partition, conjugate, enumerate_partitions, hook_lengths, kappa_mu, partitions_up_to, z_mu,
)


def test_enumerate_small():
    assert enumerate_partitions(0) == [Partition(())]
    assert enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]


def _count(n, bound):
    if n == 0:
        return 1
    return sum(_count(n - k, k) for k in range(1, min(n, bound) + 1))


@pytest.mark.parametrize("n", range(0, 13))
def test_enumerate_counts_and_validity(n):
    parts = enumerate_partitions(n)
    assert len(parts) == _count(n, n)
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert sum(p) == n and list(p) == sorted(p, reverse=True) and all(x > 0 for x in p)


def test_p8():
    assert len(enumerate_partitions(8)) == 22


def test_z_mu():
    assert z_mu((1,)) == 1
    assert z_mu((2, 1)) == 2
    assert z_mu((5, 5, 4, 1, 1, 1)) == 1200


def test_kappa():
    assert kappa_mu((1,)) == 0
    assert kappa_mu((2,)) == 2
    assert kappa_mu((1, 1)) == -2
    assert kappa_mu((2, 1)) == 0


def test_conjugate_and_hooks():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert sorted(hook_lengths((1,))) == [1]
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]
    assert sorted(hook_lengths((2, 2))) == [1, 2, 2, 3]


@pytest.mark.parametrize("mu", partitions_up_to(10))
def test_kappa_even_and_odd_under_conjugation(mu):
    assert kappa_mu(mu) % 2 == 0
    assert kappa_mu(conjugate(mu)) == -kappa_mu(mu)
    assert conjugate(conjugate(mu)) == mu


@pytest.mark.parametrize("n", range(1, 11))
def test_class_equation(n):
    assert sum(Fraction(factorial(n), z_mu(mu)) for mu in enumerate_partitions(n)) == factorial(n)


def test_text_syntax():
    assert Partition.parse("5,5,4,1,1,1") == (5, 5, 4, 1, 1, 1)
    assert Partition.parse("-") == ()
    assert Partition((2, 1)).format() == "2,1"
    for bad in ((1, 3, 2), (2, 0)):
        with pytest.raises(ValueError):
            Partition(bad)
