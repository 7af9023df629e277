from math import factorial, prod

import pytest

from hodgeint.characters import (
    character_table, chi, chi_kernel, chi_uncached, verify_hook_dimension, verify_orthogonality,
)
from hodgeint.errors import SizeMismatch
from hodgeint.partitions import conjugate, enumerate_partitions, hook_lengths, sign


def test_examples():
    for mu in enumerate_partitions(5):
        assert chi((5,), mu) == 1
    assert chi((1, 1), (2,)) == -1
    assert chi((2, 1), (3,)) == -1


def test_standard_rep_trace_on_three_cycle():
    # 2-dim standard representation: permutation matrix trace minus the trivial summand
    assert chi((2, 1), (3,)) == 0 - 1
    assert chi((2, 1), (2, 1)) == 1 - 1


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        chi((2,), (1,))


@pytest.mark.parametrize("n", [1, 5, 8])
def test_orthogonality(n):
    report = verify_orthogonality(n)
    assert report.passed and report.checked > 0


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugate_twists_by_sign(n):
    for nu in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            assert chi(conjugate(nu), mu) == sign(mu) * chi(nu, mu)


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_dimension(n):
    assert verify_hook_dimension(n).passed
    for nu in enumerate_partitions(n):
        assert chi(nu, (1,) * n) == factorial(n) // prod(hook_lengths(nu))


def test_cache_coherence_and_backends():
    for n in range(1, 7):
        table = character_table(n)
        for nu in table.partitions:
            for mu in table.partitions:
                v = chi(nu, mu)
                assert v == chi_uncached(nu, mu) == chi_kernel(nu, mu) == table.value(nu, mu)


def test_table_is_read_only():
    table = character_table(4)
    with pytest.raises(ValueError):
        table.matrix[0, 0] = 7
