"""Irreducible characters of the symmetric groups.

Two independent Murnaghan-Nakayama evaluators live here: :func:`chi`, a
memoised recursion on (remaining shape, remaining class) written against
Young diagrams, and the compiled depth-first kernel in
:mod:`hodgeint.kernels`, which materialises whole tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

import numpy as np

from hodgeint import kernels
from hodgeint.errors import SizeMismatch
from hodgeint.partitions import Partition, enumerate_partitions, hook_lengths, z_mu
from hodgeint.reports import Report


def _rim_hooks(shape: tuple, k: int):
    """Yield ``(smaller_shape, height)`` for every removable rim hook of length ``k``.

    Uses the beta-set picture: a hook of length ``k`` starting in row ``i``
    exists iff bead ``beta_i - k`` is free; its leg length is the number of
    beads strictly between.
    """
    n = len(shape)
    beta = [shape[i] + n - 1 - i for i in range(n)]
    occupied = set(beta)
    for i in range(n):
        b = beta[i]
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((target if c == b else c for c in beta), reverse=True)
        new_shape = tuple(v - (n - 1 - j) for j, v in enumerate(new_beta))
        yield tuple(p for p in new_shape if p > 0), height


@lru_cache(maxsize=None)
def _mn(shape: tuple, cls: tuple) -> int:
    if not cls:
        return 1 if not shape else 0
    k, rest = cls[0], cls[1:]
    total = 0
    for smaller, height in _rim_hooks(shape, k):
        term = _mn(smaller, rest)
        total += -term if height % 2 else term
    return total


def _mn_nocache(shape: tuple, cls: tuple) -> int:
    if not cls:
        return 1 if not shape else 0
    k, rest = cls[0], cls[1:]
    total = 0
    for smaller, height in _rim_hooks(shape, k):
        term = _mn_nocache(smaller, rest)
        total += -term if height % 2 else term
    return total


def chi(nu, mu) -> int:
    """Character ``chi_nu`` of ``S_n`` on the class of cycle type ``mu``.

    >>> chi((2, 1), (3,))
    -1
    """
    if sum(nu) != sum(mu):
        raise SizeMismatch(f"|nu| = {sum(nu)} but |mu| = {sum(mu)}")
    return _mn(tuple(nu), tuple(sorted(mu, reverse=True)))


def chi_uncached(nu, mu) -> int:
    """Same recursion as :func:`chi`, bypassing the memo table."""
    if sum(nu) != sum(mu):
        raise SizeMismatch(f"|nu| = {sum(nu)} but |mu| = {sum(mu)}")
    return _mn_nocache(tuple(nu), tuple(sorted(mu, reverse=True)))


def chi_kernel(nu, mu) -> int:
    """Character value through the compiled kernel."""
    if sum(nu) != sum(mu):
        raise SizeMismatch(f"|nu| = {sum(nu)} but |mu| = {sum(mu)}")
    return int(kernels.mn_character(np.asarray(nu, dtype=np.int64), np.asarray(mu, dtype=np.int64)))


@dataclass(frozen=True)
class CharacterTable:
    """Character table of ``S_n``; rows are irreducibles, columns classes."""

    n: int
    partitions: tuple
    matrix: np.ndarray

    def index(self, mu) -> int:
        return self._index[tuple(mu)]

    def __post_init__(self):
        object.__setattr__(self, "_index", {tuple(p): i for i, p in enumerate(self.partitions)})
        self.matrix.setflags(write=False)

    def value(self, nu, mu) -> int:
        return int(self.matrix[self.index(nu), self.index(mu)])

    def row(self, nu) -> dict:
        i = self.index(nu)
        return {p: int(self.matrix[i, j]) for j, p in enumerate(self.partitions)}

    def column(self, mu) -> dict:
        j = self.index(mu)
        return {p: int(self.matrix[i, j]) for i, p in enumerate(self.partitions)}

    def as_dict(self) -> dict:
        return {nu: self.row(nu) for nu in self.partitions}


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    """Materialise (once per ``n``) the full table via the compiled kernel."""
    parts = enumerate_partitions(n)
    width = max(1, n)
    arr = np.zeros((len(parts), width), dtype=np.int64)
    lengths = np.zeros(len(parts), dtype=np.int64)
    for i, p in enumerate(parts):
        arr[i, : len(p)] = p
        lengths[i] = len(p)
    matrix = kernels.character_table(arr, lengths)
    return CharacterTable(n, tuple(parts), np.asarray(matrix))


def verify_orthogonality(n: int) -> Report:
    """Check ``sum_sigma chi_a(sigma) chi_b(sigma) / z_sigma = delta_ab`` exactly."""
    report = Report("orthogonality", params={"n": n})
    table = character_table(n)
    parts = table.partitions
    weights = [Fraction(1, z_mu(s)) for s in parts]
    m = table.matrix
    for a in range(len(parts)):
        for b in range(a, len(parts)):
            total = sum((int(m[a, s]) * int(m[b, s]) * weights[s] for s in range(len(parts))), Fraction(0))
            report.checked += 1
            expected = 1 if a == b else 0
            if total != expected:
                report.fail(key=[list(parts[a]), list(parts[b])], expected=str(expected), actual=str(total))
    return report


def verify_hook_dimension(n: int) -> Report:
    """``chi_nu(C_{1^n}) = n! / prod(hooks)`` for every ``nu`` of ``n``."""
    report = Report("hook-dimension", params={"n": n})
    table = character_table(n)
    identity = (1,) * n
    for nu in table.partitions:
        report.checked += 1
        expected = factorial(n) // prod(hook_lengths(nu))
        actual = table.value(nu, identity)
        if actual != expected:
            report.fail(key=list(nu), expected=expected, actual=actual)
    return report


def character_values(n: int) -> dict:
    """``{(nu, mu): chi_nu(C_mu)}`` for every pair of partitions of ``n``."""
    table = character_table(n)
    return {(nu, mu): table.value(nu, mu) for nu in table.partitions for mu in table.partitions}


__all__ = [
    "CharacterTable", "Partition", "character_table", "character_values", "chi",
    "chi_kernel", "chi_uncached", "verify_hook_dimension", "verify_orthogonality",
]
