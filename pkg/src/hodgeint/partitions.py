"""Integer partitions and the statistics attached to them."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Partitions compare as tuples, so ``sorted(..., reverse=True)`` gives the
    reverse lexicographic order used everywhere for deterministic output.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"5,5,4,1,1,1"``; ``"-"`` (or an empty string) is the empty partition."""
        text = text.strip()
        if text in ("-", "", "()", "[]"):
            return cls(())
        parts = [int(t) for t in text.replace(" ", "").strip("()[]").split(",") if t]
        return cls(sorted(parts, reverse=True))

    def format(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict:
        return dict(Counter(self))

    def aut_order(self) -> int:
        """``|Aut(mu)|``: product of factorials of part multiplicities."""
        return prod(factorial(m) for m in Counter(self).values())

    def z(self) -> int:
        return z_mu(self)

    def kappa(self) -> int:
        return kappa_mu(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def contains(self, other: Partition) -> bool:
        """Cellwise containment ``other ⊆ self`` of Young diagrams."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def remove(self, parts) -> Partition:
        """Multiset difference ``self - parts`` (parts must be present)."""
        rest = Counter(self)
        rest.subtract(Counter(parts))
        if any(v < 0 for v in rest.values()):
            raise ValueError(f"{tuple(parts)} is not a sub-multiset of {tuple(self)}")
        return Partition(sorted(rest.elements(), reverse=True))

    def merge(self, other) -> Partition:
        """Multiset union of parts, i.e. the partition of ``p_self * p_other``."""
        return Partition(sorted(self + tuple(other), reverse=True))


EMPTY = Partition(())


@lru_cache(maxsize=None)
def _partitions(n: int, bound: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> [tuple(p) for p in enumerate_partitions(3)]
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        return []
    return [Partition(p) for p in _partitions(n, n)]


def partitions_up_to(max_size: int, include_empty: bool = False) -> list[Partition]:
    """Partitions ordered by size, then reverse lexicographically."""
    out = []
    for n in range(0 if include_empty else 1, max_size + 1):
        out.extend(enumerate_partitions(n))
    return out


def canonical_key(mu: Partition):
    """Sort key realising the size-then-reverse-lex order in ascending sorts."""
    return (sum(mu), tuple(-p for p in mu))


def z_mu(mu) -> int:
    """Centraliser order ``|Aut(mu)| * prod(mu_i)``."""
    return prod(factorial(m) for m in Counter(mu).values()) * prod(mu)


def kappa_mu(mu) -> int:
    """``|mu| + sum_i (mu_i^2 - 2 i mu_i)`` with 1-based ``i``; twice the content sum."""
    return sum(mu) + sum(m * m - 2 * i * m for i, m in enumerate(mu, start=1))


def conjugate(mu) -> Partition:
    if not mu:
        return EMPTY
    return Partition(sum(1 for m in mu if m > j) for j in range(mu[0]))


def hook_lengths(mu) -> list[int]:
    """Hook length of every cell, row by row."""
    conj = conjugate(mu)
    return [mu[i] - j - 1 + conj[j] - i for i in range(len(mu)) for j in range(mu[i])]


def subdiagrams(mu) -> list[Partition]:
    """All partitions ``eta`` with ``eta ⊆ mu`` cellwise (including empty and ``mu``)."""
    out = []

    def rec(i, bound, acc):
        if i == len(mu):
            out.append(Partition(acc))
            return
        for v in range(min(bound, mu[i]), -1, -1):
            if v == 0:
                out.append(Partition(acc))
                return
            rec(i + 1, v, acc + [v])

    rec(0, mu[0] if mu else 0, [])
    return out


def sub_multisets(mu) -> list[tuple[Partition, Partition]]:
    """Every split of the parts of ``mu`` into ``(nu, rest)`` as multisets.

    Each distinct sub-multiset appears once.
    """
    counts = sorted(Counter(mu).items(), reverse=True)
    out = []

    def rec(idx, chosen, rest):
        if idx == len(counts):
            out.append((Partition(chosen), Partition(rest)))
            return
        part, mult = counts[idx]
        for k in range(mult, -1, -1):
            rec(idx + 1, chosen + [part] * k, rest + [part] * (mult - k))

    rec(0, [], [])
    return out


def sign(mu) -> int:
    """Sign of a permutation of cycle type ``mu``."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1
