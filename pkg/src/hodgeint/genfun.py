"""Partition-indexed generating functions.

A coefficient family ``{A_mu}`` stands for ``sum_mu A_mu p_mu`` with
``p_mu = p_{mu_1} ... p_{mu_l}``. Monomials multiply by merging partitions,
so the power-sum algebra is never built explicitly.

Values can be any exact ring element supporting ``+``, ``*`` and scaling by a
``Fraction``: :class:`~hodgeint.algebra.LambdaSeries`, ``TauPoly``,
``Fraction`` or ``int``.

Pair families ``{A_{mu+, mu-}}`` use the same machinery with two alphabets of
power sums; internally a key is a multiset of signed atoms ``(+1, k)`` and
``(-1, k)``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial

from hodgeint.algebra.gaussian import GaussianRational
from hodgeint.algebra.series import LambdaSeries
from hodgeint.errors import BadConstantTerm, EmptyKeyPresent
from hodgeint.partitions import Partition, canonical_key


# ------------------------------------------------------------ atom multisets
def _sub_splits(atoms: tuple):
    """Each distinct split of a sorted atom tuple into ``(chosen, rest)``."""
    counts = sorted(Counter(atoms).items())
    out = []

    def rec(idx, chosen, rest):
        if idx == len(counts):
            out.append((tuple(chosen), tuple(rest)))
            return
        atom, mult = counts[idx]
        for k in range(mult + 1):
            rec(idx + 1, chosen + [atom] * k, rest + [atom] * (mult - k))

    rec(0, [], [])
    return out


def _block_decompositions(atoms: tuple, allowed):
    """Multisets of nonempty blocks, each in ``allowed``, whose union is ``atoms``.

    Each multiset of blocks is returned once, as a sorted tuple.
    """
    seen = set()
    for blocks in _raw_decompositions(atoms, allowed):
        canon = tuple(sorted(blocks))
        if canon not in seen:
            seen.add(canon)
            yield canon


def _raw_decompositions(atoms: tuple, allowed):
    if not atoms:
        yield ()
        return
    first = atoms[0]
    # the block holding the first atom; repeated atoms can revisit a multiset
    for chosen, rest in _sub_splits(atoms[1:]):
        block = (first,) + chosen
        if block not in allowed:
            continue
        for tail in _raw_decompositions(rest, allowed):
            yield (block,) + tail


def _symmetry_factor(blocks) -> int:
    out = 1
    for m in Counter(blocks).values():
        out *= factorial(m)
    return out


def _is_one(value) -> bool:
    if isinstance(value, LambdaSeries):
        return value.items() == [(0, value.coeff(0))] and value.coeff(0) == 1
    return value == 1


def _one_like(values):
    series = [v for v in values if isinstance(v, LambdaSeries)]
    if series:
        return LambdaSeries.const(1, max(v.order for v in series))
    return 1


def _scaled(value, factor: Fraction):
    if isinstance(value, LambdaSeries):
        return value.scale(factor)
    return value * factor


def _disconnect_atoms(entries: dict, weight, bound: int) -> dict:
    if () in entries:
        raise EmptyKeyPresent("a connected family has no entry at the empty key")
    allowed = {k for k, v in entries.items() if _nonzero(v)}
    out = {(): _one_like(entries.values())}
    targets = _all_keys_from(allowed, weight, bound)
    for key in targets:
        total = None
        for blocks in _block_decompositions(key, allowed):
            term = entries[blocks[0]]
            for b in blocks[1:]:
                term = term * entries[b]
            sym = _symmetry_factor(blocks)
            if sym != 1:
                term = _scaled(term, Fraction(1, sym))
            total = term if total is None else total + term
        if total is not None:
            out[key] = total
    return out


def _all_keys_from(allowed: set, weight, bound: int) -> list:
    """Every atom multiset of weight <= bound reachable by merging allowed blocks."""
    reached = {()}
    frontier = {()}
    while frontier:
        nxt = set()
        for key in frontier:
            w = weight(key)
            for b in allowed:
                if w + weight(b) <= bound:
                    merged = tuple(sorted(key + b))
                    if merged not in reached:
                        reached.add(merged)
                        nxt.add(merged)
        frontier = nxt
    reached.discard(())
    return sorted(reached, key=lambda k: (weight(k), k))


def _nonzero(value) -> bool:
    return bool(value)


def _connect_atoms(entries: dict, weight) -> dict:
    one = entries.get(())
    if one is None or not _is_one(one):
        raise BadConstantTerm("the empty key must carry the constant 1")
    keys = sorted((k for k in entries if k), key=lambda k: (weight(k), k))
    out: dict = {}
    # Euler operator: |mu| B_mu = sum_{nu <= mu, nu != 0} |nu| A_nu B_{mu - nu}
    for key in keys:
        w = weight(key)
        total = entries[key]
        for chosen, rest in _sub_splits(key):
            if not chosen or not rest:
                continue
            a = out.get(chosen)
            b = entries.get(rest)
            if a is None or b is None or not _nonzero(a) or not _nonzero(b):
                continue
            total = total - _scaled(a * b, Fraction(weight(chosen), w))
        out[key] = total
    return out


# ---------------------------------------------------------------- containers
class PartitionMap:
    """Finite family ``{mu: value}`` with ``|mu| <= max_size``.

    Iteration runs by size, then reverse lexicographically.
    """

    def __init__(self, entries=None, max_size: int | None = None):
        data = {}
        for k, v in (entries or {}).items():
            data[Partition(sorted(k, reverse=True))] = v
        if max_size is None:
            max_size = max((k.size for k in data), default=0)
        for k in data:
            if k.size > max_size:
                raise ValueError(f"key {tuple(k)} exceeds max_size {max_size}")
        self.max_size = max_size
        self.entries = {k: data[k] for k in sorted(data, key=canonical_key)}

    def __getitem__(self, mu):
        return self.entries[Partition(sorted(mu, reverse=True))]

    def get(self, mu, default=None):
        return self.entries.get(Partition(sorted(mu, reverse=True)), default)

    def __contains__(self, mu):
        return Partition(sorted(mu, reverse=True)) in self.entries

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return self.entries.items()

    def keys(self):
        return self.entries.keys()

    def __eq__(self, other):
        if not isinstance(other, PartitionMap):
            return NotImplemented
        return self.max_size == other.max_size and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"PartitionMap({self.entries!r}, max_size={self.max_size})"

    def _atoms(self):
        return {tuple(sorted(k)): v for k, v in self.entries.items()}

    @classmethod
    def _from_atoms(cls, atoms: dict, max_size: int) -> PartitionMap:
        return cls({Partition(sorted(k, reverse=True)): v for k, v in atoms.items()}, max_size)


class PairMap:
    """Finite family ``{(mu+, mu-): value}`` with ``|mu+| + |mu-| <= max_size``."""

    def __init__(self, entries=None, max_size: int | None = None):
        data = {}
        for (plus, minus), v in (entries or {}).items():
            data[(Partition(sorted(plus, reverse=True)), Partition(sorted(minus, reverse=True)))] = v
        if max_size is None:
            max_size = max((p.size + m.size for p, m in data), default=0)
        for p, m in data:
            if p.size + m.size > max_size:
                raise ValueError(f"key {(tuple(p), tuple(m))} exceeds max_size {max_size}")
        self.max_size = max_size
        order = sorted(data, key=lambda pm: (pm[0].size + pm[1].size, canonical_key(pm[0]), canonical_key(pm[1])))
        self.entries = {k: data[k] for k in order}

    @staticmethod
    def _key(plus, minus):
        return (Partition(sorted(plus, reverse=True)), Partition(sorted(minus, reverse=True)))

    def __getitem__(self, key):
        return self.entries[self._key(*key)]

    def get(self, key, default=None):
        return self.entries.get(self._key(*key), default)

    def __contains__(self, key):
        return self._key(*key) in self.entries

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return self.entries.items()

    def keys(self):
        return self.entries.keys()

    def __eq__(self, other):
        if not isinstance(other, PairMap):
            return NotImplemented
        return self.max_size == other.max_size and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"PairMap({self.entries!r}, max_size={self.max_size})"

    def _atoms(self):
        out = {}
        for (plus, minus), v in self.entries.items():
            out[tuple(sorted([(1, p) for p in plus] + [(-1, m) for m in minus]))] = v
        return out

    @classmethod
    def _from_atoms(cls, atoms: dict, max_size: int) -> PairMap:
        entries = {}
        for key, v in atoms.items():
            plus = sorted((k for s, k in key if s == 1), reverse=True)
            minus = sorted((k for s, k in key if s == -1), reverse=True)
            entries[(tuple(plus), tuple(minus))] = v
        return cls(entries, max_size)


def _weight_plain(key) -> int:
    return sum(key)


def _weight_pair(key) -> int:
    return sum(k for _, k in key)


def _weight_for(family):
    return _weight_pair if isinstance(family, PairMap) else _weight_plain


# ---------------------------------------------------------------- transforms
def disconnect(family):
    """Coefficients of ``exp(sum A_mu p_mu)`` up to the family's size bound.

    >>> from fractions import Fraction
    >>> B = disconnect(PartitionMap({(1,): Fraction(3)}, max_size=2))
    >>> B[(1, 1)]
    Fraction(9, 2)
    """
    weight = _weight_for(family)
    atoms = _disconnect_atoms(family._atoms(), weight, family.max_size)
    return type(family)._from_atoms(atoms, family.max_size)


def connect(family):
    """Coefficients of ``log(sum B_mu p_mu)``; needs ``B_empty == 1``."""
    weight = _weight_for(family)
    atoms = family._atoms()
    if () not in atoms:
        raise BadConstantTerm("the empty key must carry the constant 1")
    out = _connect_atoms(atoms, weight)
    return type(family)._from_atoms(out, family.max_size)


# -------------------------------------------------------------- cut and join
def _add(acc: dict, key, value):
    if key in acc:
        acc[key] = acc[key] + value
    else:
        acc[key] = value


def cutjoin_bracket(family: PartitionMap) -> PartitionMap:
    """The bracket of the cut-and-join operator, before the ``i*lambda/2`` factor.

    ``sum_{i,j} (i+j) p_i p_j dF/dp_{i+j} + i j p_{i+j} (dF/dp_i dF/dp_j + d2F/dp_i dp_j)``
    over ordered pairs ``(i, j)`` of positive integers. Terms whose size
    exceeds ``max_size`` are dropped; only the quadratic term can produce
    them, since it adds the sizes of two monomials.
    """
    bound = family.max_size
    acc: dict = {}
    entries = [(k, v) for k, v in family.items() if _nonzero(v)]
    for mu, f in entries:
        mult = Counter(mu)
        # cut: one part k splits into every ordered (i, k - i)
        for k, m in mult.items():
            rest = list(mu.remove([k]))
            for i in range(1, k):
                key = Partition(sorted(rest + [i, k - i], reverse=True))
                _add(acc, key, f * (k * m))
        # join: two parts i, j merge
        parts = sorted(mult)
        for a in parts:
            for b in parts:
                if a == b:
                    coeff = mult[a] * (mult[a] - 1)
                else:
                    coeff = mult[a] * mult[b]
                if not coeff:
                    continue
                key = Partition(sorted(list(mu.remove([a, b])) + [a + b], reverse=True))
                _add(acc, key, f * (a * b * coeff))
    # quadratic: dF/dp_i * dF/dp_j
    for mu, f in entries:
        for nu, g in entries:
            if mu.size + nu.size > bound:
                continue
            fg = None
            for i, mi in Counter(mu).items():
                for j, nj in Counter(nu).items():
                    if fg is None:
                        fg = f * g
                    key = Partition(sorted(list(mu.remove([i])) + list(nu.remove([j])) + [i + j], reverse=True))
                    _add(acc, key, fg * (i * j * mi * nj))
    acc = {k: v for k, v in acc.items() if k.size <= bound}
    return PartitionMap(acc, bound)


def cutjoin_apply(family: PartitionMap) -> PartitionMap:
    """Right-hand side of the cut-and-join equation for a family of lambda-series."""
    half_i = GaussianRational(0, Fraction(1, 2))
    bracket = cutjoin_bracket(family)
    out = {}
    for k, v in bracket.items():
        if isinstance(v, LambdaSeries):
            out[k] = v.scale(half_i).shift(1)
        else:
            out[k] = LambdaSeries.monomial(v * half_i, 1, 1)
    return PartitionMap(out, family.max_size)


__all__ = ["PairMap", "PartitionMap", "connect", "cutjoin_apply", "cutjoin_bracket", "disconnect"]
