from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hodgeint.algebra import GaussianRational, LambdaSeries, TAU, TauPoly
from hodgeint.errors import BadConstantTerm, EmptyKeyPresent
from hodgeint.genfun import PairMap, PartitionMap, connect, cutjoin_apply, cutjoin_bracket, disconnect
from hodgeint.partitions import partitions_up_to

a, b, c = Fraction(3), Fraction(5), Fraction(7)


def test_disconnect_examples():
    B = disconnect(PartitionMap({(1,): a}, 3))
    assert B[(1,)] == a and B[(1, 1)] == a ** 2 / 2 and B[(1, 1, 1)] == a ** 3 / 6
    B = disconnect(PartitionMap({(2,): a}, 4))
    assert B[(2,)] == a and B[(2, 2)] == a ** 2 / 2
    B = disconnect(PartitionMap({(1,): a, (2,): b}, 3))
    assert B[(2, 1)] == a * b


def test_disconnect_counts_each_decomposition_once():
    B = disconnect(PartitionMap({(1,): a, (2, 1): b}, 4))
    assert B[(2, 1, 1)] == a * b


def test_connect_examples():
    A = connect(PartitionMap({(): 1, (1,): a, (1, 1): a ** 2 / 2}, 2))
    assert A[(1,)] == a and A.get((1, 1), 0) == 0
    A = connect(PartitionMap({(): 1, (1,): a, (1, 1): c}, 2))
    assert A[(1, 1)] == c - a ** 2 / 2


def test_errors():
    with pytest.raises(EmptyKeyPresent):
        disconnect(PartitionMap({(): 1, (1,): a}, 2))
    with pytest.raises(BadConstantTerm):
        connect(PartitionMap({(1,): a}, 2))


coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@given(st.dictionaries(st.sampled_from(partitions_up_to(5)), coeffs, max_size=6))
def test_connect_inverts_disconnect(data):
    A = PartitionMap(data, 5)
    back = connect(disconnect(A))
    for mu in partitions_up_to(5):
        assert back.get(mu, 0) == data.get(mu, 0)


def test_roundtrip_with_taupoly_values():
    data = {(1,): TAU + 1, (2,): TauPoly.monomial(GaussianRational(0, 1), 2), (2, 1): TauPoly.const(Fraction(1, 3))}
    back = connect(disconnect(PartitionMap(data, 4)))
    for mu in partitions_up_to(4):
        assert back.get(mu, TauPoly()) == data.get(mu, TauPoly())


def test_pair_roundtrip():
    data = {((1,), ()): a, ((), (1,)): b, ((1,), (1,)): c}
    B = disconnect(PairMap(data, 3))
    assert B[((1,), (1,))] == c + a * b
    assert B[((1, 1), (1,))] == a * c + a * a * b / 2
    back = connect(B)
    assert back[((1,), (1,))] == c and back.get(((1, 1), (1,)), 0) == 0


def test_cutjoin_examples():
    assert cutjoin_bracket(PartitionMap({(2,): Fraction(1)}, 4)).entries == {(1, 1): 2, (4,): 4}
    # a lone p_1 has nothing to cut or join; only the quadratic term reaches size 2
    assert not any(cutjoin_bracket(PartitionMap({(1,): Fraction(1)}, 1)).entries.values())
    assert cutjoin_bracket(PartitionMap({(1,): Fraction(1)}, 2)).entries == {(2,): 1}
    bracket = cutjoin_bracket(PartitionMap({(1, 1): Fraction(1)}, 2))
    assert bracket[(2,)] == 2


def test_cutjoin_apply_scales_by_half_i_lambda():
    out = cutjoin_apply(PartitionMap({(2,): LambdaSeries.const(1, 3)}, 2))
    assert out[(1, 1)] == LambdaSeries.monomial(GaussianRational(0, 1), 1, 4)


def test_cutjoin_linear_part_superposes():
    f = PartitionMap({(3,): Fraction(2)}, 3)
    g = PartitionMap({(2, 1): Fraction(5)}, 3)
    both = PartitionMap({(3,): Fraction(2), (2, 1): Fraction(5)}, 3)
    lhs = cutjoin_bracket(both)
    rf, rg = cutjoin_bracket(f), cutjoin_bracket(g)
    for mu in partitions_up_to(3):
        assert lhs.get(mu, 0) == rf.get(mu, 0) + rg.get(mu, 0)


def test_cutjoin_linear_part_preserves_size():
    f = PartitionMap({(3, 1): Fraction(1), (2, 2): Fraction(1)}, 4)
    assert {mu.size for mu in cutjoin_bracket(f)} <= {4}
