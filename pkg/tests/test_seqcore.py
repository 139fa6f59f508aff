import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from seqcore import BitString, CyclicArrangement, IntervalRef, SequenceUtils

bit_lists = st.lists(st.integers(min_value=0, max_value=1), max_size=14)


def bits(text):
    return BitString.from_text(text)


def test_bitstring_rejects_other_symbols():
    with pytest.raises(ValueError):
        BitString.from_text("0120")
    with pytest.raises(ValueError):
        BitString((0, 2))


def test_bitstring_json():
    s = bits("0010")
    assert s.to_json() == {"bits": "0010", "ones": 1, "zeros": 3}
    assert BitString.from_json(s.to_json()) == s


def test_prefix_counts():
    assert SequenceUtils.prefix_counts(bits("01")) == [(1, 0), (1, 1)]
    assert SequenceUtils.prefix_counts(bits("")) == []
    assert SequenceUtils.prefix_counts(bits("0010010010"))[-1] == (7, 3)


def test_is_q_dominating():
    assert SequenceUtils.is_q_dominating(bits("0010"), 1)
    assert not SequenceUtils.is_q_dominating(bits("0100"), 1)
    assert SequenceUtils.is_q_dominating(bits("0"), 5)
    assert SequenceUtils.is_q_dominating(bits(""), 3)


def test_is_q_satisfying():
    assert SequenceUtils.is_q_satisfying(bits("001001001"), 2)
    assert SequenceUtils.is_q_satisfying(bits("000101000100"), 2)
    assert SequenceUtils.is_q_satisfying(bits("1"), 0)
    assert not SequenceUtils.is_q_satisfying(bits("1"), 1)


def test_is_q_ballot():
    assert SequenceUtils.is_q_ballot(bits("0011"), 1)
    assert SequenceUtils.is_q_ballot(bits("000000111"), 2)
    assert not SequenceUtils.is_q_ballot(bits("0001"), 1)


@given(bit_lists, st.integers(min_value=0, max_value=3))
def test_dominating_implies_satisfying(values, q):
    s = BitString(tuple(values))
    if SequenceUtils.is_q_dominating(s, q):
        assert SequenceUtils.is_q_satisfying(s, q)


@given(bit_lists, st.integers(min_value=0, max_value=3))
def test_leading_zero_turns_satisfying_into_dominating(values, q):
    s = BitString(tuple(values))
    assert SequenceUtils.is_q_satisfying(s, q) == SequenceUtils.is_q_dominating(BitString((0,) + s.bits), q)


def test_arrangement_parsing_canonicalizes(dominating_arrangement):
    assert dominating_arrangement.bits == (0, 0, 0, 0, 0, 1, 0, 0, 1)
    assert dominating_arrangement.to_text() == "cyc:000001001"


def test_arrangement_equality_is_rotation_only():
    a = CyclicArrangement((0, 0, 1, 0, 1))
    assert a == CyclicArrangement((1, 0, 0, 1, 0))
    assert hash(a) == hash(CyclicArrangement((0, 1, 0, 1, 0)))
    assert CyclicArrangement((0, 0, 0, 1, 0, 1, 1)) != CyclicArrangement((1, 1, 0, 1, 0, 0, 0))


def test_interval_indices():
    assert IntervalRef(1, 3).indices(5) == [2, 3]
    assert IntervalRef(3, 1).indices(5) == [4, 0, 1]
    assert IntervalRef(2, 2).indices(5) == [3, 4, 0, 1, 2]


def test_deficiency(small_arrangement):
    # one zero after a 1
    assert SequenceUtils.deficiency(small_arrangement, IntervalRef(2, 3), 1).value == -1
    assert SequenceUtils.deficiency(small_arrangement, IntervalRef(4, 4), 1).value == -1


@st.composite
def arrangements_with_points(draw):
    q = draw(st.integers(min_value=1, max_value=3))
    k = draw(st.integers(min_value=0, max_value=3))
    p = draw(st.integers(min_value=1, max_value=3))
    values = draw(st.permutations([1] * k + [0] * (q * k + p)))
    n = len(values)
    points = draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=3, max_size=3))
    return CyclicArrangement(tuple(values)), q, p, points


@given(arrangements_with_points())
def test_complementary_deficiencies_sum_to_minus_p(case):
    a, q, p, (r, s, _) = case
    if r == s:
        return
    total = (SequenceUtils.deficiency(a, IntervalRef(r, s), q).value
             + SequenceUtils.deficiency(a, IntervalRef(s, r), q).value)
    assert total == -p


@given(arrangements_with_points())
def test_deficiency_is_additive(case):
    a, q, _, (r, s, j) = case
    n = a.length
    if len({r, s, j}) < 3 or s not in IntervalRef(r, j).indices(n):
        return
    whole = SequenceUtils.deficiency(a, IntervalRef(r, j), q).value
    parts = SequenceUtils.deficiency(a, IntervalRef(r, s), q).value + SequenceUtils.deficiency(a, IntervalRef(s, j), q).value
    assert whole == parts


def test_good_zero_set_sizes(strong_arrangement):
    assert len(SequenceUtils.good_zero_set(strong_arrangement, 0, 2)) == 7
    assert SequenceUtils.good_zero_set(strong_arrangement, 3, 2) == frozenset({3})


def test_good_zero_set_with_all_zeros_matches_unrestricted(strong_arrangement):
    zeros = strong_arrangement.zero_positions()
    for r in zeros:
        assert (SequenceUtils.good_zero_set(strong_arrangement, r, 2, zeros)
                == SequenceUtils.good_zero_set(strong_arrangement, r, 2))


def test_good_zero_set_rejects_bad_input(small_arrangement):
    with pytest.raises(ValueError):
        SequenceUtils.good_zero_set(small_arrangement, 2, 1)
    with pytest.raises(ValueError):
        SequenceUtils.good_zero_set(small_arrangement, 0, 1, S=[0, 2])
    with pytest.raises(ValueError):
        SequenceUtils.good_zero_set(small_arrangement, 0, 1, S=[1])


def test_linearize(small_arrangement):
    assert SequenceUtils.linearize(small_arrangement, 4).to_text() == "00101"
    assert SequenceUtils.linearize(small_arrangement, 0).to_text() == "01010"
    texts = {SequenceUtils.linearize(small_arrangement, cut).to_text() for cut in range(5)}
    assert len(texts) == 5


def test_enumerate_bitstrings():
    assert [s.to_text() for s in SequenceUtils.enumerate_bitstrings(1, 1)] == ["01", "10"]
    assert len(list(SequenceUtils.enumerate_bitstrings(2, 3))) == 10
    assert [s.to_text() for s in SequenceUtils.enumerate_bitstrings(0, 3)] == ["000"]


def test_enumerate_arrangements():
    assert len(list(SequenceUtils.enumerate_arrangements(2, 3))) == 2
    assert len(list(SequenceUtils.enumerate_arrangements(1, 1))) == 1
    assert [a.to_text() for a in SequenceUtils.enumerate_arrangements(2, 2)] == ["cyc:0011", "cyc:0101"]


@pytest.mark.parametrize("ones,zeros", [(2, 3), (3, 4), (2, 5), (3, 5)])
def test_arrangement_count_times_length(ones, zeros):
    strings = len(list(SequenceUtils.enumerate_bitstrings(ones, zeros)))
    assert len(list(SequenceUtils.enumerate_arrangements(ones, zeros))) * (ones + zeros) == strings


def test_bit_matrix_and_satisfying_mask():
    matrix = SequenceUtils.bit_matrix(3)
    assert matrix.shape == (8, 3)
    assert matrix[5].tolist() == [1, 0, 1]
    mask = SequenceUtils.satisfying_mask(matrix, 1)
    assert np.flatnonzero(mask).tolist() == [0, 1, 2]
    assert np.flatnonzero(SequenceUtils.satisfying_mask(matrix, 1, strict=True)).tolist() == [0, 1]
