import pytest
from hypothesis import given
import hypothesis.strategies as st

from counting import CountingFormulas, _exact_div
from seqcore import SequenceUtils


def test_exact_div_rejects_remainders():
    assert _exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        _exact_div(7, 2)


def test_binomial_out_of_range_is_zero():
    assert CountingFormulas.binomial(5, 2) == 10
    assert CountingFormulas.binomial(5, -1) == 0
    assert CountingFormulas.binomial(5, 6) == 0


@pytest.mark.parametrize("k,expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
def test_catalan(k, expected):
    assert CountingFormulas.catalan(k) == expected
    assert CountingFormulas.catalan_recurrence(k) == expected


def test_generalized_catalan():
    assert CountingFormulas.generalized_catalan(2, 2) == 3
    assert CountingFormulas.generalized_catalan(3, 2) == 12
    assert CountingFormulas.generalized_catalan(4, 1) == CountingFormulas.catalan(4)


def test_count_q_satisfying():
    assert CountingFormulas.count_q_satisfying(1, 2, 1) == 2
    assert CountingFormulas.count_q_satisfying(3, 1, 2) == 12
    assert CountingFormulas.count_q_dominating(3, 1, 2) == 12
    with pytest.raises(ValueError):
        CountingFormulas.count_q_satisfying(2, 0, 1)


def test_count_q_satisfying_length():
    assert CountingFormulas.count_q_satisfying_length(9, 2) == 38
    assert CountingFormulas.count_q_satisfying_length(4, 1) == 6
    assert CountingFormulas.count_q_satisfying_length(0, 3) == 1


def test_stack_totals():
    assert CountingFormulas.count_q_stacks_total(4, 1) == 6
    assert CountingFormulas.count_q_stacks_total(5, 1) == 10
    assert CountingFormulas.count_q_stacks_total(6, 2) == 8
    assert CountingFormulas.count_q_stacks_total(1, 1) == 1
    assert CountingFormulas.count_q_stacks(6, 2, 2) == 3
    assert CountingFormulas.count_q_stacks(6, 3, 2) == 0


def test_count_primitive_ballot():
    assert CountingFormulas.count_primitive_ballot(0, 1) == 0
    assert CountingFormulas.count_primitive_ballot(1, 1) == 1
    assert CountingFormulas.count_primitive_ballot(2, 1) == 1
    assert CountingFormulas.count_primitive_ballot(1, 2) == 1


@given(st.integers(min_value=0, max_value=30), st.integers(min_value=1, max_value=4), st.data())
def test_stacks_match_satisfying_counts(m, q, data):
    n = data.draw(st.integers(min_value=0, max_value=m // (q + 1)))
    p = m - (q + 1) * n + 1
    assert CountingFormulas.count_q_stacks(m, n, q) == CountingFormulas.count_q_satisfying(n, p, q)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_recurrence_table_matches_closed_form(q):
    table = CountingFormulas.recurrence_table(40, q)
    for (m, n), value in table.entries.items():
        assert value == CountingFormulas.count_q_stacks(m, n, q), (m, n)
    assert sum(table.get(40, n) for n in range(41)) == CountingFormulas.count_q_stacks_total(40, q)
    for k in range(1, 40 // (q + 1) + 1):
        assert table.get((q + 1) * k - 2, k - 1) == CountingFormulas.count_primitive_ballot(k, q)


def test_recurrence_table_csv():
    table = CountingFormulas.recurrence_table(2, 1)
    assert table.to_csv().splitlines() == ["0,0,1", "1,0,1", "2,0,1", "2,1,1"]
    assert table.get(2, 5) == 0


def test_recurrence_table_rejects_bad_bounds():
    with pytest.raises(ValueError):
        CountingFormulas.recurrence_table(0, 1)
    with pytest.raises(ValueError):
        CountingFormulas.recurrence_table(3, 0)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_hp_recurrence(q):
    for n in range(13):
        assert CountingFormulas.hp_recurrence(n, q) == CountingFormulas.generalized_catalan(n, q)


def test_catalan_recurrence_to_twenty():
    assert [CountingFormulas.catalan_recurrence(n) for n in range(21)] == \
        [CountingFormulas.catalan(n) for n in range(21)]
    assert CountingFormulas.catalan_recurrence(20) == 6564120420


def test_count_q_dominating_by_exhaustion():
    for q in (1, 2):
        for k in range(4):
            for p in range(1, 4):
                strings = SequenceUtils.enumerate_bitstrings(k, q * k + p)
                expected = sum(1 for s in strings if SequenceUtils.is_q_dominating(s, q))
                assert CountingFormulas.count_q_dominating(k, p, q) == expected, (k, p, q)
