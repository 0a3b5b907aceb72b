import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Poly
from sympy.abc import x

from power_domination.counting.combinatorics import (
    CountPoly,
    CountReport,
    binomial,
    bracket_convolution,
    bracket_literal,
    bracket_series,
    exact_parts_count,
    get_bracket,
    multinomial,
    nondecreasing_sequences,
    partition_count,
    two_block_tuples,
)
from power_domination.counting.recursive import base_table, build_tables
from power_domination.errors import InvalidParameterError

H21 = CountPoly([0, 2])
E21 = CountPoly([0, 1, 3, 1])


@pytest.mark.parametrize("n, r, expected", [(7, 4, 35), (3, 3, 1), (10, 3, 120), (5, -1, 0), (5, 6, 0)])
def test_binomial(n, r, expected):
    assert binomial(n, r) == expected


def test_binomial_is_exact_for_large_arguments():
    assert binomial(200, 100) == math.factorial(200) // math.factorial(100) ** 2


@pytest.mark.parametrize(
    "n, parts, expected",
    [(2, [1, 0, 0, 0, 1], 2), (2, [0, 0, 2, 0, 0], 1), (6, [6], 1), (6, [1, 2, 3], 60)],
)
def test_multinomial(n, parts, expected):
    assert multinomial(n, parts) == expected
    assert expected * math.prod(math.factorial(p) for p in parts) == math.factorial(n)


@pytest.mark.parametrize("parts", [[1, 1], [3, -1, 1]])
def test_multinomial_rejects_bad_parts(parts):
    with pytest.raises(InvalidParameterError):
        multinomial(3, parts)


def test_two_block_tuples_examples():
    assert set(two_block_tuples(2, 0, 4)) == {(0, 4), (1, 3), (2, 2)}
    assert set(two_block_tuples(2, 1, 3)) == {(j, 3 - j) for j in range(4)}
    assert list(two_block_tuples(3, 2, 0)) == [(0, 0, 0)]


def test_two_block_tuples_are_unique_and_sorted_by_block():
    tuples = list(two_block_tuples(4, 2, 7))
    assert len(tuples) == len(set(tuples))
    for t in tuples:
        assert sum(t) == 7
        assert list(t[:2]) == sorted(t[:2]) and list(t[2:]) == sorted(t[2:])


@pytest.mark.parametrize("m, l, k", [(2, 1, 5), (3, 0, 6), (3, 2, 4), (4, 2, 7), (4, 4, 9)])
def test_two_block_count_is_partition_convolution(m, l, k):
    expected = sum(
        partition_count(j, l) * partition_count(k - j, m - l) for j in range(k + 1)
    )
    assert len(list(two_block_tuples(m, l, k))) == expected


def test_two_block_tuples_rejects_bad_split():
    with pytest.raises(InvalidParameterError):
        list(two_block_tuples(2, 3, 1))


@pytest.mark.parametrize("k, m, expected", [(4, 2, 3), (0, 3, 1), (9, 1, 1), (5, 5, 7), (10, 3, 14)])
def test_partition_count(k, m, expected):
    assert partition_count(k, m) == expected


def test_exact_parts_recurrence():
    for k in range(1, 15):
        for m in range(1, k + 1):
            assert exact_parts_count(k, m) == exact_parts_count(k - 1, m - 1) + exact_parts_count(k - m, m)


def test_nondecreasing_sequences():
    assert list(nondecreasing_sequences(3, 2)) == [(0, 3), (1, 2)]
    assert list(nondecreasing_sequences(0, 0)) == [()]
    assert list(nondecreasing_sequences(2, 0)) == []


@pytest.mark.parametrize("k, m, expected", [(1500, 1, 1), (2000, 2, 1001), (1600, 0, 0)])
def test_partition_count_large_totals(k, m, expected):
    assert partition_count(k, m) == expected


@given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=4))
def test_nondecreasing_sequences_match_filtered_combinations(total, length):
    expected = [
        seq
        for seq in itertools.combinations_with_replacement(range(total + 1), length)
        if sum(seq) == total
    ]
    assert list(nondecreasing_sequences(total, length)) == expected
    assert len(expected) == partition_count(total, length)


def test_nondecreasing_sequences_large_totals():
    assert list(nondecreasing_sequences(1600, 1)) == [(1600,)]
    pairs = list(nondecreasing_sequences(1500, 2))
    assert len(pairs) == 751
    assert pairs[0] == (0, 1500) and pairs[-1] == (750, 750)


def test_literal_bracket_large_total():
    H = CountPoly([1] * 1201)
    E = CountPoly([0] + [1] * 1200)
    assert bracket_literal(H, E, 2, 1, 1200) == 2400
    assert bracket_convolution(H, E, 2, 1, 1200) == 2400


@pytest.mark.parametrize(
    "l, k, expected",
    [(0, 4, 11), (1, 4, 4), (0, 3, 6), (1, 3, 12), (2, 3, 0)],
)
def test_worked_example_brackets(l, k, expected):
    assert bracket_literal(H21, E21, 2, l, k) == expected
    assert bracket_convolution(H21, E21, 2, l, k) == expected


def test_worked_example_total():
    parts = [
        bracket_literal(H21, E21, 2, 0, 4),
        bracket_literal(H21, E21, 2, 1, 4),
        bracket_literal(H21, E21, 2, 0, 3),
        bracket_literal(H21, E21, 2, 1, 3),
        bracket_literal(H21, E21, 2, 2, 3),
    ]
    assert parts == [11, 4, 6, 12, 0]
    assert sum(parts) == 33


def _real_tables():
    for m in range(2, 5):
        for table in build_tables(m, 2, 12):
            yield m, table.H, table.E


@pytest.mark.parametrize("m, H, E", list(_real_tables()))
def test_brackets_agree_on_real_tables(m, H, E):
    for l in range(m + 1):
        series = bracket_series(H, E, m, l, 12)
        for k in range(13):
            assert bracket_literal(H, E, m, l, k) == bracket_convolution(H, E, m, l, k) == series[k]


def test_brackets_agree_on_random_tables():
    rng = random.Random(20240611)
    for _ in range(200):
        m = rng.randint(2, 4)
        H = CountPoly(rng.randint(0, 9) for _ in range(rng.randint(1, 5)))
        E = CountPoly(rng.randint(0, 9) for _ in range(rng.randint(1, 5)))
        l = rng.randint(0, m)
        k = rng.randint(0, 8)
        assert bracket_literal(H, E, m, l, k) == bracket_convolution(H, E, m, l, k)


@given(
    st.integers(min_value=2, max_value=4),
    st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=4),
    st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=4),
    st.integers(min_value=1, max_value=8),
)
def test_brackets_sum_to_binomial_power(m, h_coefficients, e_coefficients, k):
    H, E = CountPoly(h_coefficients), CountPoly(e_coefficients)
    total = sum(bracket_convolution(H, E, m, l, k - 1) for l in range(m + 1))
    assert total == (H + E).power(m)[k - 1]


def test_negative_k_brackets_vanish():
    assert bracket_literal(H21, E21, 2, 1, -1) == 0
    assert bracket_convolution(H21, E21, 2, 1, -1) == 0
    with pytest.raises(InvalidParameterError):
        bracket_convolution(H21, E21, 2, 3, -1)


def test_get_bracket():
    assert get_bracket("literal") is bracket_literal
    with pytest.raises(InvalidParameterError):
        get_bracket("fft")


def test_count_poly_arithmetic():
    p = CountPoly([1, 2, 0, 0])
    q = CountPoly([0, 1])
    assert p == CountPoly([1, 2])
    assert len(p) == 4 and p.degree == 1
    assert p[10] == 0 and p[-1] == 0
    assert p + q == CountPoly([1, 3])
    assert p * q == CountPoly([0, 1, 2])
    assert p.shifted(2) == CountPoly([0, 0, 1, 2])
    assert p.power(3, limit=1) == CountPoly([1, 6])
    assert p.evaluate(10) == 21
    assert CountPoly().degree == -1
    assert CountPoly.monomial(3, 5) == CountPoly([0, 0, 0, 5])


def test_count_poly_sympy_bridge():
    p = CountPoly([3, 0, 1])
    assert p.to_sympy() == Poly(x**2 + 3, x)
    assert CountPoly.from_sympy(Poly(4 * x**3 + x, x)) == CountPoly([0, 1, 0, 4])


def test_height_one_tables_feed_the_bracket():
    table = base_table(2, 1)
    assert table.H == H21 and table.E == E21


def test_count_report_equality():
    assert CountReport(2, 1, [0, 1, 3, 3]) == CountReport(2, 1, (0, 1, 3, 3))
    assert CountReport(2, 0, [0, 0]).gamma_p is None
