import pytest
from hypothesis import given, strategies as st

from regdistinct.qseries import (
    Series,
    check_intermediate_identity,
    eta_quotient,
    f,
    gf_regular_distinct,
    gf_regular_regular,
    gf_theorem9,
    inv,
    mul,
    render,
)

from conftest import partition_count_dp


def pentagonal(N):
    """Euler's pentagonal number theorem, an independent expansion of f_1."""
    c = [0] * (N + 1)
    c[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= N:
        sign = -1 if k % 2 else 1
        for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if g <= N:
                c[g] += sign
        k += 1
    return c


def test_f_examples():
    assert list(f(1, 6)) == [1, -1, -1, 0, 0, 1, 0]
    assert list(f(2, 6)) == [1, 0, -1, 0, -1, 0, 0]
    assert list(f(9, 6)) == [1, 0, 0, 0, 0, 0, 0]


def test_f1_matches_pentagonal_theorem():
    assert list(f(1, 80)) == pentagonal(80)


@pytest.mark.parametrize("k", [2, 3, 7])
def test_fk_is_dilated_f1(k):
    base = pentagonal(80)
    assert list(f(k, 80)) == [base[n // k] if n % k == 0 else 0 for n in range(81)]


def test_inverse():
    assert mul(f(1, 30), inv(f(1, 30))) == Series.one(30)
    assert inv(Series([-1, 2, 0])) == Series([-1, -2, -4])
    with pytest.raises(ValueError):
        inv(Series([2, 1]))


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=15), st.sampled_from([1, -1]))
def test_inverse_property(tail, c0):
    a = Series([c0] + tail)
    assert mul(a, inv(a)) == Series.one(a.degree)
    assert inv(inv(a)) == a


def test_mul_truncates_to_shorter():
    assert mul(Series([1, 1, 1]), Series([1, 1])) == Series([1, 2])


def test_euler_identity():
    odd = partition_count_dp(80, lambda x: x % 2 == 1)
    assert list(eta_quotient([2], [1], 80)) == odd


@pytest.mark.parametrize("m", range(2, 9))
def test_glaisher_counting(m):
    regular = partition_count_dp(40, lambda x: x % m != 0)
    distinct = partition_count_dp(40, cap=m - 1)
    assert list(eta_quotient([m], [1], 40)) == regular == distinct


def test_partition_numbers():
    assert list(eta_quotient([], [1], 10)) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("s, t", [(9, 15), (2, 2), (6, 10), (4, 6), (3, 5)])
def test_regular_distinct_counts(s, t):
    expected = partition_count_dp(40, lambda x: x % s != 0, t - 1)
    assert list(gf_regular_distinct(s, t, 40)) == expected
    assert gf_regular_distinct(s, t, 80) == gf_regular_distinct(t, s, 80)


@pytest.mark.parametrize("s, t", [(2, 3), (3, 5), (4, 9)])
def test_regular_regular_coprime(s, t):
    assert gf_regular_regular(s, t, 60) == gf_regular_distinct(s, t, 60)


def test_regular_regular_differs_when_not_coprime():
    a, b = gf_regular_regular(6, 10, 40), gf_regular_distinct(6, 10, 40)
    # the quotients differ by 1/f_30 versus 1/f_60, so q^30 is the first disagreement
    witness = next(n for n in range(41) if a[n] != b[n])
    assert witness == 30
    assert a[30] == partition_count_dp(30, lambda x: x % 6 and x % 10)[30]
    assert b[30] == partition_count_dp(30, lambda x: x % 6 != 0, 9)[30]


def test_zero_step_gf():
    assert gf_theorem9(2, 3, 10)[0] == 1
    # partitions of 5 into distinct parts prime to 6: (5) only
    assert gf_theorem9(2, 3, 10)[5] == 1
    with pytest.raises(ValueError):
        gf_theorem9(5, 3, 10)


@pytest.mark.parametrize("s, t", [(2, 3), (2, 5), (3, 4), (6, 10)])
def test_expected_zero_counts(s, t):
    expected = partition_count_dp(40, lambda x: x % s != 0 and x % t != 0, s - 1)
    assert list(gf_theorem9(s, t, 40)) == expected


def test_intermediate_identity():
    assert check_intermediate_identity(12, 1, 9, 40)
    assert check_intermediate_identity(12, 12, 9, 40)
    assert check_intermediate_identity(12, 4, 10, 60)
    with pytest.raises(ValueError):
        check_intermediate_identity(12, 5, 9, 40)


def test_render():
    assert render(f(1, 2)) == "0: 1\n1: -1\n2: -1"
