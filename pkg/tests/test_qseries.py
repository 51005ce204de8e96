import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gordonlab.partitions import PartitionClass, enumerate_partitions
from gordonlab.qseries import (
    TruncatedSeries,
    andrews_gordon_product_side,
    andrews_gordon_sum_side,
    class_series,
    euler_partition_series,
    product_side,
)

series_st = st.integers(0, 12).flatmap(
    lambda n: st.lists(st.integers(-50, 50), min_size=n + 1, max_size=n + 1).map(TruncatedSeries.from_coeffs)
)


def brute_allowed_parts_count(n, allowed):
    """Partitions of n into parts from ``allowed`` by plain recursion."""
    allowed = sorted(set(allowed), reverse=True)

    def rec(rem, idx):
        if rem == 0:
            return 1
        return sum(rec(rem - a, j) for j, a in enumerate(allowed) if j >= idx and a <= rem)

    return rec(n, 0)


def test_inverse_pair_is_identity():
    one = TruncatedSeries.one(10)
    assert one.mul_one_minus_qk(1).mul_inv_one_minus_qk(1) == one


def test_geometric_series():
    assert TruncatedSeries.one(4).mul_inv_one_minus_qk(1).coeffs == (1, 1, 1, 1, 1)


def test_two_factor_product_by_hand():
    s = TruncatedSeries.one(5).mul_one_minus_qk(2).mul_one_minus_qk(3)
    assert s.coeffs == (1, 0, -1, -1, 0, 1)


def test_arithmetic_takes_min_trunc():
    a = TruncatedSeries.from_coeffs([1, 2, 3, 4])
    b = TruncatedSeries.from_coeffs([1, 1])
    assert (a + b).trunc == 1
    assert (a * b).coeffs == (1, 3)
    assert (a - b).coeffs == (0, 1)


def test_beyond_truncation_is_not_readable():
    s = TruncatedSeries.one(3)
    with pytest.raises(IndexError):
        s[4]


def test_bad_k_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries.one(3).mul_inv_one_minus_qk(0)


@given(series_st, st.integers(1, 6))
def test_mul_then_div_roundtrip(s, k):
    assert s.mul_one_minus_qk(k).mul_inv_one_minus_qk(k) == s
    assert s.mul_inv_one_minus_qk(k).mul_one_minus_qk(k) == s


@given(series_st, series_st)
def test_mul_commutes_and_matches_schoolbook(a, b):
    n = min(a.trunc, b.trunc)
    expect = [sum(a[x] * b[m - x] for x in range(m + 1)) for m in range(n + 1)]
    assert (a * b).coeffs == tuple(expect)
    assert a * b == b * a


@given(series_st, st.integers(1, 5))
def test_div_matches_geometric_multiplication(s, k):
    geo = TruncatedSeries.from_coeffs([1 if m % k == 0 else 0 for m in range(s.trunc + 1)])
    assert s.mul_inv_one_minus_qk(k) == s * geo


def test_json_and_csv_roundtrip():
    s = TruncatedSeries.from_coeffs([1, -2, 0, 10**30])
    assert TruncatedSeries.from_json(s.to_json()) == s
    assert json.loads(s.to_json()) == {"trunc": 3, "coeffs": [1, -2, 0, 10**30]}
    text = s.to_csv()
    assert text.splitlines()[0] == "n,coefficient"
    assert TruncatedSeries.from_csv(text) == s


def test_from_dict_rejects_inconsistent_length():
    with pytest.raises(ValueError):
        TruncatedSeries.from_dict({"trunc": 3, "coeffs": [1, 2]})


def test_str_rendering():
    s = TruncatedSeries.from_coeffs([1, 0, -1, 2])
    assert str(s) == "1 -q^2 +2q^3 + O(q^4)"


# -- product sides ---------------------------------------------------------------


def test_product_side_r3_i3():
    s = product_side(3, 3, 10)
    assert s[0] == 1
    assert s[3] == -1
    assert s[7] == 0


def test_product_side_rejects_bad_params():
    with pytest.raises(ValueError):
        product_side(2, 3, 5)


@pytest.mark.parametrize("r,i", [(2, 1), (2, 2), (3, 2), (4, 4)])
def test_product_side_truncation_coherence(r, i):
    assert product_side(r, i, 30).restrict(17) == product_side(r, i, 17)


def test_rogers_ramanujan_product_counts():
    # parts = +-1 mod 5, counted by direct recursion
    allowed = [j for j in range(1, 11) if j % 5 in (1, 4)]
    expect = [brute_allowed_parts_count(n, allowed) for n in range(11)]
    assert expect == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]
    assert andrews_gordon_product_side(2, 2, 10).coeffs == tuple(expect)


@pytest.mark.parametrize("r,i", [(2, 1), (3, 1), (3, 3), (4, 2)])
def test_ag_product_side_matches_brute_count(r, i):
    m = 2 * r + 1
    allowed = [j for j in range(1, 21) if j % m not in (0, i % m, (-i) % m)]
    assert andrews_gordon_product_side(r, i, 20).coeffs == tuple(brute_allowed_parts_count(n, allowed) for n in range(21))


def test_ag_constant_terms():
    assert andrews_gordon_sum_side(2, 1, 5)[0] == 1
    assert andrews_gordon_sum_side(2, 2, 5)[0] == 1


@pytest.mark.parametrize("r,i", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
def test_ag_identity_small(r, i):
    assert andrews_gordon_sum_side(r, i, 25) == andrews_gordon_product_side(r, i, 25)


def test_ag_sum_side_needs_r_at_least_two():
    with pytest.raises(ValueError):
        andrews_gordon_sum_side(1, 1, 5)


# -- class series ---------------------------------------------------------------


def test_gordon_b_series_r2_i2():
    assert class_series(PartitionClass.gordon_b(2, 2), 6).coeffs == (1, 1, 1, 1, 2, 2, 3)


def test_signed_distinct_r_at_7():
    assert class_series(PartitionClass.distinct_r(3, 3), 7, signed=True)[7] == 0


def test_all_class_series_is_euler_product():
    assert class_series(PartitionClass.all(), 20) == euler_partition_series(20)
    assert [len(enumerate_partitions(n)) for n in range(8)] == list(euler_partition_series(7))


@settings(max_examples=20)
@given(st.integers(1, 4).flatmap(lambda r: st.tuples(st.just(r), st.integers(1, r))), st.integers(0, 30))
def test_signed_r_series_equals_product(ri, n):
    r, i = ri
    assert class_series(PartitionClass.distinct_r(r, i), n, signed=True) == product_side(r, i, n)
