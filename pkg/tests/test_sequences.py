import pytest
from hypothesis import given
from hypothesis import strategies as st

from assoc_mersenne.sequences import (
    EDGE_GF_DENOMINATOR,
    EDGE_GF_NUMERATOR,
    assoc_mersenne,
    edge_count_M_closed,
    edge_gf_coeffs,
    fib,
    lucas,
    lucas_from_fib,
    series_divide,
)


@pytest.mark.parametrize("n,value", [(0, 0), (1, 1), (7, 13), (20, 6765)])
def test_fib(n, value):
    assert fib(n) == value


@pytest.mark.parametrize("n,value", [(0, 2), (1, 1), (4, 7), (16, 2207)])
def test_lucas(n, value):
    assert lucas(n) == value


def test_assoc_mersenne_table():
    table = [0, 1, 1, 4, 5, 11, 16, 29, 45, 76, 121, 199, 320, 521, 841, 1364, 2205]
    assert [assoc_mersenne(n) for n in range(17)] == table


@given(st.integers(2, 300))
def test_recurrences(n):
    assert fib(n) == fib(n - 1) + fib(n - 2)
    assert lucas(n) == lucas(n - 1) + lucas(n - 2)
    assert assoc_mersenne(n) == assoc_mersenne(n - 1) + assoc_mersenne(n - 2) + 1 - (-1) ** n
    assert assoc_mersenne(n) == lucas(n) - 1 - (-1) ** n


@pytest.mark.parametrize("n,k,value", [(5, 1, 11), (5, 2, 11), (1, 1, 1)])
def test_lucas_from_fib_examples(n, k, value):
    assert lucas_from_fib(n, k) == value


@given(st.integers(1, 80).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_lucas_from_fib_matches_lucas(nk):
    n, k = nk
    assert lucas_from_fib(n, k) == lucas(n)


def test_lucas_from_fib_rejects_bad_k():
    with pytest.raises(ValueError):
        lucas_from_fib(3, 0)
    with pytest.raises(ValueError):
        lucas_from_fib(3, 4)


def test_negative_index_rejected():
    for f in (fib, lucas, assoc_mersenne):
        with pytest.raises(ValueError):
            f(-1)


@pytest.mark.parametrize("n,value", [(0, 0), (2, 0), (3, 3), (4, 4), (5, 15), (6, 24), (7, 49), (12, 912)])
def test_edge_count_closed(n, value):
    assert edge_count_M_closed(n) == value


def test_edge_gf_examples():
    assert edge_gf_coeffs(3) == [3]
    assert edge_gf_coeffs(5) == [3, 4, 15]
    assert edge_gf_coeffs(7)[-1] == 49
    with pytest.raises(ValueError):
        edge_gf_coeffs(2)


def test_edge_gf_matches_closed_form_far_out():
    coeffs = edge_gf_coeffs(150)
    assert coeffs == [edge_count_M_closed(n) for n in range(3, 151)]


def test_series_divide_roundtrip():
    # (3 - 2x + ...) / den, multiplied back by den, recovers the numerator
    q = series_divide(EDGE_GF_NUMERATOR, EDGE_GF_DENOMINATOR, 12)
    prod = [sum(EDGE_GF_DENOMINATOR[j] * q[i - j] for j in range(len(EDGE_GF_DENOMINATOR)) if 0 <= i - j)
            for i in range(12)]
    assert prod[: len(EDGE_GF_NUMERATOR)] == list(EDGE_GF_NUMERATOR)
    assert all(c == 0 for c in prod[len(EDGE_GF_NUMERATOR):])


def test_series_divide_needs_unit_constant_term():
    with pytest.raises((ValueError, ArithmeticError)):
        series_divide((1,), (2, 1), 4)
