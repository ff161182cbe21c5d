from fractions import Fraction

from hypothesis import given, settings, strategies as st

from vecpart import identities as idn

parts = st.lists(st.integers(1, 5), min_size=1, max_size=3).map(tuple)
ks = st.integers(0, 5)


@settings(max_examples=30, deadline=None)
@given(ks, parts)
def test_recursion_and_reflection(k, d):
    for fn in (idn.recursion, idn.reflection):
        lhs, rhs = fn(k, d)
        assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(ks, parts, parts)
def test_binomial(n, d1, d2):
    lhs, rhs = idn.binomial(n, d1, d2)
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(ks, parts, st.sampled_from([2, 3]))
def test_multiplication_sum(k, d, p):
    lhs, rhs = idn.multiplication_sum(k, d, p)
    assert lhs == rhs


def test_single_index_multiplication_only_for_one_parameter():
    for k in range(6):
        for d in range(1, 6):
            for p in (2, 3):
                lhs, rhs = idn.multiplication_sum_single(k, (d,), p)
                assert lhs == rhs
    # two parameters: k = 0 gives p on the left but p^2 on the right
    lhs, rhs = idn.multiplication_sum_single(0, (1, 1), 2)
    assert lhs.constant_term() == 2 and rhs.constant_term() == 4


@settings(max_examples=30, deadline=None)
@given(ks, st.data())
def test_multiplication_periods(k, data):
    d = data.draw(parts)
    periods = tuple(data.draw(st.sampled_from([2, 3])) for _ in d)
    lhs, rhs = idn.multiplication_periods(k, d, periods)
    assert lhs == rhs


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3).map(tuple), st.sampled_from([2, 3]))
def test_vector_multiplication(k, p):
    lhs, rhs = idn.vector_argument_multiplication(k, p)
    assert lhs == rhs


def test_bernoulli_eulerian_at_minus_one():
    # the only rational rho != 1 with rho^p = 1 is -1, which needs p even
    for k in range(1, 7):
        for p in (2, 4, 6):
            lhs, rhs = idn.bernoulli_eulerian(k, p, -1)
            assert lhs == rhs


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple), st.integers(0, 3))
def test_vector_argument_eulerian_relation(k, extra):
    lhs, rhs = idn.vector_argument_eulerian_relation(k, 2 * (1 + extra % 2), Fraction(-1))
    assert lhs == rhs


@settings(max_examples=15, deadline=None)
@given(ks, st.lists(st.integers(1, 4), min_size=1, max_size=3).map(tuple), st.data())
def test_bernoulli_eulerian_higher(k, d, data):
    periods = tuple(data.draw(st.sampled_from([2, 4])) for _ in d)
    lhs, rhs = idn.bernoulli_eulerian_higher(k, d, periods, (-1,) * len(d))
    assert lhs == rhs


def test_vector_series_relation_and_round_trip():
    rows = ((1, 2, 0), (1, 0, 1))
    lhs, rhs = idn.bernoulli_eulerian_vector(rows, (2, 2, 2), (-1, -1, -1), 4)
    assert lhs == rhs
    lhs, rhs = idn.bernoulli_series_check(rows, 4)
    assert lhs == rhs
