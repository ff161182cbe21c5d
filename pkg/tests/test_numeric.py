import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vecpart.numeric import (
    GaussianRational as G,
    circulator_shift_basis,
    cyclotomic_poly,
    divisors,
    euler_phi,
    factorize,
    format_rational,
    lcm,
    moebius,
    parse_gaussian,
    prime_circulator,
    reduce_shift,
    vector_circulator,
)


def root_sum(j, s):
    """Float oracle: sum of rho**s over primitive j-th roots of unity."""
    return sum(cmath.exp(2j * cmath.pi * k * s / j) for k in range(1, j + 1) if math.gcd(k, j) == 1)


def von_sterneck(j, s):
    g = math.gcd(j, s) if s else j
    return moebius(j // g) * euler_phi(j) // euler_phi(j // g)


def test_factorize_small():
    assert factorize(1).factors == ()
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert factorize(97).factors == ((97, 1),)
    for n in range(1, 500):
        f = factorize(n)
        assert f.value == n
        assert [p for p, _ in f] == sorted({p for p, _ in f})
    with pytest.raises(ValueError):
        factorize(0)


def test_phi_and_mu_against_definitions():
    for n in range(1, 200):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert sum(moebius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(-6) == [1, 2, 3, 6]
    with pytest.raises(ValueError):
        divisors(0)


def test_circulator_known_values():
    assert [prime_circulator(2, s) for s in range(4)] == [1, -1, 1, -1]
    assert [prime_circulator(3, s) for s in range(3)] == [2, -1, -1]
    assert [prime_circulator(4, s) for s in range(4)] == [2, 0, -2, 0]
    assert prime_circulator(1, 17) == 1
    with pytest.raises(ValueError):
        prime_circulator(0, 1)


def test_circulator_float_oracle():
    for j in range(1, 37):
        for s in range(-50, 51):
            z = root_sum(j, s)
            assert abs(z.imag) < 1e-9
            assert abs(z.real - prime_circulator(j, s)) < 1e-9


def test_circulator_closed_form():
    for j in range(1, 37):
        for s in range(-50, 51):
            assert prime_circulator(j, s) == von_sterneck(j, s)


@given(st.integers(1, 60), st.integers(-500, 500))
def test_circulator_periodic_and_even(j, s):
    assert prime_circulator(j, s + j) == prime_circulator(j, s)
    assert prime_circulator(j, -s) == prime_circulator(j, s)
    assert prime_circulator(j, 0) == euler_phi(j)


@given(st.integers(1, 30), st.integers(1, 30), st.integers(-300, 300))
def test_circulator_multiplicative(a, b, s):
    if math.gcd(a, b) == 1:
        assert prime_circulator(a * b, s) == prime_circulator(a, s) * prime_circulator(b, s)


def test_circulator_sum_over_divisors():
    # sum over d | n of psi_d(s) is n when n | s, else 0
    for n in range(1, 25):
        for s in range(-30, 30):
            total = sum(prime_circulator(d, s) for d in divisors(n))
            assert total == (n if s % n == 0 else 0)


def test_vector_circulator():
    assert vector_circulator((2, 3), (1, 3)) == -2
    assert vector_circulator((1, 1), (7, -4)) == 1
    assert vector_circulator((2, 2), (3, 5)) == 1
    assert vector_circulator((2, 4), (1, 5)) == 0
    with pytest.raises(ValueError):
        vector_circulator((2,), (1, 2))


def test_cyclotomic():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    for n in range(1, 40):
        assert len(cyclotomic_poly(n)) - 1 == euler_phi(n)


@given(st.integers(1, 24), st.integers(0, 200), st.integers(-100, 100))
def test_shift_reduction_preserves_values(j, a, s):
    lhs = prime_circulator(j, s - a)
    row = circulator_shift_basis(j)[a % j]
    assert lhs == sum(c * prime_circulator(j, s - b) for b, c in enumerate(row))


def test_reduce_shift_vector():
    # psi_2(s1 - 1) psi_3(s2 - 2) over basis shifts
    terms = reduce_shift((2, 3), (1, 2))
    for s1 in range(-4, 4):
        for s2 in range(-4, 4):
            lhs = vector_circulator((2, 3), (s1 - 1, s2 - 2))
            rhs = sum(c * vector_circulator((2, 3), (s1 - b[0], s2 - b[1])) for b, c in terms)
            assert lhs == rhs
    assert all(b[0] < 1 and b[1] < 2 for b, _ in terms)


def test_lcm():
    assert lcm(4, 6) == 12
    assert lcm() == 1


small = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)


@given(small, small, small, small)
def test_gaussian_field(a, b, c, d):
    x, y = G(a, b), G(c, d)
    assert x + y == y + x
    assert x * y == y * x
    assert (x - y) + y == x
    if y:
        assert (x / y) * y == x
    z = complex(float(a), float(b)) * complex(float(c), float(d))
    w = x * y
    assert cmath.isclose(complex(float(w.re), float(w.im)), z, rel_tol=1e-12, abs_tol=1e-12)


def test_gaussian_text_and_json():
    assert parse_gaussian("1, ".strip(", ")) == G(1)
    assert parse_gaussian("-1+1i") == G(-1, 1)
    assert parse_gaussian("1/2-3/4i") == G(Fraction(1, 2), Fraction(-3, 4))
    assert parse_gaussian("-i") == G(0, -1)
    assert parse_gaussian("3i") == G(0, 3)
    with pytest.raises(ValueError):
        parse_gaussian("abc")
    g = G(Fraction(-3, 2), 5)
    assert G.from_json(g.to_json()) == g
    assert str(G(1, -1)) == "1-i"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert G(2) ** -2 == G(Fraction(1, 4))
    with pytest.raises(ZeroDivisionError):
        G(0).reciprocal()


@given(small, st.fractions(min_value=-1000, max_value=1000, max_denominator=50))
def test_rational_sum_is_exact(x, y):
    b, d = x.denominator, y.denominator
    total = (x + y) * (b * d)
    assert total.denominator == 1 and total == x.numerator * d + y.numerator * b
