from fractions import Fraction
from functools import lru_cache

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from vecpart.families import (
    bernoulli_poly,
    eulerian_poly,
    higher_order_bernoulli,
    higher_order_eulerian,
    vector_bernoulli,
    vector_eulerian,
    vector_higher_order_bernoulli,
    vector_higher_order_eulerian,
)
from vecpart.series import MultiPoly, compositions

W = sympy.symbols("w")


def to_sympy(p, syms):
    return sympy.expand(
        sum(
            sympy.Rational(c.re.numerator, c.re.denominator) * sympy.prod([s**k for s, k in zip(syms, e)])
            for e, c in p.terms.items()
        )
    )


@lru_cache(maxsize=None)
def _univariate(rho, cap):
    expr = W / (sympy.exp(W) - 1) if rho is None else (1 - rho) / (sympy.exp(W) - rho)
    return sympy.series(expr, W, 0, cap + 1).removeO()


def oracle(columns, rhos, n):
    """n! [t^n] of e^{x.t} prod f(c.t), expanded with sympy."""
    l = len(n)
    cap = sum(n)
    xs = sympy.symbols(f"x1:{l + 1}")
    ts = sympy.symbols(f"t1:{l + 1}")
    tau = sympy.symbols("tau")
    expr = sympy.series(sympy.exp(tau * sum(x * t for x, t in zip(xs, ts))), tau, 0, cap + 1).removeO()
    for c, rho in zip(columns, rhos):
        form = tau * sum(ci * t for ci, t in zip(c, ts))
        expr = sympy.expand(expr * _univariate(rho, cap).subs(W, form))
        expr = sum(expr.coeff(tau, k) * tau**k for k in range(cap + 1))
    mono = sympy.prod([t**k for t, k in zip(ts, n)])
    coeff = sympy.Poly(sympy.expand(expr.coeff(tau, cap)), *ts).coeff_monomial(mono)
    return sympy.expand(coeff * sympy.prod([sympy.factorial(k) for k in n])), xs


def rat(q):
    q = Fraction(q)
    return sympy.Rational(q.numerator, q.denominator)


def test_bernoulli_polys_match_sympy():
    x = sympy.symbols("x")
    for k in range(10):
        assert to_sympy(bernoulli_poly(k), (x,)) == sympy.expand(sympy.bernoulli(k, x))
    assert bernoulli_poly(2).format() == "x^2 - x + 1/6"


def test_euler_polys_match_sympy():
    x = sympy.symbols("x")
    for k in range(10):
        assert to_sympy(eulerian_poly(k, -1), (x,)) == sympy.expand(sympy.euler(k, x))


def test_eulerian_first_member():
    # (1 - rho)/(e^t - rho) = 1 + t/(rho - 1) + ..., so H_1(x, rho) = x + 1/(rho - 1)
    assert eulerian_poly(1, 2).format() == "x + 1"
    assert eulerian_poly(1, -1).format() == "x - 1/2"
    assert eulerian_poly(0, 3).format() == "1"
    with pytest.raises(ValueError, match="rho must not equal 1"):
        eulerian_poly(1, 1)


@pytest.mark.parametrize("rho", [Fraction(2), Fraction(-1), Fraction(1, 3)])
def test_eulerian_matches_oracle(rho):
    for k in range(6):
        want, xs = oracle(((1,),), (rat(rho),), (k,))
        assert to_sympy(eulerian_poly(k, rho), xs) == want


@pytest.mark.parametrize("d", [(1,), (2,), (1, 1), (2, 3), (1, 2, 5), (3, 1, 1, 2)])
def test_higher_order_bernoulli_matches_oracle(d):
    for k in range(5):
        want, xs = oracle(tuple((v,) for v in d), (None,) * len(d), (k,))
        assert to_sympy(higher_order_bernoulli(k, d), xs) == want


def test_higher_order_eulerian_matches_oracle():
    d, rhos = (1, 2, 3), (Fraction(-1), Fraction(2), Fraction(-1, 2))
    for k in range(5):
        want, xs = oracle(tuple((v,) for v in d), tuple(rat(r) for r in rhos), (k,))
        assert to_sympy(higher_order_eulerian(k, rhos, d), xs) == want


def test_order_one_reduces_to_scaled_bernoulli():
    # B^{(1)}_k(x|d) = d^k B_k(x/d)
    for d in range(1, 6):
        for k in range(7):
            rhs = bernoulli_poly(k).scale_variables((Fraction(1, d),)).scale(d**k)
            assert higher_order_bernoulli(k, (d,)) == rhs


def test_empty_order_is_power():
    assert higher_order_bernoulli(3, ()) == MultiPoly.monomial((3,))


@pytest.mark.parametrize("n", [(0, 0), (1, 0), (2, 1), (1, 1, 1), (0, 2, 1)])
def test_vector_argument_families_match_oracle(n):
    l = len(n)
    want, xs = oracle(((1,) * l,), (None,), n)
    assert to_sympy(vector_bernoulli(n), xs) == want
    want, xs = oracle(((1,) * l,), (-1,), n)
    assert to_sympy(vector_eulerian(n, -1), xs) == want


@pytest.mark.parametrize(
    "rows,n",
    [
        (((1, 2, 0), (1, 0, 1)), (1, 0)),
        (((1, 2, 1, 0), (1, 1, 0, 1)), (1, 1)),
        (((2, 1, 0, 0), (0, 1, 1, 2), (0, 0, 1, 0)), (0, 1, 0)),
        (((1, 3), (2, 0)), (2, 1)),
    ],
)
def test_vector_higher_order_matches_oracle(rows, n):
    columns = tuple(zip(*rows))
    want, xs = oracle(columns, (None,) * len(columns), n)
    assert to_sympy(vector_higher_order_bernoulli(n, rows), xs) == want
    rhos = tuple([-1, 2, Fraction(1, 2), -3][: len(columns)])
    want, xs = oracle(columns, tuple(rat(r) for r in rhos), n)
    assert to_sympy(vector_higher_order_eulerian(n, rhos, rows), xs) == want


def test_single_column_vector_eulerian():
    assert vector_higher_order_eulerian((1, 0), (-1,), ((1,), (1,))).format() == "x1 - 1/2"


matrices = st.integers(1, 3).flatmap(
    lambda l: st.lists(
        st.tuples(*[st.integers(0, 4)] * l).filter(any), min_size=1, max_size=3
    ).map(lambda cols: tuple(zip(*cols)))
)


@settings(max_examples=25, deadline=None)
@given(matrices, st.integers(0, 3), st.data())
def test_vector_symmetry(rows, k, data):
    l = len(rows)
    n = data.draw(st.sampled_from(list(compositions(k, l))))
    p = vector_higher_order_bernoulli(n, rows)
    sigma = [sum(r) for r in rows]
    # reflection about sigma/2: x -> sigma - x
    images = [MultiPoly.linear([-1 if i == j else 0 for j in range(l)], sigma[i]) for i in range(l)]
    assert p == p.substitute(images).scale((-1) ** k)


def test_reflection_is_about_sigma_not_minus_sigma():
    # t -> -t in the generating function sends x to sigma - x; -x - sigma is not a symmetry
    p = higher_order_bernoulli(1, (1,))
    assert p.substitute([MultiPoly.linear([-1], 1)]).scale(-1) == p
    assert p.substitute([MultiPoly.linear([-1], -1)]).scale(-1) != p


@settings(max_examples=25, deadline=None)
@given(matrices, st.integers(1, 3), st.data())
def test_vector_recursion(rows, k, data):
    l = len(rows)
    n = data.draw(st.sampled_from(list(compositions(k, l))))
    cols = list(zip(*rows))
    last = cols[-1]
    lhs = vector_higher_order_bernoulli(n, rows)
    lhs = lhs.shift(last) - lhs
    if len(cols) == 1:
        rest = ((),) * l
    else:
        rest = tuple(zip(*cols[:-1]))
    rhs = MultiPoly.zero(l)
    for i in range(l):
        if n[i]:
            down = tuple(v - (1 if q == i else 0) for q, v in enumerate(n))
            if len(cols) == 1:
                sub = MultiPoly.monomial(down)
            else:
                sub = vector_higher_order_bernoulli(down, rest)
            rhs = rhs + sub.scale(n[i] * last[i])
    assert lhs == rhs


def test_one_row_vector_families_reduce_to_scalar():
    d = (1, 2, 3)
    rows = (d,)
    rhos = (-1, 2, Fraction(1, 2))
    for k in range(5):
        assert vector_higher_order_bernoulli((k,), rows) == higher_order_bernoulli(k, d)
        assert vector_higher_order_eulerian((k,), rhos, rows) == higher_order_eulerian(k, rhos, d)
    assert vector_higher_order_bernoulli((0, 0), ((1, 2), (1, 0))) == MultiPoly.one(2)
