"""Classical identities of the Bernoulli/Eulerian families as (lhs, rhs) pairs.

Each function builds both sides independently from the family constructors so
callers can compare them exactly; shifts by r/p use rational offsets.
"""

from fractions import Fraction
from itertools import product
from math import comb, factorial, prod

from .families import (
    bernoulli_series,
    eulerian_series,
    higher_order_bernoulli,
    higher_order_eulerian,
    series_from_polys,
    vector_bernoulli,
    vector_eulerian,
    vector_higher_order_bernoulli,
)
from .series import CoeffSeries, MultiPoly, monomials_upto, series_multiply


def _zero1():
    return MultiPoly.zero(1)


def recursion(k, d):
    """B(x + d_m | d) - B(x | d) against k d_m B_{k-1}(x | d without d_m)."""
    d = tuple(d)
    p = higher_order_bernoulli(k, d)
    lhs = p.shift((d[-1],)) - p
    rhs = higher_order_bernoulli(k - 1, d[:-1]).scale(k * d[-1]) if k else _zero1()
    return lhs, rhs


def reflection(k, d):
    """B_k(x | d) against (-1)^k B_k(sigma - x | d)."""
    p = higher_order_bernoulli(k, d)
    return p, p.substitute([MultiPoly.linear([-1], sum(d))]).scale((-1) ** k)


def _embed(p, index, total):
    """A one-variable polynomial as a polynomial in variable ``index`` of ``total``."""
    return p.substitute([MultiPoly.variable(total, index)])


def binomial(n, d1, d2):
    """sum_k C(n,k) B_k(x|d1) B_{n-k}(y|d2) against B_n(x + y | d1 + d2)."""
    lhs = MultiPoly.zero(2)
    for k in range(n + 1):
        a = _embed(higher_order_bernoulli(k, d1), 0, 2)
        b = _embed(higher_order_bernoulli(n - k, d2), 1, 2)
        lhs = lhs + (a * b).scale(comb(n, k))
    rhs = higher_order_bernoulli(n, tuple(d1) + tuple(d2)).substitute([MultiPoly.linear([1, 1])])
    return lhs, rhs


def vector_binomial(n, D1, D2):
    """Vector analog in variables (x_1..x_l, y_1..y_l)."""
    l = len(n)
    xs = [MultiPoly.variable(2 * l, i) for i in range(l)]
    ys = [MultiPoly.variable(2 * l, l + i) for i in range(l)]
    lhs = MultiPoly.zero(2 * l)
    for k in product(*(range(v + 1) for v in n)):
        rest = tuple(a - b for a, b in zip(n, k))
        a = vector_higher_order_bernoulli(k, D1).substitute(xs)
        b = vector_higher_order_bernoulli(rest, D2).substitute(ys)
        lhs = lhs + (a * b).scale(prod(comb(a_, b_) for a_, b_ in zip(n, k)))
    joined = tuple(tuple(r1) + tuple(r2) for r1, r2 in zip(D1, D2))
    rhs = vector_higher_order_bernoulli(n, joined).substitute([x + y for x, y in zip(xs, ys)])
    return lhs, rhs


def multiplication_sum(k, d, p):
    """sum over r in [0,p)^m of B_k(x + r.d/p | d) against p^(m-k) B_k(px | d)."""
    d = tuple(d)
    base = higher_order_bernoulli(k, d)
    lhs = _zero1()
    for r in product(range(p), repeat=len(d)):
        lhs = lhs + base.shift((Fraction(sum(a * b for a, b in zip(r, d)), p),))
    rhs = base.scale_variables((p,)).scale(Fraction(p) ** (len(d) - k))
    return lhs, rhs


def multiplication_sum_single(k, d, p):
    """The single-index form sum_{r<p} B_k(x + r sigma/p | d); equals the above only for m = 1."""
    d = tuple(d)
    base = higher_order_bernoulli(k, d)
    lhs = _zero1()
    for r in range(p):
        lhs = lhs + base.shift((Fraction(r * sum(d), p),))
    rhs = base.scale_variables((p,)).scale(Fraction(p) ** (len(d) - k))
    return lhs, rhs


def multiplication_periods(k, d, periods):
    """sum over r_i < p_i of B_k(x + r.d | {p_i d_i}) against pi(p) B_k(x | d)."""
    d = tuple(d)
    scaled = tuple(a * b for a, b in zip(periods, d))
    base = higher_order_bernoulli(k, scaled)
    lhs = _zero1()
    for r in product(*(range(q) for q in periods)):
        lhs = lhs + base.shift((sum(a * b for a, b in zip(r, d)),))
    return lhs, higher_order_bernoulli(k, d).scale(prod(periods))


def vector_argument_multiplication(k, p):
    """sum_{r<p} B_k(x + r/p) against p^(1-|k|) B_k(px), vector argument and index."""
    k = tuple(k)
    l = len(k)
    base = vector_bernoulli(k)
    lhs = MultiPoly.zero(l)
    for r in range(p):
        lhs = lhs + base.shift((Fraction(r, p),) * l)
    rhs = base.scale_variables((p,) * l).scale(Fraction(p) ** (1 - sum(k)))
    return lhs, rhs


def vector_argument_eulerian_relation(k, p, rho):
    """p^(|k|-1) sum_r rho^-r B_k(x + r/p) against rho/(1-rho) sum_i k_i H_{k-e_i}(px, rho)."""
    k = tuple(k)
    l = len(k)
    rho = Fraction(rho)
    base = vector_bernoulli(k)
    lhs = MultiPoly.zero(l)
    for r in range(p):
        lhs = lhs + base.shift((Fraction(r, p),) * l).scale(rho ** (-r))
    lhs = lhs.scale(Fraction(p) ** (sum(k) - 1))
    rhs = MultiPoly.zero(l)
    for i in range(l):
        if k[i]:
            down = tuple(v - (1 if q == i else 0) for q, v in enumerate(k))
            rhs = rhs + vector_eulerian(down, rho).scale_variables((p,) * l).scale(k[i])
    return lhs, rhs.scale(rho / (1 - rho))


def bernoulli_eulerian(k, p, rho):
    """p^(k-1) sum_r rho^-r B_k(x + r/p) against k rho/(1-rho) H_{k-1}(px, rho), rho^p = 1."""
    lhs, rhs = vector_argument_eulerian_relation((k,), p, rho)
    return lhs, rhs


def bernoulli_eulerian_higher(k, d, periods, rhos):
    """Higher-order analog; rho_i^p_i = 1 and the right side vanishes for k < m."""
    d = tuple(d)
    m = len(d)
    rhos = tuple(Fraction(r) for r in rhos)
    scaled = tuple(a * b for a, b in zip(periods, d))
    base = higher_order_bernoulli(k, scaled)
    lhs = _zero1()
    for r in product(*(range(q) for q in periods)):
        w = prod((rho ** (-ri) for rho, ri in zip(rhos, r)), start=Fraction(1))
        lhs = lhs + base.shift((sum(a * b for a, b in zip(r, d)),)).scale(w)
    lhs = lhs.scale(Fraction(1, prod(periods)))
    if k < m:
        return lhs, _zero1()
    factor = Fraction(factorial(k), factorial(k - m))
    for rho, di in zip(rhos, d):
        factor *= rho * di / (1 - rho)
    return lhs, higher_order_eulerian(k - m, rhos, d).scale(factor)


def bernoulli_eulerian_vector(rows, periods, rhos, cap):
    """Series form of the vector relation, truncated at total degree ``cap``.

    Left: sum_r prod rho_j^-r_j [sum_k B_k(x + sum r_j c_j | {p_j c_j}) t^k/k!].
    Right: pi(p) prod (rho_j/(1-rho_j)) (c_j.t) times the Eulerian series.
    """
    rows = tuple(tuple(r) for r in rows)
    l = len(rows)
    cols = list(zip(*rows))
    rhos = tuple(Fraction(r) for r in rhos)
    scaled_cols = [tuple(q * v for v in c) for q, c in zip(periods, cols)]
    scaled_rows = tuple(tuple(c[i] for c in scaled_cols) for i in range(l))
    polys = {e: vector_higher_order_bernoulli(e, scaled_rows) for e in monomials_upto(cap, l)}
    lhs = CoeffSeries(l, l, cap)
    for r in product(*(range(q) for q in periods)):
        w = prod((rho ** (-ri) for rho, ri in zip(rhos, r)), start=Fraction(1))
        offset = tuple(sum(ri * c[i] for ri, c in zip(r, cols)) for i in range(l))
        shifted = {e: p.shift(offset) for e, p in polys.items()}
        lhs = lhs + series_from_polys(shifted, l, cap).scale(w)
    rhs = eulerian_series(rhos, rows, cap).scale(prod(periods))
    for c, rho in zip(cols, rhos):
        form = {tuple(1 if q == i else 0 for q in range(l)): c[i] for i in range(l)}
        rhs = series_multiply(rhs, CoeffSeries(l, l, cap, form).scale(rho / (1 - rho)))
    return lhs, rhs


def bernoulli_series_check(rows, cap):
    """The packed polynomials reproduce the generating series (sanity round trip)."""
    l = len(rows)
    polys = {e: vector_higher_order_bernoulli(e, rows) for e in monomials_upto(cap, l)}
    return series_from_polys(polys, l, cap), bernoulli_series(rows, cap)
