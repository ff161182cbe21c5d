"""Bernoulli and Eulerian polynomial families, scalar and vector, of any order.

Every family is read off its exponential generating function: a product of
``u/(e^u - 1)`` or ``(1 - rho)/(e^u - rho)`` factors, one per parameter (or
matrix column), times ``e^{x.t}``. Polynomials come back with the ``k!``
normalisation already applied.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import (
    CoeffSeries,
    _mfact,
    exp_linear_series,
    eulerian_factor_series,
    extract_coefficient,
    linear_form_factor_series,
    series_multiply,
)

__all__ = [
    "HigherOrderSpec",
    "VectorHigherOrderSpec",
    "bernoulli_poly",
    "eulerian_poly",
    "higher_order_bernoulli",
    "higher_order_eulerian",
    "vector_bernoulli",
    "vector_eulerian",
    "vector_higher_order_bernoulli",
    "vector_higher_order_eulerian",
    "bernoulli_series",
]


@dataclass(frozen=True)
class HigherOrderSpec:
    """Parameters d_1..d_m of a higher-order family (m may be zero)."""

    d: tuple = ()

    def __post_init__(self):
        d = tuple(int(v) for v in self.d)
        if any(v < 1 for v in d):
            raise ValueError(f"parameters must be positive integers, got {d}")
        object.__setattr__(self, "d", d)

    @property
    def m(self):
        return len(self.d)

    @property
    def sigma(self):
        return sum(self.d)


@dataclass(frozen=True)
class VectorHigherOrderSpec:
    """An l x m nonnegative integer matrix given by rows; m may be zero."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if not rows:
            raise ValueError("matrix needs at least one row")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("matrix rows have different lengths")
        if any(v < 0 for r in rows for v in r):
            raise ValueError("matrix entries must be nonnegative")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns, l):
        columns = [tuple(c) for c in columns]
        return cls(tuple(tuple(c[k] for c in columns) for k in range(l)))

    @property
    def l(self):
        return len(self.rows)

    @property
    def m(self):
        return len(self.rows[0])

    @property
    def columns(self):
        return tuple(tuple(r[i] for r in self.rows) for i in range(self.m))

    @property
    def sigma(self):
        return tuple(sum(r) for r in self.rows)


def _as_vspec(spec):
    if isinstance(spec, VectorHigherOrderSpec):
        return spec
    return VectorHigherOrderSpec(tuple(tuple(r) for r in spec))


def _as_spec(spec):
    if isinstance(spec, HigherOrderSpec):
        return spec
    return HigherOrderSpec(tuple(spec))


@lru_cache(maxsize=4096)
def _product_series(columns, rhos, l, cap):
    """e^{x.t} * prod over columns of the Bernoulli (rho None) or Eulerian factor."""
    series = exp_linear_series(l, cap)
    for c, rho in zip(columns, rhos):
        if rho is None:
            factor = linear_form_factor_series(c, cap, xvars=l)
        else:
            factor = eulerian_factor_series(c, rho, cap, xvars=l)
        series = series_multiply(series, factor)
    return series


def bernoulli_series(spec, cap):
    """The generating series of the vector Bernoulli polynomials of higher order."""
    spec = _as_vspec(spec)
    return _product_series(spec.columns, (None,) * spec.m, spec.l, cap)


def _extract(columns, rhos, l, n):
    n = tuple(n)
    if len(n) != l or any(k < 0 for k in n):
        raise ValueError(f"index {n} must have {l} nonnegative entries")
    return extract_coefficient(_product_series(tuple(columns), tuple(rhos), l, sum(n)), n)


def _check_rhos(rhos, m):
    rhos = tuple(Fraction(r) for r in rhos)
    if len(rhos) != m:
        raise ValueError(f"expected {m} rho values, got {len(rhos)}")
    if any(r == 1 for r in rhos):
        raise ValueError("rho must not equal 1")
    return rhos


def bernoulli_poly(k):
    """B_k(x)."""
    return _extract(((1,),), (None,), 1, (k,))


def eulerian_poly(k, rho):
    """H_k(x, rho) from (1 - rho)/(e^t - rho); rho = -1 gives the Euler polynomial E_k(x)."""
    (rho,) = _check_rhos((rho,), 1)
    return _extract(((1,),), (rho,), 1, (k,))


def higher_order_bernoulli(k, spec):
    """B^{(m)}_k(x | d); the empty spec gives x^k."""
    spec = _as_spec(spec)
    return _extract(tuple((d,) for d in spec.d), (None,) * spec.m, 1, (k,))


def higher_order_eulerian(k, rhos, spec):
    spec = _as_spec(spec)
    rhos = _check_rhos(rhos, spec.m)
    return _extract(tuple((d,) for d in spec.d), rhos, 1, (k,))


def vector_bernoulli(k, l=None):
    """B_k(x) of vector index k and argument x_1..x_l, from (sum t)/(e^{sum t} - 1)."""
    k = tuple(k)
    l = len(k) if l is None else l
    return _extract(((1,) * l,), (None,), l, k)


def vector_eulerian(k, rho, l=None):
    k = tuple(k)
    l = len(k) if l is None else l
    (rho,) = _check_rhos((rho,), 1)
    return _extract(((1,) * l,), (rho,), l, k)


def vector_higher_order_bernoulli(n, spec):
    """B^{(l,m)}_n(x | D) in the variables x_1..x_l."""
    spec = _as_vspec(spec)
    return _extract(spec.columns, (None,) * spec.m, spec.l, n)


def vector_higher_order_eulerian(n, rhos, spec):
    spec = _as_vspec(spec)
    rhos = _check_rhos(rhos, spec.m)
    return _extract(spec.columns, rhos, spec.l, n)


def eulerian_series(rhos, spec, cap):
    spec = _as_vspec(spec)
    rhos = _check_rhos(rhos, spec.m)
    return _product_series(spec.columns, rhos, spec.l, cap)


def series_from_polys(polys, l, cap):
    """Pack {k: P_k} into the series sum P_k t^k / k!."""
    return CoeffSeries(l, l, cap, {k: p.scale(Fraction(1, _mfact(k))) for k, p in polys.items()})
