"""Restricted partition function W(s, d) as a sum of Sylvester waves.

The wave of period j is a sum of shifted copies of the polynomial part of
the j-modified part list, each multiplied by a prime circulator.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial, prod

from .families import higher_order_bernoulli
from .numeric import divisors, prime_circulator, reduce_shift
from .series import MultiPoly

__all__ = [
    "PartList",
    "QuasiTerm",
    "QuasiPoly1D",
    "brute_count",
    "j_modified",
    "poly_part",
    "sylvester_wave",
    "partition_quasipoly",
    "evaluate_quasipoly",
    "partition_count",
]


@dataclass(frozen=True)
class PartList:
    d: tuple

    def __post_init__(self):
        d = tuple(self.d)
        if not d:
            raise ValueError("part list must be nonempty")
        if any(not isinstance(v, int) or v < 1 for v in d):
            raise ValueError(f"parts must be positive integers, got {d}")
        object.__setattr__(self, "d", d)

    @property
    def m(self):
        return len(self.d)

    @property
    def sigma(self):
        return sum(self.d)

    @property
    def pi(self):
        return prod(self.d)


def _parts(parts):
    return parts if isinstance(parts, PartList) else PartList(tuple(parts))


@dataclass(frozen=True)
class QuasiTerm:
    j: int
    shift: int
    poly: MultiPoly

    def value(self, s):
        psi = prime_circulator(self.j, s - self.shift)
        if not psi:
            return Fraction(0)
        return psi * self.poly.evaluate_rational((s,))


@dataclass(frozen=True)
class QuasiPoly1D:
    """Value at s is sum over terms of poly(s) * psi_j(s - shift)."""

    terms: tuple = field(default_factory=tuple)

    def __call__(self, s):
        return evaluate_quasipoly(self, s)

    def canonical(self):
        """Rewrite over the independent circulators psi_j(s - b), b < phi(j); drop zeros."""
        merged = {}
        for t in self.terms:
            for (b,), c in reduce_shift((t.j,), (t.shift,)):
                key = (t.j, b)
                p = t.poly.scale(c)
                merged[key] = merged[key] + p if key in merged else p
        return QuasiPoly1D(
            tuple(QuasiTerm(j, sh, p) for (j, sh), p in sorted(merged.items()) if not p.is_zero())
        )

    def to_json(self):
        terms = sorted(self.terms, key=lambda t: (t.j, t.shift))
        return {"terms": [{"j": t.j, "shift": t.shift, "poly": t.poly.to_json()} for t in terms]}

    @classmethod
    def from_json(cls, obj):
        return cls(
            tuple(QuasiTerm(t["j"], t["shift"], MultiPoly.from_json(t["poly"])) for t in obj["terms"])
        )


def brute_count(s, parts):
    """Number of x >= 0 with d.x = s, by the coin-change recurrence."""
    d = _parts(parts).d
    if s < 0:
        return 0
    ways = [1] + [0] * s
    for part in d:
        for v in range(part, s + 1):
            ways[v] += ways[v - part]
    return ways[s]


def j_modified(parts, j):
    """(modified parts, omega, non-divisible parts): divisible parts first, rest times j."""
    d = _parts(parts).d
    if j < 1:
        raise ValueError("j must be a positive integer")
    div = [v for v in d if v % j == 0]
    nondiv = [v for v in d if v % j]
    return PartList(tuple(div + [j * v for v in nondiv])), len(div), tuple(nondiv)


def poly_part(parts):
    """The j = 1 wave: B^{(m)}_{m-1}(s + sigma | d) / ((m-1)! pi(d))."""
    p = _parts(parts)
    b = higher_order_bernoulli(p.m - 1, p.d)
    return b.shift((p.sigma,)).scale(Fraction(1, factorial(p.m - 1) * p.pi))


def sylvester_wave(j, parts):
    p = _parts(parts)
    modified, _, nondiv = j_modified(p, j)
    base = poly_part(modified)
    terms = []
    for r in product(range(j), repeat=len(nondiv)):
        a = sum(ri * di for ri, di in zip(r, nondiv))
        terms.append(QuasiTerm(j, a, base.shift((-a,))))
    return QuasiPoly1D(tuple(terms)).canonical()


def wave_periods(parts):
    return sorted({q for v in _parts(parts).d for q in divisors(v)})


def partition_quasipoly(parts):
    p = _parts(parts)
    terms = []
    for j in wave_periods(p):
        terms.extend(sylvester_wave(j, p).terms)
    return QuasiPoly1D(tuple(terms))


def evaluate_quasipoly(q, s):
    return sum((t.value(s) for t in q.terms), Fraction(0))


def partition_count(s, parts):
    """W(s, d) from the wave formula; s must be nonnegative."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    value = evaluate_quasipoly(partition_quasipoly(parts), s)
    if value.denominator != 1:
        raise ArithmeticError(f"wave sum produced non-integer count {value}")
    return int(value)
