"""Exact scalars and the number theory needed by the wave formulas.

Rationals are plain :class:`fractions.Fraction`; :class:`GaussianRational`
adds an imaginary part for complex direction vectors.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
import re

__all__ = [
    "Fraction",
    "GaussianRational",
    "as_gaussian",
    "format_rational",
    "parse_rational",
    "FactoredInteger",
    "factorize",
    "divisors",
    "euler_phi",
    "moebius",
    "prime_circulator",
    "vector_circulator",
    "cyclotomic_poly",
    "circulator_shift_basis",
    "reduce_shift",
    "lcm",
]


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class GaussianRational:
    """Exact complex number re + im*i with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _make(cls, re, im):
        g = object.__new__(cls)
        object.__setattr__(g, "re", re)
        object.__setattr__(g, "im", im)
        return g

    def is_real(self):
        return self.im == 0

    def conjugate(self):
        return GaussianRational._make(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._make(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._make(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                return GaussianRational._make(a * c, a * d)
            if not d:
                return GaussianRational._make(a * c, b * c)
            return GaussianRational._make(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self):
        if not self:
            raise ZeroDivisionError("GaussianRational division by zero")
        if not self.im:
            return GaussianRational._make(1 / self.re, Fraction(0))
        n = self.norm()
        return GaussianRational._make(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other.reciprocal()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._make(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.reciprocal() * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        result = GaussianRational._make(Fraction(1), Fraction(0))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self):
        if not self.im:
            return format_rational(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{format_rational(self.im)}i"
        if not self.re:
            return im
        sign = "" if im.startswith("-") else "+"
        return f"{format_rational(self.re)}{sign}{im}"

    def to_json(self):
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, obj):
        return cls(parse_rational(obj["re"]), parse_rational(obj["im"]))


ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def as_gaussian(x):
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def format_rational(q):
    """Canonical text form: ``p`` or ``p/q`` with the sign on ``p``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    return Fraction(str(text).strip())


_COMPLEX_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sign>[+-])?\s*(?P<im>\d+(?:/\d+)?)?\s*(?P<i>[ij]))?\s*$"
)


def parse_gaussian(text):
    """Parse ``"3"``, ``"-1+1i"``, ``"1/2-3/4i"``, ``"-i"`` and similar."""
    m = _COMPLEX_RE.match(text)
    if not m or (m.group("re") is None and m.group("i") is None):
        raise ValueError(f"cannot parse complex rational {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if m.group("i"):
        im_part = Fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("sign") == "-":
            im_part = -im_part
        elif m.group("sign") is None and m.group("re") is not None:
            # "3i" parses as re="3" with no sign; treat the lone number as imaginary
            im_part, re_part = re_part, Fraction(0)
    return GaussianRational(re_part, im_part)


@dataclass(frozen=True)
class FactoredInteger:
    """Prime factorisation as (prime, exponent) pairs, primes increasing; () is 1."""

    factors: tuple = ()

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def value(self):
        return prod(p**e for p, e in self.factors)


def factorize(n):
    """Prime factorisation by trial division."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n!r}")
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return FactoredInteger(tuple(factors))


def divisors(n):
    n = abs(n)
    if n == 0:
        raise ValueError("zero has no finite divisor set")
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def euler_phi(n):
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def moebius(n):
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def _prime_psi(p, s):
    return p - 1 if s % p == 0 else -1


def prime_circulator(j, s):
    """Sum of rho**s over the primitive j-th roots of unity rho.

    Uses the multiplicative rule over prime powers p**a || j: each factor is
    p**(a-1) * psi_p(s / p**(a-1)), and vanishes when p**(a-1) does not
    divide s.
    """
    if not isinstance(j, int) or j < 1:
        raise ValueError(f"circulator index must be a positive integer, got {j!r}")
    result = 1
    for p, a in factorize(j):
        q = p ** (a - 1)
        if s % q:
            return 0
        result *= q * _prime_psi(p, s // q)
    return result


def vector_circulator(j, s):
    j, s = tuple(j), tuple(s)
    if len(j) != len(s):
        raise ValueError(f"index length {len(j)} does not match argument length {len(s)}")
    return prod(prime_circulator(jk, sk) for jk, sk in zip(j, s))


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients (lowest degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d == n:
            continue
        den = cyclotomic_poly(d)
        quot = [0] * (len(num) - len(den) + 1)
        for i in range(len(quot) - 1, -1, -1):
            q = num[i + len(den) - 1]
            quot[i] = q
            for k, c in enumerate(den):
                num[i + k] -= q * c
        num = quot
    return tuple(num)


@lru_cache(maxsize=None)
def circulator_shift_basis(j):
    """Rewrite psi_j(s - a), 0 <= a < j, over the basis psi_j(s - b), b < phi(j).

    Row a lists the coefficients of y^a mod Phi_j(y); shifts act on the
    circulator like powers of an inverse primitive root, so this reduction is
    exactly the linear relation among shifted circulators.
    """
    phi = cyclotomic_poly(j)
    deg = len(phi) - 1
    rows = []
    current = [1] + [0] * (deg - 1)
    for _ in range(j):
        rows.append(tuple(current))
        # multiply by y and reduce the y^deg term using the monic Phi_j
        top = current[-1]
        current = [0] + current[:-1]
        current = [c - top * phi[k] for k, c in enumerate(current)]
    return tuple(rows)


def reduce_shift(j, shift):
    """Expand psi_j(s - shift) (vector j) over canonical basis shifts.

    Returns a list of (basis shift tuple, integer coefficient).
    """
    out = [((), 1)]
    for jk, ak in zip(j, shift):
        row = circulator_shift_basis(jk)[ak % jk]
        out = [(b + (k,), c * v) for b, c in out for k, v in enumerate(row) if v]
    return out


def lcm(*values):
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
