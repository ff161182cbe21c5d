"""Multivariate polynomials and total-degree truncated power series.

A :class:`CoeffSeries` is a power series in t-variables whose coefficients are
:class:`MultiPoly` objects in separate x-variables; this is exactly the shape
of the generating functions ``e^{x.t} * prod f(c_j.t)`` whose t-coefficients
are the Bernoulli-type polynomials in x.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .numeric import ONE, ZERO, GaussianRational, as_gaussian, format_rational

__all__ = [
    "MultiPoly",
    "LinearForm",
    "CoeffSeries",
    "compositions",
    "monomials_upto",
    "bernoulli_numbers",
    "linear_form_factor_series",
    "exp_linear_series",
    "eulerian_factor_series",
    "series_multiply",
    "extract_coefficient",
]


def _mfact(e):
    out = 1
    for k in e:
        out *= factorial(k)
    return out


def compositions(total, parts):
    """All exponent vectors of length ``parts`` summing to ``total`` (lex order)."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def monomials_upto(cap, parts):
    for d in range(cap + 1):
        yield from compositions(d, parts)


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables with GaussianRational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                if any(k < 0 for k in e):
                    raise ValueError(f"negative exponent {e}")
                c = as_gaussian(c)
                if c:
                    clean[e] = clean.get(e, ZERO) + c
                    if not clean[e]:
                        del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def constant(cls, nvars, c):
        c = as_gaussian(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars, index):
        e = [0] * nvars
        e[index] = 1
        return cls._raw(nvars, {tuple(e): ONE})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls(len(exponent), {tuple(exponent): coeff})

    @classmethod
    def linear(cls, coeffs, const=0):
        n = len(coeffs)
        terms = {(0,) * n: const}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    # -- inspection ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), ZERO)

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def is_real(self):
        return all(c.im == 0 for c in self.terms.values())

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.terms == MultiPoly.constant(self.nvars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return MultiPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = as_gaussian(c)
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    v = out[e] + v
                    if v:
                        out[e] = v
                    else:
                        del out[e]
                else:
                    out[e] = v
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- evaluation and substitution -----------------------------------------

    def evaluate(self, point):
        point = [as_gaussian(v) for v in point]
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for v, k in zip(point, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    def evaluate_rational(self, point):
        """Evaluate at integer/rational points; requires real coefficients."""
        total = Fraction(0)
        for e, c in self.terms.items():
            if c.im:
                raise ValueError("polynomial has complex coefficients")
            term = c.re
            for v, k in zip(point, e):
                if k:
                    term *= v**k
            total += term
        return total

    def substitute(self, images):
        """Compose: replace variable i by the polynomial ``images[i]``."""
        if len(images) != self.nvars:
            raise ValueError(f"expected {self.nvars} images, got {len(images)}")
        if not images:
            return MultiPoly.constant(0, self.constant_term())
        target = images[0].nvars
        powers = [dict() for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        result = MultiPoly.zero(target)
        for e, c in self.terms.items():
            term = MultiPoly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def shift(self, offsets):
        """Return p(x + offsets)."""
        offsets = list(offsets)
        if not any(offsets):
            return self
        images = [
            MultiPoly.variable(self.nvars, i) + offsets[i] for i in range(self.nvars)
        ]
        return self.substitute(images)

    def scale_variables(self, factors):
        """Return p(f_1 x_1, ..., f_n x_n)."""
        out = {}
        for e, c in self.terms.items():
            v = c
            for f, k in zip(factors, e):
                if k:
                    v = v * as_gaussian(f) ** k
            if v:
                out[e] = v
        return MultiPoly._raw(self.nvars, out)

    # -- output ---------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        return {
            "vars": self.nvars,
            "terms": [{"exp": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            obj["vars"],
            {tuple(t["exp"]): GaussianRational.from_json(t["coeff"]) for t in obj["terms"]},
        )

    def format(self, names=None):
        if names is None:
            names = ["x"] if self.nvars == 1 else [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        order = sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e)))
        pieces = []
        for e in order:
            c = self.terms[e]
            mono = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}") for i, k in enumerate(e) if k
            )
            if c.im:
                coeff, negative = f"({c})", False
            else:
                negative = c.re < 0
                coeff = format_rational(abs(c.re))
            if mono:
                body = mono if coeff == "1" else f"{coeff}*{mono}"
            else:
                body = coeff
            pieces.append((negative, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for negative, body in pieces[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.format()!r})"

    __str__ = format


@dataclass(frozen=True)
class LinearForm:
    """The linear form c.t = sum c_i t_i."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    def __len__(self):
        return len(self.coefficients)

    def is_zero(self):
        return not any(self.coefficients)


class CoeffSeries:
    """Power series in ``tvars`` variables truncated at total degree ``cap``.

    Coefficients are MultiPoly objects in ``xvars`` variables. Coefficients are
    stored raw (not multiplied by k!).
    """

    __slots__ = ("tvars", "xvars", "cap", "terms")

    def __init__(self, tvars, xvars, cap, terms=None):
        if cap < 0:
            raise ValueError("truncation order must be nonnegative")
        self.tvars, self.xvars, self.cap = tvars, xvars, cap
        self.terms = {}
        for e, p in (terms or {}).items():
            e = tuple(e)
            if len(e) != tvars:
                raise ValueError(f"t-exponent {e} has wrong length")
            if sum(e) > cap:
                continue
            if not isinstance(p, MultiPoly):
                p = MultiPoly.constant(xvars, p)
            if not p.is_zero():
                self.terms[e] = p

    @classmethod
    def one(cls, tvars, xvars, cap):
        return cls(tvars, xvars, cap, {(0,) * tvars: MultiPoly.one(xvars)})

    def coefficient(self, e):
        return self.terms.get(tuple(e), MultiPoly.zero(self.xvars))

    def _check(self, other):
        if (self.tvars, self.xvars, self.cap) != (other.tvars, other.xvars, other.cap):
            raise ValueError(
                "series shape mismatch: "
                f"{(self.tvars, self.xvars, self.cap)} vs {(other.tvars, other.xvars, other.cap)}"
            )

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, p in other.terms.items():
            out[e] = out[e] + p if e in out else p
        return CoeffSeries(self.tvars, self.xvars, self.cap, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return CoeffSeries(
            self.tvars, self.xvars, self.cap, {e: p.scale(c) for e, p in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, CoeffSeries):
            return series_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, CoeffSeries):
            return NotImplemented
        return (self.tvars, self.xvars, self.cap, self.terms) == (
            other.tvars,
            other.xvars,
            other.cap,
            other.terms,
        )

    def inverse(self):
        """Multiplicative inverse; the constant term must be a nonzero scalar."""
        c0 = self.coefficient((0,) * self.tvars)
        if not c0.is_constant() or c0.is_zero():
            raise ZeroDivisionError("series constant term must be a nonzero scalar")
        inv0 = c0.constant_term().reciprocal()
        out = {}
        for d in range(self.cap + 1):
            for e in compositions(d, self.tvars):
                if d == 0:
                    out[e] = MultiPoly.constant(self.xvars, inv0)
                    continue
                acc = MultiPoly.zero(self.xvars)
                for f, p in self.terms.items():
                    if not any(f):
                        continue
                    g = tuple(a - b for a, b in zip(e, f))
                    if min(g) < 0 or g not in out:
                        continue
                    acc = acc + p * out[g]
                out[e] = acc.scale(-inv0)
        return CoeffSeries(self.tvars, self.xvars, self.cap, out)

    def __repr__(self):
        return f"CoeffSeries(t={self.tvars}, x={self.xvars}, cap={self.cap}, terms={len(self.terms)})"


@lru_cache(maxsize=None)
def _bernoulli_tuple(k_max):
    b = [Fraction(1)]
    for k in range(1, k_max + 1):
        acc = sum((comb(k + 1, i) * b[i] for i in range(k)), Fraction(0))
        b.append(-acc / (k + 1))
    return tuple(b)


def bernoulli_numbers(k_max):
    """B_0..B_{k_max} from sum_{i<=k} C(k+1, i) B_i = 0 (so B_1 = -1/2)."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    return list(_bernoulli_tuple(k_max))


def _substitute_form(univariate, c, xvars, cap):
    """Expand sum_k a_k u^k with u = c.t into a CoeffSeries (constants in x)."""
    c = tuple(c)
    terms = {}
    for e in monomials_upto(cap, len(c)):
        d = sum(e)
        a = univariate[d]
        if not a:
            continue
        mono = 1
        for ci, ei in zip(c, e):
            mono *= ci**ei
        if mono:
            terms[e] = MultiPoly.constant(xvars, a * factorial(d) / _mfact(e) * mono)
    return CoeffSeries(len(c), xvars, cap, terms)


def linear_form_factor_series(c, cap, xvars=0):
    """Series of u/(e^u - 1) at u = c.t; the zero form gives the constant 1."""
    coeffs = c.coefficients if isinstance(c, LinearForm) else tuple(c)
    b = bernoulli_numbers(cap)
    univariate = [b[k] / factorial(k) for k in range(cap + 1)]
    return _substitute_form(univariate, coeffs, xvars, cap)


def exp_linear_series(x_count, cap):
    """e^{x.t}: the coefficient of t^e is the monomial x^e / e!."""
    terms = {
        e: MultiPoly.monomial(e, Fraction(1, _mfact(e))) for e in monomials_upto(cap, x_count)
    }
    return CoeffSeries(x_count, x_count, cap, terms)


def _univariate_inverse(a, cap):
    inv = [1 / a[0]]
    for k in range(1, cap + 1):
        acc = sum((a[i] * inv[k - i] for i in range(1, k + 1)), a[0] * 0)
        inv.append(-acc / a[0])
    return inv


def eulerian_factor_series(c, rho, cap, xvars=0):
    """Series of (1 - rho)/(e^u - rho) at u = c.t, for rational rho != 1."""
    rho = Fraction(rho)
    if rho == 1:
        raise ValueError("rho must not equal 1")
    coeffs = c.coefficients if isinstance(c, LinearForm) else tuple(c)
    shifted_exp = [Fraction(1, factorial(k)) for k in range(cap + 1)]
    shifted_exp[0] -= rho
    inv = _univariate_inverse(shifted_exp, cap)
    univariate = [(1 - rho) * v for v in inv]
    return _substitute_form(univariate, coeffs, xvars, cap)


def series_multiply(a, b):
    a._check(b)
    out = {}
    cap = a.cap
    for e1, p1 in a.terms.items():
        d1 = sum(e1)
        for e2, p2 in b.terms.items():
            if d1 + sum(e2) > cap:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            v = p1 * p2
            out[e] = out[e] + v if e in out else v
    return CoeffSeries(a.tvars, a.xvars, cap, out)


def extract_coefficient(series, t_exponent):
    """k! times the raw coefficient of t^k, matching the t^k/k! convention."""
    k = tuple(t_exponent)
    if len(k) != series.tvars:
        raise ValueError(f"exponent {k} has wrong length for {series.tvars} t-variables")
    if sum(k) > series.cap:
        raise ValueError(f"exponent {k} exceeds truncation order {series.cap}")
    return series.coefficient(k).scale(_mfact(k))


def lift_constant_series(series, xvars):
    """Re-home a series of constants into ``xvars`` x-variables."""
    return CoeffSeries(
        series.tvars,
        xvars,
        series.cap,
        {e: MultiPoly.constant(xvars, p.constant_term()) for e, p in series.terms.items()},
    )
