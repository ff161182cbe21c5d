"""Vector partition function W(s, D) as a mixture of partial Sylvester waves.

``decompose`` builds, for every exponent vector n with |n| = m - l, the
partial wave W^n(s) as a quasipolynomial (vector Bernoulli polynomials of
higher order times vector prime circulators). ``evaluate`` mixes the partial
waves with the direction-dependent coefficients C_n(alpha); the direction
selects the chamber.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, gcd, prod

from .families import VectorHigherOrderSpec, vector_higher_order_bernoulli
from .numeric import (
    ONE,
    ZERO,
    GaussianRational,
    as_gaussian,
    divisors,
    format_rational,
    lcm,
    parse_rational,
    reduce_shift,
    vector_circulator,
)
from .series import MultiPoly, compositions

__all__ = [
    "MatrixError",
    "AlphaError",
    "MatrixSpec",
    "JClassification",
    "WaveTerm",
    "PartialWave",
    "VectorWaveDecomposition",
    "brute_vector_count",
    "enumerate_j",
    "classify_columns",
    "j_modified_matrix",
    "homogeneous_poly",
    "coefficient_C",
    "partial_poly_part",
    "partial_wave",
    "decompose",
    "partial_values",
    "evaluate",
    "real_part",
    "partial_wave_count",
]


class MatrixError(ValueError):
    """The matrix violates the nondegeneracy assumptions of the wave formula."""


class AlphaError(ValueError):
    """The direction vector lies on the zero set of P_m, or its limit diverges."""


def rational_rank(rows):
    a = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class MatrixSpec:
    """Nonnegative integer l x m matrix of full row rank with no zero column."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(self._entry(v) for v in r) for r in self.rows)
        if not rows or not rows[0]:
            raise MatrixError("matrix must have at least one row and one column")
        if len({len(r) for r in rows}) != 1:
            raise MatrixError("matrix rows have different lengths")
        if any(v < 0 for r in rows for v in r):
            raise MatrixError("matrix entries must be nonnegative")
        object.__setattr__(self, "rows", rows)
        for i, c in enumerate(self.columns):
            if not any(c):
                raise MatrixError(f"column {i + 1} is all zero")
        rank = rational_rank(rows)
        if rank < self.l:
            raise MatrixError(
                f"matrix rank {rank} < rows {self.l}; linearly dependent rows must be "
                "eliminated (reducing l) before the wave formula applies"
            )

    @staticmethod
    def _entry(v):
        if isinstance(v, bool) or not isinstance(v, int):
            raise MatrixError(f"matrix entries must be integers, got {v!r}")
        return v

    @classmethod
    def from_columns(cls, columns):
        columns = [tuple(c) for c in columns]
        return cls(tuple(tuple(c[k] for c in columns) for k in range(len(columns[0]))))

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

    def drop_last_column(self):
        return MatrixSpec(tuple(r[:-1] for r in self.rows))

    def to_json(self):
        return [list(r) for r in self.rows]


def _matrix(D):
    return D if isinstance(D, MatrixSpec) else MatrixSpec(tuple(tuple(r) for r in D))


@dataclass(frozen=True)
class JClassification:
    j: tuple
    divisible: tuple
    nondivisible: tuple
    periods: tuple

    @property
    def omega(self):
        return len(self.divisible)

    @property
    def period_product(self):
        return prod(self.periods)


@dataclass(frozen=True)
class WaveTerm:
    """weight * poly(s) * psi_j(s - shift)."""

    shift: tuple
    weight: Fraction
    poly: MultiPoly

    def effective_poly(self):
        return self.poly.scale(self.weight)


@dataclass(frozen=True)
class PartialWave:
    n: tuple
    j: tuple
    terms: tuple

    def value(self, s):
        total = Fraction(0)
        for t in self.terms:
            psi = vector_circulator(self.j, tuple(a - b for a, b in zip(s, t.shift)))
            if psi:
                total += psi * t.weight * t.poly.evaluate_rational(s)
        return total


@dataclass(frozen=True)
class VectorWaveDecomposition:
    matrix: MatrixSpec
    waves: tuple = field(default_factory=tuple)

    @property
    def l(self):
        return self.matrix.l

    @property
    def m(self):
        return self.matrix.m

    def exponents(self):
        return sorted({w.n for w in self.waves})

    def partial(self, n):
        """Effective terms of W^n keyed by (j, shift): {(j, shift): weight*poly}."""
        n = tuple(n)
        out = {}
        for w in self.waves:
            if w.n != n:
                continue
            for t in w.terms:
                out[(w.j, t.shift)] = t.effective_poly()
        return out

    def to_json(self):
        return {
            "l": self.l,
            "m": self.m,
            "matrix": self.matrix.to_json(),
            "waves": [
                {
                    "n": list(w.n),
                    "j": list(w.j),
                    "terms": [
                        {
                            "shift": list(t.shift),
                            "weight": format_rational(t.weight),
                            "poly": t.poly.to_json(),
                        }
                        for t in sorted(w.terms, key=lambda t: t.shift)
                    ],
                }
                for w in sorted(self.waves, key=lambda w: (w.n, w.j))
            ],
        }

    @classmethod
    def from_json(cls, obj):
        waves = tuple(
            PartialWave(
                tuple(w["n"]),
                tuple(w["j"]),
                tuple(
                    WaveTerm(tuple(t["shift"]), parse_rational(t["weight"]), MultiPoly.from_json(t["poly"]))
                    for t in w["terms"]
                ),
            )
            for w in obj["waves"]
        )
        return cls(MatrixSpec(tuple(tuple(r) for r in obj["matrix"])), waves)


def brute_vector_count(s, D):
    """Count x >= 0 with D x = s by bounded enumeration over all but one column."""
    D = _matrix(D)
    s = tuple(s)
    if len(s) != D.l:
        raise ValueError(f"s has {len(s)} components, matrix has {D.l} rows")
    if any(v < 0 for v in s):
        return 0
    cols = D.columns

    def bound(c, rest):
        return min(rest[k] // c[k] for k in range(D.l) if c[k] > 0)

    def count(i, rest):
        c = cols[i]
        if i == D.m - 1:
            # last column: x is forced if it exists
            x = None
            for k in range(D.l):
                if c[k]:
                    if rest[k] % c[k]:
                        return 0
                    q = rest[k] // c[k]
                    if x is None:
                        x = q
                    elif x != q:
                        return 0
                elif rest[k]:
                    return 0
            return 1
        total = 0
        for x in range(bound(c, rest) + 1):
            total += count(i + 1, tuple(r - x * ck for r, ck in zip(rest, c)))
        return total

    return count(0, s)


def enumerate_j(D):
    """All l-tuples over the union of divisors of the nonzero entries."""
    D = _matrix(D)
    ds = sorted({q for r in D.rows for v in r if v for q in divisors(v)})
    return list(product(ds, repeat=D.l))


def classify_columns(D, j):
    """Split columns into j-divisible ones and the rest, with their periods."""
    D = _matrix(D)
    j = tuple(j)
    if len(j) != D.l or any(v < 1 for v in j):
        raise ValueError(f"j must be {D.l} positive integers, got {j}")
    divisible, nondivisible, periods = [], [], []
    for i, c in enumerate(D.columns):
        if all(ck % jk == 0 for ck, jk in zip(c, j)):
            divisible.append(i)
        else:
            nondivisible.append(i)
            periods.append(lcm(*(jk // gcd(jk, ck) for ck, jk in zip(c, j))))
    return JClassification(j, tuple(divisible), tuple(nondivisible), tuple(periods))


def j_modified_matrix(D, j, classification=None):
    """Divisible columns first, then each non-divisible column times its period."""
    D = _matrix(D)
    cl = classification or classify_columns(D, j)
    cols = D.columns
    new = [cols[i] for i in cl.divisible]
    new += [tuple(p * v for v in cols[i]) for i, p in zip(cl.nondivisible, cl.periods)]
    return MatrixSpec.from_columns(new)


def homogeneous_poly(D):
    """P_m(t, D) = prod_i (c_i . t) as a polynomial in t_1..t_l."""
    D = _matrix(D)
    out = MultiPoly.one(D.l)
    for c in D.columns:
        out = out * MultiPoly.linear(list(c))
    return out


def _alpha(alpha, l):
    alpha = tuple(as_gaussian(a) for a in alpha)
    if len(alpha) != l:
        raise AlphaError(f"alpha needs {l} components, got {len(alpha)}")
    return alpha


def _nfact(n):
    return prod(factorial(k) for k in n)


def coefficient_C(n, alpha, D):
    """C_n(alpha, D) = alpha^(n+1) / (n! P_m(alpha, D))."""
    D = _matrix(D)
    alpha = _alpha(alpha, D.l)
    pm = homogeneous_poly(D).evaluate(alpha)
    if not pm:
        raise AlphaError("P_m(alpha, D) = 0: alpha lies on a chamber wall")
    num = ONE
    for a, k in zip(alpha, n):
        num = num * a ** (k + 1)
    return num / (pm * _nfact(n))


def _check_n(n, D):
    n = tuple(n)
    if len(n) != D.l or any(k < 0 for k in n):
        raise ValueError(f"n must have {D.l} nonnegative entries, got {n}")
    if sum(n) != D.m - D.l:
        raise ValueError(f"|n| must equal m - l = {D.m - D.l}, got {sum(n)}")
    return n


@lru_cache(maxsize=4096)
def _bernoulli_shifted(n, columns, l):
    spec = VectorHigherOrderSpec.from_columns(columns, l)
    return vector_higher_order_bernoulli(n, spec).shift(spec.sigma)


def partial_poly_part(n, D):
    """B^{(l,m)}_n(s + sigma(D) | D); the C_n factor is applied at evaluation."""
    D = _matrix(D)
    n = _check_n(n, D)
    return _bernoulli_shifted(n, D.columns, D.l)


def _canonical_terms(j, raw, weight):
    merged = {}
    for shift, poly in raw:
        for b, c in reduce_shift(j, shift):
            p = poly.scale(c)
            merged[b] = merged[b] + p if b in merged else p
    return tuple(
        WaveTerm(b, weight, p) for b, p in sorted(merged.items()) if not p.is_zero()
    )


def partial_wave(n, j, D):
    """Terms of W_j^n without the C_n factor, over canonical circulator shifts."""
    D = _matrix(D)
    n = _check_n(n, D)
    j = tuple(j)
    cl = classify_columns(D, j)
    Dj = j_modified_matrix(D, j, cl)
    base = partial_poly_part(n, Dj)
    cols = D.columns
    nondiv = [cols[i] for i in cl.nondivisible]
    raw = []
    for r in product(*(range(p) for p in cl.periods)):
        a = tuple(sum(ri * c[k] for ri, c in zip(r, nondiv)) for k in range(D.l))
        raw.append((a, base.shift(tuple(-v for v in a))))
    return _canonical_terms(j, raw, Fraction(1, cl.period_product))


def partial_wave_count(l, m):
    return comb(m - 1, m - l)


def decompose(D):
    D = _matrix(D)
    waves = []
    for n in compositions(D.m - D.l, D.l):
        for j in enumerate_j(D):
            terms = partial_wave(n, j, D)
            if terms:
                waves.append(PartialWave(n, j, terms))
    waves.sort(key=lambda w: (w.n, w.j))
    return VectorWaveDecomposition(D, tuple(waves))


def partial_values(decomp, s):
    """{n: W^n(s)} for every exponent vector n of the decomposition."""
    s = tuple(s)
    if len(s) != decomp.l:
        raise ValueError(f"s has {len(s)} components, matrix has {decomp.l} rows")
    values = {n: Fraction(0) for n in compositions(decomp.m - decomp.l, decomp.l)}
    for w in decomp.waves:
        values[w.n] += w.value(s)
    return values


def _poly_eps_mul(a, b):
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                out[i + k] = out[i + k] + x * y
    return out


def _eps_power(base, k):
    out = [ONE]
    for _ in range(k):
        out = _poly_eps_mul(out, base)
    return out


def evaluate(decomp, s, alpha, limit=False, direction=None):
    """sum_n C_n(alpha) W^n(s), exactly.

    With ``limit`` the value is the limit along alpha + eps*direction as
    eps -> 0 (default direction all ones), which admits directions on the
    zero set of P_m such as alpha_2/alpha_1 = 0.
    """
    D = decomp.matrix
    alpha = _alpha(alpha, D.l)
    values = partial_values(decomp, s)
    if not limit:
        pm = homogeneous_poly(D).evaluate(alpha)
        if not pm:
            raise AlphaError(
                "P_m(alpha, D) = 0: alpha lies on a chamber wall (use the limit mode)"
            )
        total = ZERO
        for n, w in values.items():
            num = ONE
            for a, k in zip(alpha, n):
                num = num * a ** (k + 1)
            total = total + num * (w / _nfact(n))
        return total / pm

    u = _alpha(direction if direction is not None else (1,) * D.l, D.l)
    lines = [[a, du] for a, du in zip(alpha, u)]
    denom = [ONE]
    for c in D.columns:
        form = [sum((ck * ln[0] for ck, ln in zip(c, lines)), ZERO),
                sum((ck * ln[1] for ck, ln in zip(c, lines)), ZERO)]
        denom = _poly_eps_mul(denom, form)
    order = next((i for i, x in enumerate(denom) if x), None)
    if order is None:
        raise AlphaError("P_m vanishes identically along the perturbation direction")
    numer = [ZERO] * (D.m + 1)
    for n, w in values.items():
        if not w:
            continue
        term = [ONE]
        for ln, k in zip(lines, n):
            term = _poly_eps_mul(term, _eps_power(ln, k + 1))
        scale = w / _nfact(n)
        for i, x in enumerate(term):
            numer[i] = numer[i] + x * scale
    if any(numer[i] for i in range(order)):
        raise AlphaError("the limit along this direction diverges")
    return numer[order] / denom[order]


def on_wall(D, alpha):
    """True when P_m(alpha, D) = 0, so only the limit mode applies."""
    D = _matrix(D)
    return not homogeneous_poly(D).evaluate(_alpha(alpha, D.l))


def real_part(decomp, s, alpha, limit=False, direction=None):
    return evaluate(decomp, s, alpha, limit=limit, direction=direction).re


def scalar_matrix(parts):
    return MatrixSpec((tuple(parts),))
