"""Worked vector-partition examples: matrices, chamber directions, closed forms.

Each chamber pairs a direction alpha with the region of s it selects and the
piecewise closed form valid there. Closed forms are written independently of
the wave machinery so they can serve as oracles.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .numeric import GaussianRational as G
from .vector import evaluate, on_wall


def _sgn(v):
    return 1 if v % 2 == 0 else -1


@dataclass(frozen=True)
class Chamber:
    label: str
    alpha: tuple
    region: object  # s -> bool
    closed_form: object  # s -> Fraction


@dataclass(frozen=True)
class Example:
    name: str
    rows: tuple
    chambers: tuple
    grid: int


def _ex1_low(s):
    return Fraction(s[0], 2) + Fraction(3 + _sgn(s[0]), 4)


def _ex1_high(s):
    return Fraction(s[1] + 1, 2) + Fraction(_sgn(s[0]) + _sgn(s[0] - s[1]), 4)


def _ex2_first(s):
    s1, _ = s
    return Fraction(s1 * s1, 4) + s1 + Fraction(7 + _sgn(s1), 8)


def _ex2_middle(s):
    s1, s2 = s
    return (
        s1 * s2
        - Fraction(s1 * s1 + 2 * s2 * s2, 4)
        + Fraction(s1 + s2, 2)
        + Fraction(7 + _sgn(s1), 8)
    )


def _ex2_last(s):
    s2 = s[1]
    return Fraction(s2 * s2, 2) + Fraction(3 * s2, 2) + 1


def _ex3_parity(s):
    return Fraction(1 + _sgn(s[0] - s[1]), 2)


def _zero(s):
    return Fraction(0)


def _ex4_first(s):
    s1, s2, s3 = s
    return (1 + _sgn(s1 + s2 + s3)) * (Fraction(3 + _sgn(s1), 8) + Fraction(s1, 4))


def _ex4_second(s):
    s1, s2, s3 = s
    return (1 + _sgn(s1 + s2 + s3)) * (Fraction(3 + _sgn(s1), 8) + Fraction(s2 - s3, 4))


def example4_general(s, alpha, alpha3_constant=True):
    """Closed form of the full alpha-mixture for the 3 x 4 example.

    The constant in the bracket is 3 a1 + 4 a2 + a3; dropping the a3
    (``alpha3_constant=False``) only changes imaginary parts on the first
    chamber but breaks the real part on the second.
    """
    a1, a2, a3 = (a if isinstance(a, G) else G(a) for a in alpha)
    s1, s2, s3 = s
    dot = a1 * s1 + a2 * s2 + a3 * s3
    const = 3 * a1 + 4 * a2 + (a3 if alpha3_constant else 0)
    bracket = const + _sgn(s1) * (a1 + a2) + _sgn(s3) * (a2 + a3) + 2 * dot
    return a3 * (1 + _sgn(s1 + s2 + s3)) * bracket / (8 * (a1 + a2) * (a2 + a3))


I = G(0, 1)

EXAMPLE1 = Example(
    "example1",
    ((1, 2, 0), (1, 0, 1)),
    (
        Chamber("s1 <= s2", (1, 0), lambda s: s[0] - s[1] - 1 < 0, _ex1_low),
        Chamber("s1 >= s2 + 1", (0, 1), lambda s: s[0] - s[1] - 1 >= 0, _ex1_high),
    ),
    12,
)

EXAMPLE2 = Example(
    "example2",
    ((1, 2, 1, 0), (1, 1, 0, 1)),
    (
        Chamber("s1 <= s2", (1, 0), lambda s: s[0] <= s[1], _ex2_first),
        Chamber(
            "s1/2 - 1 <= s2 <= s1 + 1 (+i)",
            (1, G(-1, 1)),
            lambda s: Fraction(s[0], 2) - 1 <= s[1] <= s[0] + 1,
            _ex2_middle,
        ),
        Chamber(
            "s1/2 - 1 <= s2 <= s1 + 1 (-i)",
            (1, G(-1, -1)),
            lambda s: Fraction(s[0], 2) - 1 <= s[1] <= s[0] + 1,
            _ex2_middle,
        ),
        Chamber("s2 <= s1/2", (0, 1), lambda s: s[1] <= Fraction(s[0], 2), _ex2_last),
    ),
    12,
)

EXAMPLE3 = Example(
    "example3",
    ((1, 2), (1, 0)),
    (
        Chamber("s1 >= s2", (0, 1), lambda s: s[0] >= s[1], _ex3_parity),
        Chamber("s1 < s2", (1, 0), lambda s: s[0] < s[1], _zero),
    ),
    10,
)


def _ex4_r1(s):
    return s[1] >= s[2] and s[0] - s[1] + s[2] - 2 < 0


def _ex4_r2(s):
    return s[1] >= s[2] and s[0] - s[1] + s[2] - 2 >= 0


EXAMPLE4 = Example(
    "example4",
    ((2, 1, 0, 0), (0, 1, 1, 2), (0, 0, 1, 0)),
    (
        Chamber("first line (+i)", (1, 0, I), _ex4_r1, _ex4_first),
        Chamber("first line (-i)", (1, 0, -I), _ex4_r1, _ex4_first),
        Chamber("second line (+i)", (1, I, 1 - I), _ex4_r2, _ex4_second),
        Chamber("second line (-i)", (1, -I, 1 + I), _ex4_r2, _ex4_second),
        Chamber("s2 < s3", (1, 1, 0), lambda s: s[1] < s[2], _zero),
    ),
    10,
)

EXAMPLES = (EXAMPLE1, EXAMPLE2, EXAMPLE3, EXAMPLE4)


def chamber_value(decomp, chamber, s):
    """Real part of the alpha-mixture, taking the limit when alpha is on a wall."""
    return evaluate(decomp, s, chamber.alpha, limit=on_wall(decomp.matrix, chamber.alpha)).re


def chamber_points(example, chamber):
    return [
        s for s in itertools.product(range(example.grid + 1), repeat=len(example.rows)) if chamber.region(s)
    ]
