"""Pierce expansions, fundamental intervals and generalized leap-year rules.

Rationals are accepted as ``Fraction``, ``int`` or ``"p/q"`` strings and
returned as ``Fraction``. Enclosures come back as ``(lo, hi)`` pairs.
"""

from fractions import Fraction

from . import _pierce
from ._pierce import PierceError

__all__ = [
    "PierceError",
    "step",
    "encode",
    "decode",
    "enclose",
    "fundamental_interval",
    "find_interval_within",
    "is_leap",
    "count_leaps",
    "series_value",
    "construct_digits",
    "growth_rate",
    "trajectory",
    "enumerate_zc",
]


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _rule(rule):
    if isinstance(rule, str):
        return rule
    return ",".join(str(int(t)) for t in rule)


def _pair(p):
    return Fraction(p[0]), Fraction(p[1])


def _digits(ds):
    return [str(int(d)) for d in ds]


def step(x):
    """One digit and the shifted remainder; the digit is None at x = 0."""
    d, r = _pierce.step(_q(x))
    return (None if d is None else int(d)), Fraction(r)


def encode(x):
    return [int(d) for d in _pierce.encode(_q(x))]


def decode(digits):
    return Fraction(_pierce.decode(_digits(digits))[0])


def enclose(digits, n):
    """Enclosure of an extendable sequence from partial sums n and n+1."""
    return _pair(_pierce.decode(_digits(digits), True, n))


def fundamental_interval(digits):
    d = _pierce.fundamental_interval(_digits(digits))
    d["left"] = Fraction(d["left"])
    d["right"] = Fraction(d["right"])
    return d


def find_interval_within(a, b):
    return [int(d) for d in _pierce.find_interval_within(_q(a), _q(b))]


def is_leap(rule, year):
    return _pierce.is_leap(_rule(rule), str(int(year)))


def count_leaps(rule, through, method="formula"):
    return int(_pierce.count_leaps(_rule(rule), str(int(through)), method))


def series_value(rule, n=0):
    return _pair(_pierce.series_value(_rule(rule), n))


def construct_digits(alpha, n, bits=0):
    return [int(d) for d in _pierce.construct_digits(_q(alpha), n, bits)]


def growth_rate(digits, n, bits=0):
    return _pair(_pierce.growth_rate(_digits(digits), n, bits))


def trajectory(alpha, rmax, guard=3, bits=0):
    rows = _pierce.trajectory(_q(alpha), rmax, guard, bits)
    for row in rows:
        row["year"] = int(row["year"])
        row["leap_count"] = int(row["leap_count"])
        row["drift"] = _pair(row["drift"])
        row["quotient"] = _pair(row["quotient"])
    return rows


def enumerate_zc(c, start_index, depth):
    return [([int(d) for d in p], list(j)) for p, j in _pierce.enumerate_zc(_q(c), start_index, depth)]
