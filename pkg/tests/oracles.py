"""Brute-force oracles that use only pointwise scalar arithmetic.

None of these touch the LP or cell code, so they are independent checks on
the polyhedral answers.
"""

from fractions import Fraction
from itertools import product

import sympy


def grid(n, lo=-3, hi=3, den=2):
    vals = [Fraction(k, den) for k in range(lo * den, hi * den + 1)]
    return list(product(vals, repeat=n))


def _scalars(x):
    from supertrop.scalar import Scalar
    return [Scalar(v) for v in x]


def skel_points(f, pts):
    """Points where f evaluates to a magnitude-zero (nu-unit) value."""
    return sorted(x for x in pts if f.evaluate(_scalars(x)).mag == 0)


def corn_points(p, pts):
    """Points where the polynomial p evaluates to a ghost."""
    return sorted(x for x in pts if p.evaluate(_scalars(x)).ghost)


def rank(vectors):
    if not vectors:
        return 0
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator)
                          for v in map(Fraction, row)] for row in vectors]).rank()


def min_abs_log(f, pts):
    return min(abs(f.magnitude_at(x)) for x in pts)
