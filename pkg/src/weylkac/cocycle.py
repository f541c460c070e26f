"""
The plane cocycle, its gauge cochain, and the translation action on the
base point.

Every function here is polynomial in its arguments, so the same code runs
over Fraction, sympy expressions, floats and numpy arrays.  A plane point
is any pair ``(x1, x2)``; a base point is a scalar.
"""

from fractions import Fraction

HALF = Fraction(1, 2)


def add(x, y):
    return (x[0] + y[0], x[1] + y[1])


def neg(x):
    return (-x[0], -x[1])


def scale(c, x):
    return (c * x[0], c * x[1])


def omega(x, y):
    """Antisymmetric bilinear cocycle on the plane."""
    return HALF * (x[0] * y[1] - y[0] * x[1])


def theta(q, x):
    """Gauge cochain at base point ``q``; its coboundary is ``omega``."""
    return -HALF * (2 * q + x[0]) * x[1]


def act(y, q):
    """Translation ``y`` acting on the base point."""
    return q + y[0]


def coboundary_theta(q, x, y):
    return theta(act(y, q), x) - theta(q, add(x, y)) + theta(q, y)


def delta_omega(x, y, z):
    return omega(y, z) - omega(add(x, y), z) + omega(x, add(y, z)) - omega(x, y)


def theta_odd(q, x):
    """``theta(q, x) - theta(q, -x)``; linear in ``x``."""
    return theta(q, x) - theta(q, neg(x))
