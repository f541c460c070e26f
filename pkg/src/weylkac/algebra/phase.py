"""
Structured phase exponents.

A phase exponent is kept as a sum of gauge-cochain terms, each remembering
its base-point offset and its argument, plus a base-point-free polynomial.
The structured form matters: conjugation and the base-point action act on
it term by term, and only comparison expands it into a polynomial.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import sympy as sp

from .. import cocycle

q = sp.Symbol("q")
nu = sp.Symbol("nu", positive=True)


def _s(v):
    if isinstance(v, Fraction):
        return sp.Rational(v.numerator, v.denominator)
    return sp.sympify(v)


def point(x):
    return (_s(x[0]), _s(x[1]))


@dataclass(frozen=True)
class ThetaTerm:
    """``coeff * theta(q + shift; arg)``."""

    coeff: sp.Expr
    shift: sp.Expr
    arg: tuple

    def subs(self, rule):
        return ThetaTerm(
            self.coeff,
            self.shift.xreplace(rule),
            tuple(a.xreplace(rule) for a in self.arg),
        )


@dataclass(frozen=True)
class PhaseExponent:
    theta_terms: tuple = ()
    poly: sp.Expr = field(default=sp.Integer(0))
    nu_power: int = 0

    @classmethod
    def theta(cls, arg, shift=0, coeff=1, nu_power=0):
        t = ThetaTerm(_s(coeff), _s(shift), point(arg))
        return cls((t,), sp.Integer(0), nu_power)

    @classmethod
    def omega(cls, x, y, coeff=1, nu_power=0):
        return cls((), _s(coeff) * cocycle.omega(point(x), point(y)), nu_power)

    @classmethod
    def of_poly(cls, expr, nu_power=0):
        return cls((), _s(expr), nu_power)

    def is_zero_structure(self):
        return not self.theta_terms and self.poly == 0

    def _power(self, other):
        if self.is_zero_structure():
            return other.nu_power
        if other.is_zero_structure() or self.nu_power == other.nu_power:
            return self.nu_power
        raise ValueError("cannot add phases with different nu scaling")

    def __add__(self, other):
        return PhaseExponent(
            self.theta_terms + other.theta_terms,
            self.poly + other.poly,
            self._power(other),
        )

    def __neg__(self):
        terms = tuple(ThetaTerm(-t.coeff, t.shift, t.arg) for t in self.theta_terms)
        return PhaseExponent(terms, -self.poly, self.nu_power)

    def __sub__(self, other):
        return self + (-other)

    def subs(self, rule):
        return PhaseExponent(
            tuple(t.subs(rule) for t in self.theta_terms),
            self.poly.xreplace(rule),
            self.nu_power,
        )

    def scaled(self, nu_power):
        return PhaseExponent(self.theta_terms, self.poly, nu_power)

    def expand(self, theta=cocycle.theta):
        """Polynomial value, with ``theta`` injectable for mutation runs."""
        total = self.poly
        for t in self.theta_terms:
            total += t.coeff * theta(q + t.shift, t.arg)
        return sp.expand(total * nu**self.nu_power)

    def equals(self, other, theta=cocycle.theta):
        return sp.expand(self.expand(theta) - other.expand(theta)) == 0


ZERO = PhaseExponent()


def phase_star(p):
    """Conjugation rule: cochain terms flip shift and argument, the rest negates."""
    terms = tuple(
        ThetaTerm(t.coeff, -t.shift, (-t.arg[0], -t.arg[1])) for t in p.theta_terms
    )
    return PhaseExponent(terms, -p.poly, p.nu_power)


def phase_shift(p, by, direction=-1):
    """Move every base point by the translation ``by``.

    ``direction=-1`` gives ``by^{-1} . q`` (operator products), ``+1`` gives
    ``by . q``.
    """
    s = direction * _s(by[0])
    terms = tuple(ThetaTerm(t.coeff, t.shift + s, t.arg) for t in p.theta_terms)
    return PhaseExponent(terms, p.poly, p.nu_power)


def theta_odd(arg, nu_power=0, shift=0):
    """Structured ``theta(q;arg) - theta(q;-arg)``."""
    a = point(arg)
    return PhaseExponent.theta(a, shift, 1, nu_power) + PhaseExponent.theta(
        (-a[0], -a[1]), shift, -1, nu_power
    )
