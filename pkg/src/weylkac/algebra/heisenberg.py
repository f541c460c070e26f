"""Reference layer: the Heisenberg group and its projection onto the plane algebras."""

from dataclasses import dataclass

import sympy as sp

from .. import cocycle
from .elements import dual_function, generator
from .phase import PhaseExponent, point


@dataclass(frozen=True)
class H3Element:
    """``(x, alpha)`` with ``alpha = exp(i alpha_exponent)``; the exponent is base-point free."""

    x: tuple
    alpha_exponent: PhaseExponent = PhaseExponent()

    def __post_init__(self):
        if self.alpha_exponent.theta_terms:
            raise ValueError("central exponents carry no cochain terms")
        object.__setattr__(self, "x", point(self.x))


def central(name):
    return PhaseExponent.of_poly(sp.Symbol(name, real=True))


def h3_multiply(a, b):
    return H3Element(
        cocycle.add(a.x, b.x),
        a.alpha_exponent + b.alpha_exponent + PhaseExponent.omega(a.x, b.x),
    )


def h3_inverse(a):
    return H3Element(cocycle.neg(a.x), -a.alpha_exponent)


def h3_coproduct(a):
    return (a, a)


def h3_coinvolution(a):
    return h3_inverse(a)


def h3_equal(a, b):
    same_x = all(sp.expand(u - v) == 0 for u, v in zip(a.x, b.x))
    return same_x and a.alpha_exponent.equals(b.alpha_exponent)


def project(h, nu_power=0):
    """``L(x, alpha) -> exp(i theta(q;-x)) L_Omega(x)``; the central slot is discarded."""
    x = point(h.x)
    return generator(x, PhaseExponent.theta(cocycle.neg(x)), nu_power)


def project_dual(name, nu_power=0):
    """``f(x, alpha) -> exp(-i theta(q;-x)) f(x)``."""
    from .elements import X

    return dual_function(name, nu_power, -PhaseExponent.theta(cocycle.neg(X)))
