"""
Formal elements of the two projective algebras.

Operator side: sums of ``c * exp(i P) L(x)`` (or tensor strings of
generators), where ``P`` is a structured phase and ``x`` a vector of linear
forms.  Dual side: sums of ``c * exp(i P) f(a) g(b) ...`` viewed as functions
of one canonical plane variable per tensor leg.

``nu_power`` selects the unscaled algebra (0) or the copy whose phases are
all multiplied by ``nu`` (1).
"""

from dataclasses import dataclass

import sympy as sp

from .. import cocycle
from .phase import ZERO, PhaseExponent, nu, phase_shift, phase_star, point, q, theta_odd

OPERATOR = "operator"
DUAL = "dual"

x1, x2, y1, y2, z1, z2 = sp.symbols("x1 x2 y1 y2 z1 z2", real=True)
X, Y, Z = (x1, x2), (y1, y2), (z1, z2)
LEGS = (X, Y, Z)


@dataclass(frozen=True)
class Term:
    coeff: sp.Expr
    phase: PhaseExponent
    args: tuple
    factors: tuple = ()

    def subs(self, rule):
        return Term(
            self.coeff,
            self.phase.subs(rule),
            self.args,
            tuple((n, _psubs(p, rule), c) for n, p, c in self.factors),
        )


@dataclass(frozen=True)
class AlgebraElement:
    terms: tuple
    degree: int
    side: str
    nu_power: int = 0

    def __add__(self, other):
        _same(self, other)
        return AlgebraElement(self.terms + other.terms, self.degree, self.side, self.nu_power)

    def __neg__(self):
        terms = tuple(Term(-t.coeff, t.phase, t.args, t.factors) for t in self.terms)
        return AlgebraElement(terms, self.degree, self.side, self.nu_power)

    def __sub__(self, other):
        return self + (-other)

    def with_phase(self, p):
        terms = tuple(Term(t.coeff, t.phase + p, t.args, t.factors) for t in self.terms)
        return AlgebraElement(terms, self.degree, self.side, self.nu_power)


def _psubs(p, rule):
    return (sp.sympify(p[0]).xreplace(rule), sp.sympify(p[1]).xreplace(rule))


def _same(a, b):
    if a.side != b.side:
        raise ValueError("operator-side and dual-side elements do not mix")
    if a.degree != b.degree:
        raise ValueError("tensor degree mismatch")
    if a.nu_power != b.nu_power:
        raise ValueError("elements belong to different nu-scaled algebras")


def _th(arg, nu_power, shift=0, coeff=1):
    return PhaseExponent.theta(arg, shift, coeff, nu_power)


def _om(x, y, nu_power, coeff=1):
    return PhaseExponent.omega(x, y, coeff, nu_power)


def _neg(x):
    return (-x[0], -x[1])


# ---------------------------------------------------------------- operator side


def generator(x, phase=ZERO, nu_power=0, coeff=1):
    """``exp(i phase) L(x)``; with ``nu_power=1`` the generator is S_nu(x)."""
    return AlgebraElement(
        (Term(sp.sympify(coeff), phase.scaled(nu_power), (point(x),)),),
        1,
        OPERATOR,
        nu_power,
    )


def tensor(*elements):
    """Tensor product of degree-one elements."""
    side = elements[0].side
    p = elements[0].nu_power
    for e in elements:
        if e.side != side or e.nu_power != p or e.degree != 1:
            raise ValueError("tensor needs degree-one elements of one algebra")
    if side == OPERATOR:
        terms = [Term(sp.Integer(1), ZERO.scaled(p), ())]
        for e in elements:
            new = []
            for a in terms:
                for b in e.terms:
                    new.append(Term(a.coeff * b.coeff, a.phase + b.phase, a.args + b.args))
            terms = new
        return AlgebraElement(tuple(terms), len(elements), side, p)
    if len(elements) != 2:
        raise ValueError("dual tensors are supported for two legs")
    f, g = elements
    rule = {X[0]: Y[0], X[1]: Y[1]}
    terms = []
    for a in f.terms:
        for b in g.terms:
            b2 = b.subs(rule)
            # leg one's cochain terms sit at the base point moved by leg two
            terms.append(
                Term(
                    a.coeff * b.coeff,
                    phase_shift(a.phase, Y, +1) + b2.phase,
                    (X, Y),
                    a.factors + b2.factors,
                )
            )
    return AlgebraElement(tuple(terms), 2, DUAL, p)


def multiply(a, b):
    _same(a, b)
    p = a.nu_power
    terms = []
    if a.side == OPERATOR:
        for s in a.terms:
            for t in b.terms:
                ph = s.phase + phase_shift(t.phase, s.args[0], -1)
                args = []
                for u, v in zip(s.args, t.args):
                    ph = ph + _om(u, v, p)
                    args.append(cocycle.add(u, v))
                terms.append(Term(s.coeff * t.coeff, ph, tuple(args), ()))
        return AlgebraElement(tuple(terms), a.degree, OPERATOR, p)
    star = _dual_star_phase(a.degree, p)
    for s in a.terms:
        for t in b.terms:
            terms.append(
                Term(s.coeff * t.coeff, s.phase + t.phase + star, s.args, s.factors + t.factors)
            )
    return AlgebraElement(tuple(terms), a.degree, DUAL, p)


def _dual_star_phase(degree, p):
    if degree == 1:
        return _th(X, p)
    if degree == 2:
        return _th(X, p, shift=Y[0]) + _th(Y, p)
    raise ValueError("dual products are supported up to degree two")


def dagger(a):
    if a.side != OPERATOR:
        raise ValueError("dagger acts on operator-side elements; use dual_involution")
    terms = tuple(
        Term(sp.conjugate(t.coeff), phase_star(t.phase), tuple(_neg(u) for u in t.args))
        for t in a.terms
    )
    return AlgebraElement(terms, a.degree, OPERATOR, a.nu_power)


def coproduct(a, leg=0):
    """Coproduct of a degree-one element, or of leg ``leg`` of a tensor (operator side)."""
    p = a.nu_power
    if a.side == OPERATOR:
        terms = []
        for t in a.terms:
            u = t.args[leg]
            args = t.args[:leg] + (u, u) + t.args[leg + 1:]
            terms.append(Term(t.coeff, t.phase + _th(_neg(u), p), args))
        return AlgebraElement(tuple(terms), a.degree + 1, OPERATOR, p)
    if a.degree != 1:
        raise ValueError("dual coproduct takes a degree-one element")
    rule = {X[0]: X[0] + Y[0], X[1]: X[1] + Y[1]}
    terms = []
    for t in a.terms:
        s = t.subs(rule)
        terms.append(Term(s.coeff, s.phase - _om(X, Y, p), (X, Y), s.factors))
    return AlgebraElement(tuple(terms), 2, DUAL, p)


def coinvolution(a):
    p = a.nu_power
    if a.side == OPERATOR:
        terms = []
        for t in a.terms:
            ph = t.phase
            for u in t.args:
                ph = ph + theta_odd(u, p)
            terms.append(Term(t.coeff, ph, tuple(_neg(u) for u in t.args)))
        return AlgebraElement(tuple(terms), a.degree, OPERATOR, p)
    if a.degree == 1:
        rule = {X[0]: -X[0], X[1]: -X[1]}
        terms = tuple(
            Term(t.coeff, s.phase - theta_odd(X, p), t.args, s.factors)
            for t in a.terms
            for s in (t.subs(rule),)
        )
        return AlgebraElement(terms, 1, DUAL, p)
    if a.degree == 2:
        rule = {X[0]: -X[0], X[1]: -X[1], Y[0]: -Y[0], Y[1]: -Y[1]}
        # the new leg-one phase sits at the base point moved by -y, the
        # coordinate at which leg two of the input is read
        extra = -theta_odd(X, p, shift=-Y[0]) - theta_odd(Y, p)
        terms = tuple(
            Term(t.coeff, s.phase + extra, t.args, s.factors)
            for t in a.terms
            for s in (t.subs(rule),)
        )
        return AlgebraElement(terms, 2, DUAL, p)
    raise ValueError("dual coinvolution is supported up to degree two")


def flip(a):
    """Leg swap of a degree-two element."""
    if a.degree != 2:
        raise ValueError("flip needs a degree-two element")
    if a.side == OPERATOR:
        terms = tuple(Term(t.coeff, t.phase, t.args[::-1]) for t in a.terms)
        return AlgebraElement(terms, 2, OPERATOR, a.nu_power)
    rule = {X[0]: Y[0], X[1]: Y[1], Y[0]: X[0], Y[1]: X[1]}
    return AlgebraElement(tuple(t.subs(rule) for t in a.terms), 2, DUAL, a.nu_power)


# -------------------------------------------------------------------- dual side


def dual_function(name, nu_power=0, phase=ZERO):
    return AlgebraElement(
        (Term(sp.Integer(1), phase.scaled(nu_power), (X,), ((name, X, False),)),),
        1,
        DUAL,
        nu_power,
    )


def dual_unit(nu_power=0):
    return AlgebraElement((Term(sp.Integer(1), -_th(X, nu_power), (X,)),), 1, DUAL, nu_power)


def dual_involution(f):
    if f.side != DUAL:
        raise ValueError("dual_involution acts on dual-side elements; use dagger")
    if f.degree != 1:
        raise ValueError("dual involution is defined on degree-one elements")
    p = f.nu_power
    terms = tuple(
        Term(
            sp.conjugate(t.coeff),
            phase_star(t.phase) - theta_odd(X, p),
            t.args,
            tuple((n, pt, not c) for n, pt, c in t.factors),
        )
        for t in f.terms
    )
    return AlgebraElement(terms, 1, DUAL, p)


def dual_trace(f):
    """Trace on degree-one dual elements: integrate ``exp(-i theta(q;-x))`` against ``f``."""
    return f.with_phase(-_th(_neg(X), f.nu_power))


# ------------------------------------------------------------------ comparison


def _key_point(p):
    return (sp.expand(p[0]), sp.expand(p[1]))


def normal_form(a, theta=cocycle.theta):
    """Map (generator or factor key) -> {expanded phase: coefficient}."""
    out = {}
    for t in a.terms:
        if a.side == OPERATOR:
            key = tuple(_key_point(u) for u in t.args)
        else:
            key = tuple(sorted((n, _key_point(pt), c) for n, pt, c in t.factors))
        bucket = out.setdefault(key, {})
        ph = t.phase.expand(theta)
        bucket[ph] = bucket.get(ph, 0) + t.coeff
    cleaned = {}
    for key, bucket in out.items():
        b = {ph: c for ph, c in bucket.items() if sp.simplify(c) != 0}
        if b:
            cleaned[key] = b
    return cleaned


def difference(a, b, theta=cocycle.theta):
    """Return ``(holds, witness)``.

    For single-term sides the witness is the expanded exponent difference
    ``phase(a) - phase(b)``; otherwise it is a textual description of the
    leftover terms.
    """
    _same(a, b)
    na, nb = normal_form(a, theta), normal_form(b, theta)
    if na.keys() == nb.keys() and all(len(v) == 1 for v in na.values()) and all(
        len(v) == 1 for v in nb.values()
    ):
        diffs = []
        for key in na:
            (pa, ca), = na[key].items()
            (pb, cb), = nb[key].items()
            if sp.simplify(ca - cb) != 0:
                return False, f"coefficient mismatch {ca} vs {cb}"
            diffs.append(sp.expand(pa - pb))
        nonzero = [d for d in diffs if d != 0]
        if not nonzero:
            return True, sp.Integer(0)
        return False, nonzero[0]
    # general case: cancel a against b as sums of exponentials
    rest = {}
    for key in set(na) | set(nb):
        bucket = dict(na.get(key, {}))
        for ph, c in nb.get(key, {}).items():
            bucket[ph] = bucket.get(ph, 0) - c
        bucket = {ph: c for ph, c in bucket.items() if sp.simplify(c) != 0}
        if bucket:
            rest[key] = bucket
    if not rest:
        return True, sp.Integer(0)
    return False, f"unmatched terms {rest}"


def commutator(x, y, nu_power=0):
    a, b = generator(x, nu_power=nu_power), generator(y, nu_power=nu_power)
    return multiply(a, b) - multiply(b, a)


def numeric_value(a, values, qval=0):
    """Evaluate a degree-one operator-side element at numbers: {generator point: complex}."""
    import cmath

    out = {}
    rule = dict(values)
    rule[q] = qval
    for t in a.terms:
        key = tuple(tuple(complex(sp.N(c.xreplace(rule))).real for c in u) for u in t.args)
        ph = complex(sp.N(t.phase.expand().xreplace(rule))).real
        out[key] = out.get(key, 0) + complex(sp.N(t.coeff)) * cmath.exp(1j * ph)
    return out


__all__ = [
    "OPERATOR",
    "DUAL",
    "X",
    "Y",
    "Z",
    "Term",
    "AlgebraElement",
    "generator",
    "tensor",
    "multiply",
    "dagger",
    "coproduct",
    "coinvolution",
    "flip",
    "dual_function",
    "dual_unit",
    "dual_involution",
    "dual_trace",
    "normal_form",
    "difference",
    "commutator",
    "numeric_value",
    "nu",
    "q",
]
