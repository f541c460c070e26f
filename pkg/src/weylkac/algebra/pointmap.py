"""
Point maps with phase: operators on functions of k plane variables of the form

    (M F)(v) = exp(i sum(pieces)(v)) * prod(factors)(v) * F(A v)     (or conj F)

with ``A v = matrix . v + offset`` acting legwise.

Each tensor leg carries its own base point.  A map that translates leg j by
``t`` moves that leg's base point by ``t_1``; this accumulated motion is the
``action`` field.  In a composition ``S o T`` the pieces of ``T`` (applied
first, written right) are read at ``A_S v`` and, when marked ``feels``, at the
base point moved by ``S``'s action on their leg.  Multiplication operators
and conjugations do not feel translations.
"""

from dataclasses import dataclass, replace

import sympy as sp

from .. import cocycle
from .elements import DUAL, LEGS, X, Y
from .phase import ZERO, PhaseExponent, phase_shift, phase_star, point, theta_odd


@dataclass(frozen=True)
class Piece:
    phase: PhaseExponent
    leg: int = None
    feels: bool = True


@dataclass(frozen=True)
class PointMapWithPhase:
    k: int
    matrix: tuple
    offset: tuple
    pieces: tuple = ()
    factors: tuple = ()
    action: tuple = None
    antilinear: bool = False
    name: str = ""

    def __post_init__(self):
        if self.action is None:
            object.__setattr__(self, "action", (sp.Integer(0),) * self.k)

    @property
    def phase(self):
        total = ZERO
        for p in self.pieces:
            total = total + p.phase
        return total

    def apply_points(self, v):
        """``A v`` for a tuple of k points."""
        out = []
        for i in range(self.k):
            a, b = self.offset[i]
            for j in range(self.k):
                c = self.matrix[i][j]
                if c:
                    a = a + c * v[j][0]
                    b = b + c * v[j][1]
            out.append((sp.expand(a), sp.expand(b)))
        return tuple(out)

    def __matmul__(self, other):
        return compose(self, other)


def _rule(k, pts):
    rule = {}
    for i in range(k):
        rule[LEGS[i][0]] = pts[i][0]
        rule[LEGS[i][1]] = pts[i][1]
    return rule


def compose(s, t):
    """Operator product ``s t``: ``t`` acts first."""
    if s.k != t.k:
        raise ValueError("point maps act on different numbers of legs")
    k = s.k
    image = s.apply_points(LEGS[:k])
    rule = _rule(k, image)
    pieces = list(s.pieces)
    for p in t.pieces:
        ph = phase_star(p.phase) if s.antilinear else p.phase
        ph = ph.subs(rule)
        if p.feels and p.leg is not None:
            ph = phase_shift(ph, (s.action[p.leg], 0), +1)
        pieces.append(Piece(ph, p.leg, p.feels))
    factors = list(s.factors)
    for name, pt, conj in t.factors:
        factors.append((name, tuple(sp.expand(sp.sympify(c).xreplace(rule)) for c in pt), conj ^ s.antilinear))
    sign = -1 if s.antilinear else 1
    action = tuple(
        sp.expand(s.action[i] + sign * sp.sympify(t.action[i]).xreplace(rule)) for i in range(k)
    )
    matrix = tuple(
        tuple(sum(t.matrix[i][m] * s.matrix[m][j] for m in range(k)) for j in range(k))
        for i in range(k)
    )
    offset = t.apply_points(s.offset)
    return PointMapWithPhase(
        k, matrix, offset, tuple(pieces), tuple(factors), action,
        s.antilinear ^ t.antilinear, f"{s.name}.{t.name}",
    )


def identity(k):
    return PointMapWithPhase(k, _eye(k), ((0, 0),) * k, name="id")


def _eye(k):
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def _elementary(k, i, j, c):
    m = [list(r) for r in _eye(k)]
    m[i][j] += c
    return tuple(tuple(r) for r in m)


def _pt(k, i):
    return LEGS[i] if i < k else None


def _translate_into(k, target, source, sign, pieces, name):
    """Leg ``target`` moves by ``sign * v_source``."""
    action = [sp.Integer(0)] * k
    action[target] = sign * LEGS[source][0]
    return PointMapWithPhase(
        k, _elementary(k, target, source, sign), ((0, 0),) * k,
        tuple(pieces), (), tuple(action), False, name,
    )


def w_theta(i=0, j=1, k=2, star=False):
    s = -1 if star else 1
    vi, vj = LEGS[i], LEGS[j]
    pieces = [
        Piece(PhaseExponent.theta(cocycle.scale(s, vi)), j, True),
        Piece(PhaseExponent.omega(vi, vj, -s)),
    ]
    return _translate_into(k, j, i, s, pieces, f"WT{'*' if star else ''}{i+1}{j+1}")


def w_omega(i=0, j=1, k=2, star=False):
    s = -1 if star else 1
    vi, vj = LEGS[i], LEGS[j]
    pieces = [
        Piece(PhaseExponent.omega(vj, vi, s)),
        Piece(PhaseExponent.theta(cocycle.scale(-s, vj)), i, True),
    ]
    return _translate_into(k, i, j, -s, pieces, f"WO{'*' if star else ''}{i+1}{j+1}")


def v_theta(i=0, j=1, k=2):
    pieces = [Piece(PhaseExponent.omega(LEGS[i], LEGS[j], -1))]
    return _translate_into(k, j, i, 1, pieces, f"VT{i+1}{j+1}")


def v_omega(i=0, j=1, k=2):
    pieces = [Piece(PhaseExponent.omega(LEGS[i], LEGS[j], -1))]
    return _translate_into(k, i, j, -1, pieces, f"VO{i+1}{j+1}")


def antiunitary(k, reflect, pieces=(), name="J"):
    """Complex conjugation, reflecting the legs flagged in ``reflect``."""
    m = tuple(
        tuple((-1 if reflect[i] else 1) if i == j else 0 for j in range(k)) for i in range(k)
    )
    return PointMapWithPhase(k, m, ((0, 0),) * k, tuple(pieces), (), None, True, name)


def j_theta(k=1):
    return antiunitary(k, (False,) * k, name="JT")


def j_omega(k=1):
    return antiunitary(k, (True,) * k, name="JO")


def j_prime_theta():
    return antiunitary(1, (False,), (Piece(-theta_odd(X), 0, False),), "J'T")


def translation(z, leg=0, k=1):
    """Regular action of ``L_Omega(z)`` on leg ``leg``: ``e^{i omega(z, v)} F(v - z)``."""
    z = point(z)
    off = [(0, 0)] * k
    off[leg] = (-z[0], -z[1])
    action = [sp.Integer(0)] * k
    action[leg] = -z[0]
    pieces = (Piece(PhaseExponent.omega(z, LEGS[leg])),)
    return PointMapWithPhase(k, _eye(k), tuple(off), pieces, (), tuple(action), False, "L")


def scalar(phase, k):
    return PointMapWithPhase(k, _eye(k), ((0, 0),) * k, (Piece(phase, None, False),), name="c")


def multiplication(element, k=None, leg=None):
    """Left star-multiplication by a single-term dual element.

    A degree-two element acts on a two-leg space with the tensor star phase;
    a degree-one element acts on leg ``leg`` of a ``k``-leg space.
    """
    if element.side != DUAL or len(element.terms) != 1:
        raise ValueError("multiplication takes a single-term dual element")
    (t,) = element.terms
    if element.degree == 2:
        k = 2
        ph = t.phase + PhaseExponent.theta(X, shift=Y[0]) + PhaseExponent.theta(Y)
        factors = t.factors
    else:
        k = k or 1
        leg = leg or 0
        rule = {X[0]: LEGS[leg][0], X[1]: LEGS[leg][1]}
        s = t.subs(rule)
        ph = s.phase + PhaseExponent.theta(LEGS[leg])
        factors = s.factors
    return PointMapWithPhase(
        k, _eye(k), ((0, 0),) * k, (Piece(ph, leg, False),), factors, None, False, "m"
    )


def conjugate_dagger_translation(z):
    """``L_Omega(z)^dagger`` acting on one leg."""
    return translation((-point(z)[0], -point(z)[1]))


def fundamental_map(name, k=2):
    table = {
        "WT": lambda: w_theta(k=k),
        "WT*": lambda: w_theta(k=k, star=True),
        "WO": lambda: w_omega(k=k),
        "WO*": lambda: w_omega(k=k, star=True),
        "VT": lambda: v_theta(k=k),
        "VO": lambda: v_omega(k=k),
        "JT": lambda: j_theta(1),
        "JO": lambda: j_omega(1),
        "J'T": j_prime_theta,
    }
    aliases = {
        "WΘ": "WT", "WΘ*": "WT*", "WΩ": "WO", "WΩ*": "WO*", "VΘ": "VT", "VΩ": "VO",
        "JΘ": "JT", "JΩ": "JO", "J′Θ": "J'T",
    }
    key = aliases.get(name, name)
    if key not in table:
        raise KeyError(f"unknown fundamental map {name!r}")
    return replace(table[key](), name=key)


def map_difference(a, b, theta=cocycle.theta):
    """``(holds, witness)`` comparing affine parts, conjugation flags, factors and phases."""
    if a.k != b.k:
        return False, "leg count differs"
    if a.matrix != b.matrix or a.offset != b.offset:
        return False, f"affine parts differ: {a.matrix},{a.offset} vs {b.matrix},{b.offset}"
    if a.antilinear != b.antilinear:
        return False, "linearity differs"
    fa = sorted((n, tuple(map(sp.expand, p)), c) for n, p, c in a.factors)
    fb = sorted((n, tuple(map(sp.expand, p)), c) for n, p, c in b.factors)
    if fa != fb:
        return False, f"factors differ: {fa} vs {fb}"
    d = sp.expand(a.phase.expand(theta) - b.phase.expand(theta))
    return d == 0, d
