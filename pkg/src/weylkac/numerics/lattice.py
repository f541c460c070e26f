"""
Kronecker-delta realizations on integer lattices: Haar-weight axioms for
the plane algebras and the kernel Yang-Baxter equation on a finite torus.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .. import cocycle
from .weyl import omega, theta


@dataclass(frozen=True)
class NumPhase:
    """``poly + sum c * theta(q + shift; v)``, kept structured so it can be starred and shifted."""

    poly: float = 0.0
    terms: tuple = ()

    def __add__(self, other):
        return NumPhase(self.poly + other.poly, self.terms + other.terms)

    def star(self):
        return NumPhase(-self.poly, tuple((c, -s, (-v[0], -v[1])) for c, s, v in self.terms))

    def shift(self, by):
        return NumPhase(self.poly, tuple((c, s + by, v) for c, s, v in self.terms))

    def value(self, q):
        return self.poly + sum(c * float(theta(q + s, v)) for c, s, v in self.terms)


def _th(v, c=1):
    return NumPhase(0.0, ((c, 0, tuple(v)),))


@dataclass
class LatticeOperator:
    """Finite sum of tensor products of translations with structured phases."""

    degree: int
    terms: list = field(default_factory=list)  # (args, coeff, NumPhase)

    def evaluate(self, q, nu):
        out = {}
        for args, c, ph in self.terms:
            out[args] = out.get(args, 0) + c * np.exp(1j * nu * ph.value(q))
        return out


def op_from_function(values, points):
    return LatticeOperator(1, [((p,), complex(v), NumPhase()) for p, v in zip(points, values) if v])


def op_unit(degree):
    return LatticeOperator(degree, [(((0, 0),) * degree, 1.0, NumPhase())])


def op_tensor(a, b):
    return LatticeOperator(
        a.degree + b.degree,
        [(sa + sb, ca * cb, pa + pb) for sa, ca, pa in a.terms for sb, cb, pb in b.terms],
    )


def op_multiply(a, b):
    """Right-factor cochain terms sit at the base point moved back by the left leg-one argument."""
    out = []
    for sa, ca, pa in a.terms:
        for sb, cb, pb in b.terms:
            ph = pa + pb.shift(-sa[0][0])
            poly = sum(float(omega(u, v)) for u, v in zip(sa, sb))
            args = tuple(cocycle.add(u, v) for u, v in zip(sa, sb))
            out.append((args, ca * cb, ph + NumPhase(poly)))
    return LatticeOperator(a.degree, out)


def op_dagger(a):
    return LatticeOperator(
        a.degree, [(tuple(cocycle.neg(u) for u in s), np.conj(c), p.star()) for s, c, p in a.terms]
    )


def op_coproduct(a):
    return LatticeOperator(2, [((s[0], s[0]), c, p + _th(cocycle.neg(s[0]))) for s, c, p in a.terms])


def op_coinvolution(a):
    out = []
    for s, c, p in a.terms:
        for u in s:
            p = p + _th(u) + _th(cocycle.neg(u), -1)
        out.append((tuple(cocycle.neg(u) for u in s), c, p))
    return LatticeOperator(a.degree, out)


def op_trace_leg2(a):
    """``id (x) phi`` with ``phi(L(y)) = delta(y)``."""
    return LatticeOperator(1, [((s[0],), c, p) for s, c, p in a.terms if s[1] == (0, 0)])


def op_weight(a):
    return sum(c * (1 if s == ((0, 0),) else 0) for s, c, p in a.terms)


def _residual(lhs, rhs):
    keys = set(lhs) | set(rhs)
    return max((abs(lhs.get(k, 0) - rhs.get(k, 0)) for k in keys), default=0.0)


def window(m):
    return [(a, b) for a in range(-m, m + 1) for b in range(-m, m + 1)]


def _dual_sides(f, g, pts, q, nu):
    """Both dual-side axioms; values are lattice functions keyed by point."""
    fd = dict(zip(pts, f))
    gd = dict(zip(pts, g))

    def e(x):
        return np.exp(1j * nu * x)

    def th(p, v):
        return float(theta(p, v))

    def odd(p, v):
        return th(p, v) - th(p, cocycle.neg(v))

    def om(x, y):
        return float(omega(x, y))

    zs = [(a, b) for a, b in pts]
    out = {k: {} for k in ("hwlia", "hwlia_literal", "hwsa", "hwsa_shifted")}
    weight = sum(e(-th(q, cocycle.neg(z))) * fd[z] for z in zs)
    for x in pts:
        # left invariance: sum_y phi-weight(y) * coproduct(f)(x, y)
        lhs = 0
        moved = 0
        for z in zs:
            y = (z[0] - x[0], z[1] - x[1])
            lhs += e(-th(q, cocycle.neg(y)) - om(x, y)) * fd[z]
            moved += e(-th(q + x[0], cocycle.neg(z))) * fd[z]
        unit = e(-th(q, x))
        out["hwlia"][x] = (lhs, unit * moved)
        out["hwlia_literal"][x] = (lhs, unit * weight)

        # strong invariance, left side: (1 (x) g°) * coproduct(f), leg two integrated
        s_lhs = 0
        for z in zs:
            y = (z[0] - x[0], z[1] - x[1])
            if y not in gd:
                continue
            unit_leg = -th(q + y[0], x)
            g_inv = -odd(q, y)
            star = th(q + y[0], x) + th(q, y)
            cop = -om(x, y)
            w = -th(q, cocycle.neg(y))
            s_lhs += e(unit_leg + g_inv + star + cop + w) * np.conj(gd[y]) * fd[z]
        # right side: coinvolution of (° (x) °) coproduct(g) * (1 (x) f), leg two integrated
        s_rhs = 0
        s_shift = 0
        mx = cocycle.neg(x)
        for z in zs:
            a = (z[0] - x[0], z[1] - x[1])
            if a not in gd:
                continue
            cop = om(mx, z)  # conjugated coproduct phase
            leg2 = -odd(q, z) + th(q, z) - th(q, cocycle.neg(z))
            base = cop + leg2 - odd(q, x)
            s_rhs += e(base - odd(q, mx)) * np.conj(gd[a]) * fd[z]
            s_shift += e(base - odd(q + z[0], mx)) * np.conj(gd[a]) * fd[z]
        out["hwsa"][x] = (s_lhs, s_rhs)
        out["hwsa_shifted"][x] = (s_lhs, s_shift)
    return {k: max(abs(a - b) for a, b in v.values()) for k, v in out.items()}


def haar_axiom_residuals(f, g, nu=1.0, q=Fraction(3, 7), m=None):
    """Residuals of left invariance and strong invariance on both algebras.

    ``f`` and ``g`` are sampled on the window ``{-m..m}^2`` in row-major order
    and vanish outside it.  Keys ending in ``_literal`` and ``_shifted`` are
    diagnostics for alternative readings of the dual side and carry no
    tolerance.
    """
    f = np.asarray(f, dtype=complex).ravel()
    g = np.asarray(g, dtype=complex).ravel()
    if m is None:
        m = (int(round(np.sqrt(f.size))) - 1) // 2
    pts = window(m)
    if f.size != len(pts) or g.size != len(pts):
        raise ValueError(f"expected {len(pts)} lattice samples")
    q = float(q)

    fh = op_from_function(f, pts)
    gh = op_from_function(g, pts)
    lhs = op_trace_leg2(op_coproduct(fh)).evaluate(q, nu)
    rhs = LatticeOperator(1, [(((0, 0),), op_weight(fh), NumPhase())]).evaluate(q, nu)
    op_hwlia = _residual(lhs, rhs)

    one = op_unit(1)
    lhs = op_trace_leg2(op_multiply(op_tensor(one, op_dagger(gh)), op_coproduct(fh)))
    rhs = op_coinvolution(
        op_trace_leg2(op_multiply(op_coproduct(op_dagger(gh)), op_tensor(one, fh)))
    )
    op_hwsa = _residual(lhs.evaluate(q, nu), rhs.evaluate(q, nu))

    dual = _dual_sides(f, g, pts, q, nu)
    return {
        "operator_hwlia": op_hwlia,
        "operator_hwsa": op_hwsa,
        "dual_hwlia": dual["hwlia"],
        "dual_hwsa": dual["hwsa"],
        "dual_hwlia_literal": dual["hwlia_literal"],
        "dual_hwsa_shifted": dual["hwsa_shifted"],
    }


# Yang-Baxter on Z_n^2 -------------------------------------------------------


def _torus(n):
    pts = np.array(list(product(range(n), range(n))))
    return pts


def _r_apply(F, n, legs):
    """Apply the two-leg kernel to legs ``legs`` of ``F`` (shape ``(d, d, d, batch)``)."""
    d = n * n
    pts = _torus(n)
    a, b = legs
    F = np.moveaxis(F, (a, b), (0, 1))
    # (R F)(x, y) = e^{i omega(x, y)} sum_z e^{-i omega(z, w)} F(z, w),  w = x + y - z mod n
    s_idx = np.arange(d)
    w = (pts[s_idx][:, None, :] - pts[None, :, :]) % n
    w_flat = w[..., 0] * n + w[..., 1]
    zp = np.broadcast_to(pts[None, :, :], w.shape)
    ph = np.exp(-1j * omega((zp[..., 0], zp[..., 1]), (w[..., 0], w[..., 1])))
    H = np.einsum("sz,sz...->s...", ph, F[np.arange(d)[None, :], w_flat])
    xy = (pts[:, None, :] + pts[None, :, :]) % n
    sum_idx = xy[..., 0] * n + xy[..., 1]
    px = np.broadcast_to(pts[:, None, :], xy.shape)
    py = np.broadcast_to(pts[None, :, :], xy.shape)
    out_ph = np.exp(1j * omega((px[..., 0], px[..., 1]), (py[..., 0], py[..., 1])))
    out = out_ph[..., None, None] * H[sum_idx]
    return np.moveaxis(out, (0, 1), (a, b))


def r_entry(n, x, y, z, w, phase=True):
    """Single kernel entry; used by the brute-force oracle."""
    s = ((x[0] + y[0] - z[0] - w[0]) % n, (x[1] + y[1] - z[1] - w[1]) % n)
    if s != (0, 0):
        return 0.0
    if not phase:
        return 1.0
    return np.exp(1j * (float(omega(x, y)) - float(omega(z, w))))


def _r_apply_plain(F, n, legs):
    d = n * n
    pts = _torus(n)
    a, b = legs
    F = np.moveaxis(F, (a, b), (0, 1))
    s_idx = np.arange(d)
    w = (pts[s_idx][:, None, :] - pts[None, :, :]) % n
    w_flat = w[..., 0] * n + w[..., 1]
    H = F[np.arange(d)[None, :], w_flat].sum(axis=1)
    xy = (pts[:, None, :] + pts[None, :, :]) % n
    out = H[xy[..., 0] * n + xy[..., 1]]
    return np.moveaxis(out, (0, 1), (a, b))


def yang_baxter_residual(lattice_n, phase=True, probes=64, batch=16, seed=0):
    """Max entry of ``R12 R13 R23 - R23 R13 R12`` over probed kernel columns.

    Every column is probed when there are at most 4096 of them; otherwise a
    seeded sample of ``probes`` basis columns.  ``phase=False`` drops the
    cocycle phases and serves as a control.
    """
    n = int(lattice_n)
    if not 1 <= n <= 16:
        raise ValueError("lattice size must be between 1 and 16")
    d = n * n
    total = d**3
    if total <= 4096:
        cols = np.arange(total)
        batch = max(batch, 256)
    else:
        cols = np.sort(np.random.default_rng(seed).choice(total, probes, replace=False))
    apply = _r_apply if phase else _r_apply_plain
    worst = 0.0
    for start in range(0, cols.size, batch):
        chunk = cols[start : start + batch]
        F = np.zeros((d, d, d, chunk.size), dtype=complex)
        i, j, k = np.unravel_index(chunk, (d, d, d))
        F[i, j, k, np.arange(chunk.size)] = 1
        lhs = apply(apply(apply(F, n, (1, 2)), n, (0, 2)), n, (0, 1))
        rhs = apply(apply(apply(F, n, (0, 1)), n, (0, 2)), n, (1, 2))
        worst = max(worst, float(np.abs(lhs - rhs).max()))
    return worst
