"""
Discrete Weyl calculus on a periodic grid.

Phase-space functions are sampled on ``Grid2D``; operators on the line are
kernels on the first axis of that grid.  The translation operators act by

    (S(x) xi)(q) = exp(-i nu theta(q; -x)) xi(q - x1)

and ``quantize(f) = sum_x spacing^2 f(x) S(x)``.
"""

import logging
from functools import lru_cache

import numpy as np
from scipy.signal import czt

from .. import cocycle
from .grid import Grid2D, GridError, GridFunction2D, OperatorKernel, WaveFunction1D, require_same

log = logging.getLogger(__name__)


class Residual(float):
    """A residual value; ``relative`` is False when it fell back to absolute."""

    def __new__(cls, value, relative=True):
        obj = super().__new__(cls, value)
        obj.relative = relative
        return obj


def theta(q, x):
    """The gauge cochain on float arrays (the exact rational half becomes a float)."""
    return np.asarray(cocycle.theta(q, x), dtype=float)


def omega(x, y):
    return np.asarray(cocycle.omega(x, y), dtype=float)


def _grid_of(k):
    return Grid2D(k.n, k.extent)


def apply_projective_rep(x, xi, nu):
    """Apply ``S(x)`` to a sampled wavefunction, wrapping around periodically."""
    d = xi.spacing
    m = x[0] / d
    shift = int(round(m))
    if abs(m - shift) > 1e-9 * max(1.0, abs(m)):
        raise GridError(f"translation {x[0]} is not a multiple of the spacing {d}")
    q = xi.axis
    phase = np.exp(-1j * nu * theta(q, (-x[0], -x[1])))
    return WaveFunction1D(xi.n, xi.extent, phase * np.roll(xi.values, shift))


def translation_kernel(x, n, extent, nu):
    """Explicit kernel of ``S(x)`` (non-periodic: rows that leave the window are zero)."""
    d = extent / n
    shift = int(round(x[0] / d))
    q = (np.arange(n) - n // 2) * d
    k = np.zeros((n, n), dtype=complex)
    rows = np.arange(max(0, shift), min(n, n + shift))
    k[rows, rows - shift] = np.exp(-1j * nu * theta(q[rows], (-x[0], -x[1]))) / d
    return OperatorKernel(n, extent, k, nu)


def _half_sum_transform(f, nu):
    """``G[i, t] = sum_k spacing f[i, k] exp(-i nu v_k s_t)`` with ``s_t = (t - n) spacing / 2``.

    The exponent is bilinear in the indices, so a chirp-z transform along the
    momentum axis evaluates all ``2n - 1`` half-grid points at once.
    """
    n, d = f.grid.n, f.grid.spacing
    c = nu * d * d / 2
    # (k - n/2)(t - n) = k t - n k - n t / 2 + n^2 / 2
    w = np.exp(-1j * c)
    a = np.exp(-1j * c * n)
    t = np.arange(2 * n - 1)
    post = np.exp(1j * c * (n * t / 2 - n * n / 2))
    return d * czt(f.values, m=2 * n - 1, w=w, a=a, axis=1) * post


def weyl_quantize(f, nu):
    """Kernel ``K(q, u) = sum_v dv exp(-i nu theta(q; (u - q, -v))) f(q - u, v)``.

    Separations ``q - u`` outside the sampled window contribute zero.
    """
    n = f.grid.n
    g = _half_sum_transform(f, nu)
    j, l = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    i = j - l + n // 2
    inside = (i >= 0) & (i < n)
    k = np.zeros((n, n), dtype=complex)
    k[inside] = g[i[inside], (j + l)[inside]]
    return OperatorKernel(n, f.grid.extent, k, nu)


def _reference_gaussian(grid, nu):
    width = 1 / np.sqrt(nu)
    return GridFunction2D.from_callable(
        grid, lambda a, b: np.exp(-(a * a + b * b) / (2 * width * width))
    )


@lru_cache(maxsize=64)
def trace_calibration(n, extent, nu):
    """Constant making ``trace(quantize(f)) = f(0)`` on this grid, fixed on a reference Gaussian."""
    grid = Grid2D(n, extent)
    ref = _reference_gaussian(grid, nu)
    k = weyl_quantize(ref, nu)
    raw = k.spacing * np.sum(np.diag(k.values))
    c = float((ref.value_at_origin() / raw).real)
    log.info(
        "trace calibration n=%d extent=%g nu=%g: c=%.15g (nu/2pi=%.15g, 1/(2pi nu)=%.15g)",
        n, extent, nu, c, nu / (2 * np.pi), 1 / (2 * np.pi * nu),
    )
    return c


def operator_trace(k):
    c = trace_calibration(k.n, k.extent, k.nu)
    return complex(c * k.spacing * np.sum(np.diag(k.values)))


def wigner_recover(k, nu=None):
    """``f(x) = trace(S(x)^dagger K)`` on the grid of ``k``."""
    nu = k.nu if nu is None else nu
    n, d = k.n, k.spacing
    grid = _grid_of(k)
    x1 = grid.axis
    x2 = grid.axis
    q = grid.axis
    c = trace_calibration(n, k.extent, nu)
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        m = i - n // 2
        # (S(x)^dagger K)(q, q) = spacing^-1 exp(i nu theta(q + x1; -x)) K(q + x1, q)
        diag = np.diagonal(k.values, offset=-m)
        lo = max(0, -m)
        qj = q[lo : lo + diag.size]
        phase = np.exp(1j * nu * theta(qj[:, None] + x1[i], (-x1[i], -x2[None, :])))
        out[i] = c * d * (diag @ phase)
    return GridFunction2D(grid, out)


def twisted_convolution(f, g, nu):
    """``(f * g)(z) = sum_x dx^2 exp(i nu omega(x, z)) f(x) g(z - x)``, periodic in both axes."""
    require_same(f.grid, g.grid)
    n, d = f.grid.n, f.grid.spacing
    ax = f.grid.axis
    h = n // 2
    # exp(i nu omega(x, z)) = exp(i nu x1 z2 / 2) exp(-i nu z1 x2 / 2)
    left = f.values[None, :, :] * np.exp(-0.5j * nu * ax[:, None, None] * ax[None, None, :])
    a, i = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    right = g.values[(a - i + h) % n]
    inner = np.fft.ifft(np.fft.fft(left, axis=2) * np.fft.fft(right, axis=2), axis=2)
    inner = np.roll(inner, -h, axis=2)
    outer = np.exp(0.5j * nu * ax[:, None] * ax[None, :])
    out = d * d * np.einsum("ib,aib->ab", outer, inner)
    return GridFunction2D(f.grid, out)


def plancherel_residual(f, nu):
    """``| ||f||^2 - trace(K^dagger K) | / ||f||^2`` with ``K = quantize(f)``."""
    norm2 = f.norm2()
    k = weyl_quantize(f, nu)
    tr = operator_trace(k.adjoint().compose(k)).real
    if norm2 == 0.0:
        return Residual(abs(tr), relative=False)
    return Residual(abs(norm2 - tr) / norm2)


def weyl_selfadjoint_decompose(f, hbar):
    """Fourier-dual coefficients and the agreement of the two kernel assemblies.

    The first assembly is ``quantize(f)``.  The second sums the dual
    coefficients against the self-adjoint kernels
    ``exp((i/hbar)(q - u) y1) delta(y2 - (q + u)/2)``; the delta in ``y2`` is
    resolved by band-limited interpolation of the dual coefficients.
    """
    from .fourier import fourier2d

    nu = 1.0 / hbar
    tilde = fourier2d(f, hbar, +1)
    k1 = weyl_quantize(f, nu).values
    n = f.grid.n
    dual = tilde.grid
    dy = dual.spacing
    x2 = f.grid.axis
    y = dual.axis
    # partial inverse along y2, then evaluation at the half-grid midpoints
    part = tilde.values @ (dy * np.exp(1j * nu * np.outer(y, x2)))
    s = (np.arange(2 * n - 1) - n) * f.grid.spacing / 2
    at_mid = part @ np.exp(-1j * nu * np.outer(x2, s)) / (n * dy)
    sep = (np.arange(2 * n - 1) - (n - 1)) * f.grid.spacing
    m = dy * np.exp(1j * nu * np.outer(sep, y)) @ at_mid
    j, l = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    k2 = m[j - l + n - 1, j + l]
    i = j - l + n // 2
    k2[(i < 0) | (i >= n)] = 0
    scale = max(np.linalg.norm(k1), np.linalg.norm(k2))
    check = 0.0 if scale == 0 else float(np.linalg.norm(k1 - k2) / scale)
    return tilde, check
