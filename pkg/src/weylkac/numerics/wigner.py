"""Cross-ambiguity functions and Wigner distributions of sampled states."""

import numpy as np

from .fourier import fourier2d
from .grid import Grid2D, GridError, GridFunction2D


def _half_shifted(xi):
    """Samples of ``xi(q + spacing/2)`` by band-limited interpolation."""
    k = 2 * np.pi * np.fft.fftfreq(xi.n, xi.spacing)
    return np.fft.ifft(np.fft.fft(xi.values) * np.exp(0.5j * k * xi.spacing))


def _sampled(values, half, index):
    """``values`` at integer ``index`` or, with ``half``, at ``index + 1/2``; zero outside."""
    n = values.size
    src = half if half is not None else values
    out = np.zeros(index.shape, dtype=complex)
    ok = (index >= 0) & (index < n)
    out[ok] = src[index[ok]]
    return out


def cross_ambiguity(xi, chi, hbar):
    """``w(x) = sum_q dq exp((i/hbar) q x2) xi(q + x1/2) conj(chi(q - x1/2))``."""
    if xi.n != chi.n or abs(xi.extent - chi.extent) > 1e-12 * xi.extent:
        raise GridError("wavefunctions live on different grids")
    n, d = xi.n, xi.spacing
    grid = Grid2D(n, xi.extent)
    q = xi.axis
    xi_h = _half_shifted(xi)
    chi_h = _half_shifted(chi)
    j = np.arange(n)
    kernel = d * np.exp(1j / hbar * np.outer(q, grid.axis))
    out = np.empty((n, n), dtype=complex)
    for i in range(n):
        m = i - n // 2
        if m % 2 == 0:
            a = _sampled(xi.values, None, j + m // 2)
            b = _sampled(chi.values, None, j - m // 2)
        else:
            # q + m d/2 = q_{j + (m-1)/2} + d/2 and q - m d/2 = q_{j - (m+1)/2} + d/2
            a = _sampled(xi.values, xi_h, j + (m - 1) // 2)
            b = _sampled(chi.values, chi_h, j - (m + 1) // 2)
        out[i] = (a * b.conj()) @ kernel
    return GridFunction2D(grid, out)


def wigner_distribution(xi, chi, hbar):
    """Phase-space distribution: the Fourier transform of the cross-ambiguity function."""
    return fourier2d(cross_ambiguity(xi, chi, hbar), hbar, +1)

