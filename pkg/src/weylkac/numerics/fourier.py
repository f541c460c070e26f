"""Centered, hbar-scaled discrete Fourier transform on the plane."""

import numpy as np

from .grid import GridFunction2D


def fourier2d(f, hbar, direction=+1):
    """``F(z) = (2 pi hbar)^-1 sum_x dx^2 exp(-+ (i/hbar) x.z) f(x)`` on the dual grid.

    ``direction=+1`` uses ``exp(-(i/hbar) x.z)``; ``-1`` is its inverse.  The
    dual grid has spacing ``2 pi hbar / L``, so applying the transform twice
    with opposite directions returns to the original grid.
    """
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    grid = f.grid
    d = grid.spacing
    pre = d * d / (2 * np.pi * hbar)
    shifted = np.fft.ifftshift(f.values)
    if direction == 1:
        out = np.fft.fft2(shifted)
    else:
        out = np.fft.ifft2(shifted) * grid.n**2
    return GridFunction2D(grid.dual(hbar), pre * np.fft.fftshift(out))
