"""Moyal star product as the Fourier image of the twisted convolution."""

import numpy as np

from .fourier import fourier2d
from .grid import GridFunction2D, require_same
from .weyl import twisted_convolution


def moyal_star(F, G, hbar):
    """``F o G = fourier(inverse(F) * inverse(G))`` with twist ``nu = 1/hbar``."""
    require_same(F.grid, G.grid)
    f = fourier2d(F, hbar, -1)
    g = fourier2d(G, hbar, -1)
    return fourier2d(twisted_convolution(f, g, 1.0 / hbar), hbar, +1)


def moyal_unit(grid, hbar):
    """Constant ``phi_0 = (2 pi hbar)^-1``; ``F o 1`` then equals ``F``."""
    return GridFunction2D(grid, np.full((grid.n, grid.n), 1 / (2 * np.pi * hbar)))


def poisson_bracket(F, G, x1, x2, h=1e-5):
    """``dF/dx1 dG/dx2 - dF/dx2 dG/dx1`` by central differences of callables."""

    def d1(fn):
        return (fn(x1 + h, x2) - fn(x1 - h, x2)) / (2 * h)

    def d2(fn):
        return (fn(x1, x2 + h) - fn(x1, x2 - h)) / (2 * h)

    return d1(F) * d2(G) - d2(F) * d1(G)


def classical_limit_residual(F, G, grid, hbar):
    """``max |(F o G - G o F) / (2 pi hbar) + i hbar {F, G}|`` for callables ``F``, ``G``.

    The commutator carries the same ``2 pi hbar`` factor as ``F o G ~ 2 pi hbar F G``.
    """
    a, b = grid.mesh()
    Fs = GridFunction2D(grid, F(a, b))
    Gs = GridFunction2D(grid, G(a, b))
    comm = moyal_star(Fs, Gs, hbar).values - moyal_star(Gs, Fs, hbar).values
    bracket = poisson_bracket(F, G, a, b)
    return float(np.abs(comm / (2 * np.pi * hbar) + 1j * hbar * bracket).max())
