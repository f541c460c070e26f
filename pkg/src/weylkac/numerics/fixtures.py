"""Closed-form test inputs, generated on demand rather than shipped as data."""

import numpy as np

from .grid import GridFunction2D, WaveFunction1D


def _line(n, extent):
    return (np.arange(n) - n // 2) * extent / n


def ground_state(n, extent, hbar):
    q = _line(n, extent)
    return WaveFunction1D(n, extent, (np.pi * hbar) ** -0.25 * np.exp(-q * q / (2 * hbar)))


def first_excited(n, extent, hbar):
    q = _line(n, extent)
    amp = (np.pi * hbar) ** -0.25 * np.sqrt(2 / hbar)
    return WaveFunction1D(n, extent, amp * q * np.exp(-q * q / (2 * hbar)))


def ground_wigner(z1, z2, hbar):
    """Phase-space distribution of ``ground_state`` in the normalization used here."""
    return 2 * np.exp(-(z1 * z1 + z2 * z2) / hbar)


def gaussian_callable(center=(0.0, 0.0), width=1.0, tilt=(0.0, 0.0)):
    c1, c2 = center

    def fn(a, b):
        env = np.exp(-((a - c1) ** 2 + (b - c2) ** 2) / (2 * width * width))
        return env * np.exp(1j * (tilt[0] * a + tilt[1] * b))

    return fn


def gaussian(grid, center=(0.0, 0.0), width=1.0, tilt=(0.0, 0.0)):
    return GridFunction2D.from_callable(grid, gaussian_callable(center, width, tilt))


def gaussian_pair(grid):
    """Two off-centre, differently shaped Gaussians; their twisted products do not commute."""
    return (
        gaussian(grid, (0.5, 0.0), 1.0),
        gaussian(grid, (0.0, 0.7), 0.9, (0.3, -0.2)),
    )


def random_band_limited(grid, rng, bumps=4):
    """Random complex combination of Gaussian bumps well inside the window."""
    out = np.zeros((grid.n, grid.n), dtype=complex)
    a, b = grid.mesh()
    for _ in range(bumps):
        c = rng.uniform(-2, 2, size=2)
        w = rng.uniform(0.8, 1.4)
        k = rng.uniform(-1, 1, size=2)
        amp = complex(*rng.normal(size=2))
        out += amp * np.exp(-((a - c[0]) ** 2 + (b - c[1]) ** 2) / (2 * w * w) + 1j * (k[0] * a + k[1] * b))
    return GridFunction2D(grid, out)


def lattice_pair(rng, m=2):
    size = (2 * m + 1) ** 2
    f = rng.normal(size=size) + 1j * rng.normal(size=size)
    g = rng.normal(size=size) + 1j * rng.normal(size=size)
    return f, g
