"""Uniform grids and the sampled objects that live on them."""

from dataclasses import dataclass

import numpy as np


class GridError(ValueError):
    """Incompatible grids or malformed sampled data."""


def _check_n(n):
    if n < 1 or n & (n - 1):
        raise GridError(f"grid size must be a power of two, got {n}")


@dataclass(frozen=True)
class Grid2D:
    n: int
    extent: float

    def __post_init__(self):
        _check_n(self.n)
        if not self.extent > 0:
            raise GridError("extent must be positive")

    @property
    def spacing(self):
        return self.extent / self.n

    @property
    def axis(self):
        """Sample coordinates ``-L/2 + k * spacing``; the origin sits at index ``n // 2``."""
        return (np.arange(self.n) - self.n // 2) * self.spacing

    def mesh(self):
        return np.meshgrid(self.axis, self.axis, indexing="ij")

    def dual(self, hbar):
        """Grid of the Fourier variable: spacing ``2 pi hbar / L``."""
        return Grid2D(self.n, 2 * np.pi * hbar * self.n / self.extent)

    def compatible(self, other, rtol=1e-12):
        return self.n == other.n and abs(self.extent - other.extent) <= rtol * self.extent


def require_same(a, b):
    if not a.compatible(b):
        raise GridError(f"grid mismatch: {a} vs {b}")


@dataclass(frozen=True)
class GridFunction2D:
    grid: Grid2D
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.grid.n, self.grid.n):
            raise GridError(f"expected {(self.grid.n,) * 2} samples, got {v.shape}")
        if not np.all(np.isfinite(v)):
            raise GridError("non-finite samples")
        object.__setattr__(self, "values", v)

    @classmethod
    def from_callable(cls, grid, fn):
        a, b = grid.mesh()
        return cls(grid, fn(a, b))

    def norm2(self):
        return self.grid.spacing**2 * float(np.sum(np.abs(self.values) ** 2))

    def value_at_origin(self):
        c = self.grid.n // 2
        return self.values[c, c]

    def __add__(self, other):
        require_same(self.grid, other.grid)
        return GridFunction2D(self.grid, self.values + other.values)

    def __sub__(self, other):
        require_same(self.grid, other.grid)
        return GridFunction2D(self.grid, self.values - other.values)

    def scaled(self, c):
        return GridFunction2D(self.grid, c * self.values)


@dataclass(frozen=True)
class WaveFunction1D:
    n: int
    extent: float
    values: np.ndarray

    def __post_init__(self):
        _check_n(self.n)
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.n,):
            raise GridError(f"expected {self.n} samples, got {v.shape}")
        if not np.all(np.isfinite(v)):
            raise GridError("non-finite samples")
        object.__setattr__(self, "values", v)

    @property
    def spacing(self):
        return self.extent / self.n

    @property
    def axis(self):
        return (np.arange(self.n) - self.n // 2) * self.spacing

    def norm(self):
        return float(np.sqrt(self.spacing * np.sum(np.abs(self.values) ** 2)))


@dataclass(frozen=True)
class OperatorKernel:
    """Kernel ``K(q, u)``; it acts by ``(K xi)(q) = spacing * sum_u K(q, u) xi(u)``."""

    n: int
    extent: float
    values: np.ndarray
    nu: float = 1.0

    def __post_init__(self):
        _check_n(self.n)
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.n, self.n):
            raise GridError(f"expected {(self.n,) * 2} kernel, got {v.shape}")
        object.__setattr__(self, "values", v)

    @property
    def spacing(self):
        return self.extent / self.n

    def apply(self, xi):
        if xi.n != self.n or abs(xi.extent - self.extent) > 1e-12 * self.extent:
            raise GridError("wavefunction grid differs from kernel grid")
        return WaveFunction1D(self.n, self.extent, self.spacing * self.values @ xi.values)

    def compose(self, other):
        """Kernel of the operator product ``self . other``."""
        if other.n != self.n:
            raise GridError("kernel sizes differ")
        return OperatorKernel(
            self.n, self.extent, self.spacing * self.values @ other.values, self.nu
        )

    def adjoint(self):
        return OperatorKernel(self.n, self.extent, self.values.conj().T, self.nu)
