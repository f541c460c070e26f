import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylkac import cocycle
from weylkac.numerics import (
    Grid2D,
    GridError,
    GridFunction2D,
    WaveFunction1D,
    apply_projective_rep,
    operator_trace,
    plancherel_residual,
    random_band_limited,
    trace_calibration,
    twisted_convolution,
    weyl_quantize,
    wigner_recover,
)
from weylkac.numerics.fixtures import gaussian, gaussian_pair


def rel(a, b):
    return np.linalg.norm(a - b) / np.linalg.norm(b)


def point_mass(grid):
    v = np.zeros((grid.n, grid.n))
    c = grid.n // 2
    v[c, c] = 1 / grid.spacing**2
    return GridFunction2D(grid, v)


def brute_kernel(f, nu):
    g, n, d = f.grid, f.grid.n, f.grid.spacing
    ax = g.axis
    k = np.zeros((n, n), dtype=complex)
    for j in range(n):
        for l in range(n):
            i = j - l + n // 2
            if not 0 <= i < n:
                continue
            for m in range(n):
                ph = float(cocycle.theta(ax[j], (ax[l] - ax[j], -ax[m])))
                k[j, l] += d * np.exp(-1j * nu * ph) * f.values[i, m]
    return k


def brute_twisted(f, g, nu):
    grid, n, d = f.grid, f.grid.n, f.grid.spacing
    ax = grid.axis
    out = np.zeros((n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            z = (ax[a], ax[b])
            for i in range(n):
                for k in range(n):
                    x = (ax[i], ax[k])
                    ph = float(cocycle.omega(x, z))
                    gi = (a - i + n // 2) % n
                    gk = (b - k + n // 2) % n
                    out[a, b] += d * d * np.exp(1j * nu * ph) * f.values[i, k] * g.values[gi, gk]
    return out


# projective representation ----------------------------------------------------


@pytest.fixture
def xi():
    n, L = 64, 16.0
    q = (np.arange(n) - n // 2) * L / n
    return WaveFunction1D(n, L, np.exp(-(q - 0.3) ** 2 / 2) * (1 + 0.4j * q))


def test_identity_translation(xi):
    assert np.array_equal(apply_projective_rep((0, 0), xi, 1.0).values, xi.values)


steps = st.integers(-12, 12)
mom = st.floats(-3, 3, allow_nan=False)


@settings(max_examples=40, deadline=None)
@given(steps, mom, steps, mom, st.sampled_from([0.5, 1.0, 2.0]))
def test_projective_relation(a, b, c, d, nu):
    n, L = 64, 16.0
    q = (np.arange(n) - n // 2) * L / n
    xi = WaveFunction1D(n, L, np.exp(-q * q / 2))
    x = (a * L / n, b)
    y = (c * L / n, d)
    lhs = apply_projective_rep(x, apply_projective_rep(y, xi, nu), nu).values
    rhs = apply_projective_rep(cocycle.add(x, y), xi, nu).values
    rhs = np.exp(1j * nu * float(cocycle.omega(x, y))) * rhs
    # the relation holds on the line; drop the samples that crossed the periodic seam
    idx = np.arange(n)
    keep = (idx - a >= 0) & (idx - a < n) & (idx - a - c >= 0) & (idx - a - c < n)
    assert np.abs(lhs[keep] - rhs[keep]).max() <= 1e-12


@settings(max_examples=40, deadline=None)
@given(steps, mom)
def test_unitarity(a, b):
    n, L = 64, 16.0
    q = (np.arange(n) - n // 2) * L / n
    xi = WaveFunction1D(n, L, np.exp(-q * q / 2) * np.exp(1j * q))
    out = apply_projective_rep((a * L / n, b), xi, 1.0)
    assert abs(out.norm() - xi.norm()) <= 1e-12


def test_off_grid_translation_rejected(xi):
    with pytest.raises(GridError):
        apply_projective_rep((0.1, 0.0), xi, 1.0)


# quantization ------------------------------------------------------------------


def test_zero_function_gives_zero_kernel(grid):
    k = weyl_quantize(GridFunction2D(grid, np.zeros((64, 64))), 1.0)
    assert not np.any(k.values)


def test_point_mass_gives_identity(grid):
    k = weyl_quantize(point_mass(grid), 1.0)
    assert np.abs(k.values - np.eye(64) / grid.spacing).max() <= 1e-12


@pytest.mark.parametrize("nu", [1.0, 0.7])
def test_quantize_matches_direct_sum(small_grid, rng, nu):
    f = GridFunction2D(small_grid, rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16)))
    assert np.abs(weyl_quantize(f, nu).values - brute_kernel(f, nu)).max() <= 1e-12


def test_quantize_adjoint(grid):
    f = gaussian(grid, (0.4, -0.3), 0.9, (0.5, 0.2))
    n = grid.n
    idx = (n - np.arange(n)) % n
    reflected = GridFunction2D(grid, np.conj(f.values[np.ix_(idx, idx)]))
    kf = weyl_quantize(f, 1.0).values
    ks = weyl_quantize(reflected, 1.0).values
    assert np.abs(ks - kf.conj().T).max() <= 1e-10


# trace ------------------------------------------------------------------------------


def test_trace_of_zero(grid):
    k = weyl_quantize(GridFunction2D(grid, np.zeros((64, 64))), 1.0)
    assert operator_trace(k) == 0


def test_trace_recovers_origin_value(grid):
    f = gaussian(grid)
    assert abs(operator_trace(weyl_quantize(f, 1.0)) - 1) <= 1e-8


def test_calibration_matches_quadrature_oracle(oracles):
    c = trace_calibration(64, 16.0, 1.0)
    assert abs(c - oracles["trace_constant_nu1"]) <= 1e-8 * oracles["trace_constant_nu1"]


def test_trace_is_positive_on_squares(grid):
    f = gaussian(grid, (0.3, 0.1), 1.1, (0.2, 0.0))
    k = weyl_quantize(f, 1.0)
    t = operator_trace(k.adjoint().compose(k))
    assert t.real > 0
    assert abs(t.imag) <= 1e-12 * t.real


# recovery ------------------------------------------------------------------------------


def test_round_trip(grid):
    f = gaussian(grid)
    assert rel(wigner_recover(weyl_quantize(f, 1.0)).values, f.values) <= 1e-8


def test_recover_zero(grid):
    k = weyl_quantize(GridFunction2D(grid, np.zeros((64, 64))), 1.0)
    assert not np.any(wigner_recover(k).values)


def test_recover_twisted_convolution(grid):
    f, g = gaussian_pair(grid)
    h = twisted_convolution(f, g, 1.0)
    assert rel(wigner_recover(weyl_quantize(h, 1.0)).values, h.values) <= 1e-8


# twisted convolution ---------------------------------------------------------------------


def test_point_mass_is_left_unit(grid):
    _, g = gaussian_pair(grid)
    out = twisted_convolution(point_mass(grid), g, 1.0)
    assert np.abs(out.values - g.values).max() <= 1e-12


def test_twisted_convolution_matches_direct_sum(rng):
    grid = Grid2D(8, 6.0)
    f = GridFunction2D(grid, rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8)))
    g = GridFunction2D(grid, rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8)))
    for nu in (1.0, 2.5):
        assert np.abs(twisted_convolution(f, g, nu).values - brute_twisted(f, g, nu)).max() <= 1e-12


def test_quantization_is_a_homomorphism(grid):
    f, g = gaussian_pair(grid)
    kf, kg = weyl_quantize(f, 1.0), weyl_quantize(g, 1.0)
    lhs = weyl_quantize(twisted_convolution(f, g, 1.0), 1.0).values
    err = np.linalg.norm(lhs - kf.compose(kg).values)
    assert err <= 1e-6 * np.linalg.norm(kf.values) * np.linalg.norm(kg.values)


def test_twisted_convolution_is_noncommutative(grid):
    f, g = gaussian_pair(grid)
    diff = twisted_convolution(f, g, 1.0).values - twisted_convolution(g, f, 1.0).values
    assert np.linalg.norm(diff) > 1e-3


def test_grid_mismatch_rejected(grid):
    other = GridFunction2D(Grid2D(64, 12.0), np.zeros((64, 64)))
    with pytest.raises(GridError):
        twisted_convolution(gaussian(grid), other, 1.0)


def test_repeatable_bitwise(grid):
    f, g = gaussian_pair(grid)
    a = twisted_convolution(f, g, 1.0).values
    b = twisted_convolution(f, g, 1.0).values
    assert np.array_equal(a, b)


# Plancherel ---------------------------------------------------------------------------------


def test_plancherel_gaussian(grid):
    assert plancherel_residual(gaussian(grid), 1.0) <= 1e-8


def test_plancherel_zero(grid):
    r = plancherel_residual(GridFunction2D(grid, np.zeros((64, 64))), 1.0)
    assert r == 0
    assert r.relative is False


def test_plancherel_random(grid, rng):
    for _ in range(3):
        assert plancherel_residual(random_band_limited(grid, rng), 1.0) <= 1e-6


# linearity ---------------------------------------------------------------------------------


def test_linearity(grid, rng):
    f = random_band_limited(grid, rng)
    g = random_band_limited(grid, rng)
    h = random_band_limited(grid, rng)
    a, b = 0.7 - 0.2j, -1.3 + 0.5j
    mix = GridFunction2D(grid, a * f.values + b * g.values)

    def close(x, y):
        return np.abs(x - y).max() <= 1e-12 * max(1.0, np.abs(y).max())

    kq = weyl_quantize(mix, 1.0).values
    assert close(kq, a * weyl_quantize(f, 1.0).values + b * weyl_quantize(g, 1.0).values)
    tc = twisted_convolution(mix, h, 1.0).values
    assert close(tc, a * twisted_convolution(f, h, 1.0).values + b * twisted_convolution(g, h, 1.0).values)
    kf, kg = weyl_quantize(f, 1.0), weyl_quantize(g, 1.0)
    kmix = type(kf)(kf.n, kf.extent, a * kf.values + b * kg.values, 1.0)
    assert close(wigner_recover(kmix).values, a * wigner_recover(kf).values + b * wigner_recover(kg).values)
