import numpy as np
import pytest

from weylkac import cocycle
from weylkac.numerics import (
    Grid2D,
    GridError,
    GridFunction2D,
    WaveFunction1D,
    classical_limit_residual,
    cross_ambiguity,
    first_excited,
    fourier2d,
    ground_state,
    moyal_star,
    moyal_unit,
    random_band_limited,
    twisted_convolution,
    weyl_selfadjoint_decompose,
    wigner_distribution,
)
from weylkac.numerics.fixtures import gaussian, gaussian_callable, gaussian_pair, ground_wigner


def rel(a, b):
    return np.linalg.norm(a - b) / np.linalg.norm(b)


# Fourier ---------------------------------------------------------------------------


@pytest.mark.parametrize("hbar", [1.0, 0.5])
def test_fourier_of_gaussian_closed_form(grid, hbar):
    # (2 pi hbar)^-1 int exp(-(i/hbar) x.z) exp(-|x|^2/2) dx = exp(-|z|^2 / (2 hbar^2)) / hbar
    F = fourier2d(gaussian(grid), hbar)
    z1, z2 = F.grid.mesh()
    assert np.abs(F.values - np.exp(-(z1**2 + z2**2) / (2 * hbar**2)) / hbar).max() <= 1e-12


def test_fourier_round_trip(grid, rng):
    f = random_band_limited(grid, rng)
    for d in (1, -1):
        back = fourier2d(fourier2d(f, 0.7, d), 0.7, -d)
        assert back.grid.compatible(grid)
        assert np.abs(back.values - f.values).max() <= 1e-12 * np.abs(f.values).max()


def test_fourier_linear(grid, rng):
    f, g = random_band_limited(grid, rng), random_band_limited(grid, rng)
    mix = GridFunction2D(grid, 2 * f.values - 1j * g.values)
    lhs = fourier2d(mix, 1.0).values
    rhs = 2 * fourier2d(f, 1.0).values - 1j * fourier2d(g, 1.0).values
    assert np.abs(lhs - rhs).max() <= 1e-12 * np.abs(rhs).max()


def test_fourier_rejects_bad_direction(grid):
    with pytest.raises(ValueError):
        fourier2d(gaussian(grid), 1.0, 0)


# Moyal -------------------------------------------------------------------------------


@pytest.mark.parametrize("hbar", [1.0, 0.3])
def test_moyal_duality(grid, hbar):
    f, g = gaussian_pair(grid)
    lhs = fourier2d(twisted_convolution(f, g, 1 / hbar), hbar).values
    rhs = moyal_star(fourier2d(f, hbar), fourier2d(g, hbar), hbar).values
    assert rel(rhs, lhs) <= 1e-8


def test_moyal_associative():
    # on the 64-point dual grid the Gaussian tails alias (residual ~5e-8)
    dual = Grid2D(128, 16.0 * np.sqrt(2)).dual(1.0)
    F = gaussian(dual, (0.3, 0.0), 1.2)
    G = gaussian(dual, (0.0, -0.2), 1.0, (0.4, 0.1))
    H = gaussian(dual, (-0.1, 0.2), 0.9)
    a = moyal_star(moyal_star(F, G, 1.0), H, 1.0).values
    b = moyal_star(F, moyal_star(G, H, 1.0), 1.0).values
    assert rel(a, b) <= 1e-8


def test_moyal_unit(grid):
    dual = grid.dual(0.5)
    F = gaussian(dual, (0.2, 0.1), 0.8)
    one = moyal_unit(dual, 0.5)
    for P in (moyal_star(F, one, 0.5), moyal_star(one, F, 0.5)):
        assert np.abs(P.values - F.values).max() <= 1e-10


@pytest.mark.parametrize("hbar", [1.0, 0.25])
def test_moyal_generators(grid, hbar):
    # characters phi_x(z) = (2 pi hbar)^-1 exp(-(i/hbar) x.z) multiply projectively
    dual = grid.dual(hbar)
    z1, z2 = dual.mesh()
    ax = grid.axis
    h = grid.n // 2

    def phi(x):
        return GridFunction2D(dual, np.exp(-1j / hbar * (x[0] * z1 + x[1] * z2)) / (2 * np.pi * hbar))

    for x, y in [((ax[h + 2], ax[h - 1]), (ax[h - 3], ax[h + 4])), ((ax[h + 5], ax[h]), (ax[h], ax[h + 3]))]:
        lhs = moyal_star(phi(x), phi(y), hbar).values
        rhs = np.exp(1j / hbar * float(cocycle.omega(x, y))) * phi(cocycle.add(x, y)).values
        assert np.abs(lhs - rhs).max() <= 1e-10 * np.abs(rhs).max()


def test_moyal_classical_limit_is_third_order():
    grid = Grid2D(64, 16.0)
    F = gaussian_callable((0.5, 0.0))
    G = gaussian_callable((0.0, 0.5))
    hbars = (0.1, 0.05, 0.025)
    res = [classical_limit_residual(F, G, grid, h) for h in hbars]
    slope = np.polyfit(np.log(hbars), np.log(res), 1)[0]
    assert slope >= 2.5


def test_moyal_grid_mismatch(grid):
    with pytest.raises(GridError):
        moyal_star(gaussian(grid), gaussian(Grid2D(32, 16.0)), 1.0)


# Wigner ---------------------------------------------------------------------------------


def test_ambiguity_at_origin_is_norm():
    xi = first_excited(64, 16.0, 1.0)
    w = cross_ambiguity(xi, xi, 1.0)
    assert abs(w.value_at_origin() - xi.norm() ** 2) <= 1e-12


@pytest.mark.parametrize("hbar", [1.0, 0.1])
def test_ground_state_distribution(hbar, oracles):
    L = 16.0 * np.sqrt(hbar)
    W = wigner_distribution(ground_state(64, L, hbar), ground_state(64, L, hbar), hbar)
    z1, z2 = W.grid.mesh()
    assert rel(W.values, ground_wigner(z1, z2, hbar)) <= 1e-6
    assert abs(W.value_at_origin() - oracles["ground_wigner_at_origin"]) <= 1e-6


def test_closed_form_against_quadrature(oracles):
    assert abs(ground_wigner(0.7, -0.4, 1.0) - oracles["ground_wigner_at_0.7_-0.4"]) <= 1e-12


def test_excited_state_goes_negative(oracles):
    xi = first_excited(64, 16.0, 1.0)
    W = wigner_distribution(xi, xi, 1.0)
    assert abs(W.values.real.min() - oracles["excited_wigner_min_at_origin"]) <= 1e-4
    assert abs(W.value_at_origin() - oracles["excited_wigner_min_at_origin"]) <= 1e-4


def test_distribution_is_real_and_cross_hermitian():
    # x -> -x leaves the grid on the boundary row, so the window must hold the overlap
    n, L = 128, 24.0
    xi = ground_state(n, L, 1.0)
    q = (np.arange(n) - n // 2) * L / n
    chi = WaveFunction1D(n, L, np.exp(-((q - 0.5) ** 2) / 2 + 0.3j * q))
    W = wigner_distribution(chi, chi, 1.0)
    assert np.abs(W.values.imag).max() <= 1e-12 * np.abs(W.values).max()
    a = wigner_distribution(xi, chi, 1.0).values
    b = wigner_distribution(chi, xi, 1.0).values
    assert np.abs(a - b.conj()).max() <= 1e-12


def test_zero_state():
    z = WaveFunction1D(64, 16.0, np.zeros(64))
    assert not np.any(wigner_distribution(z, z, 1.0).values)


def test_wavefunction_grid_mismatch():
    with pytest.raises(GridError):
        cross_ambiguity(ground_state(64, 16.0, 1.0), ground_state(64, 12.0, 1.0), 1.0)


# self-adjoint decomposition -------------------------------------------------------------


def test_two_assemblies_agree(grid):
    _, check = weyl_selfadjoint_decompose(gaussian(grid, (0.3, -0.2), 1.1, (0.2, 0.1)), 1.0)
    assert check <= 1e-8


def test_ambiguity_has_real_dual_coefficients():
    xi = first_excited(64, 16.0, 1.0)
    tilde, check = weyl_selfadjoint_decompose(cross_ambiguity(xi, xi, 1.0), 1.0)
    assert check <= 1e-8
    assert np.abs(tilde.values.imag).max() <= 1e-12 * np.abs(tilde.values).max()


def test_decompose_zero(grid):
    tilde, check = weyl_selfadjoint_decompose(GridFunction2D(grid, np.zeros((64, 64))), 1.0)
    assert check == 0.0
    assert not np.any(tilde.values)
