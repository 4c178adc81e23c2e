"""Fourier / Hilbert / convolution machinery against closed forms, the PV
quadrature oracle, and the slow O(n^2) transform."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from salemkit.errors import (
    ConventionError,
    DomainError,
    EdgeProximityError,
    GridMismatchError,
    SupportViolationError,
)
from salemkit.transforms import (
    Grid,
    GridFunction,
    SpectralFunction,
    convolve,
    fourier,
    hilbert,
    hilbert_pv_direct,
    inverse_fourier,
    plancherel_check,
)

from oracles import slow_continuous_transform


def sinc(x):
    out = np.ones_like(x)
    nz = x != 0
    out[nz] = np.sin(x[nz]) / x[nz]
    return out


GAUSS_GRID = Grid.centered(20.0, 1024)
SINC_GRID = Grid.centered(40.0, 2048)


class TestGridTypes:
    def test_pow2_enforced(self):
        with pytest.raises(DomainError):
            Grid(x0=0.0, dx=0.1, n=100)
        with pytest.raises(DomainError):
            Grid(x0=0.0, dx=-0.1, n=64)

    def test_spectral_grid_spacing(self):
        g = Grid.centered(40.0, 2048)
        tg = g.spectral_grid()
        assert abs(tg.dx - 2.0 * math.pi / (g.n * g.dx)) < 1e-15
        assert tg.x[g.n // 2] == 0.0

    def test_values_length_checked(self):
        with pytest.raises(GridMismatchError):
            GridFunction(GAUSS_GRID, np.zeros(12))

    def test_finite_required(self):
        vals = np.zeros(GAUSS_GRID.n)
        vals[3] = np.inf
        with pytest.raises(DomainError):
            GridFunction(GAUSS_GRID, vals)

    def test_convention_tag(self):
        g = GAUSS_GRID.spectral_grid()
        with pytest.raises(ConventionError):
            SpectralFunction(g, np.zeros(g.n), convention="angular")

    def test_csv_roundtrip(self, tmp_path):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2) * (1 + 2j))
        path = tmp_path / "gf.csv"
        f.save_csv(path)
        g = GridFunction.load_csv(path)
        assert g.grid == f.grid
        assert np.max(np.abs(g.values - f.values)) < 1e-12


class TestFourier:
    def test_gaussian_selfdual(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2 / 2))
        F = fourier(f)
        assert np.max(np.abs(F.values - np.exp(-F.t**2 / 2))) <= 1e-10

    def test_sinc_rect(self):
        # heavy 1/x tails demand the tapered preset and a wide grid
        from salemkit.salem import TestFunction

        g = Grid.centered(240.0, 8192)
        f = TestFunction("sinc").materialize(g)
        F = fourier(f)
        t = F.t
        rect = math.sqrt(math.pi / 2.0) * (np.abs(t) < 1.0)
        dist = np.minimum(np.abs(t - 1.0), np.abs(t + 1.0))
        err = np.abs(F.values - rect)
        assert np.max(err[dist > 0.2]) <= 1e-3
        assert np.max(err[(dist > 0.1) & (dist <= 0.2)]) <= 5e-2

    def test_modulation_theorem(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2 / 2))
        m = 2.0
        fm = GridFunction(GAUSS_GRID, np.exp(-1j * m * GAUSS_GRID.x) * f.values)
        Fm = fourier(fm)
        assert np.max(np.abs(Fm.values - np.exp(-(Fm.t + m) ** 2 / 2))) <= 1e-9

    def test_matches_slow_transform(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2 / 3) * np.cos(x))
        F = fourier(f)
        ts = F.t[::128]
        slow = slow_continuous_transform(GAUSS_GRID.x, f.values, ts)
        assert np.max(np.abs(F.values[::128] - slow)) < 1e-12

    def test_support_violation(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.ones_like(x))
        with pytest.raises(SupportViolationError):
            fourier(f)

    def test_roundtrip(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2 / 2) * (x + 1j))
        back = inverse_fourier(fourier(f, edge_tol=np.inf), x0=GAUSS_GRID.x0)
        assert np.max(np.abs(back.values - f.values)) <= 1e-10

    def test_roundtrip_zero(self):
        f = GridFunction(GAUSS_GRID, np.zeros(GAUSS_GRID.n))
        back = inverse_fourier(fourier(f), x0=GAUSS_GRID.x0)
        assert np.max(np.abs(back.values)) == 0.0

    def test_roundtrip_sampled_kernel(self):
        from salemkit.kernel import scaled_kernel_many

        grid = Grid(x0=-72.0, dx=0.04, n=4096)
        K = GridFunction(grid, scaled_kernel_many(grid.x, 0.75).astype(complex))
        back = inverse_fourier(fourier(K), x0=grid.x0)
        assert np.max(np.abs(back.values - K.values)) <= 1e-9

    @settings(max_examples=20, deadline=None)
    @given(st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2))
    def test_linearity(self, ar, ai, br, bi):
        a, b = complex(ar, ai), complex(br, bi)
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2 / 2))
        g = GridFunction.from_callable(GAUSS_GRID, lambda x: x * np.exp(-x**2 / 3))
        combo = GridFunction(GAUSS_GRID, a * f.values + b * g.values)
        lhs = fourier(combo, edge_tol=np.inf).values
        rhs = a * fourier(f, edge_tol=np.inf).values + b * fourier(g, edge_tol=np.inf).values
        assert np.max(np.abs(lhs - rhs)) <= 1e-12 * (1 + abs(a) + abs(b))


class TestHilbert:
    def test_sinc_identity_family(self):
        x = SINC_GRID.x
        interior = np.abs(x) < 20.0
        for m in (1.0, 2.0, 3.0):
            f = GridFunction(
                SINC_GRID, np.where(x != 0, np.sin(m * x), m) / np.where(x != 0, x, 1.0)
            )
            h = hilbert(f)
            target = np.where(x != 0, (np.cos(m * x) - 1.0) / np.where(x != 0, x, 1.0), 0.0)
            assert np.max(np.abs(h.values - target)[interior]) <= 1e-3

    def test_worked_product_family(self):
        x = SINC_GRID.x
        interior = np.abs(x) < 20.0
        for m in (1.0, 2.0, 3.0):
            v = GridFunction(SINC_GRID, np.cos(m * x) * sinc(x))
            h = hilbert(v)
            # H[cos(mx) sinc] equals the imaginary part of e^{-imx} sinc
            target = np.imag(np.exp(-1j * m * x) * sinc(x))
            assert np.max(np.abs(h.values - target)[interior]) <= 1e-3

    def test_involution(self):
        x = SINC_GRID.x
        interior = np.abs(x) < 20.0
        family = (
            lambda x: x * np.exp(-x**2 / 2),
            lambda x: (x**2 - 1.0) * np.exp(-x**2 / 2),
            lambda x: np.sin(2 * x) * np.exp(-x**2 / 4),
            lambda x: np.cos(3 * x) * np.exp(-x**2 / 2),
            lambda x: np.sin(x) * np.exp(-np.abs(x) / 2),
        )
        for fn in family:
            f = GridFunction.from_callable(SINC_GRID, fn)
            hh = hilbert(hilbert(f))
            assert np.max(np.abs(hh.values + f.values)[interior]) <= 2e-3

    def test_spectral_multiplier_exact_unpadded(self):
        f = GridFunction.from_callable(SINC_GRID, lambda x: np.exp(-x**2 / 9) * np.sin(x))
        h = hilbert(f, pad=1)
        Fh = fourier(GridFunction(SINC_GRID, h.values), edge_tol=np.inf)
        Ff = fourier(f, edge_tol=np.inf)
        resid = Fh.values - 1j * np.sign(Fh.t) * Ff.values
        assert np.max(np.abs(resid)) <= 1e-12

    def test_dc_bin_zeroed(self):
        f = GridFunction.from_callable(SINC_GRID, lambda x: np.exp(-x**2 / 2))
        h = hilbert(f, pad=1)
        Fh = fourier(GridFunction(SINC_GRID, h.values), edge_tol=np.inf)
        assert abs(Fh.values[SINC_GRID.n // 2]) < 1e-13


class TestHilbertPV:
    def test_sinc_at_one(self):
        g = Grid.centered(80.0, 4096)
        f = GridFunction.from_callable(g, sinc)
        val = hilbert_pv_direct(f, 1.0)
        assert abs(val.real - (math.cos(1.0) - 1.0)) <= 1e-3

    def test_even_function_at_zero(self):
        g = Grid.centered(40.0, 2048)
        f = GridFunction.from_callable(g, lambda x: 1.0 / (1.0 + x**2))
        assert abs(hilbert_pv_direct(f, 0.0)) <= 1e-4

    def test_agreement_with_spectral(self):
        g = Grid.centered(160.0, 8192)
        f = GridFunction.from_callable(g, lambda x: 1.0 / (1.0 + x**2))
        h = hilbert(f)
        worst = 0.0
        for y in np.linspace(-10.0, 10.0, 20):
            j = int(round((y - g.x0) / g.dx))
            worst = max(worst, abs(h.values[j] - hilbert_pv_direct(f, g.x[j])))
        assert worst <= 1e-4

    def test_lorentzian_closed_form(self):
        g = Grid.centered(160.0, 8192)
        f = GridFunction.from_callable(g, lambda x: 1.0 / (1.0 + x**2))
        for y in (-3.0, 0.5, 2.0, 7.7):
            target = -y / (1.0 + y**2)
            assert abs(hilbert_pv_direct(f, y).real - target) <= 1e-4

    def test_edge_proximity(self):
        g = Grid.centered(40.0, 2048)
        f = GridFunction.from_callable(g, lambda x: np.exp(-x**2))
        with pytest.raises(EdgeProximityError):
            hilbert_pv_direct(f, 39.999)


class TestConvolve:
    def test_gaussian_closed_form(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2 / 2))
        c = convolve(f, f)
        target = math.sqrt(math.pi) * np.exp(-GAUSS_GRID.x**2 / 4)
        assert np.max(np.abs(c.values - target)) <= 1e-9

    def test_delta_like_bump(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2 / 2))
        width = 5 * GAUSS_GRID.dx
        bump = GridFunction.from_callable(
            GAUSS_GRID, lambda x: np.exp(-(x**2) / (2 * width**2))
        )
        mass = float(np.sum(bump.values.real)) * GAUSS_GRID.dx
        c = convolve(f, bump)
        assert np.max(np.abs(c.values - mass * f.values)) <= width

    def test_convolution_theorem(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2 / 2) * np.cos(x))
        g = GridFunction.from_callable(GAUSS_GRID, lambda x: x * np.exp(-x**2 / 3))
        c = convolve(f, g)
        lhs = fourier(c, edge_tol=np.inf).values
        rhs = (
            math.sqrt(2 * math.pi)
            * fourier(f, edge_tol=np.inf).values
            * fourier(g, edge_tol=np.inf).values
        )
        assert np.max(np.abs(lhs - rhs)) <= 1e-9

    def test_dx_mismatch(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2))
        g2 = Grid.centered(20.0, 512)
        g = GridFunction.from_callable(g2, lambda x: np.exp(-x**2))
        with pytest.raises(GridMismatchError):
            convolve(f, g)


class TestPlancherel:
    def test_gaussian(self):
        f = GridFunction.from_callable(GAUSS_GRID, lambda x: np.exp(-x**2 / 2))
        assert plancherel_check(f).measured <= 1e-12

    def test_scaled_kernel_sample(self):
        from salemkit.kernel import scaled_kernel_many

        grid = Grid(x0=-72.0, dx=0.04, n=4096)
        K = GridFunction(grid, scaled_kernel_many(grid.x, 0.75).astype(complex))
        assert plancherel_check(K).measured <= 1e-9

    def test_zero(self):
        f = GridFunction(GAUSS_GRID, np.zeros(GAUSS_GRID.n))
        assert plancherel_check(f).measured == 0.0


class TestWeightedParseval:
    def test_exponential_weight(self):
        from salemkit.salem import SINC_SUITE_GRID, analytic_extension, make_modulated_sinc, weighted_l2_spectrum

        h = make_modulated_sinc(SINC_SUITE_GRID, 1.0)
        for y in (0.5, 1.0, 2.0):
            ext = analytic_extension(h, y)
            spatial = float(np.sum(np.abs(ext.values) ** 2)) * ext.grid.dx
            spectral = weighted_l2_spectrum(h, y)
            assert abs(spatial - spectral) / spectral <= 1e-3


class TestGridRefinement:
    def test_fourier_error_drops(self):
        errs = []
        for n in (32, 64):
            g = Grid.centered(10.0, n)
            f = GridFunction.from_callable(g, lambda x: np.exp(-x**2 / 2))
            F = fourier(f, edge_tol=np.inf)
            band = np.abs(F.t) <= 4.0
            errs.append(np.max(np.abs(F.values - np.exp(-F.t**2 / 2))[band]))
        assert errs[1] < errs[0]

    def test_hilbert_error_drops(self):
        errs = []
        for n in (256, 512):
            g = Grid.centered(40.0, n)
            f = GridFunction.from_callable(g, lambda x: np.exp(-x**2 / 8) * np.sin(x))
            h = hilbert(f)
            ref = []
            for y in np.linspace(-5, 5, 9):
                j = int(round((y - g.x0) / g.dx))
                ref.append(abs(h.values[j] - hilbert_pv_direct(f, g.x[j])))
            errs.append(max(ref))
        assert errs[1] < errs[0]
