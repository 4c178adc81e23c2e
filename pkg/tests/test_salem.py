"""Convolution operator, spectral factorization, one-sided-spectrum checkers,
analytic extension, and the exponential-type fit."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from salemkit import salem as S
from salemkit.errors import DomainError, SpectrumUnboundedError
from salemkit.kernel import scaled_kernel_many
from salemkit.specialfn import symbol_G_many
from salemkit.transforms import Grid, GridFunction, fourier


GAUSS = S.TestFunction("gaussian")


class TestParamsAndPresets:
    def test_sigma_domain(self):
        with pytest.raises(DomainError):
            S.SalemParams(0.5, 1.0)
        with pytest.raises(DomainError):
            S.SalemParams(0.75, 0.0)

    def test_presets_real(self):
        grid = S.default_grid()
        for kind in ("gaussian", "bump", "sinc", "modulated_sinc"):
            f = S.TestFunction(kind).materialize(S.default_grid(kind))
            assert np.max(np.abs(f.values.imag)) == 0.0

    def test_bump_compact(self):
        f = S.TestFunction("bump").materialize(S.default_grid())
        x = S.default_grid().x
        assert np.all(f.values[np.abs(x) >= 5.0] == 0.0)

    def test_sinc_tapered_edges(self):
        g = S.default_grid("sinc")
        f = S.TestFunction("sinc").materialize(g)
        assert f.values[0] == 0.0 and f.values[-1] == 0.0

    def test_csv_kind(self, tmp_path):
        grid = S.default_grid()
        f = GAUSS.materialize(grid)
        path = tmp_path / "f.csv"
        f.save_csv(path)
        g = S.TestFunction("csv", path=str(path)).materialize(grid)
        assert np.max(np.abs(g.values - f.values)) < 1e-12

    def test_unknown_kind(self):
        with pytest.raises(DomainError):
            S.TestFunction("pulse")


class TestOperator:
    def test_zero_input(self):
        grid = S.default_grid()
        out = S.I_sigma(GridFunction(grid, np.zeros(grid.n)), S.SalemParams(0.75, 1.0))
        assert np.max(np.abs(out.values)) == 0.0

    def test_real_output(self):
        p = S.SalemParams(0.75, 1.0)
        f = GAUSS.materialize(S.default_grid())
        out = S.I_sigma(f, p)
        assert np.max(np.abs(out.values.imag)) == 0.0  # imaginary part dropped after check

    def test_delta_like_input_reproduces_kernel(self):
        p = S.SalemParams(0.75, 1.0)
        grid = S.factorization_grid(0.75)
        width = 3 * grid.dx
        bump = GridFunction.from_callable(grid, lambda x: np.exp(-(x**2) / (2 * width**2)))
        mass = float(np.sum(bump.values.real)) * grid.dx
        out = S.I_sigma(bump, p)
        target = mass * scaled_kernel_many(grid.x, p.sigma)
        band = np.abs(grid.x) < 30.0
        assert np.max(np.abs(out.values.real - target)[band]) <= width

    def test_spectral_factorization_of_operator(self):
        p = S.SalemParams(0.75, 1.0)
        grid = S.factorization_grid(0.75)
        f = GAUSS.materialize(grid)
        out = S.I_sigma(f, p)
        F_out = fourier(out, edge_tol=1e-4)
        F_f = fourier(f, edge_tol=np.inf)
        band = np.abs(F_out.grid.x) <= 15.0
        rhs = symbol_G_many(p.sigma, -F_out.grid.x[band]) * F_f.values[band]
        rel = np.max(np.abs(F_out.values[band] - rhs)) / (1.0 + np.max(np.abs(rhs)))
        assert rel <= 1e-4

    def test_complex_input_rejected(self):
        grid = S.default_grid()
        vals = np.exp(-grid.x**2) * 1j
        with pytest.raises(DomainError):
            S.I_sigma(GridFunction(grid, vals), S.SalemParams(0.75, 1.0))


class TestModulate:
    def test_identity_at_zero(self):
        f = GAUSS.materialize(S.default_grid())
        out = S.modulate(f, 0.0)
        assert np.max(np.abs(out.values - f.values)) == 0.0

    def test_spectrum_shift(self):
        grid = S.default_grid()
        f = GAUSS.materialize(grid)
        Fm = fourier(S.modulate(f, 2.0), edge_tol=np.inf)
        # for the unit gaussian the shifted spectrum is known in closed form
        assert np.max(np.abs(Fm.values - np.exp(-(Fm.grid.x + 2.0) ** 2 / 2))) <= 1e-9

    @settings(max_examples=20, deadline=None)
    @given(st.floats(-3, 3), st.floats(-3, 3))
    def test_composition(self, a, b):
        f = GAUSS.materialize(S.default_grid())
        lhs = S.modulate(S.modulate(f, a), b)
        rhs = S.modulate(f, a + b)
        assert np.max(np.abs(lhs.values - rhs.values)) <= 1e-12


class TestFactorization:
    @pytest.mark.parametrize("kind", ["gaussian", "bump", "sinc", "modulated_sinc"])
    def test_presets(self, kind):
        e = S.factorization_check(S.TestFunction(kind), S.SalemParams(0.75, 1.0))
        assert e.passed, e.notes

    @pytest.mark.parametrize("sigma", [0.6, 0.75, 0.9])
    @pytest.mark.parametrize("m", [1.0, 2.0])
    def test_sigma_m_grid(self, sigma, m):
        e = S.factorization_check(GAUSS, S.SalemParams(sigma, m))
        assert e.passed

    def test_zero_function(self):
        p = S.SalemParams(0.75, 1.0)
        grid = S.factorization_grid(0.75)
        zero = GridFunction(grid, np.zeros(grid.n))
        out = S.I_sigma(zero, p)
        assert np.max(np.abs(out.values)) == 0.0


class TestTitchmarshPair:
    def test_passes_on_modulated_sinc(self):
        for m in (1.0, 3.0):
            h = S.make_modulated_sinc(S.SINC_SUITE_GRID, m)
            assert S.titchmarsh_pair_check(h).passed

    def test_fails_on_real_gaussian(self):
        h = GridFunction.from_callable(S.SINC_SUITE_GRID, lambda x: np.exp(-x**2 / 2))
        e = S.titchmarsh_pair_check(h)
        assert not e.passed
        assert e.measured > 100 * e.tolerance

    def test_zero_passes(self):
        h = GridFunction(S.SINC_SUITE_GRID, np.zeros(S.SINC_SUITE_GRID.n))
        assert S.titchmarsh_pair_check(h).passed


class TestHalflineNull:
    def test_passes_at_true_cutoff(self):
        for m in (1.0, 2.0):
            h = S.make_modulated_sinc(S.SINC_SUITE_GRID, m)
            assert S.halfline_null_check(h, cutoff=-m - 1.0).passed

    def test_fails_half_inside_band(self):
        h = S.make_modulated_sinc(S.SINC_SUITE_GRID, 1.0)
        e = S.halfline_null_check(h, cutoff=-1.5)
        assert not e.passed and e.measured > 0.5

    def test_fails_on_gaussian(self):
        h = GridFunction.from_callable(S.SINC_SUITE_GRID, lambda x: np.exp(-x**2 / 2))
        assert not S.halfline_null_check(h, cutoff=-2.0).passed

    def test_zero_passes(self):
        h = GridFunction(S.SINC_SUITE_GRID, np.zeros(S.SINC_SUITE_GRID.n))
        assert S.halfline_null_check(h, cutoff=-2.0).passed


class TestAnalyticExtension:
    def test_sinc_closed_form(self):
        g = S.SINC_SUITE_GRID
        h = GridFunction(g, S.sinc_values(g.x) * S.edge_taper(g) + 0j)
        ext = S.analytic_extension(h, 1.0)
        z = g.x + 1j
        interior = np.abs(g.x) < 40.0
        assert np.max(np.abs(ext.values - np.sin(z) / z)[interior]) <= 1e-3

    def test_small_height_recovers_input(self):
        g = S.SINC_SUITE_GRID
        h = GridFunction(g, S.sinc_values(g.x) * S.edge_taper(g) + 0j)
        ext = S.analytic_extension(h, g.dx / 4.0)
        interior = np.abs(g.x) < 40.0
        assert np.max(np.abs(ext.values - h.values)[interior]) <= 1e-2

    def test_zero(self):
        g = S.SINC_SUITE_GRID
        ext = S.analytic_extension(GridFunction(g, np.zeros(g.n)), 1.0)
        assert np.max(np.abs(ext.values)) == 0.0


class TestGrowthRate:
    def test_shifted_sinc_family(self):
        for m in (1.0, 2.0, 3.0):
            a = m - 1.0
            if a == 0.0:
                g = S.SINC_SUITE_GRID
                h = GridFunction(g, S.sinc_values(g.x) * S.edge_taper(g) + 0j)
            else:
                h = S.make_modulated_sinc(S.SINC_SUITE_GRID, a)
            slope = S.growth_rate(h, S.GROWTH_YS)
            assert abs(slope - 2.0 * m) / (2.0 * m) <= 0.02

    def test_modulated_sinc_gives_two_m_plus_two(self):
        m = 2.0
        h = S.make_modulated_sinc(S.SINC_SUITE_GRID, m)
        slope = S.growth_rate(h, S.GROWTH_YS)
        assert abs(slope - 2.0 * (m + 1.0)) / (2.0 * (m + 1.0)) <= 0.02

    def test_positive_spectrum_control(self):
        h = S.make_modulated_sinc(S.SINC_SUITE_GRID, -1.0)
        assert abs(S.growth_rate(h, S.GROWTH_YS)) <= 0.04

    def test_unbounded_spectrum_raises(self):
        h = GridFunction.from_callable(S.SINC_SUITE_GRID, lambda x: np.exp(-x**2 / 2))
        with pytest.raises(SpectrumUnboundedError):
            S.growth_rate(h, S.GROWTH_YS)

    def test_needs_five_heights(self):
        h = S.make_modulated_sinc(S.SINC_SUITE_GRID, 1.0)
        with pytest.raises(DomainError):
            S.growth_rate(h, (5.0, 10.0))

    def test_monotone_in_cutoff(self):
        # raising the spectrum's lower cutoff lowers the fitted type
        slopes = []
        for a in (2.0, 1.0, 0.0, -1.0):
            h = S.make_modulated_sinc(S.SINC_SUITE_GRID, a)
            slopes.append(S.growth_rate(h, S.GROWTH_YS))
        assert all(s1 > s2 for s1, s2 in zip(slopes, slopes[1:]))


class TestEquivalenceOfCheckers:
    def test_pass_and_fail_together(self):
        # modulated sinc: both checkers pass; gaussian: both fail
        h = S.make_modulated_sinc(S.SINC_SUITE_GRID, 2.0)
        assert S.titchmarsh_pair_check(h).passed
        assert S.halfline_null_check(h, cutoff=-3.0).passed
        g = GridFunction.from_callable(S.SINC_SUITE_GRID, lambda x: np.exp(-x**2 / 2))
        assert not S.titchmarsh_pair_check(g).passed
        assert not S.halfline_null_check(g, cutoff=-3.0).passed


class TestSalemResidual:
    def test_zero(self):
        p = S.SalemParams(0.75, 1.0)
        grid = S.default_grid()
        zero = GridFunction(grid, np.zeros(grid.n))
        out = S.I_sigma(zero, p)
        assert float(np.max(np.abs(out.values))) == 0.0

    def test_gaussian_strictly_positive(self):
        assert S.salem_residual(GAUSS, S.SalemParams(0.75, 1.0)) > 1e-3

    def test_translation_invariance(self):
        p = S.SalemParams(0.75, 1.0)
        grid = S.factorization_grid(0.75)
        f = GAUSS.materialize(grid)
        base = S.I_sigma(f, p)
        shift = 128
        sh = np.roll(f.values, shift)
        sh[:shift] = 0.0
        out = S.I_sigma(GridFunction(grid, sh), p)
        back = np.roll(out.values, -shift)
        interior = slice(shift, grid.n - shift)
        rel = np.max(np.abs((back - base.values)[interior])) / np.max(np.abs(base.values))
        assert rel <= 1e-6


class TestSincSuite:
    @pytest.mark.parametrize("m", [1.0, 2.0, 10.0])
    def test_all_pass(self, m):
        report = S.sinc_example_suite(m)
        assert len(report) == 5
        for e in report:
            assert e.passed, f"{e.check_id}: {e.measured} vs {e.tolerance}"

    def test_m_below_one_rejected(self):
        with pytest.raises(DomainError):
            S.sinc_example_suite(0.5)
