"""Named verification suites backing the ``verify`` command.

Each suite returns a list of VerificationEntry, every entry pinned to the
identity it checks (stated in the notes as a formula, so reports are
self-describing).  All checks are pure; the runner may evaluate them in
parallel and sorts the assembled report by check_id, so the output is
independent of thread count.
"""

from __future__ import annotations

import cmath
import datetime as _dt
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict

import numpy as np

from . import __version__
from .errors import ConfigError
from .report import VerificationEntry, VerificationReport
from . import specialfn as sf
from . import kernel as kn
from . import salem as sl
from . import paleywiener as pw
from .transforms import (
    Grid,
    GridFunction,
    convolve,
    fourier,
    hilbert,
    hilbert_pv_direct,
    inverse_fourier,
    next_pow2,
    plancherel_check,
)

SUITE_NAMES = ("specialfn", "kernel", "transforms", "salem", "paley")


@dataclass
class ScenarioConfig:
    """Run configuration echoed into every report."""

    sigma: float = 0.75
    m: float = 1.0
    f_kind: str = "gaussian"
    f_csv: str | None = None
    grid_x0: float | None = None
    grid_dx: float | None = None
    grid_n: int | None = None
    suites: tuple = ("all",)
    output_path: str | None = None
    format: str = "json"
    threads: int = 1
    contour_tmax: float = 40.0
    contour_step: float = 0.05
    a: float = 1.0
    epsilon: float = 1.5
    c: float = 1.0

    def __post_init__(self):
        if not 0.5 < self.sigma < 1.0:
            raise ConfigError(f"sigma = {self.sigma} outside (1/2, 1)")
        if self.m <= 0:
            raise ConfigError("m must be positive")
        if self.format not in ("json", "csv"):
            raise ConfigError(f"unknown format {self.format!r}")
        if not self.suites:
            raise ConfigError("at least one suite required")
        for s in self.suites:
            if s != "all" and s not in SUITE_NAMES:
                raise ConfigError(f"unknown suite {s!r}")
        if self.grid_n is not None and (self.grid_n & (self.grid_n - 1) or self.grid_n < 16):
            raise ConfigError("grid_n must be a power of two >= 16")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        if self.contour_tmax <= 0 or not 0 < self.contour_step <= 0.1:
            raise ConfigError("invalid contour parameters")

    def test_function(self) -> sl.TestFunction:
        if self.f_kind == "csv":
            return sl.TestFunction("csv", path=self.f_csv)
        return sl.TestFunction(self.f_kind)

    def grid(self) -> Grid | None:
        if self.grid_dx is None and self.grid_n is None and self.grid_x0 is None:
            return None
        dx = self.grid_dx if self.grid_dx is not None else 80.0 / 2048
        n = self.grid_n if self.grid_n is not None else 2048
        x0 = self.grid_x0 if self.grid_x0 is not None else -0.5 * n * dx
        return Grid(x0=x0, dx=dx, n=n)

    def contour(self) -> kn.ContourSpec:
        return kn.ContourSpec(t_max=self.contour_tmax, h=self.contour_step)


@dataclass
class RunManifest:
    config: dict
    entries: VerificationReport
    observations: dict = field(default_factory=dict)
    schema: int = 1
    tool_version: str = __version__
    timestamp: str = ""

    def as_dict(self) -> dict:
        return {
            "schema": self.schema,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp or _dt.datetime.now(_dt.timezone.utc).isoformat(),
            "config": self.config,
            "observations": self.observations,
            "entries": self.entries.sorted().as_list(),
        }


# ---------------------------------------------------------------------------
# specialfn suite
# ---------------------------------------------------------------------------

def suite_specialfn(cfg: ScenarioConfig) -> list[VerificationEntry]:
    checks = []

    for s in (2.0, 1.0, 0.6 + 3j, 0.8 - 5j):
        checks.append(lambda s=s: sf.fermi_mellin_check(s))

    def funceq_grid():
        rng = np.random.default_rng(20240817)
        pts = rng.uniform(0.05, 0.95, 20) + 1j * rng.uniform(-40.0, 40.0, 20)
        worst = max(sf.functional_equation_check(s).measured for s in pts)
        return VerificationEntry(
            "specialfn.functional_equation_grid",
            worst,
            1e-9,
            "zeta reflection residual over 20 random strip points",
        )

    checks.append(funceq_grid)

    def conj_symmetry():
        rng = np.random.default_rng(7)
        pts = rng.uniform(-0.9, 3.0, 100) + 1j * rng.uniform(0.1, 150.0, 100)
        wz = max(
            abs(sf.zeta(np.conj(s)) - np.conj(sf.zeta(s))) / abs(sf.zeta(s)) for s in pts
        )
        wg = max(
            abs(sf.gamma(np.conj(s)) - np.conj(sf.gamma(s))) / abs(sf.gamma(s)) for s in pts
        )
        return VerificationEntry(
            "specialfn.conjugate_symmetry",
            max(wz, wg),
            1e-12,
            "f(conj s) == conj(f(s)) for zeta and gamma",
        )

    checks.append(conj_symmetry)

    def recurrence():
        rng = np.random.default_rng(11)
        pts = rng.uniform(-4.5, 18.0, 100) + 1j * rng.uniform(-90.0, 90.0, 100)
        worst = max(
            abs(sf.gamma(s + 1) - s * sf.gamma(s)) / abs(sf.gamma(s + 1)) for s in pts
        )
        return VerificationEntry(
            "specialfn.gamma_recurrence", worst, 1e-11, "Gamma(s+1) == s Gamma(s)"
        )

    checks.append(recurrence)

    def em_stability():
        rng = np.random.default_rng(13)
        pts = rng.uniform(-0.9, 3.0, 40) + 1j * rng.uniform(-150.0, 150.0, 40)
        alt = sf.ZetaConfig(em_terms=24, bernoulli_terms=8, im_scale=2.6)
        worst = max(abs(sf.zeta(s) - sf.zeta(s, alt)) for s in pts)
        return VerificationEntry(
            "specialfn.euler_maclaurin_stability",
            worst,
            1e-10,
            "doubling the cutoff and adding tail terms leaves zeta unchanged",
        )

    checks.append(em_stability)

    def stirling_accuracy():
        ratio = abs(sf.gamma(0.75 + 30j)) / sf.stirling_modulus(0.75, 30.0)
        return VerificationEntry(
            "specialfn.stirling_modulus:t=30",
            abs(ratio - 1.0),
            0.02,
            "|Gamma(3/4+30i)| within 2% of sqrt(2pi) e^(-pi t/2) t^(sigma-1/2)",
        )

    checks.append(stirling_accuracy)

    def stirling_trend():
        def err(t):
            return abs(abs(sf.gamma(0.75 + 1j * t)) / sf.stirling_modulus(0.75, t) - 1.0)

        return VerificationEntry(
            "specialfn.stirling_trend",
            err(100.0) / err(10.0),
            1.0,
            "Stirling modulus error shrinks from t=10 to t=100",
        )

    checks.append(stirling_trend)

    def eta_paths():
        s = 0.5 + 14.134725j
        direct = sf.eta_factor(s)
        alt = 1.0 - cmath.exp((1.0 - s) * math.log(2.0))
        two_path = abs(direct - alt)
        product = abs(sf.zeta(s) * sf.eta_factor(s) - sf.eta_alternating(s))
        return VerificationEntry(
            "specialfn.eta_consistency",
            max(two_path, product),
            1e-7,
            "zeta(s)(1-2^(1-s)) == alternating eta sum",
        )

    checks.append(eta_paths)

    def symbol_componentwise():
        g = sf.symbol_G(0.75)
        z34 = sf.eta_alternating(0.75) / (1.0 - 2.0 ** (1.0 - 0.75))
        z14 = sf.eta_alternating(0.25) / (1.0 - 2.0 ** (1.0 - 0.25))
        alt = sf.gamma(0.75) * z34 * z14
        return VerificationEntry(
            "specialfn.symbol_componentwise",
            abs(g - alt) / abs(g),
            1e-10,
            "G(3/4) via Euler-Maclaurin factors == via alternating-series factors",
        )

    checks.append(symbol_componentwise)

    def symbol_bound():
        s = 0.75 + 40j
        G = sf.symbol_G(s)
        zz = abs(sf.zeta(s) * sf.zeta(s - 0.5))
        bound = 10.0 * sf.stirling_modulus(0.75, 40.0) * zz
        return VerificationEntry(
            "specialfn.symbol_stirling_bound",
            abs(G) / bound,
            1.0,
            "|G(3/4+40i)| <= 10 stirling |zeta zeta|",
        )

    checks.append(symbol_bound)

    def zero_scan_sanity():
        zeros = sf.critical_zero_scan(10.0, 30.0, 0.1)
        count_err = abs(len(zeros) - 3)
        resid = max((abs(sf.hardy_z(t)) for t in zeros), default=0.0)
        return VerificationEntry(
            "specialfn.zero_scan",
            count_err + resid,
            1e-6,
            f"three Hardy-Z sign changes in (10, 30); ordinates {['%.8f' % z for z in zeros]}",
        )

    checks.append(zero_scan_sanity)
    return [c() for c in checks]


# ---------------------------------------------------------------------------
# kernel suite
# ---------------------------------------------------------------------------

def suite_kernel(cfg: ScenarioConfig) -> list[VerificationEntry]:
    cs = cfg.contour()
    entries: list[VerificationEntry] = []

    for x in (0.05, 0.1, 0.5, 1.0, 2.0, 5.0):
        ks = kn.k_series(x)
        kc = kn.k_contour(x, cs)
        entries.append(
            VerificationEntry(
                f"kernel.series_vs_contour:x={x:g}",
                abs(ks.value - kc.value),
                1e-7,
                "divisor series minus residue corrections == vertical-line inversion",
            )
        )

    worst = max(
        abs(kn.raw_series(x) - kn.mellin_dirichlet_contour(x, 0.5, 2.0, cs.t_max, cs.h))
        for x in (0.5, 1.0, 2.0)
    )
    entries.append(
        VerificationEntry(
            "kernel.dirichlet_inversion:c=2",
            worst,
            1e-8,
            "sum d_r(n) e^(-nx) == (1/2pi i) int_(c) Gamma zeta zeta(.-r) x^(-s) ds",
        )
    )

    fit = kn.residue_coefficients()
    entries.append(
        VerificationEntry(
            "kernel.residue_fit",
            fit.fit_residual_rel,
            1e-4,
            fit.notes,
        )
    )

    spec0 = kn.KernelSpec(r=0.0)
    x = 0.5
    mvals = np.arange(1, 400)
    lam = float(np.sum(np.exp(-mvals * x) / (1.0 - np.exp(-mvals * x))))
    entries.append(
        VerificationEntry(
            "kernel.lambert_resummation",
            abs(kn.raw_series(x, spec0) - lam),
            1e-10,
            "sum d(n) e^(-nx) == sum_m e^(-mx)/(1-e^(-mx))",
        )
    )

    rng = np.random.default_rng(23)
    worst = 0.0
    for _ in range(50):
        mm = int(rng.integers(1, 200))
        nn = int(rng.integers(1, 200))
        if math.gcd(mm, nn) != 1:
            continue
        d1 = kn.divisor_sum(mm, 0.5) * kn.divisor_sum(nn, 0.5)
        d2 = kn.divisor_sum(mm * nn, 0.5)
        worst = max(worst, abs(d1 - d2) / abs(d2))
    entries.append(
        VerificationEntry(
            "kernel.divisor_multiplicativity",
            worst,
            1e-12,
            "d_r(mn) == d_r(m) d_r(n) for coprime m, n",
        )
    )

    for sig in (0.55, 0.6, 0.75, 0.9, 0.95):
        entries.append(kn.l2_certificate(sig))

    entries.append(_spectrum_vs_grid_transform(cfg.sigma))

    entries.append(
        VerificationEntry(
            "kernel.fermi_kernel_at_zero",
            abs(kn.salem_kernel(0.0, cfg.sigma) - 1.0 / (math.e + 1.0)),
            1e-15,
            "e^(sigma 0)/(e^(e^0)+1) == 1/(e+1)",
        )
    )
    entries.append(_fermi_kernel_spectrum_check(cfg.sigma))
    return entries


def _kernel_sampling_grid(sigma: float) -> Grid:
    dx = 0.04
    x_lo = -max(60.0, 24.0 / sigma + 8.0)
    x_hi = max(60.0, 24.0 / (1.0 - sigma) + 8.0)
    n = next_pow2(int(math.ceil((x_hi - x_lo) / dx)))
    return Grid(x0=x_lo, dx=dx, n=n)


def _spectrum_vs_grid_transform(sigma: float) -> VerificationEntry:
    grid = _kernel_sampling_grid(sigma)
    K = GridFunction(grid, kn.scaled_kernel_many(grid.x, sigma).astype(np.complex128))
    F = fourier(K)
    band = np.abs(F.grid.x) <= 20.0
    direct = kn.scaled_kernel_spectrum_many(sigma, F.grid.x[band])
    err = float(np.max(np.abs(F.values[band] - direct)))
    return VerificationEntry(
        f"kernel.spectrum_vs_grid:sigma={sigma:g}",
        err,
        1e-5,
        "grid transform of sampled e^(sx) k(e^x) == G(sigma - i t)/sqrt(2 pi)",
    )


def _fermi_kernel_spectrum_check(sigma: float) -> VerificationEntry:
    grid = Grid(x0=-90.0, dx=0.025, n=4096)
    f = GridFunction(grid, kn.salem_kernel_many(grid.x, sigma).astype(np.complex128))
    F = fourier(f)
    band = np.abs(F.grid.x) <= 20.0
    direct = kn.salem_kernel_spectrum_many(sigma, F.grid.x[band])
    err = float(np.max(np.abs(F.values[band] - direct)))
    return VerificationEntry(
        f"kernel.fermi_spectrum:sigma={sigma:g}",
        err,
        1e-6,
        "grid transform of e^(sx)/(e^(e^x)+1) == Gamma zeta eta-factor /sqrt(2 pi)",
    )


# ---------------------------------------------------------------------------
# transforms suite
# ---------------------------------------------------------------------------

def suite_transforms(cfg: ScenarioConfig) -> list[VerificationEntry]:
    entries: list[VerificationEntry] = []
    g = Grid.centered(20.0, 1024)
    f = GridFunction.from_callable(g, lambda x: np.exp(-(x**2) / 2))
    F = fourier(f)
    entries.append(
        VerificationEntry(
            "transforms.gaussian_selfdual",
            float(np.max(np.abs(F.values - np.exp(-(F.grid.x**2) / 2)))),
            1e-10,
            "F[e^(-x^2/2)](t) == e^(-t^2/2)",
        )
    )
    back = inverse_fourier(F, x0=g.x0)
    entries.append(
        VerificationEntry(
            "transforms.roundtrip",
            float(np.max(np.abs(back.values - f.values))),
            1e-10,
            "inverse_fourier(fourier(f)) == f",
        )
    )
    fm = GridFunction(g, np.exp(-1j * 2.0 * g.x) * f.values)
    Fm = fourier(fm)
    entries.append(
        VerificationEntry(
            "transforms.modulation",
            float(np.max(np.abs(Fm.values - np.exp(-((Fm.grid.x + 2.0) ** 2) / 2)))),
            1e-9,
            "F[e^(-imx) f](t) == Ff(t+m)",
        )
    )
    entries.append(plancherel_check(f))

    conv = convolve(f, f)
    entries.append(
        VerificationEntry(
            "transforms.convolution_closed_form",
            float(np.max(np.abs(conv.values - math.sqrt(math.pi) * np.exp(-(g.x**2) / 4)))),
            1e-9,
            "e^(-x^2/2) * e^(-x^2/2) == sqrt(pi) e^(-x^2/4)",
        )
    )
    Fc = fourier(conv)
    entries.append(
        VerificationEntry(
            "transforms.convolution_theorem",
            float(np.max(np.abs(Fc.values - math.sqrt(2 * math.pi) * F.values * F.values))),
            1e-9,
            "F(f*g) == sqrt(2 pi) Ff Fg",
        )
    )

    gs = Grid.centered(40.0, 2048)
    xs = gs.x
    sinc2 = GridFunction(
        gs, np.where(xs != 0, np.sin(2 * xs), 2.0) / np.where(xs != 0, xs, 1.0)
    )
    h2 = hilbert(sinc2)
    target = np.where(xs != 0, (np.cos(2 * xs) - 1.0) / np.where(xs != 0, xs, 1.0), 0.0)
    interior = np.abs(xs) < 20.0
    entries.append(
        VerificationEntry(
            "transforms.hilbert_sinc_identity",
            float(np.max(np.abs(h2.values - target)[interior])),
            1e-3,
            "H[sin(2x)/x] == (cos(2x)-1)/x",
        )
    )

    g80 = Grid.centered(80.0, 4096)
    sinc1 = GridFunction.from_callable(
        g80, lambda x: np.where(x != 0, np.sin(np.where(x != 0, x, 1.0)) / np.where(x != 0, x, 1.0), 1.0)
    )
    pv = hilbert_pv_direct(sinc1, 1.0)
    entries.append(
        VerificationEntry(
            "transforms.pv_oracle_sinc",
            abs(pv.real - (math.cos(1.0) - 1.0)),
            1e-3,
            "PV quadrature of H[sin x/x] at y=1 == cos(1) - 1",
        )
    )

    lor_grid = Grid.centered(160.0, 8192)
    lor = GridFunction.from_callable(lor_grid, lambda x: 1.0 / (1.0 + x**2))
    hl = hilbert(lor)
    worst = 0.0
    for y in np.linspace(-10, 10, 21):
        j = int(round((y - lor_grid.x0) / lor_grid.dx))
        worst = max(worst, abs(hl.values[j] - hilbert_pv_direct(lor, lor_grid.x[j])))
    entries.append(
        VerificationEntry(
            "transforms.pv_vs_spectral",
            worst,
            1e-4,
            "spectral Hilbert matches the PV quadrature oracle at 21 points",
        )
    )

    fam = (
        lambda x: x * np.exp(-(x**2) / 2),
        lambda x: (x**2 - 1.0) * np.exp(-(x**2) / 2),
        lambda x: np.sin(2 * x) * np.exp(-(x**2) / 4),
        lambda x: np.cos(3 * x) * np.exp(-(x**2) / 2),
        lambda x: np.sin(x) * np.exp(-np.abs(x) / 2),
    )
    worst = 0.0
    for fn in fam:
        ff = GridFunction.from_callable(gs, fn)
        hh = hilbert(hilbert(ff))
        worst = max(worst, float(np.max(np.abs(hh.values + ff.values)[interior])))
    entries.append(
        VerificationEntry(
            "transforms.hilbert_involution",
            worst,
            2e-3,
            "H H f == -f on a five-function decaying family",
        )
    )

    h1 = hilbert(sinc2, pad=1)
    Fh = fourier(GridFunction(gs, h1.values), edge_tol=np.inf)
    Ff2 = fourier(sinc2, edge_tol=np.inf)
    ident = Fh.values - 1j * np.sign(Fh.grid.x) * Ff2.values
    entries.append(
        VerificationEntry(
            "transforms.spectral_multiplier",
            float(np.max(np.abs(ident))),
            1e-12,
            "F[Hf](t) == i sgn(t) Ff(t), exact on the unpadded lattice",
        )
    )

    rng = np.random.default_rng(5)
    a, b = complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal())
    f1v = GridFunction.from_callable(g, lambda x: np.exp(-(x**2) / 2) * np.cos(x))
    f2v = GridFunction.from_callable(g, lambda x: x * np.exp(-(x**2) / 3))
    lin = np.max(
        np.abs(
            fourier(GridFunction(g, a * f1v.values + b * f2v.values), edge_tol=np.inf).values
            - a * fourier(f1v, edge_tol=np.inf).values
            - b * fourier(f2v, edge_tol=np.inf).values
        )
    )
    entries.append(
        VerificationEntry(
            "transforms.linearity", float(lin), 1e-12, "F(af+bg) == a Ff + b Fg"
        )
    )

    sinc_h = sl.make_modulated_sinc(sl.SINC_SUITE_GRID, 1.0)
    worst = 0.0
    for y in (0.5, 1.0, 2.0):
        ext = sl.analytic_extension(sinc_h, y)
        spatial = float(np.sum(np.abs(ext.values) ** 2)) * ext.grid.dx
        spectral = sl.weighted_l2_spectrum(sinc_h, y)
        worst = max(worst, abs(spatial - spectral) / spectral)
    entries.append(
        VerificationEntry(
            "transforms.weighted_parseval",
            worst,
            1e-3,
            "int |Fh|^2 e^(-2ty) dt == int |h(x+iy)|^2 dx for y in {1/2, 1, 2}",
        )
    )

    errs = []
    for n in (32, 64):
        gg = Grid.centered(10.0, n)
        fgg = GridFunction.from_callable(gg, lambda x: np.exp(-(x**2) / 2))
        Fgg = fourier(fgg, edge_tol=np.inf)
        band = np.abs(Fgg.grid.x) <= 4.0
        errs.append(
            float(np.max(np.abs(Fgg.values - np.exp(-(Fgg.grid.x**2) / 2))[band]))
        )
    entries.append(
        VerificationEntry(
            "transforms.grid_refinement",
            errs[1] / errs[0],
            1.0,
            "halving dx reduces the aliasing-dominated transform error on |t| <= 4",
        )
    )
    return entries


# ---------------------------------------------------------------------------
# salem suite
# ---------------------------------------------------------------------------

def suite_salem(cfg: ScenarioConfig) -> list[VerificationEntry]:
    entries: list[VerificationEntry] = []
    p = sl.SalemParams(cfg.sigma, cfg.m)
    for kind in ("gaussian", "bump", "modulated_sinc"):
        entries.append(sl.factorization_check(sl.TestFunction(kind), p, cfg.grid()))

    for e in sl.sinc_example_suite(max(cfg.m, 1.0)):
        entries.append(e)

    gauss = GridFunction.from_callable(
        sl.SINC_SUITE_GRID, lambda x: np.exp(-(x**2) / 2)
    )
    pair_gauss = sl.titchmarsh_pair_check(gauss)
    null_gauss = sl.halfline_null_check(gauss, cutoff=-cfg.m - 1.0)
    discrim = (1.0 if pair_gauss.passed else 0.0) + (1.0 if null_gauss.passed else 0.0)
    entries.append(
        VerificationEntry(
            "salem.checker_discrimination",
            discrim,
            0.0,
            "both one-sided-spectrum checkers reject the two-sided Gaussian "
            f"(pair {pair_gauss.measured:.2e}, null {null_gauss.measured:.2e})",
        )
    )

    h = sl.make_modulated_sinc(sl.SINC_SUITE_GRID, cfg.m - 1.0) if cfg.m > 1 else GridFunction(
        sl.SINC_SUITE_GRID,
        sl.sinc_values(sl.SINC_SUITE_GRID.x) * sl.edge_taper(sl.SINC_SUITE_GRID) + 0j,
    )
    slope = sl.growth_rate(h, sl.GROWTH_YS)
    entries.append(
        VerificationEntry(
            f"salem.growth_rate:m={cfg.m:g}",
            abs(slope - 2.0 * cfg.m) / (2.0 * cfg.m),
            0.02,
            f"fitted exponential type {slope:.5f} vs 2m = {2*cfg.m:g}",
        )
    )
    control = sl.make_modulated_sinc(sl.SINC_SUITE_GRID, -1.0)
    slope0 = sl.growth_rate(control, sl.GROWTH_YS)
    entries.append(
        VerificationEntry(
            "salem.growth_rate_control",
            abs(slope0),
            0.04,
            f"positive-spectrum control slope {slope0:.5f} vs 0",
        )
    )

    grid = cfg.grid() or sl.default_grid(cfg.f_kind)
    fg = cfg.test_function().materialize(grid)
    out = sl.I_sigma(fg, p)
    entries.append(
        VerificationEntry(
            "salem.operator_real_output",
            float(np.max(np.abs(out.values.imag)))
            / max(float(np.max(np.abs(out.values))), 1e-300),
            1e-10,
            "I_sigma maps real input to real output",
        )
    )

    shift_bins = 64
    shifted_vals = np.roll(fg.values, shift_bins)
    shifted_vals[:shift_bins] = 0.0
    out_sh = sl.I_sigma(GridFunction(grid, shifted_vals), p)
    back = np.roll(out_sh.values, -shift_bins)
    interior = slice(shift_bins, grid.n - shift_bins)
    tr = float(np.max(np.abs((back - out.values)[interior]))) / max(
        float(np.max(np.abs(out.values))), 1e-300
    )
    entries.append(
        VerificationEntry(
            "salem.translation_equivariance",
            tr,
            1e-6,
            "I_sigma commutes with grid translations",
        )
    )
    return entries


# ---------------------------------------------------------------------------
# paley suite
# ---------------------------------------------------------------------------

def suite_paley(cfg: ScenarioConfig) -> list[VerificationEntry]:
    entries: list[VerificationEntry] = []
    worst = max(
        abs(pw.cauchy_weight_integral(e).numeric - pw.cauchy_weight_integral(e).closed_form)
        for e in (0.25, 0.5, 1.0, 1.5, 1.75)
    )
    entries.append(
        VerificationEntry(
            "paley.cauchy_weight",
            worst,
            1e-8,
            "int |x|^(e-1)/(1+x^2) dx == pi/sin(e pi/2) for five exponents incl. e=1",
        )
    )

    worst = max(
        pw.decay_sufficiency_check(e, c).measured
        for e in (1.1, 1.5, 1.9)
        for c in (0.5, 1.0, 5.0)
    )
    entries.append(
        VerificationEntry(
            "paley.decay_sufficiency_grid",
            worst,
            1e-6,
            "log-integral of e^(-c|x|^(e-1)) == c int |x|^(e-1)/(1+x^2) dx on a 3x3 grid",
        )
    )

    p = sl.SalemParams(cfg.sigma, cfg.m)
    f1 = pw.build_f1(cfg.test_function(), p, cfg.grid())
    f2 = pw.default_window(p.m, f1.samples.grid)
    entries.append(pw.product_transform_check(f1, f2, (-2.0, 0.0, 2.0)))

    base = pw.product_transform_check(f1, f2, (-2.0, 0.0, 2.0))
    f2x = pw.WindowFunction(
        GridFunction(f2.samples.grid, 2.0 * f2.samples.values), p.m
    )
    doubled = pw.product_transform_check(f1, f2x, (-2.0, 0.0, 2.0))
    entries.append(
        VerificationEntry(
            "paley.bilinear_scaling",
            abs(doubled.measured - 2.0 * base.measured),
            1e-10,
            "deviation scales exactly linearly in the window amplitude",
        )
    )

    fbare = cfg.test_function().materialize(
        cfg.grid() or sl.factorization_grid(p.sigma, cfg.f_kind)
    )
    ibar = fourier(sl.modulate(sl.I_sigma(fbare, p), p.m), edge_tol=1e-4)
    dev = float(np.max(np.abs(f1.samples.values - ibar.values)))
    scale = 1.0 + float(np.max(np.abs(ibar.values)))
    entries.append(
        VerificationEntry(
            "paley.f1_is_transform",
            dev / scale,
            1e-4,
            "f1 == F[e^(-imx) I_sigma f] pointwise on the lattice",
        )
    )

    g = Grid.centered(30.0, 2048)
    hg = GridFunction.from_callable(g, lambda x: np.exp(-(x**2) / 2))
    li = pw.log_integrability(hg)
    entries.append(
        VerificationEntry(
            "paley.gaussian_nonintegrable",
            0.0 if not li.tail_finite else 1.0,
            0.0,
            f"Gaussian log-integrand has tail exponent {li.tail_exponent:.3f} >= 1 "
            "(divergent), distinguishable from the decay profiles",
        )
    )
    return entries


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

_SUITES = {
    "specialfn": suite_specialfn,
    "kernel": suite_kernel,
    "transforms": suite_transforms,
    "salem": suite_salem,
    "paley": suite_paley,
}


def run_suites(cfg: ScenarioConfig) -> VerificationReport:
    names = list(SUITE_NAMES) if "all" in cfg.suites else [s for s in cfg.suites]
    report = VerificationReport()
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            for entries in pool.map(lambda n: _SUITES[n](cfg), names):
                report.extend(entries)
    else:
        for n in names:
            report.extend(_SUITES[n](cfg))
    return report.sorted()


def manifest_for(cfg: ScenarioConfig, report: VerificationReport, observations=None) -> RunManifest:
    return RunManifest(
        config=asdict(cfg), entries=report, observations=observations or {}
    )
