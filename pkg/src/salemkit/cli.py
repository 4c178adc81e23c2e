"""Command-line interface.

Subcommands: verify, kernel-table, zeros, salem, growth, paley.
Exit codes: 0 all checks passed, 1 some check failed, 2 configuration error,
3 numerical-infrastructure error.  SALEMKIT_LOG in {error, info, debug}
selects the stderr log level.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys

import numpy as np

from . import __version__
from .errors import ConfigError, SalemkitError
from .report import VerificationEntry, VerificationReport
from . import kernel as kn
from . import salem as sl
from . import paleywiener as pw
from . import specialfn as sf
from .verification import ScenarioConfig, manifest_for, run_suites

log = logging.getLogger("salemkit")


def _setup_logging() -> None:
    level = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}.get(
        os.environ.get("SALEMKIT_LOG", "error").lower(), logging.ERROR
    )
    logging.basicConfig(stream=sys.stderr, level=level, format="%(name)s %(levelname)s %(message)s")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sigma", type=float, default=0.75)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--f", default="gaussian", choices=sl.PRESET_KINDS)
    p.add_argument("--f-csv", default=None, help="grid-function CSV for --f csv")
    p.add_argument("--grid-x0", type=float, default=None)
    p.add_argument("--grid-dx", type=float, default=None)
    p.add_argument("--grid-n", type=int, default=None)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--format", default="json", choices=("json", "csv"))
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--contour-tmax", type=float, default=40.0)
    p.add_argument("--contour-step", type=float, default=0.05)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="salemkit", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run verification suites")
    _add_common(p)
    p.add_argument(
        "--suite",
        action="append",
        default=None,
        help="suite name (specialfn, kernel, transforms, salem, paley, all); repeatable",
    )

    p = sub.add_parser("kernel-table", help="tabulate both kernel routes to CSV")
    p.add_argument("x_lo", type=float)
    p.add_argument("x_hi", type=float)
    p.add_argument("steps", type=int)
    p.add_argument("--out", default=None)
    p.add_argument("--contour-tmax", type=float, default=40.0)
    p.add_argument("--contour-step", type=float, default=0.05)

    p = sub.add_parser("zeros", help="scan for critical-line zero ordinates")
    p.add_argument("t_lo", type=float)
    p.add_argument("t_hi", type=float)
    p.add_argument("--step", type=float, default=0.1)

    p = sub.add_parser("salem", help="factorization scenario with observational stats")
    _add_common(p)

    p = sub.add_parser("growth", help="exponential-type fit for a modulated input")
    _add_common(p)
    p.add_argument("--a", type=float, default=1.0, help="modulation of e^(-iax) sinc(x)")

    p = sub.add_parser("paley", help="product-transform / log-integrability report")
    _add_common(p)
    p.add_argument("--epsilon", type=float, default=1.5)
    p.add_argument("--c", type=float, default=1.0)
    return ap


def _config_from(args: argparse.Namespace, suites=("all",)) -> ScenarioConfig:
    return ScenarioConfig(
        sigma=args.sigma,
        m=args.m,
        f_kind=args.f,
        f_csv=args.f_csv,
        grid_x0=args.grid_x0,
        grid_dx=args.grid_dx,
        grid_n=args.grid_n,
        suites=tuple(suites),
        output_path=args.out,
        format=args.format,
        threads=args.threads,
        contour_tmax=args.contour_tmax,
        contour_step=args.contour_step,
        a=getattr(args, "a", 1.0),
        epsilon=getattr(args, "epsilon", 1.5),
        c=getattr(args, "c", 1.0),
    )


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _report_text(cfg: ScenarioConfig, report: VerificationReport, observations=None) -> str:
    if cfg.format == "csv":
        lines = ["check_id,measured,tolerance,pass,notes"]
        for e in report.sorted():
            notes = e.notes.replace('"', "'")
            lines.append(f'{e.check_id},{e.measured!r},{e.tolerance!r},{e.passed},"{notes}"')
        return "\n".join(lines) + "\n"
    return json.dumps(manifest_for(cfg, report, observations).as_dict(), indent=2, sort_keys=True) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    suites = args.suite or ["all"]
    suites = [s for group in suites for s in group.split(",")]
    cfg = _config_from(args, suites)
    report = run_suites(cfg)
    _emit(_report_text(cfg, report), cfg.output_path)
    n_fail = sum(1 for e in report if not e.passed)
    log.info("verify: %d entries, %d failed", len(report), n_fail)
    return 0 if n_fail == 0 else 1


def cmd_kernel_table(args: argparse.Namespace) -> int:
    if not 0.0 < args.x_lo <= args.x_hi:
        raise ConfigError("kernel-table needs 0 < x_lo <= x_hi")
    if args.steps < 1:
        raise ConfigError("kernel-table needs steps >= 1")
    cs = kn.ContourSpec(t_max=args.contour_tmax, h=args.contour_step)
    xs = (
        np.geomspace(args.x_lo, args.x_hi, args.steps)
        if args.steps > 1
        else np.array([args.x_lo])
    )
    lines = ["x,k_series,k_contour,abs_diff"]
    for x in xs:
        x = float(x)
        a = kn.k_series(x).value
        b = kn.k_contour(x, cs).value
        lines.append(f"{x!r},{a!r},{b!r},{abs(a-b)!r}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_zeros(args: argparse.Namespace) -> int:
    if not 0.0 < args.t_lo < args.t_hi <= 100.0:
        raise ConfigError("zeros needs 0 < t_lo < t_hi <= 100")
    for t in sf.critical_zero_scan(args.t_lo, args.t_hi, args.step):
        print(f"{t:.8f}")
    return 0


def cmd_salem(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    p = sl.SalemParams(cfg.sigma, cfg.m)
    report = VerificationReport()
    report.add(sl.factorization_check(cfg.test_function(), p, cfg.grid()))

    grid = cfg.grid() or sl.factorization_grid(p.sigma, cfg.f_kind)
    fg = cfg.test_function().materialize(grid)
    ibar = sl.modulate(sl.I_sigma(fg, p), p.m)
    pair = sl.titchmarsh_pair_check(ibar)
    null = sl.halfline_null_check(ibar, cutoff=-p.m)
    observations = {
        "salem_residual": sl.salem_residual(cfg.test_function(), p, grid),
        "titchmarsh_pair_residual": pair.measured,
        "halfline_null_ratio_at_minus_m": null.measured,
        "note": (
            "pair/null figures for the modulated convolution are recorded "
            "without a pass judgement; both one-sided conditions together "
            "constrain the input spectrum only in the limit the surrounding "
            "theory describes"
        ),
    }
    _emit(_report_text(cfg, report, observations), cfg.output_path)
    return 0 if report.all_passed else 1


def cmd_growth(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    grid = cfg.grid() or sl.SINC_SUITE_GRID
    h = sl.make_modulated_sinc(grid, cfg.a)
    ys = sl.GROWTH_YS
    slope = sl.growth_rate(h, ys)
    expected = 2.0 * (cfg.a + 1.0)
    rows = [(y, sl.weighted_l2_spectrum(h, y)) for y in ys]
    if cfg.format == "csv":
        lines = ["y,log_weighted_l2"]
        for y, v in rows:
            lines.append(f"{y!r},{math.log(v)!r}")
        lines.append(f"# fitted_slope,{slope!r}")
        lines.append(f"# expected_slope,{expected!r}")
        _emit("\n".join(lines) + "\n", cfg.output_path)
    else:
        payload = {
            "schema": 1,
            "tool_version": __version__,
            "a": cfg.a,
            "m": cfg.m,
            "table": [{"y": y, "log_weighted_l2": math.log(v)} for y, v in rows],
            "fitted_slope": slope,
            "expected_slope": expected,
            "relative_error": abs(slope - expected) / expected,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", cfg.output_path)
    return 0 if abs(slope - expected) / expected <= 0.02 else 1


def cmd_paley(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    report = VerificationReport()
    cw = pw.cauchy_weight_integral(cfg.epsilon)
    report.add(
        VerificationEntry(
            f"paley.cauchy_weight:eps={cfg.epsilon:g}",
            abs(cw.numeric - cw.closed_form),
            1e-8,
            f"numeric {cw.numeric!r} vs closed form pi/sin(eps pi/2) = {cw.closed_form!r}",
        )
    )
    report.add(pw.decay_sufficiency_check(cfg.epsilon, cfg.c))
    p = sl.SalemParams(cfg.sigma, cfg.m)
    f1 = pw.build_f1(cfg.test_function(), p, cfg.grid())
    f2 = pw.default_window(p.m, f1.samples.grid)
    report.add(pw.product_transform_check(f1, f2, (-2.0, 0.0, 2.0)))
    observations = {
        "log_integral_value": cfg.c * cw.numeric,
        "f1_lower_tail_ratio": f1.lower_tail_ratio,
        "window_note": (
            "window vanishes outside [-m, m]; the one-sided constraint only "
            "requires vanishing beyond +m, the narrower support keeps the "
            "product integral on the interval the identity uses"
        ),
        "two_sided_weight_note": (
            "the two-sided Cauchy-weight integral equals pi/sin(eps pi/2); "
            "the eps = 1 arctangent value pi pins the constant"
        ),
    }
    _emit(_report_text(cfg, report, observations), cfg.output_path)
    return 0 if report.all_passed else 1


_COMMANDS = {
    "verify": cmd_verify,
    "kernel-table": cmd_kernel_table,
    "zeros": cmd_zeros,
    "salem": cmd_salem,
    "growth": cmd_growth,
    "paley": cmd_paley,
}


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        log.error("configuration error: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SalemkitError as exc:
        log.error("numerical failure: %s", exc)
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
