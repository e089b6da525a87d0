"""Command-line front end.

Subcommands expose the library's operations on dimensionless inputs
(A, R, g, omega_tilde, beta), with ``units`` translating lab-frame
parameters and ``dispersion`` optionally accepting them directly.  The
dipolar ratio accepts the aliases 'ddi' (sqrt(pi/2)) and 'contact' (0).
Rapidity may be given as --beta or as --velocity v/c0 (converted through
arctanh); the two are mutually exclusive.

Output modes: 'human' (labelled lines), 'csv', and 'json-lines' (one JSON
object per line with stable keys).  All modes report identical numbers.

Exit codes: 0 success, 2 validation error, 3 unstable spectrum,
4 quadrature nonconvergence (best-effort result still printed).

The only environment variable consulted is LVBEC_WORKERS (sweep
parallelism); there is no other hidden configuration.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import replace

import numpy as np

from .dispersion import (MediumParams, PhysicalParams, R_DDI, derive_scales,
                         f_dimensionless, f_squared)
from .errors import DomainError, LvbecError, NoInstabilityError, \
    SweepValidationError, UnstableSpectrumError
from .rate import DetectorConfig, QuadratureSettings, excitation_window, \
    transition_rate, transition_rate_low_speed
from .spectrum import classify, critical_A, critical_rapidity, min_f
from .sweep import PRESET_NAMES, parse_config, parse_r_value, run_sweep, \
    validate_preset_table

__all__ = ["main"]

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_UNSTABLE = 3
EXIT_NONCONVERGED = 4


def _r_type(text: str) -> float:
    try:
        r = parse_r_value(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid R {text!r}: expected a number, 'ddi', or 'contact'")
    if not 0.0 <= r <= R_DDI * (1 + 1e-12):
        raise argparse.ArgumentTypeError(
            f"R = {r:g} outside [0, sqrt(pi/2) = {R_DDI:.6f}]")
    return r


class _Emitter:
    """Uniform record emission for the three output modes."""

    def __init__(self, mode: str):
        self.mode = mode

    def emit(self, record: dict) -> None:
        if self.mode == "json-lines":
            print(json.dumps(record, sort_keys=True, allow_nan=True))
        elif self.mode == "csv":
            print(",".join(record.keys()))
            print(",".join(_fmt(v) for v in record.values()))
        else:
            width = max(len(k) for k in record)
            for key, val in record.items():
                print(f"{key:<{width}}  {_fmt(val)}")

    def emit_rows(self, columns, rows) -> None:
        if self.mode == "json-lines":
            for row in rows:
                print(json.dumps(dict(zip(columns, row)), sort_keys=True, allow_nan=True))
        else:
            print(",".join(columns))
            for row in rows:
                print(",".join(_fmt(v) for v in row))


def _fmt(v) -> str:
    if isinstance(v, float):
        if math.isinf(v):
            return "unbounded" if v > 0 else "-unbounded"
        return repr(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _beta_from_args(args) -> float:
    if args.velocity is not None:
        if not 0.0 <= args.velocity < 1.0:
            raise DomainError(f"--velocity must be in [0, 1), got {args.velocity}")
        return math.atanh(args.velocity)
    return args.beta


def _medium_from_args(args) -> MediumParams:
    physical = [args.m, args.omega_z, args.rho0, args.gc, args.gd]
    if any(v is not None for v in physical):
        if any(v is None for v in physical):
            raise DomainError(
                "physical input needs all of --m, --omega-z, --rho0, --gc, --gd")
        phys = PhysicalParams(m=args.m, omega_z=args.omega_z, rho0=args.rho0,
                              g_c=args.gc, g_d=args.gd, omega=args.omega)
        return derive_scales(phys).medium
    if args.A is None or args.R is None:
        raise DomainError("need --A and --R (or the full physical parameter set)")
    return MediumParams(A=args.A, R=args.R)


def _add_medium_flags(sub, physical: bool = False):
    sub.add_argument("--A", type=float, help="effective chemical potential A")
    sub.add_argument("--R", type=_r_type,
                     help="dipolar ratio in [0, sqrt(pi/2)]; aliases: ddi, contact")
    if physical:
        grp = sub.add_argument_group("physical inputs (alternative to --A/--R)")
        grp.add_argument("--m", type=float, help="particle mass")
        grp.add_argument("--omega-z", dest="omega_z", type=float,
                         help="transverse trap frequency")
        grp.add_argument("--rho0", type=float, help="2D condensate density")
        grp.add_argument("--gc", type=float, help="contact coupling")
        grp.add_argument("--gd", type=float, help="dipolar coupling")
        grp.add_argument("--omega", type=float, help="radial trap frequency (advisory)")


def _add_beta_flags(sub):
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--beta", type=float, help="rapidity (velocity = c0*tanh(beta))")
    grp.add_argument("--velocity", type=float, help="velocity fraction v/c0 in [0, 1)")


def _cmd_dispersion(args, emitter) -> int:
    medium = _medium_from_args(args)
    if args.g is not None:
        gs = [args.g]
    else:
        start, stop, count = args.g_range
        gs = list(np.linspace(start, stop, int(count)))
    rows = []
    for g in gs:
        f2 = float(f_squared(g, medium))
        f = math.sqrt(f2) if f2 > 0 else math.nan
        rows.append((g, f, f2, g * f if f2 > 0 else math.nan,
                     "ok" if f2 > 0 else "unstable"))
    emitter.emit_rows(("g", "f", "f_squared", "omega_over_M_star", "flag"), rows)
    return EXIT_OK if all(r[-1] == "ok" for r in rows) else EXIT_UNSTABLE


def _cmd_stability(args, emitter) -> int:
    medium = _medium_from_args(args)
    features = classify(medium)
    emitter.emit({
        "A": medium.A,
        "R": medium.R,
        "classification": features.classification,
        "f_c": features.f_c,
        "g_at_min": features.g_at_min,
        "beta_c": features.beta_c,
    })
    return EXIT_OK


def _cmd_critical_a(args, emitter) -> int:
    a_c = critical_A(args.R, tol=args.tol)
    emitter.emit({"R": args.R, "A_c": a_c, "tol": args.tol})
    return EXIT_OK


def _cmd_critical_rapidity(args, emitter) -> int:
    medium = _medium_from_args(args)
    beta_c = critical_rapidity(medium)
    g_min, f_c = min_f(medium)
    emitter.emit({"A": medium.A, "R": medium.R, "f_c": f_c,
                  "g_at_min": g_min, "beta_c": beta_c})
    return EXIT_OK


def _cmd_window(args, emitter) -> int:
    medium = _medium_from_args(args)
    beta = _beta_from_args(args)
    w = excitation_window(beta, medium)
    emitter.emit({"A": medium.A, "R": medium.R, "beta": beta,
                  "excitation_window": w})
    return EXIT_OK


def _cmd_rate(args, emitter) -> int:
    medium = _medium_from_args(args)
    beta = _beta_from_args(args)
    # dimensional scales: explicit --scale-* flags win, otherwise derived
    # from the physical parameter set when that was the input route
    rho0, m_star, c0 = args.scale_rho0, args.scale_mstar, args.scale_c0
    if args.m is not None and args.rho0 is not None:
        phys = PhysicalParams(m=args.m, omega_z=args.omega_z, rho0=args.rho0,
                              g_c=args.gc, g_d=args.gd, omega=args.omega)
        scales = derive_scales(phys)
        rho0 = rho0 if rho0 is not None else phys.rho0
        m_star = m_star if m_star is not None else scales.M_star
        c0 = c0 if c0 is not None else scales.c0
    det = DetectorConfig(
        omega_tilde=args.omega_tilde, beta=beta,
        coupling_g_minus=args.g_minus, rho0=rho0,
        M_star=m_star, c0=c0,
    )
    settings = QuadratureSettings(
        rel_tol=args.rel_tol, max_refinements=args.max_refinements,
        scan_points=args.scan_points,
    )
    op = transition_rate_low_speed if args.low_speed else transition_rate
    res = op(det, medium, settings)
    record = {
        "A": medium.A,
        "R": medium.R,
        "omega_tilde": args.omega_tilde,
        "beta": beta,
        "rate": res.value,
        "abs_error_estimate": res.abs_error_estimate,
        "support_intervals": " ".join(
            f"[{iv.g_lo!r},{iv.g_hi!r}]" for iv in res.support.intervals) or "empty",
        "support_measure": res.support.total_measure,
        "converged": res.converged,
        "grazing": res.grazing,
    }
    if res.dimensional_value is not None:
        record["dimensional_rate"] = res.dimensional_value
    emitter.emit(record)
    return EXIT_OK if res.converged else EXIT_NONCONVERGED


def _cmd_units(args, emitter) -> int:
    phys = PhysicalParams(m=args.m, omega_z=args.omega_z, rho0=args.rho0,
                          g_c=args.gc, g_d=args.gd, omega=args.omega)
    scales = derive_scales(phys)
    emitter.emit({
        "A": scales.A,
        "R": scales.R,
        "g0_eff": scales.g0_eff,
        "d_z": scales.d_z,
        "c0": scales.c0,
        "M_star": scales.M_star,
        "omega_z_min": scales.omega_z_min,
        "trap_condition_ok": scales.trap_condition_ok,
    })
    if not scales.trap_condition_ok:
        print(
            f"warning: omega_z = {args.omega_z:g} is below the stability bound "
            f"{scales.omega_z_min:g}; the dipole-dominated spectrum may be unstable",
            file=sys.stderr,
        )
    return EXIT_OK


def _cmd_sweep(args, emitter) -> int:
    if args.preset:
        spec = PRESET_NAMES[args.preset]()
    else:
        spec = parse_config(args.config)
    if args.output:
        spec = replace(spec, output_path=args.output)
    table = run_sweep(spec, workers=args.workers)
    problems = validate_preset_table(spec, table)
    summary = {
        "target": spec.target,
        "rows": len(table.rows),
        "columns": len(table.columns),
        "output": spec.output_path or "-",
        "spec_sha256": spec.sha256(),
        "validation": "ok" if not problems else "; ".join(problems),
    }
    emitter.emit(summary)
    if spec.output_path is None and emitter.mode != "json-lines":
        print(table.to_csv(), end="")
    return EXIT_OK if not problems else EXIT_VALIDATION


def _g_range(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"expected START:STOP:COUNT, got {text!r}")
    return float(parts[0]), float(parts[1]), int(parts[2])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lvbec",
        description="Deformed Bogoliubov dispersion of a quasi-2D dipolar "
                    "condensate and the transition rate of a moving impurity "
                    "detector.",
    )
    parser.add_argument("--output-mode", choices=("human", "csv", "json-lines"),
                        default="human", help="output format (default: human)")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("dispersion", help="evaluate f(g), f^2(g), g*f(g)")
    _add_medium_flags(sub, physical=True)
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--g", type=float, help="dimensionless momentum c0*k/M_star")
    grp.add_argument("--g-range", type=_g_range, metavar="START:STOP:COUNT",
                     help="evenly spaced g values")
    sub.set_defaults(func=_cmd_dispersion)

    sub = subs.add_parser("stability", help="classify a medium's spectrum")
    _add_medium_flags(sub, physical=True)
    sub.set_defaults(func=_cmd_stability)

    sub = subs.add_parser("critical-a", help="stability boundary A_c(R)")
    sub.add_argument("--R", type=_r_type, required=True)
    sub.add_argument("--tol", type=float, default=1e-4,
                     help="bisection tolerance on A (default 1e-4)")
    sub.set_defaults(func=_cmd_critical_a)

    sub = subs.add_parser("critical-rapidity", help="beta_c = arctanh(inf f)")
    _add_medium_flags(sub, physical=True)
    sub.set_defaults(func=_cmd_critical_rapidity)

    sub = subs.add_parser("window", help="excitation window sup g*(tanh(beta)-f)")
    _add_medium_flags(sub, physical=True)
    _add_beta_flags(sub)
    sub.set_defaults(func=_cmd_window)

    sub = subs.add_parser("rate", help="detector transition rate")
    _add_medium_flags(sub, physical=True)
    _add_beta_flags(sub)
    sub.add_argument("--omega-tilde", dest="omega_tilde", type=float, required=True,
                     help="signed detector gap Omega/M_star")
    sub.add_argument("--low-speed", action="store_true",
                     help="use the beta << 1 variant (tanh(beta) -> beta)")
    sub.add_argument("--rel-tol", dest="rel_tol", type=float, default=1e-8,
                     help="quadrature relative tolerance (default 1e-8)")
    sub.add_argument("--max-refinements", dest="max_refinements", type=int, default=30,
                     help="quadrature subdivision budget (default 30)")
    sub.add_argument("--scan-points", dest="scan_points", type=int, default=8192,
                     help="support sign-scan grid size (default 8192)")
    sub.add_argument("--g-minus", dest="g_minus", type=float,
                     help="detector coupling for dimensional output")
    sub.add_argument("--scale-rho0", dest="scale_rho0", type=float,
                     help="condensate density for dimensional output")
    sub.add_argument("--scale-mstar", dest="scale_mstar", type=float,
                     help="M_star for dimensional output")
    sub.add_argument("--scale-c0", dest="scale_c0", type=float,
                     help="sound speed for dimensional output")
    sub.set_defaults(func=_cmd_rate)

    sub = subs.add_parser("units", help="derive (A, R) and scales from lab inputs")
    sub.add_argument("--m", type=float, required=True, help="particle mass")
    sub.add_argument("--omega-z", dest="omega_z", type=float, required=True,
                     help="transverse trap frequency")
    sub.add_argument("--rho0", type=float, required=True, help="2D density")
    sub.add_argument("--gc", type=float, required=True, help="contact coupling")
    sub.add_argument("--gd", type=float, required=True, help="dipolar coupling")
    sub.add_argument("--omega", type=float, help="radial trap frequency (advisory)")
    sub.set_defaults(func=_cmd_units)

    sub = subs.add_parser("sweep", help="run a preset or configured sweep to CSV")
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--preset", choices=sorted(PRESET_NAMES),
                     help="figure-reproduction preset")
    grp.add_argument("--config", help="path to a sweep config file")
    sub.add_argument("--output", help="CSV output path (overrides the config)")
    sub.add_argument("--workers", type=int, default=None,
                     help="worker threads (default: LVBEC_WORKERS or 1)")
    sub.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    emitter = _Emitter(args.output_mode)
    try:
        return args.func(args, emitter)
    except UnstableSpectrumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except (DomainError, NoInstabilityError, SweepValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except LvbecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
