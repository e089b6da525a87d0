"""Declarative parameter sweeps, figure presets, and CSV persistence.

A SweepSpec names a target curve family, the axis (or axes) to sample,
and the fixed parameters.  ``run_sweep`` validates the spec (reporting
every violation at once), evaluates the rows through a work queue whose
worker count comes from the LVBEC_WORKERS environment variable unless
overridden, and assembles a CurveTable whose numeric payload is identical
for any worker count.

Targets:

    dispersion-curve   axis g; fixed R, A_values.  Columns: g, f_LI (the
                       undeformed sound cone, 1), f_R0 (contact curve
                       sqrt(1+g^2/4)), one f_A<x> column per A.
    rate-vs-beta       axis beta; fixed omega_tilde, R, A_values, and
                       optional quadrature controls.  Per A: rate, error
                       estimate, support measure.
    beta_c-vs-A        axis A; fixed R.  Columns A, f_c, g_at_min, beta_c.
    critical-A         axis R; fixed optional tol.  Columns R, A_c.
    custom-grid        cartesian product of axes over {A, R, beta,
                       omega_tilde}; remaining names fixed.  Reports f_c,
                       beta_c and, when a detector is determined, the rate.

The three presets reproduce the library's reference figures: the
dispersion-factor family (preset_fig1), the rate-versus-rapidity family at
a fixed gap (preset_fig2), and the critical rapidity versus A
(preset_fig3).
"""

from __future__ import annotations

import configparser
import hashlib
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .dispersion import MediumParams, R_DDI, f_squared
from .errors import NoInstabilityError, SweepValidationError, UnstableSpectrumError
from .rate import (DetectorConfig, QuadratureSettings, transition_rate,
                   transition_rate_low_speed)
from .spectrum import critical_A, critical_rapidity, min_f
from .tables import CurveTable

__all__ = [
    "AxisSpec",
    "SweepSpec",
    "preset_fig1",
    "preset_fig2",
    "preset_fig3",
    "run_sweep",
    "parse_config",
    "validate_preset_table",
    "PRESET_NAMES",
]

TARGETS = ("dispersion-curve", "rate-vs-beta", "beta_c-vs-A", "critical-A", "custom-grid")

_FIXED_KEYS = {
    "dispersion-curve": {"required": {"R", "A_values"}, "optional": set()},
    "rate-vs-beta": {
        "required": {"omega_tilde", "R", "A_values"},
        "optional": {"rel_tol", "abs_tol", "max_refinements", "scan_points", "low_speed"},
    },
    "beta_c-vs-A": {"required": {"R"}, "optional": set()},
    "critical-A": {"required": set(), "optional": {"tol"}},
    "custom-grid": {
        "required": set(),
        "optional": {"A", "R", "beta", "omega_tilde",
                     "rel_tol", "abs_tol", "max_refinements", "scan_points"},
    },
}

_AXIS_NAMES_CUSTOM = ("A", "R", "beta", "omega_tilde")


@dataclass(frozen=True)
class AxisSpec:
    """One sampled axis: count points from start to stop, linear or log."""

    name: str
    start: float
    stop: float
    count: int
    scale: str = "linear"

    def values(self) -> np.ndarray:
        if self.count == 1:
            return np.asarray([self.start], dtype=float)
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepSpec:
    target: str
    axes: tuple[AxisSpec, ...]
    fixed: dict = field(default_factory=dict)
    output_path: str | None = None

    def validate(self) -> list[str]:
        """Return every violation found (empty list means valid)."""
        problems: list[str] = []
        if self.target not in TARGETS:
            problems.append(f"unknown target '{self.target}' (expected one of {', '.join(TARGETS)})")
            return problems

        seen = set()
        for ax in self.axes:
            if not ax.name:
                problems.append("axis with empty name")
            if ax.name in seen:
                problems.append(f"duplicate axis '{ax.name}'")
            seen.add(ax.name)
            if not isinstance(ax.count, int) or ax.count < 1:
                problems.append(f"axis '{ax.name}': count must be an integer >= 1, got {ax.count}")
            elif ax.count > 1 and not ax.start < ax.stop:
                problems.append(f"axis '{ax.name}': start must be < stop for count > 1")
            if ax.scale not in ("linear", "log"):
                problems.append(f"axis '{ax.name}': scale must be 'linear' or 'log', got '{ax.scale}'")
            elif ax.scale == "log" and ax.start <= 0:
                problems.append(f"axis '{ax.name}': log scale requires start > 0")
            if not (math.isfinite(ax.start) and math.isfinite(ax.stop)):
                problems.append(f"axis '{ax.name}': start/stop must be finite")

        keys = _FIXED_KEYS[self.target]
        allowed = keys["required"] | keys["optional"]
        for k in self.fixed:
            if k not in allowed:
                problems.append(f"fixed parameter '{k}' not allowed for target '{self.target}'")
        for k in keys["required"]:
            if k not in self.fixed:
                problems.append(f"target '{self.target}' requires fixed parameter '{k}'")

        expected_axes = {
            "dispersion-curve": ("g",),
            "rate-vs-beta": ("beta",),
            "beta_c-vs-A": ("A",),
            "critical-A": ("R",),
        }
        if self.target in expected_axes:
            names = tuple(ax.name for ax in self.axes)
            if names != expected_axes[self.target]:
                problems.append(
                    f"target '{self.target}' expects exactly the axis "
                    f"{expected_axes[self.target]}, got {names or '()'}"
                )
        else:  # custom-grid
            if not self.axes:
                problems.append("custom-grid needs at least one axis")
            for ax in self.axes:
                if ax.name not in _AXIS_NAMES_CUSTOM:
                    problems.append(
                        f"custom-grid axis '{ax.name}' not in {_AXIS_NAMES_CUSTOM}"
                    )
            determined = {ax.name for ax in self.axes} | set(self.fixed)
            for name in ("A", "R"):
                if name not in determined:
                    problems.append(f"custom-grid leaves '{name}' undetermined")

        problems.extend(self._check_fixed_domains())
        return problems

    def _check_fixed_domains(self) -> list[str]:
        problems = []
        fx = self.fixed
        if "R" in fx:
            r = fx["R"]
            if not (isinstance(r, (int, float)) and math.isfinite(r) and 0.0 <= r <= R_DDI * (1 + 1e-12)):
                problems.append(f"fixed R must be a number in [0, sqrt(pi/2)], got {r!r}")
        if "A" in fx and not (isinstance(fx["A"], (int, float)) and fx["A"] > 0):
            problems.append(f"fixed A must be positive, got {fx['A']!r}")
        if "A_values" in fx:
            vals = fx["A_values"]
            if not (isinstance(vals, (tuple, list)) and vals
                    and all(isinstance(a, (int, float)) and a > 0 for a in vals)):
                problems.append(f"A_values must be a nonempty list of positive numbers, got {vals!r}")
        if "omega_tilde" in fx and not (
                isinstance(fx["omega_tilde"], (int, float)) and math.isfinite(fx["omega_tilde"])):
            problems.append(f"omega_tilde must be a finite number, got {fx['omega_tilde']!r}")
        if "beta" in fx and not (isinstance(fx["beta"], (int, float)) and fx["beta"] >= 0):
            problems.append(f"beta must be >= 0, got {fx['beta']!r}")
        if "rel_tol" in fx and not (isinstance(fx["rel_tol"], float) and 0 < fx["rel_tol"] < 1):
            problems.append(f"rel_tol must be in (0, 1), got {fx['rel_tol']!r}")
        if "tol" in fx and not (isinstance(fx["tol"], float) and fx["tol"] > 0):
            problems.append(f"tol must be positive, got {fx['tol']!r}")
        for key in ("max_refinements", "scan_points"):
            if key in fx and not (isinstance(fx[key], int) and fx[key] >= 1):
                problems.append(f"{key} must be a positive integer, got {fx[key]!r}")
        if "low_speed" in fx and not isinstance(fx["low_speed"], bool):
            problems.append(f"low_speed must be a boolean, got {fx['low_speed']!r}")
        return problems

    def canonical_text(self) -> str:
        """Deterministic one-line rendering used for the spec hash."""
        axes = ";".join(
            f"{ax.name}:{ax.start!r}:{ax.stop!r}:{ax.count}:{ax.scale}" for ax in self.axes
        )
        fixed = ";".join(f"{k}={self.fixed[k]!r}" for k in sorted(self.fixed))
        return f"target={self.target}|axes={axes}|fixed={fixed}"

    def sha256(self) -> str:
        return hashlib.sha256(self.canonical_text().encode()).hexdigest()


def _fmt_a(a: float) -> str:
    a = float(a)
    return f"{a:.1f}" if a.is_integer() else f"{a:.10g}"


def _quad_from_fixed(fixed: dict) -> QuadratureSettings:
    kwargs = {}
    for key in ("rel_tol", "abs_tol", "max_refinements", "scan_points"):
        if key in fixed:
            kwargs[key] = fixed[key]
    return QuadratureSettings(**kwargs)


def _dispersion_plan(spec: SweepSpec):
    a_values = [float(a) for a in spec.fixed["A_values"]]
    r = float(spec.fixed["R"])
    columns = ["g", "f_LI", "f_R0"] + [f"f_A{_fmt_a(a)}" for a in a_values] + ["flag"]
    units = ["c0*k/M_star"] + ["dimensionless"] * (len(columns) - 2) + ["-"]
    media = [MediumParams(A=a, R=r) for a in a_values]

    def row(g: float):
        out = [g, 1.0, math.sqrt(1.0 + 0.25 * g * g)]
        flags = []
        for medium, a in zip(media, a_values):
            f2 = float(f_squared(g, medium))
            if f2 <= 0.0:
                out.append(math.nan)
                flags.append(f"A={_fmt_a(a)}:unstable")
            else:
                out.append(math.sqrt(f2))
        out.append(";".join(flags) or "ok")
        return tuple(out)

    gs = spec.axes[0].values()
    return columns, units, [(lambda g=float(g): row(g)) for g in gs]


def _rate_plan(spec: SweepSpec):
    fx = spec.fixed
    a_values = [float(a) for a in fx["A_values"]]
    r = float(fx["R"])
    omega_tilde = float(fx["omega_tilde"])
    low_speed = bool(fx.get("low_speed", False))
    settings = _quad_from_fixed(fx)
    media = [MediumParams(A=a, R=r) for a in a_values]

    columns = ["beta"]
    units = ["rapidity"]
    for a in a_values:
        tag = _fmt_a(a)
        columns += [f"rate_A{tag}", f"err_A{tag}", f"support_A{tag}"]
        units += ["rho0*M_star*g_minus^2*c0^2/(2*pi)^3", "same as rate", "dimensionless g"]
    columns.append("flag")
    units.append("-")

    op = transition_rate_low_speed if low_speed else transition_rate

    def row(beta: float):
        out = [beta]
        flags = []
        for medium, a in zip(media, a_values):
            try:
                res = op(DetectorConfig(omega_tilde=omega_tilde, beta=beta), medium, settings)
            except Exception as exc:
                out += [math.nan, math.nan, math.nan]
                flags.append(f"A={_fmt_a(a)}:error:{type(exc).__name__}")
                continue
            out += [res.value, res.abs_error_estimate, res.support.total_measure]
            if not res.converged:
                flags.append(f"A={_fmt_a(a)}:nonconverged")
            if res.grazing:
                flags.append(f"A={_fmt_a(a)}:grazing")
        out.append(";".join(flags) or "ok")
        return tuple(out)

    betas = spec.axes[0].values()
    return columns, units, [(lambda b=float(b): row(b)) for b in betas]


def _beta_c_plan(spec: SweepSpec):
    r = float(spec.fixed["R"])
    columns = ["A", "f_c", "g_at_min", "beta_c", "flag"]
    units = ["g0_eff*rho0/omega_z", "dimensionless", "c0*k/M_star", "rapidity", "-"]

    def row(a: float):
        medium = MediumParams(A=a, R=r)
        try:
            g_min, f_c = min_f(medium)
        except UnstableSpectrumError:
            return (a, math.nan, math.nan, math.nan, "unstable")
        except Exception as exc:
            return (a, math.nan, math.nan, math.nan, f"error:{type(exc).__name__}")
        beta_c = math.inf if f_c >= 1.0 - 1e-12 else math.atanh(f_c)
        return (a, f_c, g_min, beta_c, "ok")

    a_vals = spec.axes[0].values()
    return columns, units, [(lambda a=float(a): row(a)) for a in a_vals]


def _critical_a_plan(spec: SweepSpec):
    tol = float(spec.fixed.get("tol", 1e-4))
    columns = ["R", "A_c", "flag"]
    units = ["dimensionless", "g0_eff*rho0/omega_z", "-"]

    def row(r: float):
        try:
            return (r, critical_A(r, tol=tol), "ok")
        except NoInstabilityError:
            return (r, math.nan, "no-instability")
        except Exception as exc:
            return (r, math.nan, f"error:{type(exc).__name__}")

    r_vals = spec.axes[0].values()
    return columns, units, [(lambda r=float(r): row(r)) for r in r_vals]


def _custom_plan(spec: SweepSpec):
    fx = spec.fixed
    axis_names = [ax.name for ax in spec.axes]
    determined = set(axis_names) | set(fx)
    with_rate = "beta" in determined and "omega_tilde" in determined
    settings = _quad_from_fixed(fx)

    columns = list(axis_names) + ["f_c", "beta_c"]
    units = ["-"] * len(axis_names) + ["dimensionless", "rapidity"]
    if with_rate:
        columns += ["rate", "abs_error", "support_measure"]
        units += ["rho0*M_star*g_minus^2*c0^2/(2*pi)^3", "same as rate", "dimensionless g"]
    columns.append("flag")
    units.append("-")

    grids = [ax.values() for ax in spec.axes]
    mesh = [arr.ravel() for arr in np.meshgrid(*grids, indexing="ij")]

    def row(point: dict):
        vals = [point[name] for name in axis_names]
        params = {**fx, **point}
        try:
            medium = MediumParams(A=float(params["A"]), R=float(params["R"]))
            g_min, f_c = min_f(medium)
            beta_c = math.inf if f_c >= 1.0 - 1e-12 else math.atanh(f_c)
        except Exception as exc:
            pad = 3 if with_rate else 0
            return tuple(vals + [math.nan, math.nan] + [math.nan] * pad
                         + [f"error:{type(exc).__name__}"])
        out = vals + [f_c, beta_c]
        flags = []
        if with_rate:
            try:
                det = DetectorConfig(omega_tilde=float(params["omega_tilde"]),
                                     beta=float(params["beta"]))
                res = transition_rate(det, medium, settings)
                out += [res.value, res.abs_error_estimate, res.support.total_measure]
                if not res.converged:
                    flags.append("nonconverged")
                if res.grazing:
                    flags.append("grazing")
            except Exception as exc:
                out += [math.nan, math.nan, math.nan]
                flags.append(f"error:{type(exc).__name__}")
        out.append(";".join(flags) or "ok")
        return tuple(out)

    points = [
        {name: float(mesh[j][i]) for j, name in enumerate(axis_names)}
        for i in range(mesh[0].size)
    ]
    return columns, units, [(lambda p=p: row(p)) for p in points]


_PLANS = {
    "dispersion-curve": _dispersion_plan,
    "rate-vs-beta": _rate_plan,
    "beta_c-vs-A": _beta_c_plan,
    "critical-A": _critical_a_plan,
    "custom-grid": _custom_plan,
}


def _worker_count(workers: int | None) -> int:
    if workers is None:
        raw = os.environ.get("LVBEC_WORKERS", "1")
        try:
            workers = int(raw)
        except ValueError as exc:
            raise SweepValidationError([f"LVBEC_WORKERS must be an integer, got {raw!r}"]) from exc
    return max(1, workers)


def run_sweep(spec: SweepSpec, workers: int | None = None) -> CurveTable:
    """Execute a sweep; deterministic output for any worker count.

    Rows are independent tasks dispatched to a thread pool; aggregation
    preserves axis order.  Raises SweepValidationError (with the full list
    of problems) for invalid specs; I/O errors from output_path propagate.
    """
    problems = spec.validate()
    if problems:
        raise SweepValidationError(problems)
    columns, units, tasks = _PLANS[spec.target](spec)

    n_workers = _worker_count(workers)
    if n_workers == 1:
        rows = [task() for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            rows = list(pool.map(lambda task: task(), tasks))

    table = CurveTable(
        columns=tuple(columns),
        units=tuple(units),
        rows=rows,
        spec_sha256=spec.sha256(),
        provenance_extra={"target": spec.target},
    )
    if spec.output_path:
        table.write_csv(spec.output_path)
    return table


# ---------------------------------------------------------------------------
# presets

def preset_fig1() -> SweepSpec:
    """Dispersion-factor family on g in [0, 2]: sound cone, contact curve,
    and the dipole-dominated curves at A = 2.0, 3.0, 3.4454."""
    return SweepSpec(
        target="dispersion-curve",
        axes=(AxisSpec(name="g", start=0.0, stop=2.0, count=401),),
        fixed={"R": R_DDI, "A_values": (2.0, 3.0, 3.4454)},
    )


def preset_fig2(omega_tilde: float) -> SweepSpec:
    """Rate vs rapidity on beta in [0, 3] at a fixed positive gap, dipole
    dominance, A in {2.5, 3.0, 3.4}.

    The A legend is a documented choice for this library; the validated
    structure (zero plateau below beta_c, jump to the maximum, decay) is
    what matters.  Panels of interest use omega_tilde in {0.3, 0.1, 0.01}.
    """
    return SweepSpec(
        target="rate-vs-beta",
        axes=(AxisSpec(name="beta", start=0.0, stop=3.0, count=513),),
        fixed={"omega_tilde": float(omega_tilde), "R": R_DDI,
               "A_values": (2.5, 3.0, 3.4), "rel_tol": 1e-6},
    )


def preset_fig3() -> SweepSpec:
    """Critical rapidity beta_c(A) for dipole dominance, A in [2, 3.4454]."""
    return SweepSpec(
        target="beta_c-vs-A",
        axes=(AxisSpec(name="A", start=2.0, stop=3.4454, count=200),),
        fixed={"R": R_DDI},
    )


PRESET_NAMES = {
    "fig1": preset_fig1,
    "fig2a": lambda: preset_fig2(0.3),
    "fig2b": lambda: preset_fig2(0.1),
    "fig2c": lambda: preset_fig2(0.01),
    "fig3": preset_fig3,
}


# ---------------------------------------------------------------------------
# post-run shape validators

def _validate_fig1(table: CurveTable, spec: SweepSpec) -> list[str]:
    problems = []
    gs = np.asarray(table.column("g"), dtype=float)
    f_cols = [c for c in table.columns if c.startswith("f_")]
    row0 = table.rows[0]
    for name in f_cols:
        v = row0[table.columns.index(name)]
        if v != 1.0:
            problems.append(f"{name} at g=0 is {v!r}, expected 1.0")
    f_r0 = np.asarray(table.column("f_R0"), dtype=float)
    ref = np.sqrt(1.0 + 0.25 * gs * gs)
    if np.max(np.abs(f_r0 - ref)) > 1e-12:
        problems.append("f_R0 deviates from sqrt(1+g^2/4) by more than 1e-12")
    a_cols = [(float(c[3:]), c) for c in f_cols if c.startswith("f_A")]
    for a, name in a_cols:
        if a >= 2.5:
            vals = np.asarray(table.column(name), dtype=float)
            if not np.any(vals < 1.0):
                problems.append(f"{name} never dips below 1")
    if 0.9 in set(np.round(gs, 12)):
        i9 = int(np.argmin(np.abs(gs - 0.9)))
        dips = [(a, float(table.rows[i9][table.columns.index(name)]))
                for a, name in sorted(a_cols)]
        for (a1, v1), (a2, v2) in zip(dips, dips[1:]):
            if not v2 < v1:
                problems.append(
                    f"dip at g=0.9 not deepening with A: f(A={a2:g})={v2:.6g} "
                    f">= f(A={a1:g})={v1:.6g}")
    return problems


def _validate_fig2(table: CurveTable, spec: SweepSpec) -> list[str]:
    from .rate import excitation_window

    problems = []
    betas = np.asarray(table.column("beta"), dtype=float)
    omega_tilde = float(spec.fixed["omega_tilde"])
    r = float(spec.fixed["R"])
    for a in spec.fixed["A_values"]:
        medium = MediumParams(A=float(a), R=r)
        beta_c = critical_rapidity(medium)
        rates = np.asarray(table.column(f"rate_A{_fmt_a(a)}"), dtype=float)
        before = rates[betas <= beta_c - 1e-3]
        if before.size and np.any(before != 0.0):
            problems.append(f"A={a:g}: nonzero rate below beta_c - 1e-3")
        just_after = np.flatnonzero((betas > beta_c) & (betas <= beta_c + 5e-2))
        for i in just_after:
            if omega_tilde < excitation_window(float(betas[i]), medium) and not rates[i] > 0:
                problems.append(
                    f"A={a:g}: zero rate at beta={betas[i]:.4f} despite open window")
                break
        nz = np.flatnonzero(rates > 0)
        if nz.size:
            peak = int(np.argmax(rates))
            if peak not in nz[:3]:
                problems.append(
                    f"A={a:g}: maximum at beta={betas[peak]:.4f} is not among the "
                    "first nonzero samples")
            tail = np.flatnonzero(betas >= betas[peak] + 0.2)
            tail_rates = rates[tail]
            growing = np.flatnonzero(
                np.diff(tail_rates) > 1e-5 * np.abs(tail_rates[:-1]) + 1e-12)
            if growing.size:
                problems.append(f"A={a:g}: rate grows past the decay region")
        else:
            problems.append(f"A={a:g}: rate never becomes positive")
    return problems


def _validate_fig3(table: CurveTable, spec: SweepSpec) -> list[str]:
    problems = []
    beta_cs = np.asarray(table.column("beta_c"), dtype=float)
    if not np.all(np.isfinite(beta_cs)):
        problems.append("beta_c contains non-finite entries")
        return problems
    if np.any(np.diff(beta_cs) > 1e-12):
        problems.append("beta_c(A) is not monotone nonincreasing")
    if math.isclose(spec.axes[0].stop, 3.4454) and beta_cs[-1] > 1e-2:
        problems.append(f"beta_c at A=3.4454 is {beta_cs[-1]:.3g}, expected <= 1e-2")
    return problems


def validate_preset_table(spec: SweepSpec, table: CurveTable) -> list[str]:
    """Shape checks a preset's output must satisfy; empty list when clean."""
    if spec.target == "dispersion-curve":
        return _validate_fig1(table, spec)
    if spec.target == "rate-vs-beta":
        return _validate_fig2(table, spec)
    if spec.target == "beta_c-vs-A":
        return _validate_fig3(table, spec)
    return []


# ---------------------------------------------------------------------------
# config-file ingestion

_R_ALIASES = {"ddi": R_DDI, "contact": 0.0}


def parse_r_value(text: str) -> float:
    """Parse an R value, accepting the 'ddi' and 'contact' aliases."""
    key = text.strip().lower()
    if key in _R_ALIASES:
        return _R_ALIASES[key]
    return float(text)


_FIXED_PARSERS = {
    "omega_tilde": float,
    "A": float,
    "beta": float,
    "R": parse_r_value,
    "A_values": lambda s: tuple(float(tok) for tok in s.replace(",", " ").split()),
    "rel_tol": float,
    "abs_tol": float,
    "tol": float,
    "max_refinements": int,
    "scan_points": int,
    "low_speed": lambda s: s.strip().lower() in ("1", "true", "yes", "on"),
}


def parse_config(text_or_path) -> SweepSpec:
    """Parse the flat INI-style sweep config into a SweepSpec.

    Sections: [sweep] with 'target' and optional 'output'; one
    [axis.<name>] per axis with start/stop/count and optional scale; and
    [fixed] holding the fixed parameters.  Unknown sections or keys are
    errors; every violation is collected before raising.
    """
    parser = configparser.ConfigParser()
    text = text_or_path
    if not isinstance(text_or_path, str) or "\n" not in text_or_path:
        with open(text_or_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        parser.read_file(io.StringIO(text))
    except configparser.Error as exc:
        raise SweepValidationError([f"config parse error: {exc}"]) from exc

    problems: list[str] = []
    target = None
    output_path = None
    axes: list[AxisSpec] = []
    fixed: dict = {}

    for section in parser.sections():
        if section == "sweep":
            for key, val in parser.items(section):
                if key == "target":
                    target = val.strip()
                elif key == "output":
                    output_path = val.strip()
                else:
                    problems.append(f"[sweep] has unknown key '{key}'")
        elif section.startswith("axis."):
            name = section[len("axis."):]
            kwargs = {"name": name, "scale": "linear"}
            for key, val in parser.items(section):
                try:
                    if key in ("start", "stop"):
                        kwargs[key] = float(val)
                    elif key == "count":
                        kwargs[key] = int(val)
                    elif key == "scale":
                        kwargs[key] = val.strip()
                    else:
                        problems.append(f"[{section}] has unknown key '{key}'")
                except ValueError:
                    problems.append(f"[{section}] {key} = {val!r} is not a valid number")
            missing = {"start", "stop", "count"} - set(kwargs)
            if missing:
                problems.append(f"[{section}] missing {', '.join(sorted(missing))}")
            else:
                axes.append(AxisSpec(**kwargs))
        elif section == "fixed":
            for key, val in parser.items(section):
                if key not in _FIXED_PARSERS:
                    problems.append(f"[fixed] has unknown key '{key}'")
                    continue
                try:
                    fixed[key] = _FIXED_PARSERS[key](val)
                except ValueError:
                    problems.append(f"[fixed] {key} = {val!r} could not be parsed")
        else:
            problems.append(f"unknown section [{section}]")

    if target is None:
        problems.append("[sweep] section with a 'target' key is required")

    spec = SweepSpec(target=target or "", axes=tuple(axes), fixed=fixed,
                     output_path=output_path)
    problems.extend(spec.validate())
    if problems:
        raise SweepValidationError(problems)
    return spec
