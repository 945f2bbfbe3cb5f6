"""Command-line front end.

    einstein-type verify    --case IV --a 1 --c1 1 --beta 1 --mu 1 --grid 0.1:5:100
    einstein-type classify  --beta 1 --mu 1
    einstein-type integrate --c -1 --init 0,1,0 --grid 0.1:10:200
    einstein-type sweep     --case IV --quantity key4 --sweep-param c --sweep-range=-2:-0.1:20
    einstein-type table     --dim 4

Settings may also come from a flat ``key = value`` file given with
``--config``; command-line flags win.  Exit status: 0 pass, 1 identity
failure, 2 configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
import time
from dataclasses import asdict, dataclass, field, replace
from typing import Optional

import numpy as np

from . import __version__
from .cases import (CaseTag, TheoremCase, build_model, case_potential, classify, closed_form_potential,
                    linear_warping_potential, model_flags)
from .errors import EinsteinTypeError, NoModelError, StiffnessError, UnsupportedChartError
from .geometry import StencilConfig, curvature
from .ode import integrate_soliton_ode
from .records import floats, potential_from_record, read_record
from .soliton import (ReducedParams, ResidualReport, einstein_type_residual, identity_reports,
                      key1_residual, key2_residual_components, key3_residual, key4_residual,
                      lambda_recovery)
from .suite import spline_suite
from .table import lookup, soliton_type_table
from .warped import (FiberSpec, WarpedMetric, WarpingProfile, default_chart, patch_point, ricci_fiber,
                     ricci_radial, scalar_and_derivative, to_patch)

SCHEMA_VERSION = 1
EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
COMMANDS = ("verify", "classify", "integrate", "sweep", "table")
SWEEP_QUANTITIES = ("einstein_radial", "einstein_fiber", "key1", "key2_rr", "key2_fiber", "key3",
                    "key4", "scalar", "lambda")
CASE_ALIASES = {"I": CaseTag.I, "II-A": CaseTag.II_A, "IIA": CaseTag.II_A, "II-B": CaseTag.II_B,
                "IIB": CaseTag.II_B, "III": CaseTag.III, "IV": CaseTag.IV}
CASE_NAMES = {CaseTag.I: "I", CaseTag.II_A: "II-A", CaseTag.II_B: "II-B", CaseTag.III: "III",
              CaseTag.IV: "IV"}


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str = "verify"
    dim: int = 4
    beta: Optional[float] = None
    mu: Optional[float] = None
    rho: float = 0.0
    soliton: Optional[str] = None
    case: Optional[str] = None
    a: float = 1.0
    b: float = 0.0
    c1: float = 1.0
    c: Optional[float] = None
    convention: str = "quadratic"
    fiber: str = "sphere"
    grid: tuple = (0.1, 5.0, 100)
    tol_algebraic: float = 1e-10
    tol_spline: float = 1e-6
    tol_fd: float = 1e-4
    format: Optional[str] = None
    out: Optional[str] = None
    potential_file: Optional[str] = None
    init: Optional[tuple] = None
    rtol: float = 1e-10
    atol: float = 1e-12
    quantity: str = "key4"
    sweep_param: Optional[str] = None
    sweep_range: Optional[tuple] = None
    suite: int = 0
    seed: int = 0
    k: Optional[float] = None

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        start, stop, count = self.grid
        if count < 2:
            raise ConfigError("grid count must be >= 2")
        if not start > 0:
            raise ConfigError("grid start must be > 0")
        if not stop > start:
            raise ConfigError("grid stop must exceed start")
        for name in ("tol_algebraic", "tol_spline", "tol_fd", "rtol", "atol"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive")
        if self.format is None:
            self.format = "json" if self.command == "verify" else "csv"
        if self.format not in ("csv", "json"):
            raise ConfigError("format must be csv or json")
        if self.dim < 3:
            raise ConfigError("dimension must be >= 3")
        if self.quantity not in SWEEP_QUANTITIES:
            raise ConfigError(f"unknown residual {self.quantity!r}; choose from {', '.join(SWEEP_QUANTITIES)}")
        return self

    def grid_points(self) -> np.ndarray:
        start, stop, count = self.grid
        return np.linspace(start, stop, int(count))

    def reduced_c(self) -> Optional[float]:
        if self.c is not None:
            return float(self.c)
        if self.beta is not None and self.mu is not None and self.beta != 0:
            return -self.mu / self.beta + 0.0
        return None

    def echo(self) -> dict:
        d = asdict(self)
        for key in ("grid", "init", "sweep_range"):
            if d[key] is not None:
                d[key] = list(d[key])
        return d


# parsing ---------------------------------------------------------------------

def _grid(text) -> tuple:
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be start:stop:count, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"bad grid {text!r}: {exc}") from None


def _triple(text) -> tuple:
    vals = floats(str(text))
    if len(vals) != 3:
        raise ConfigError(f"expected three comma-separated numbers, got {text!r}")
    return tuple(vals)


_CONVERTERS = {
    "dim": int, "beta": float, "mu": float, "rho": float, "a": float, "b": float, "c1": float,
    "c": float, "tol_algebraic": float, "tol_spline": float, "tol_fd": float, "rtol": float,
    "atol": float, "suite": int, "seed": int, "k": float, "grid": _grid, "sweep_range": _grid,
    "init": _triple,
}


def _coerce(key, value):
    conv = _CONVERTERS.get(key)
    if conv is None:
        return value
    try:
        return conv(value)
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad value for {key}: {value!r} ({exc})") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="einstein-type",
                                     description="Verify gradient Einstein-type structures with alpha = 0.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    S = argparse.SUPPRESS
    parser.add_argument("--config", default=None, help="flat key = value file; flags override it")
    for flag in ("case", "soliton", "convention", "fiber", "out", "potential-file", "quantity",
                 "sweep-param"):
        parser.add_argument(f"--{flag}", default=S)
    for flag in ("beta", "mu", "rho", "a", "b", "c1", "c", "dim", "tol-algebraic", "tol-spline",
                 "tol-fd", "rtol", "atol", "suite", "seed", "k", "grid", "sweep-range", "init"):
        parser.add_argument(f"--{flag}", default=S, metavar="VALUE")
    parser.add_argument("--format", choices=("csv", "json"), default=S)
    return parser


def load_config(argv) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    values = {}
    config_path = args.pop("config", None)
    if config_path:
        try:
            file_values = read_record(config_path)
        except OSError as exc:
            raise ConfigError(f"cannot read config {config_path}: {exc}") from None
        except ValueError as exc:
            raise ConfigError(f"bad config {config_path}: {exc}") from None
        known = {f.replace("-", "_") for f in RunConfig.__dataclass_fields__}
        for key, value in file_values.items():
            key = key.replace("-", "_")
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            values[key] = value
    values.update({k.replace("-", "_"): v for k, v in args.items()})
    values = {k: _coerce(k, v) for k, v in values.items()}
    if values.get("soliton"):
        # the named soliton type fills beta, mu, rho unless given explicitly
        try:
            entry = lookup(values["soliton"], values.get("dim", 4), values.get("k"))
        except (KeyError, EinsteinTypeError) as exc:
            raise ConfigError(str(exc).strip("'\"")) from None
        for key, val in zip(("beta", "mu", "rho"), entry.parameters[1:]):
            values.setdefault(key, val)
    cfg = RunConfig(**values)
    return cfg.validate()


# helpers ---------------------------------------------------------------------

def write_atomic(path, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(cfg: RunConfig, text: str):
    if cfg.out:
        write_atomic(cfg.out, text)
    else:
        sys.stdout.write(text)


def _case_from_config(cfg: RunConfig) -> TheoremCase:
    if cfg.case is None:
        raise ConfigError("no --case given")
    key = cfg.case.strip().upper()
    tag = CASE_ALIASES.get(key)
    if tag is None:
        try:
            tag = CaseTag(cfg.case)
        except ValueError:
            raise ConfigError(f"unknown case {cfg.case!r}; use I, II-A, II-B, III or IV") from None
    if not tag.constructive:
        return TheoremCase(tag)
    c = 0.0
    if tag is CaseTag.IV:
        c = cfg.reduced_c()
        if c is None:
            raise ConfigError("case IV needs --c or --beta/--mu")
    return TheoremCase(tag, a=cfg.a, b=cfg.b, c1=cfg.c1, c=c, convention=cfg.convention)


def _fmt(x) -> str:
    return f"{x:.17g}"


def _sci(x) -> str:
    return f"{x:.6e}"


@dataclass
class ReportEnvelope:
    config: dict
    reports: list = field(default_factory=list)
    verdicts: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)
    rows: list = field(default_factory=list, repr=False)
    version: str = __version__
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "schema_version": self.schema_version,
            "config": self.config,
            "reports": [r.to_dict() for r in self.reports],
            "verdicts": self.verdicts,
            "timing": self.timing,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity", "r", "residual", "tolerance", "pass"])
        for rep in self.reports:
            for r, v in zip(rep.grid, rep.residuals):
                w.writerow([rep.identity, _fmt(r), _sci(v), _sci(rep.tolerance),
                            "true" if abs(v) <= rep.tolerance else "false"])
        return buf.getvalue()


def _cross_oracle_report(W: WarpedMetric, grid, tol: float, flags) -> Optional[ResidualReport]:
    """Finite-difference curvature of the coordinate patch against the closed forms."""
    try:
        chart = default_chart(W.fiber)
    except UnsupportedChartError:
        return None
    patch = to_patch(W, chart)
    stencil = StencilConfig()
    lo, hi = W.interval
    usable = [r for r in grid if r - lo >= max(0.5, patch.margin) and hi - r >= patch.margin]
    if not usable:
        return None
    pick = [usable[i] for i in np.unique(np.linspace(0, len(usable) - 1, 5).astype(int))]
    res = []
    for r in pick:
        pack = curvature(patch, patch_point(W, r, chart), stencil)
        R, _ = scalar_and_derivative(W, r)
        res.append(max(abs(pack.scalar - R), abs(pack.ricci[0, 0] - ricci_radial(W, r)),
                       abs(pack.ricci[1, 1] / pack.metric[1, 1] - ricci_fiber(W, r))))
    return ResidualReport.from_samples("cross_oracle_curvature", pick, res, tol, dict(flags, chart=chart))


# commands --------------------------------------------------------------------

def run_verify(cfg: RunConfig) -> ReportEnvelope:
    t0 = time.perf_counter()
    env = ReportEnvelope(config=cfg.echo())
    grid = cfg.grid_points()
    if cfg.potential_file:
        try:
            F = potential_from_record(read_record(cfg.potential_file))
        except OSError as exc:
            raise ConfigError(f"cannot read potential file: {exc}") from None
        except (KeyError, ValueError) as exc:
            raise ConfigError(f"bad potential file: {exc}") from None
        c = cfg.reduced_c() or 0.0
        lo, hi = F.interval
        if grid[0] < lo or grid[-1] > hi:
            raise ConfigError(f"grid [{grid[0]}, {grid[-1]}] leaves the potential interval [{lo}, {hi}]")
        W = WarpedMetric(WarpingProfile.from_potential(F, c), FiberSpec.sphere(cfg.dim - 1))
        flags = {"source": "potential-file", "c": c}
        env.reports.extend(identity_reports(W, F, c, grid, tol_algebraic=cfg.tol_algebraic,
                                            tol_identity=cfg.tol_spline, flags=flags))
    else:
        case = _case_from_config(cfg)
        if not case.tag.constructive:
            raise NoModelError(
                f"case {CASE_NAMES[case.tag]}: no non-trivial Einstein-type manifold "
                f"(classification case {CASE_NAMES[case.tag]})")
        interval = (min(1e-2, grid[0]), max(10.0, grid[-1]))
        W, F = build_model(case, cfg.dim, interval, cfg.fiber)
        flags = {"case": case.tag.value, "c": case.c}
        flags.update(model_flags(case))
        env.reports.extend(identity_reports(W, F, case.c, grid, tol_algebraic=cfg.tol_algebraic, flags=flags))
        if cfg.beta:
            rp = ReducedParams(case.c, cfg.beta)
            lam = [lambda_recovery(rp, cfg.rho, W, F, r) for r in grid]
            env.verdicts["lambda_range"] = [min(lam), max(lam)]
    cross = _cross_oracle_report(W, grid, cfg.tol_fd, flags)
    if cross is not None:
        env.reports.append(cross)
    if cfg.beta is not None and cfg.mu is not None and (cfg.beta, cfg.mu) != (0, 0):
        env.verdicts["classify"] = sorted(t.value for t in classify(cfg.beta, cfg.mu))
    env.timing = {"seconds": round(time.perf_counter() - t0, 6)}
    return env


_CLASSIFY_TEXT = {
    CaseTag.I: "Case I: trivial only",
    CaseTag.III: "Case III: no non-trivial model",
    CaseTag.IV: "Case IV: rotationally symmetric model",
}


def run_classify(beta: float, mu: float):
    """Return (verdict text, machine record)."""
    tags = classify(beta, mu)
    c = None if beta == 0 else -mu / beta + 0.0
    if tags == {CaseTag.II_A, CaseTag.II_B}:
        text = "Case II: cylinder (A) or complex Euclidean (B)"
    else:
        (tag,) = tags
        text = _CLASSIFY_TEXT[tag]
    if c is not None:
        text += f", c={c:g}"
    available = any(t.constructive for t in tags)
    record = {"beta": beta, "mu": mu, "cases": sorted(t.value for t in tags), "c": c,
              "model_available": available}
    return text, record


def run_integrate(cfg: RunConfig):
    """Integrate the ODE and tabulate (r, F, F', F'', delta against a closed form)."""
    grid = cfg.grid_points()
    start, stop = float(grid[0]), float(grid[-1])
    case = None
    if cfg.case is not None:
        case = _case_from_config(cfg)
        if case.tag is not CaseTag.IV and cfg.c is None:
            cfg = replace(cfg, c=0.0)
    c = cfg.reduced_c() if case is None or case.tag is not CaseTag.IV else case.c
    if c is None:
        raise ConfigError("integrate needs --c (or --beta/--mu)")
    init = cfg.init
    if init is None:
        if case is None or not case.tag.constructive:
            raise ConfigError("integrate needs --init F,F',F'' or a constructive --case")
        init = closed_form_potential(case, start)[:3]
    result = integrate_soliton_ode(c, init, (start, stop), rtol=cfg.rtol, atol=cfg.atol)
    end = result.field.interval[1]
    if case is not None and case.tag.constructive:
        oracle = case_potential(case, (start, stop))
    else:
        try:
            oracle = linear_warping_potential(c, init, start, (start, end))
        except EinsteinTypeError:
            oracle = None
    rows = []
    for r in grid:
        if r > end:
            break
        F = result.field
        delta = abs(F(r) - oracle(r)) if oracle is not None else None
        rows.append((float(r), F(r), F(r, 1), F(r, 2), delta))
    return result, rows


def _integrate_output(cfg, result, rows) -> str:
    if cfg.format == "json":
        doc = {"version": __version__, "schema_version": SCHEMA_VERSION, "config": cfg.echo(),
               "domain_exit": result.domain_exit, "exit_r": result.exit_r,
               "samples": [dict(zip(("r", "F", "dF", "d2F", "delta"), row)) for row in rows]}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r", "F", "dF", "d2F", "delta"])
    for r, F, F1, F2, d in rows:
        w.writerow([_fmt(r), _fmt(F), _fmt(F1), _fmt(F2), "" if d is None else _sci(d)])
    return buf.getvalue()


def _quantity(name, W, F, c, r, beta=1.0, rho=0.0):
    if name == "einstein_radial":
        return einstein_type_residual(W, F, c, r)[0]
    if name == "einstein_fiber":
        return einstein_type_residual(W, F, c, r)[1]
    if name == "key1":
        return key1_residual(W, F, c, r)
    if name == "key2_rr":
        return key2_residual_components(W, F, c, r)[0]
    if name == "key2_fiber":
        return key2_residual_components(W, F, c, r)[1]
    if name == "key3":
        return key3_residual(W, F, c, r)
    if name == "key4":
        return key4_residual(F, c, r)
    if name == "scalar":
        return scalar_and_derivative(W, r)[0]
    if name == "lambda":
        return lambda_recovery(ReducedParams(c, beta), rho, W, F, r)
    raise ConfigError(f"unknown residual {name!r}")


SWEEP_COLUMNS = ["case", "a", "b", "c1", "c", "sample", "r", "quantity", "value"]


def run_sweep(cfg: RunConfig) -> ReportEnvelope:
    """Evaluate one quantity over (parameter grid x r grid).

    Residual quantities are checked against the algebraic tolerance for
    closed-form models and the spline tolerance for the random suite;
    ``scalar`` and ``lambda`` are reported without a pass criterion.
    """
    t0 = time.perf_counter()
    env = ReportEnvelope(config=cfg.echo())
    grid = cfg.grid_points()
    is_residual = cfg.quantity not in ("scalar", "lambda")
    beta = cfg.beta if cfg.beta else 1.0
    if cfg.suite:
        for i, (F, c) in enumerate(spline_suite(cfg.suite, cfg.seed)):
            W = WarpedMetric(WarpingProfile.from_potential(F, c), FiberSpec.sphere(cfg.dim - 1))
            r_grid = np.linspace(*F.interval, int(cfg.grid[2]))
            vals = [_quantity(cfg.quantity, W, F, c, r, beta, cfg.rho) for r in r_grid]
            env.rows.extend(("spline", "", "", "", c, i, r, cfg.quantity, v) for r, v in zip(r_grid, vals))
            tol = cfg.tol_spline if is_residual else float("inf")
            env.reports.append(ResidualReport.from_samples(f"{cfg.quantity}[sample={i}]", r_grid, vals, tol, {"c": c}))
    else:
        if cfg.sweep_param == "c" and cfg.sweep_range is not None and cfg.reduced_c() is None:
            cfg = replace(cfg, c=cfg.sweep_range[0])
        base = _case_from_config(cfg)
        if not base.tag.constructive:
            raise NoModelError(f"case {CASE_NAMES[base.tag]}: no non-trivial Einstein-type manifold")
        if cfg.sweep_param is None:
            values = [None]
        else:
            if cfg.sweep_param not in ("a", "b", "c1", "c"):
                raise ConfigError("sweep-param must be one of a, b, c1, c")
            if cfg.sweep_range is None:
                raise ConfigError("sweep-param needs --sweep-range start:stop:count")
            s0, s1, n = cfg.sweep_range
            values = np.linspace(s0, s1, int(n))
        interval = (min(1e-2, grid[0]), max(10.0, grid[-1]))
        for i, v in enumerate(values):
            case = base if v is None else replace(base, **{cfg.sweep_param: float(v)})
            W, F = build_model(case, cfg.dim, interval, cfg.fiber)
            vals = [_quantity(cfg.quantity, W, F, case.c, r, beta, cfg.rho) for r in grid]
            env.rows.extend((CASE_NAMES[case.tag], case.a, case.b, case.c1, case.c, i, r, cfg.quantity, x)
                            for r, x in zip(grid, vals))
            tol = cfg.tol_algebraic if is_residual else float("inf")
            label = cfg.quantity if v is None else f"{cfg.quantity}[{cfg.sweep_param}={float(v):.17g}]"
            env.reports.append(ResidualReport.from_samples(label, grid, vals, tol, {"case": case.tag.value}))
    env.timing = {"seconds": round(time.perf_counter() - t0, 6)}
    return env


def _sweep_csv(env) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for case, a, b, c1, c, i, r, q, v in env.rows:
        w.writerow([case] + ["" if x == "" else _fmt(x) for x in (a, b, c1, c)] + [i, _fmt(r), q, _sci(v)])
    return buf.getvalue()


def run_table(cfg: RunConfig) -> str:
    entries = soliton_type_table(cfg.dim, cfg.k)
    if cfg.format == "json":
        return json.dumps([e.to_record() for e in entries], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "alpha", "beta", "mu", "rho", "lambda", "expression"])
    for e in entries:
        w.writerow([e.name] + ["" if x is None else _fmt(x) for x in e.parameters]
                   + [e.lambda_semantics, e.expression])
    return buf.getvalue()


def main(argv=None) -> int:
    try:
        cfg = load_config(argv)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if cfg.command == "verify":
            env = run_verify(cfg)
            emit(cfg, env.to_json() if cfg.format == "json" else env.to_csv())
            for rep in env.reports:
                if not rep.passed:
                    print(f"FAIL {rep.identity}: max |residual| {rep.max_abs:.3e} > {rep.tolerance:.1e}",
                          file=sys.stderr)
            return EXIT_PASS if env.passed else EXIT_FAIL
        if cfg.command == "classify":
            if cfg.beta is None or cfg.mu is None:
                raise ConfigError("classify needs --beta and --mu")
            text, record = run_classify(cfg.beta, cfg.mu)
            print(text)
            if cfg.out:
                if cfg.format == "json":
                    write_atomic(cfg.out, json.dumps(record, indent=2) + "\n")
                else:
                    header = ["beta", "mu", "cases", "c", "model_available"]
                    row = [_fmt(cfg.beta), _fmt(cfg.mu), ";".join(record["cases"]),
                           "" if record["c"] is None else _fmt(record["c"]), str(record["model_available"]).lower()]
                    write_atomic(cfg.out, ",".join(header) + "\n" + ",".join(row) + "\n")
            return EXIT_PASS
        if cfg.command == "integrate":
            try:
                result, rows = run_integrate(cfg)
            except StiffnessError as exc:
                print(f"integration failed: {exc} (last good r={exc.last_r})", file=sys.stderr)
                return EXIT_FAIL
            emit(cfg, _integrate_output(cfg, result, rows))
            if result.domain_exit:
                print(f"domain exit: F' reached 0 at r={result.exit_r:.17g}", file=sys.stderr)
            return EXIT_PASS
        if cfg.command == "sweep":
            env = run_sweep(cfg)
            emit(cfg, env.to_json() if cfg.format == "json" else _sweep_csv(env))
            return EXIT_PASS if env.passed else EXIT_FAIL
        emit(cfg, run_table(cfg))
        return EXIT_PASS
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NoModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (EinsteinTypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
