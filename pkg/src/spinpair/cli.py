"""Command-line front end: single runs, parameter sweeps, scenario presets.

Configs are flat ``key = value`` text files (see CONFIG_KEYS); output is
CSV (header ``t,lqfi,lqu,log_negativity,purity``) or JSON, written with
>= 12 significant digits and Unix newlines so identical configs produce
byte-identical files.  Exit codes: 0 success, 2 config error, 3
numerical defect, 4 I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import (
    InvalidDensityMatrix,
    NotHermitian,
    NotPositiveSemidefinite,
    NumericalDefect,
    ParseError,
    SpinpairError,
    ValidationError,
)
from .evolution import TimeGrid, evolve, make_propagator, rk4_oracle
from .model import PARAM_FIELDS, ModelParams, build_hamiltonian, initial_state
from .quantifiers import CorrelationSample, LocalSide, sample

CSV_HEADER = "t,lqfi,lqu,log_negativity,purity"
DEFAULT_T_END = 8.0 * math.pi
DEFAULT_SAMPLES = 2001
DEFAULT_RK4_STEP = 1e-3
RK4_VALIDATION_THRESHOLD = 1e-6

#: Config keys, with the ModelParams field each scalar key feeds.
PARAM_KEYS = {
    "jx": "j_x",
    "jy": "j_y",
    "jz": "j_z",
    "dx": "d_x",
    "dy": "d_y",
    "bm": "b_uniform",
    "b_small": "b_inhomog",
    "gamma": "gamma",
}
CONFIG_KEYS = tuple(PARAM_KEYS) + (
    "t_start",
    "t_end",
    "samples",
    "lqfi_side",
    "lqu_side",
    "output",
    "format",
)


@dataclass(frozen=True)
class RunConfig:
    """Everything one simulation needs, plus where its output goes."""

    params: ModelParams
    grid: TimeGrid
    lqfi_side: LocalSide = LocalSide.QUBIT_B
    lqu_side: LocalSide = LocalSide.QUBIT_A
    output_path: str = "-"
    output_format: str = "csv"

    def __post_init__(self) -> None:
        if self.output_format not in ("csv", "json"):
            raise ValidationError(f"format must be csv or json, got {self.output_format!r}")


@dataclass(frozen=True)
class SweepSpec:
    """One-parameter scan over a base configuration.

    ``swept_parameter`` is a ModelParams field name, or several joined
    with '=' (e.g. ``d_x=d_y``) to set them jointly per value.
    """

    base: RunConfig
    swept_parameter: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        names = self.swept_parameter.split("=")
        for name in names:
            if name not in PARAM_FIELDS:
                raise ValidationError(f"unknown sweep parameter {name!r}")
        if len(set(names)) != len(names):
            raise ValidationError(f"repeated sweep parameter in {self.swept_parameter!r}")
        if len(self.values) < 1:
            raise ValidationError("sweep needs at least one value")
        for v in self.values:
            if not math.isfinite(v):
                raise ValidationError(f"sweep value {v!r} is not finite")


_DEFAULT_GRID = TimeGrid(t_start=0.0, t_end=DEFAULT_T_END, samples=DEFAULT_SAMPLES)

#: Bundled scenario presets (gamma = 0 rows are the decoherence-free runs).
PRESETS: dict[str, ModelParams] = {
    "fig1a": ModelParams(0.8, 0.8, 0.8, 0.0, 0.0, 0.3, 0.5, 0.0),
    "fig1b": ModelParams(0.8, 0.8, 0.8, 0.5, 0.0, 0.3, 0.5, 0.0),
    "fig1c": ModelParams(0.8, 0.8, 0.8, 0.5, 0.5, 0.3, 0.5, 0.0),
    "fig2a": ModelParams(1.0, 0.5, 1.5, 0.5, 0.5, 0.3, 0.5, 0.0),
    "fig2b": ModelParams(5.0, 1.0, 1.5, 0.5, 0.5, 0.3, 0.5, 0.0),
    "fig2c": ModelParams(0.8, 0.8, 0.8, 2.0, 2.0, 0.3, 0.5, 0.0),
    "fig3a": ModelParams(1.0, 0.5, 1.5, 0.5, 0.5, 2.0, 0.5, 0.0),
    "fig3b": ModelParams(1.0, 0.5, 1.5, 0.5, 0.5, 10.0, 0.5, 0.0),
    "fig4a": ModelParams(1.0, 0.5, 1.5, 0.5, 0.5, 0.3, 2.0, 0.0),
    "fig4b": ModelParams(1.0, 0.5, 1.5, 0.5, 0.5, 0.3, 10.0, 0.0),
    "fig5a": ModelParams(0.8, 0.8, 0.8, 0.0, 0.0, 0.3, 0.5, 0.05),
    "fig5b": ModelParams(0.8, 0.8, 0.8, 0.5, 0.5, 0.3, 0.5, 0.05),
    "fig5c": ModelParams(0.8, 0.8, 0.8, 2.0, 2.0, 0.3, 0.5, 0.05),
    "fig6b": ModelParams(1.0, 0.5, 1.5, 0.5, 0.5, 0.3, 0.5, 0.05),
    "fig6c": ModelParams(1.0, 0.5, 1.5, 2.0, 2.0, 0.3, 0.5, 0.05),
    "fig7a": ModelParams(1.0, 0.5, 1.5, 0.5, 0.5, 2.0, 0.5, 0.05),
    "fig7b": ModelParams(1.0, 0.5, 1.5, 0.5, 0.5, 0.3, 2.0, 0.05),
}
PRESET_IDS = tuple(PRESETS)


@dataclass(frozen=True)
class FigurePreset:
    """A preset id resolved into a runnable configuration."""

    id: str
    resolved: RunConfig


def figure_preset(preset_id: str) -> FigurePreset:
    """Resolve a preset id; default grid, sides and csv output apply."""
    try:
        params = PRESETS[preset_id]
    except KeyError:
        raise ValidationError(f"unknown preset id {preset_id!r}") from None
    return FigurePreset(id=preset_id, resolved=RunConfig(params=params, grid=_DEFAULT_GRID))


def parse_config(source: str) -> RunConfig:
    """Parse a flat key-value document into a validated RunConfig.

    Blank lines and '#' comments are ignored; every key is optional and
    unknown or repeated keys are rejected.
    """
    raw: dict[str, str] = {}
    for lineno, line in enumerate(source.splitlines(), start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise ParseError(f"line {lineno}: expected 'key = value', got {line.strip()!r}")
        key, _, value = text.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if key not in CONFIG_KEYS:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        if not value:
            raise ParseError(f"line {lineno}: key {key!r} has no value")
        raw[key] = value

    def as_float(key: str, default: float) -> float:
        if key not in raw:
            return default
        try:
            return float(raw[key])
        except ValueError:
            raise ParseError(f"key {key!r}: not a number: {raw[key]!r}") from None

    def as_int(key: str, default: int) -> int:
        if key not in raw:
            return default
        try:
            return int(raw[key])
        except ValueError:
            raise ParseError(f"key {key!r}: not an integer: {raw[key]!r}") from None

    def as_side(key: str, default: LocalSide) -> LocalSide:
        if key not in raw:
            return default
        token = raw[key].upper()
        if token not in ("A", "B"):
            raise ParseError(f"key {key!r}: side must be A or B, got {raw[key]!r}")
        return LocalSide(token)

    params = ModelParams(**{field: as_float(key, 0.0) for key, field in PARAM_KEYS.items()})
    grid = TimeGrid(
        t_start=as_float("t_start", 0.0),
        t_end=as_float("t_end", DEFAULT_T_END),
        samples=as_int("samples", DEFAULT_SAMPLES),
    )
    return RunConfig(
        params=params,
        grid=grid,
        lqfi_side=as_side("lqfi_side", LocalSide.QUBIT_B),
        lqu_side=as_side("lqu_side", LocalSide.QUBIT_A),
        output_path=raw.get("output", "-"),
        output_format=raw.get("format", "csv"),
    )


def run_simulation(cfg: RunConfig) -> list[CorrelationSample]:
    """Propagate |11><11| over the grid and quantify every sample."""
    h = build_hamiltonian(cfg.params)
    prop = make_propagator(h, cfg.params.gamma, initial_state())
    out = []
    for t in cfg.grid.times:
        t = float(t)
        try:
            state = evolve(prop, t)
            out.append(sample(state, t, lqfi_side=cfg.lqfi_side, lqu_side=cfg.lqu_side))
        except SpinpairError as exc:
            raise type(exc)(f"at t = {t:.9g}: {exc}") from exc
    return out


def run_sweep(spec: SweepSpec) -> list[tuple[float, CorrelationSample]]:
    """Run the base config once per sweep value, long-format rows."""
    names = spec.swept_parameter.split("=")
    rows: list[tuple[float, CorrelationSample]] = []
    for value in spec.values:
        params = dataclasses.replace(spec.base.params, **{n: value for n in names})
        cfg = dataclasses.replace(spec.base, params=params)
        rows.extend((value, s) for s in run_simulation(cfg))
    return rows


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _sample_fields(s: CorrelationSample) -> tuple[float, ...]:
    return (s.t, s.lqfi, s.lqu, s.log_negativity, s.purity)


def emit(rows, output_format: str, path: str, param: str | None = None) -> None:
    """Write samples as CSV or JSON to ``path`` ('-' means stdout).

    ``rows`` holds CorrelationSample values, or (value, sample) pairs
    when ``param`` names a swept parameter; sweeps gain leading
    ``param,value`` columns / record fields.
    """
    if output_format == "csv":
        lines = [f"param,value,{CSV_HEADER}" if param is not None else CSV_HEADER]
        for row in rows:
            if param is not None:
                value, s = row
                lines.append(",".join([param, _fmt(value)] + [_fmt(x) for x in _sample_fields(s)]))
            else:
                lines.append(",".join(_fmt(x) for x in _sample_fields(row)))
        text = "\n".join(lines) + "\n"
    elif output_format == "json":
        records = []
        for row in rows:
            record: dict[str, float | str] = {}
            if param is not None:
                value, s = row
                record["param"] = param
                record["value"] = value
            else:
                s = row
            record.update(
                t=s.t,
                lqfi=s.lqfi,
                lqu=s.lqu,
                log_negativity=s.log_negativity,
                purity=s.purity,
            )
            records.append(record)
        text = json.dumps(records, indent=2) + "\n"
    else:
        raise ValidationError(f"format must be csv or json, got {output_format!r}")
    if path in ("-", ""):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of cross-checking the closed form against RK4."""

    max_deviation: float
    threshold: float
    substeps: int
    step: float
    passed: bool

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"closed form vs RK4: max elementwise deviation {self.max_deviation:.6e} "
            f"(threshold {self.threshold:.0e}, step {self.step:.6g}, "
            f"substeps/interval {self.substeps}): {status}"
        )


def validate_command(cfg: RunConfig, substeps: int) -> ValidationReport:
    """Integrate cfg with RK4 and report the deviation from the closed form.

    Both trajectories start from |11><11| at grid.t_start and are
    compared at equal elapsed times.
    """
    h = build_hamiltonian(cfg.params)
    m0 = initial_state()
    prop = make_propagator(h, cfg.params.gamma, m0)
    deviation = 0.0
    for t, rk4_state in rk4_oracle(h, cfg.params.gamma, m0, cfg.grid, substeps):
        closed = evolve(prop, t - cfg.grid.t_start)
        deviation = max(deviation, float(np.max(np.abs(closed - rk4_state))))
    return ValidationReport(
        max_deviation=deviation,
        threshold=RK4_VALIDATION_THRESHOLD,
        substeps=substeps,
        step=cfg.grid.spacing / substeps,
        passed=deviation <= RK4_VALIDATION_THRESHOLD,
    )


def _load_config(path: str) -> RunConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def _apply_overrides(cfg: RunConfig, args: argparse.Namespace) -> RunConfig:
    if getattr(args, "output", None) is not None:
        cfg = dataclasses.replace(cfg, output_path=args.output)
    if getattr(args, "format", None) is not None:
        cfg = dataclasses.replace(cfg, output_format=args.format)
    return cfg


def _normalize_param(spec: str) -> str:
    names = []
    for token in spec.split("="):
        token = token.strip().lower()
        name = PARAM_KEYS.get(token, token)
        if name not in PARAM_FIELDS:
            raise ValidationError(f"unknown sweep parameter {token!r}")
        names.append(name)
    return "=".join(names)


def _parse_values(text: str) -> tuple[float, ...]:
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(float(token))
        except ValueError:
            raise ValidationError(f"--values: not a number: {token!r}") from None
    return tuple(values)


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _apply_overrides(_load_config(args.config), args)
    emit(run_simulation(cfg), cfg.output_format, cfg.output_path)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _apply_overrides(_load_config(args.config), args)
    spec = SweepSpec(
        base=cfg,
        swept_parameter=_normalize_param(args.param),
        values=_parse_values(args.values),
    )
    emit(run_sweep(spec), cfg.output_format, cfg.output_path, param=spec.swept_parameter)
    return 0


def _cmd_preset(args: argparse.Namespace) -> int:
    cfg = _apply_overrides(figure_preset(args.id).resolved, args)
    emit(run_simulation(cfg), cfg.output_format, cfg.output_path)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    if not (math.isfinite(args.rk4_step) and args.rk4_step > 0.0):
        raise ValidationError(f"--rk4-step must be positive, got {args.rk4_step!r}")
    substeps = max(1, math.ceil(cfg.grid.spacing / args.rk4_step))
    print(validate_command(cfg, substeps))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinpair",
        description="Two-qubit XYZ + spin-orbit dynamics under intrinsic "
        "decoherence; emits correlation time series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run one configuration")
    sim.add_argument("--config", required=True, help="flat key=value config file")
    sim.add_argument("--output", help="output path ('-' for stdout)")
    sim.add_argument("--format", choices=["csv", "json"])
    sim.set_defaults(func=_cmd_simulate)

    swp = sub.add_parser("sweep", help="re-run a config over parameter values")
    swp.add_argument("--config", required=True)
    swp.add_argument(
        "--param",
        required=True,
        help="parameter to sweep (e.g. dx, gamma, or dx=dy to move both)",
    )
    swp.add_argument("--values", required=True, help="comma-separated values")
    swp.add_argument("--output", help="output path ('-' for stdout)")
    swp.add_argument("--format", choices=["csv", "json"])
    swp.set_defaults(func=_cmd_sweep)

    pre = sub.add_parser("preset", help="run a bundled scenario preset")
    pre.add_argument("--id", required=True, choices=PRESET_IDS)
    pre.add_argument("--output", help="output path ('-' for stdout)")
    pre.add_argument("--format", choices=["csv", "json"])
    pre.set_defaults(func=_cmd_preset)

    val = sub.add_parser("validate", help="cross-check the closed form against RK4")
    val.add_argument("--config", required=True)
    val.add_argument("--rk4-step", type=float, default=DEFAULT_RK4_STEP)
    val.set_defaults(func=_cmd_validate)
    return parser


def _fail(exc: Exception, code: int) -> int:
    message = " ".join(str(exc).split())
    print(f"error: {type(exc).__name__}: {message}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError) as exc:
        return _fail(exc, 2)
    except (NumericalDefect, InvalidDensityMatrix, NotHermitian, NotPositiveSemidefinite) as exc:
        return _fail(exc, 3)
    except OSError as exc:
        return _fail(exc, 4)


if __name__ == "__main__":
    sys.exit(main())
