"""Command line front end: sweeps, figure presets, and the analytic check.

Exit codes: 0 success, 1 configuration error, 2 numerical contract
violation (PSD repair failure, truncation leak, resource limits),
3 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import fields

from .analytic import cross_check
from .errors import CavityPairError, ConfigError
from .sweep import (
    PRESET_NAMES,
    SweepConfig,
    active_columns,
    emit_plotscript,
    figure_preset,
    format_crosscheck_csv,
    format_csv,
    run_sweep,
    tau_grid,
)

_CONFIG_FIELDS = {f.name for f in fields(SweepConfig)}


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors map to the config exit code."""

    def error(self, message: str):
        raise ConfigError(message)


def parse_config_file(path: str) -> dict:
    """Flat key=value file using SweepConfig field names.

    Blank lines and lines starting with # are skipped. The outputs value
    is a comma-separated group list.
    """
    overrides: dict = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in _CONFIG_FIELDS:
                raise ConfigError(
                    f"{path}:{lineno}: unknown key {key!r}; "
                    f"valid keys: {', '.join(sorted(_CONFIG_FIELDS))}"
                )
            overrides[key] = value
    return overrides


def _coerce(overrides: dict) -> dict:
    """Convert raw string values from file or flags to field types."""
    out = {}
    for key, value in overrides.items():
        if value is None:
            continue
        if key == "attack":
            out[key] = str(value)
        elif key == "outputs":
            if isinstance(value, str):
                groups = tuple(g.strip() for g in value.split(",") if g.strip())
            else:
                groups = tuple(value)
            out[key] = groups
        else:
            try:
                out[key] = float(value)
            except ValueError:
                raise ConfigError(f"{key} must be numeric, got {value!r}") from None
    return out


def build_config(args: argparse.Namespace) -> SweepConfig:
    """Merge defaults, config file, and command line flags (flags win)."""
    overrides: dict = {}
    if getattr(args, "config", None):
        overrides.update(parse_config_file(args.config))
    flag_map = {
        "nbar": "mean_photon",
        "a": "atomic_a",
        "tau_start": "tau_start",
        "tau_end": "tau_end",
        "tau_step": "tau_step",
        "attack": "attack",
        "tail_tolerance": "tail_tolerance",
        "outputs": "outputs",
    }
    for flag, field_name in flag_map.items():
        value = getattr(args, flag, None)
        if value is not None:
            overrides[field_name] = value
    return SweepConfig(**_coerce(overrides))


def _write_text(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write(text)


def _add_sweep_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--nbar", type=float, help="mean photon number")
    parser.add_argument("--a", type=float, help="excited weight of atom 2 (b = sqrt(1-a^2))")
    parser.add_argument("--tau-start", dest="tau_start", type=float)
    parser.add_argument("--tau-end", dest="tau_end", type=float)
    parser.add_argument("--tau-step", dest="tau_step", type=float)
    parser.add_argument("--attack", choices=("none", "x", "y", "z", "all"))
    parser.add_argument("--tail-tolerance", dest="tail_tolerance", type=float)
    parser.add_argument(
        "--outputs",
        help="comma-separated measure groups "
        "(purity,ppt,fidelity,coding,security,analytic_check)",
    )


def _make_parser() -> _Parser:
    parser = _Parser(prog="cavitypair", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="run a configured tau sweep")
    sweep.add_argument("--config", help="key = value config file")
    _add_sweep_flags(sweep)
    sweep.add_argument("--out", default="-", help="CSV path ('-' for stdout)")

    preset = sub.add_parser("preset", help="run a published-figure preset")
    preset.add_argument("name", choices=PRESET_NAMES)
    preset.add_argument("--out", default="-", help="CSV path ('-' for stdout)")
    preset.add_argument(
        "--plot-script", dest="plot_script", help="also write a gnuplot script"
    )

    check = sub.add_parser(
        "check-analytic",
        help="closed-form vs numeric impurity deviation report",
    )
    check.add_argument("--config", help="key = value config file")
    _add_sweep_flags(check)
    check.add_argument("--out", default="-", help="CSV path ('-' for stdout)")
    return parser


def _cmd_sweep(args: argparse.Namespace) -> None:
    config = build_config(args)
    records = run_sweep(config)
    _write_text(format_csv(records, active_columns(config)), args.out)


def _cmd_preset(args: argparse.Namespace) -> None:
    config = figure_preset(args.name)
    records = run_sweep(config)
    csv_text = format_csv(records, active_columns(config))
    _write_text(csv_text, args.out)
    if args.plot_script:
        csv_name = args.out if args.out != "-" else "sweep.csv"
        emit_plotscript(records, args.name, args.plot_script, csv_path=csv_name)


def _cmd_check_analytic(args: argparse.Namespace) -> None:
    config = build_config(args)
    rows = cross_check(
        tau_grid(config),
        mean_photon=config.mean_photon,
        a=config.atomic_a,
        tail_tolerance=config.tail_tolerance,
    )
    _write_text(format_crosscheck_csv(rows), args.out)


def main(argv: list[str] | None = None) -> int:
    try:
        args = _make_parser().parse_args(argv)
        if args.command == "sweep":
            _cmd_sweep(args)
        elif args.command == "preset":
            _cmd_preset(args)
        else:
            _cmd_check_analytic(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CavityPairError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
