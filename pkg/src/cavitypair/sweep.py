"""Scaled-time sweeps over the full measurement stack, with CSV output.

A sweep evolves one initial condition across a tau grid and evaluates the
requested measure groups at every sample. Records are deterministic for a
fixed config: the grid is built by index multiplication and emission is
single threaded, so identical configs give byte-identical CSV files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .analytic import CrossCheckRow
from .dynamics import propagator_for
from .errors import ConfigError, NumericsError
from .hilbert import AtomicInit, coherent_amplitudes, initial_state
from .measures import impurity_triple, overlap_fidelity, ppt_report
from .protocol import (
    disturbance,
    eve_information,
    holevo_bound,
    pauli_channel,
    secure,
)
from .reduced import trace_field

MEASURE_GROUPS = ("purity", "ppt", "fidelity", "coding", "security", "analytic_check")
ATTACKS = ("none", "x", "y", "z", "all")

_ATTACK_VARIANTS = {
    "none": ("none",),
    "x": ("none", "x"),
    "y": ("none", "y"),
    "z": ("none", "z"),
    "all": ("none", "x", "y", "z"),
}
_PAULI_INDEX = {"none": 0, "x": 1, "y": 2, "z": 3}

# Full CSV column order; emitted files keep this order pruned to the
# columns the config actually populates.
ALL_COLUMNS = (
    "tau",
    "eta12",
    "eta1",
    "eta2",
    "ppt_min_none",
    "ppt_min_x",
    "ppt_min_y",
    "ppt_min_z",
    "entangled_none",
    "entangled_x",
    "entangled_y",
    "entangled_z",
    "F0",
    "F1",
    "F2",
    "F3",
    "I_bob",
    "D",
    "I_ae",
    "secure",
)


@dataclass(frozen=True)
class SweepConfig:
    """One sweep scenario: initial condition, tau grid, attack, outputs."""

    mean_photon: float = 10.0
    atomic_a: float = 0.5
    tau_start: float = 0.0
    tau_end: float = 50.0
    tau_step: float = 0.05
    attack: str = "none"
    tail_tolerance: float = 1e-12
    outputs: tuple[str, ...] = ("purity",)

    def __post_init__(self) -> None:
        if self.mean_photon < 0:
            raise ConfigError("mean_photon must be nonnegative")
        if not 0.0 <= self.atomic_a <= 1.0:
            raise ConfigError("atomic_a must lie in [0, 1]")
        if self.tau_step <= 0:
            raise ConfigError("tau_step must be positive")
        if self.tau_end < self.tau_start:
            raise ConfigError("tau_end must not precede tau_start")
        if self.attack not in ATTACKS:
            raise ConfigError(f"attack must be one of {ATTACKS}, got {self.attack!r}")
        if not 0 < self.tail_tolerance < 1:
            raise ConfigError("tail_tolerance must lie in (0, 1)")
        seen = []
        for group in self.outputs:
            if group not in MEASURE_GROUPS:
                raise ConfigError(
                    f"output group {group!r} not in {MEASURE_GROUPS}"
                )
            if group not in seen:
                seen.append(group)
        ordered = tuple(g for g in MEASURE_GROUPS if g in seen)
        object.__setattr__(self, "outputs", ordered)

    def attack_variants(self) -> tuple[str, ...]:
        return _ATTACK_VARIANTS[self.attack]


@dataclass(frozen=True)
class SweepRecord:
    """All measures evaluated at one tau sample; unrequested fields None."""

    tau: float
    eta12: float | None = None
    eta1: float | None = None
    eta2: float | None = None
    ppt_min_none: float | None = None
    ppt_min_x: float | None = None
    ppt_min_y: float | None = None
    ppt_min_z: float | None = None
    entangled_none: bool | None = None
    entangled_x: bool | None = None
    entangled_y: bool | None = None
    entangled_z: bool | None = None
    F0: float | None = None
    F1: float | None = None
    F2: float | None = None
    F3: float | None = None
    I_bob: float | None = None
    D: float | None = None
    I_ae: float | None = None
    secure: bool | None = None

    def __post_init__(self) -> None:
        for field_info in fields(self):
            value = getattr(self, field_info.name)
            if isinstance(value, float) and not math.isfinite(value):
                raise NumericsError(f"{field_info.name} is not finite: {value}")


def active_columns(config: SweepConfig) -> tuple[str, ...]:
    """CSV columns a config populates, in the documented order."""
    names = ["tau"]
    if "purity" in config.outputs:
        names += ["eta12", "eta1", "eta2"]
    if "ppt" in config.outputs:
        variants = config.attack_variants()
        names += [f"ppt_min_{v}" for v in variants]
        names += [f"entangled_{v}" for v in variants]
    if "fidelity" in config.outputs:
        names += ["F0", "F1", "F2", "F3"]
    if "coding" in config.outputs:
        names += ["I_bob"]
    if "security" in config.outputs:
        names += ["D", "I_ae", "secure"]
    # analytic_check contributes no sweep columns; its artifact is the
    # separate cross-check report.
    return tuple(c for c in ALL_COLUMNS if c in names)


def tau_grid(config: SweepConfig) -> np.ndarray:
    """Sample times start + i*step; count floor((end-start)/step) + 1.

    Values come from index multiplication, not accumulation, so long
    grids carry no floating drift. The small epsilon keeps an exactly
    divisible range from losing its endpoint to rounding.
    """
    count = int(math.floor((config.tau_end - config.tau_start) / config.tau_step + 1e-9)) + 1
    return config.tau_start + config.tau_step * np.arange(count)


def run_sweep(config: SweepConfig) -> list[SweepRecord]:
    """Evaluate the requested measure groups over the tau grid.

    The initial state and block propagator are built once; each sample is
    an independent pure-function evaluation, emitted in tau order.
    """
    init = AtomicInit.from_excited_weight(config.atomic_a)
    fock = coherent_amplitudes(config.mean_photon, config.tail_tolerance)
    state0 = initial_state(init, fock)
    propagator = propagator_for(fock.cutoff)

    want_purity = "purity" in config.outputs
    want_ppt = "ppt" in config.outputs
    want_fidelity = "fidelity" in config.outputs
    want_coding = "coding" in config.outputs
    want_security = "security" in config.outputs
    variants = config.attack_variants() if want_ppt else ()

    records = []
    for tau in tau_grid(config):
        values: dict[str, float | bool] = {}
        if want_purity or want_ppt or want_fidelity or want_coding or want_security:
            rho = trace_field(propagator.evolve(state0, float(tau)))
        if want_purity:
            triple = impurity_triple(rho)
            values.update(eta12=triple.eta12, eta1=triple.eta1, eta2=triple.eta2)
        if want_ppt:
            for variant in variants:
                attacked = pauli_channel(rho, _PAULI_INDEX[variant])
                report = ppt_report(attacked)
                values[f"ppt_min_{variant}"] = report.min_eigenvalue
                values[f"entangled_{variant}"] = report.entangled
        if want_fidelity:
            for i in range(4):
                values[f"F{i}"] = overlap_fidelity(rho, i)
        if want_coding:
            values["I_bob"] = holevo_bound(rho)
        if want_security:
            d = disturbance(rho)
            values.update(D=d, I_ae=eve_information(d), secure=secure(d))
        records.append(SweepRecord(tau=float(tau), **values))
    return records


_PRESET_TABLE = {
    "fig1": dict(mean_photon=10.0, atomic_a=0.5, outputs=("purity", "ppt")),
    "fig2": dict(mean_photon=20.0, atomic_a=0.5, outputs=("purity", "ppt")),
    "fig3": dict(mean_photon=20.0, atomic_a=1.0, outputs=("purity", "ppt")),
    "fig4a": dict(mean_photon=20.0, atomic_a=1.0, outputs=("ppt",), attack="x"),
    "fig4b": dict(mean_photon=20.0, atomic_a=1.0, outputs=("ppt",), attack="z"),
    "fig5a": dict(mean_photon=20.0, atomic_a=0.5, outputs=("fidelity",), attack="x"),
    "fig5b": dict(mean_photon=20.0, atomic_a=0.5, outputs=("fidelity",), attack="z"),
    "fig6": dict(mean_photon=20.0, atomic_a=0.5, outputs=("coding",)),
    "fig7": dict(mean_photon=20.0, atomic_a=1.0, outputs=("coding", "security")),
    "fig8": dict(mean_photon=20.0, atomic_a=0.5, outputs=("coding", "security")),
    "fig9": dict(
        mean_photon=20.0, atomic_a=0.5, outputs=("coding", "security"), attack="z"
    ),
}

PRESET_NAMES = tuple(_PRESET_TABLE)


def figure_preset(name: str) -> SweepConfig:
    """Sweep configuration reproducing one published figure's curves.

    Figures whose originals overlay both initial conditions get the
    single documented condition listed in the README preset table.
    """
    try:
        kwargs = _PRESET_TABLE[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}"
        ) from None
    return SweepConfig(**kwargs)


def _format_value(value: float | bool | None) -> str:
    if value is None:
        raise ConfigError("record lacks a value for a requested column")
    if isinstance(value, bool):
        return "1" if value else "0"
    return f"{value:.12g}"


def format_csv(
    records: list[SweepRecord], columns: tuple[str, ...] | None = None
) -> str:
    """Render records as CSV text: 12 significant digits, flags as 0/1."""
    if not records:
        raise ConfigError("no records to emit")
    if columns is None:
        first = records[0]
        columns = tuple(
            c for c in ALL_COLUMNS if getattr(first, c) is not None
        )
    lines = [",".join(columns)]
    for record in records:
        lines.append(
            ",".join(_format_value(getattr(record, c)) for c in columns)
        )
    return "\n".join(lines) + "\n"


def emit_csv(
    records: list[SweepRecord],
    path: str,
    columns: tuple[str, ...] | None = None,
) -> None:
    """Write the sweep CSV; identical records give identical bytes."""
    text = format_csv(records, columns)
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write(text)


def format_crosscheck_csv(rows: list[CrossCheckRow]) -> str:
    """Render the analytic deviation report as CSV text."""
    if not rows:
        raise ConfigError("no report rows to emit")
    lines = ["tau,eta12_numeric,eta12_analytic,abs_dev,norm_defect"]
    for row in rows:
        lines.append(
            ",".join(
                f"{v:.12g}"
                for v in (
                    row.tau,
                    row.eta12_numeric,
                    row.eta12_analytic,
                    row.abs_dev,
                    row.norm_defect,
                )
            )
        )
    return "\n".join(lines) + "\n"


def emit_crosscheck_csv(rows: list[CrossCheckRow], path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write(format_crosscheck_csv(rows))


def _masked(value_col: int, flag_col: int) -> str:
    """Gnuplot column expression hiding samples whose flag is 0."""
    return f"(${flag_col} == 1 ? ${value_col} : 1/0)"


def emit_plotscript(
    records: list[SweepRecord],
    preset: str,
    path: str,
    csv_path: str = "sweep.csv",
) -> None:
    """Write a gnuplot script that plots the preset's curves from the CSV.

    Purity presets mask samples where the pair state is separable,
    matching the published figures, which draw the impurities only where
    the state is entangled. Security presets mask by the secure flag.
    """
    if preset not in _PRESET_TABLE:
        raise ConfigError(f"unknown preset {preset!r}")
    config = figure_preset(preset)
    columns = active_columns(config)
    if records:
        missing = [c for c in columns if getattr(records[0], c) is None]
        if missing:
            raise ConfigError(
                f"records lack columns required by preset {preset}: {missing}"
            )
    col = {name: i + 1 for i, name in enumerate(columns)}
    tau = col["tau"]

    plots = []
    if "purity" in config.outputs:
        flag = col["entangled_none"]
        for name, title in (("eta12", "pair"), ("eta1", "atom 1"), ("eta2", "atom 2")):
            plots.append(
                f"'{csv_path}' using {tau}:{_masked(col[name], flag)} "
                f"with lines title '{title} impurity'"
            )
    elif "ppt" in config.outputs:
        for variant in config.attack_variants():
            plots.append(
                f"'{csv_path}' using {tau}:{col[f'ppt_min_{variant}']} "
                f"with lines title 'min PT eigenvalue ({variant})'"
            )
    elif "fidelity" in config.outputs:
        attacked = f"F{_PAULI_INDEX[config.attack]}"
        plots.append(
            f"'{csv_path}' using {tau}:{col[attacked]} "
            f"with lines title 'overlap fidelity ({config.attack} attack)'"
        )
    if "security" in config.outputs:
        flag = col["secure"]
        plots.append(
            f"'{csv_path}' using {tau}:{_masked(col['I_bob'], flag)} "
            f"with lines title 'Bob information (secure stretches)'"
        )
        plots.append(
            f"'{csv_path}' using {tau}:{_masked(col['I_ae'], flag)} "
            f"with lines title 'Eve information (secure stretches)'"
        )
    elif "coding" in config.outputs and "purity" not in config.outputs:
        plots.append(
            f"'{csv_path}' using {tau}:{col['I_bob']} "
            f"with lines title 'Bob information'"
        )

    script = "\n".join(
        [
            f"# {preset}: generated plot commands; data in {csv_path}",
            "set datafile separator ','",
            "set key autotitle columnhead",
            "set xlabel 'scaled time'",
            "set grid",
            "plot \\",
            ", \\\n".join("    " + p for p in plots),
            "",
        ]
    )
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write(script)
