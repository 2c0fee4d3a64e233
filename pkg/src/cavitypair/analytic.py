"""Closed-form coefficient series and impurities, kept as a diagnostic.

This module evaluates a set of published closed-form expressions for the
evolved state exactly as printed. Evaluated at t = 0 they do not reproduce
the initial state (the fourth series does not collapse to b, and the
summed squares are far from 1), which strongly suggests transcription
errors in the source expressions. They are therefore implemented verbatim
for cross-checking and documentation, never as an oracle; the numeric
pipeline in dynamics/reduced/measures is the source of truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ConfigError
from .hilbert import AtomicInit, FockAmplitudes, coherent_amplitudes, initial_state
from .dynamics import BlockPropagator
from .measures import impurity
from .reduced import trace_field


@dataclass(frozen=True)
class ClosedFormCoefficients:
    """The four summed coefficient series at one time.

    norm_defect = |sum |c_k|^2 - 1| is recorded, never asserted: the
    printed formulas do not conserve probability.
    """

    c1: complex
    c2: complex
    c3: complex
    c4: complex
    norm_defect: float


@dataclass(frozen=True)
class ClosedFormImpurities:
    """Impurities evaluated from the printed closed forms.

    in_range is False when any value escapes [0, 1], which a true
    impurity cannot do; out-of-range values are formula-defect evidence
    and are reported, not raised.
    """

    eta12: float
    eta1: float
    eta2: float
    in_range: bool


@dataclass(frozen=True)
class CrossCheckRow:
    """One grid point of the analytic-vs-numeric deviation report."""

    tau: float
    eta12_numeric: float
    eta12_analytic: float
    abs_dev: float
    norm_defect: float


def coefficient_streams(
    fock: FockAmplitudes, init: AtomicInit, tau: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Per-Fock-index summands of the four closed-form series, verbatim.

    gamma_n = sqrt(n+1), beta_n = sqrt(n+2), mu_n = 2(gamma^2 + beta^2).
    The printed series carry an explicit sum over n; the summands are
    returned unsummed because the closed-form impurities combine them at
    shifted indices before summing.
    """
    a, b = init.a, init.b
    n = np.arange(fock.cutoff + 1, dtype=float)
    gamma_sq = n + 1.0
    beta_sq = n + 2.0
    mu = 2.0 * (gamma_sq + beta_sq)
    root_mu = np.sqrt(mu)
    gamma = np.sqrt(gamma_sq)
    beta = np.sqrt(beta_sq)
    weight = fock.amplitudes**2
    sin = np.sin(tau * root_mu)
    cos = np.cos(tau * root_mu)

    c1 = -weight * (gamma / root_mu) * (
        (b * beta / root_mu) * (1.0 - cos) + 1j * a * sin
    )
    c2 = weight * (
        (2.0 * a / mu) * (beta_sq + gamma_sq) * sin**2
        + a * cos
        - 1j * (2.0 * beta / root_mu) * sin
    )
    c3 = -weight * (sin / root_mu) * (
        (2.0 * a / root_mu) * (beta_sq + gamma_sq) + b * beta
    )
    c4 = weight * (cos / root_mu) * (
        (2.0 * b * gamma_sq / root_mu) * (mu - 2.0 * gamma_sq) - 1j * a * beta
    )
    return c1, c2, c3, c4


def closed_form_coefficients(
    mean_photon: float,
    a: complex,
    b: complex,
    tau: float,
    cutoff: int | None = None,
    tail_tolerance: float = 1e-12,
) -> ClosedFormCoefficients:
    """Sum the four closed-form series at one time, verbatim."""
    fock = coherent_amplitudes(mean_photon, tail_tolerance, cutoff)
    streams = coefficient_streams(fock, AtomicInit(a, b), tau)
    totals = [complex(np.sum(s)) for s in streams]
    defect = abs(sum(abs(c) ** 2 for c in totals) - 1.0)
    return ClosedFormCoefficients(*totals, norm_defect=defect)


def _shifted_sq(stream: np.ndarray, shift: int) -> np.ndarray:
    """|c_{n+shift}|^2 aligned to index n, zero beyond the cutoff."""
    sq = np.abs(stream) ** 2
    if shift == 0:
        return sq
    out = np.zeros_like(sq)
    out[:-shift] = sq[shift:]
    return out


def closed_form_impurities(
    c1: np.ndarray, c2: np.ndarray, c3: np.ndarray, c4: np.ndarray
) -> ClosedFormImpurities:
    """Closed-form impurities evaluated verbatim from coefficient streams.

    The printed expressions leave each term with a free Fock index and
    omit operators between some adjacent factors; the implemented reading
    sums every term over n and treats juxtaposition as multiplication.
    Conjugation marks inside squared moduli are no-ops and drop out.
    """
    s1, s2, s3, s4 = (np.abs(c) ** 2 for c in (c1, c2, c3, c4))
    s2_up1 = _shifted_sq(c2, 1)
    s3_up1 = _shifted_sq(c3, 1)
    s4_up1 = _shifted_sq(c4, 1)
    s4_up2 = _shifted_sq(c4, 2)

    eta12 = 1.0 - float(
        np.sum(
            s1 * (s1 + 2.0 * (s2_up1 + s3_up1 + s4_up2))
            + s2 * (s2 + 2.0 * (s3 + s4_up1))
            + s3 * (s3 + 2.0 * s4_up1)
            + s4**2
        )
    )
    eta1 = 1.0 - float(
        np.sum(
            (s1 + s3) ** 2
            + 2.0
            * (
                s2_up1 * s1
                + s4_up1 * s3 * s2_up1 * s1 * s3 * s4_up1
                + s4_up1 * s3 * s1 * s2_up1
                + (s2 + s4) ** 2
            )
        )
    )
    eta2 = 1.0 - float(
        np.sum(
            (s1 + s2) ** 2
            + 2.0
            * (
                s1 * s3_up1
                + s2 * s4_up1 * s3_up1 * s1 * s2 * s4_up1
                + s4_up1 * s2 * s1 * s3_up1
                + (s3 + s4) ** 2
            )
        )
    )
    values = (eta12, eta1, eta2)
    in_range = all(0.0 <= v <= 1.0 for v in values)
    return ClosedFormImpurities(*values, in_range=in_range)


def _default_numeric_backend(
    fock: FockAmplitudes, init: AtomicInit
) -> Callable[[float], float]:
    state0 = initial_state(init, fock)
    propagator = BlockPropagator(fock.cutoff)

    def eta12_at(tau: float) -> float:
        return impurity(trace_field(propagator.evolve(state0, tau)))

    return eta12_at


def _default_analytic_backend(
    fock: FockAmplitudes, init: AtomicInit
) -> Callable[[float], tuple[float, float]]:
    def evaluate(tau: float) -> tuple[float, float]:
        streams = coefficient_streams(fock, init, tau)
        totals = [complex(np.sum(s)) for s in streams]
        defect = abs(sum(abs(c) ** 2 for c in totals) - 1.0)
        return closed_form_impurities(*streams).eta12, defect

    return evaluate


def cross_check(
    tau_grid: Sequence[float],
    mean_photon: float = 10.0,
    a: float = 0.5,
    b: float | None = None,
    tail_tolerance: float = 1e-12,
    numeric_backend: Callable[[float], float] | None = None,
    analytic_backend: Callable[[float], tuple[float, float]] | None = None,
) -> list[CrossCheckRow]:
    """Per-tau deviation between closed-form and numeric pair impurity.

    Deviations are reported, never asserted: the closed forms are the
    object under diagnosis. Backends are injectable; the analytic one
    returns (eta12, norm_defect). The report is deterministic for a fixed
    grid and scenario.
    """
    if len(tau_grid) == 0:
        raise ConfigError("tau grid must be nonempty")
    if numeric_backend is None or analytic_backend is None:
        init = (
            AtomicInit.from_excited_weight(a)
            if b is None
            else AtomicInit(a, b)
        )
        fock = coherent_amplitudes(mean_photon, tail_tolerance)
        if numeric_backend is None:
            numeric_backend = _default_numeric_backend(fock, init)
        if analytic_backend is None:
            analytic_backend = _default_analytic_backend(fock, init)
    rows = []
    for tau in tau_grid:
        numeric = numeric_backend(tau)
        closed_form, defect = analytic_backend(tau)
        rows.append(
            CrossCheckRow(
                tau=float(tau),
                eta12_numeric=numeric,
                eta12_analytic=closed_form,
                abs_dev=abs(numeric - closed_form),
                norm_defect=defect,
            )
        )
    return rows
