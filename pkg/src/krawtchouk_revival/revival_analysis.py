"""Exact predictors for perfect state transfer (PST) and balanced fractional
revival (FR), plus grid scans that detect revival events in simulated dynamics.

Times are carried as exact multiples of pi/beta and only turned into floats
against a concrete ``ChainSpec``.

The predictors apply the parity rules for every N >= 1.  For N = 1 the two
energies differ by beta whatever alpha is, so a two-site chain always shows
PST at pi/beta and balanced FR at pi/(2 beta); the rules are only sharp for
N >= 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .chain_model import ChainSpec
from .spectral_dynamics import end_amplitudes

PST = "PST"
BALANCED_FR = "BalancedFR"
NONE = "None"
RETURN = "Return"

DETECT_TOL = 1e-6
VERIFY_TOL = 1e-7
PHASE_TOL = 1e-6


class ConsistencyError(ValueError):
    """A prediction was checked against a chain it was not made for."""


@dataclass(frozen=True)
class RationalRatio:
    """alpha / beta = p / q in lowest terms with q >= 1."""

    p: int
    q: int = 1

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"q must be positive, got {self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p}, q={self.q} are not coprime")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "RationalRatio":
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @classmethod
    def from_spec(cls, spec: ChainSpec) -> "RationalRatio":
        if spec.beta == 0:
            raise ValueError("beta = 0: revival times are multiples of pi/beta and undefined")
        return cls.from_fraction(spec.alpha / spec.beta)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def _parity(k: int) -> str:
    return "odd" if k % 2 else "even"


@dataclass(frozen=True)
class RevivalPrediction:
    kind: str
    ratio: RationalRatio
    N: int
    # exact time in units of pi/|beta|; None when nothing is predicted
    time_over_pi_beta: Optional[Fraction]
    certificate: dict = field(default_factory=dict)
    phase_note: str = "global phase left free"

    def time(self, beta) -> float:
        if self.time_over_pi_beta is None:
            raise ValueError("no revival predicted")
        if beta == 0:
            raise ValueError("beta must be nonzero")
        return math.pi * float(self.time_over_pi_beta) / abs(float(beta))

    def describe(self) -> str:
        if self.kind == NONE:
            return f"no {self.certificate.get('target', 'revival')} ({self.certificate['rule']})"
        mult = self.time_over_pi_beta
        num = "π" if mult.numerator == 1 else f"{mult.numerator}π"
        t = num if mult.denominator == 1 else f"{num}/{mult.denominator}"
        label = "PST at T" if self.kind == PST else "BalancedFR at τ"
        return f"{label} = {t} (q={self.ratio.q})"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ratio": str(self.ratio),
            "N": self.N,
            "time_over_pi_beta": None if self.time_over_pi_beta is None else str(self.time_over_pi_beta),
            "certificate": dict(self.certificate),
            "phase_note": self.phase_note,
        }


def _certificate(ratio: RationalRatio, N: int, target: str) -> dict:
    return {
        "target": target,
        "p_parity": _parity(ratio.p),
        "q_parity": _parity(ratio.q),
        "N_parity": _parity(N),
        "parity_match": ratio.q % 2 == N % 2,
    }


def predict_pst(ratio: RationalRatio, N: int) -> RevivalPrediction:
    """Minimal PST time q pi/beta, unless p is odd and q, N differ in parity."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    cert = _certificate(ratio, N, "PST")
    if ratio.p == 0:
        cert["rule"] = "NN model (alpha = 0): PST at pi/beta"
        return RevivalPrediction(PST, ratio, N, Fraction(1), cert)
    if ratio.p % 2 == 0:
        cert["rule"] = "p even: no parity restriction"
        return RevivalPrediction(PST, ratio, N, Fraction(ratio.q), cert)
    if cert["parity_match"]:
        cert["rule"] = "p odd, q and N of equal parity"
        return RevivalPrediction(PST, ratio, N, Fraction(ratio.q), cert)
    cert["rule"] = "p odd but q and N differ in parity"
    return RevivalPrediction(NONE, ratio, N, None, cert)


def predict_balanced_fr(ratio: RationalRatio, N: int) -> RevivalPrediction:
    """Balanced end-to-end FR at q pi/(2 beta); needs p odd and q, N of equal parity."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    cert = _certificate(ratio, N, "BalancedFR")
    if ratio.p == 0:
        cert["rule"] = "NN model (alpha = 0) has no two-site FR"
    elif ratio.p % 2 == 0:
        cert["rule"] = "p even"
    elif not cert["parity_match"]:
        cert["rule"] = "p odd but q and N differ in parity"
    else:
        cert["rule"] = "p odd, q and N of equal parity"
        return RevivalPrediction(BALANCED_FR, ratio, N, Fraction(ratio.q, 2), cert)
    return RevivalPrediction(NONE, ratio, N, None, cert)


@dataclass(frozen=True)
class FidelityScan:
    times: np.ndarray
    mu_sq: np.ndarray
    nu_sq: np.ndarray
    leakage: np.ndarray

    def rows(self):
        return zip(self.times.tolist(), self.mu_sq.tolist(), self.nu_sq.tolist(), self.leakage.tolist())


def scan(spec: ChainSpec, t_max: float, n_steps: int) -> FidelityScan:
    """End-site populations on ``n_steps`` uniform points of [0, t_max]."""
    if not (t_max > 0 and math.isfinite(t_max)):
        raise ValueError(f"t_max must be positive and finite, got {t_max}")
    if n_steps < 2:
        raise ValueError(f"n_steps must be >= 2, got {n_steps}")
    times = np.linspace(0.0, t_max, n_steps)
    mu_sq = np.empty(n_steps)
    nu_sq = np.empty(n_steps)
    # chunked to bound the (times x sites) phase matrix
    chunk = 20000
    for start in range(0, n_steps, chunk):
        mu, nu = end_amplitudes(spec, times[start : start + chunk])
        mu_sq[start : start + chunk] = np.abs(mu) ** 2
        nu_sq[start : start + chunk] = np.abs(nu) ** 2
    leakage = 1.0 - mu_sq - nu_sq
    return FidelityScan(times, mu_sq, nu_sq, leakage)


@dataclass(frozen=True)
class RevivalEvent:
    time: float
    kind: str
    mu_sq: float
    nu_sq: float


def _classify(mu_sq: float, nu_sq: float, leak: float, tol: float) -> Optional[str]:
    if leak >= tol:
        return None
    if nu_sq > 1 - tol:
        return PST
    if mu_sq > 1 - tol:
        return RETURN
    if abs(mu_sq - 0.5) < tol and abs(nu_sq - 0.5) < tol:
        return BALANCED_FR
    return None


def _badness(kind: str, mu_sq: float, nu_sq: float) -> float:
    if kind == PST:
        return 1.0 - nu_sq
    if kind == RETURN:
        return 1.0 - mu_sq
    return max(abs(mu_sq - 0.5), abs(nu_sq - 0.5))


def detect_revivals(result: FidelityScan, tol: float = DETECT_TOL) -> list[RevivalEvent]:
    """Revival events on the scan grid.

    Runs of consecutive grid points with the same kind are merged into one
    event placed at the point of best fidelity.  The run of ``Return`` points
    touching t = 0 is the initial state itself and is not reported.
    """
    if not 0 < tol <= 0.1:
        raise ValueError(f"tol must lie in (0, 0.1], got {tol}")
    rows = list(result.rows())
    kinds = [_classify(mu_sq, nu_sq, leak, tol) for _, mu_sq, nu_sq, leak in rows]
    start = 0
    if rows and rows[0][0] <= 0:
        while start < len(rows) and kinds[start] == RETURN:
            start += 1
    events: list[RevivalEvent] = []
    prev_kind, prev_index = None, -2
    for i in range(start, len(rows)):
        t, mu_sq, nu_sq, _ = rows[i]
        kind = kinds[i]
        if kind is None:
            continue
        event = RevivalEvent(t, kind, mu_sq, nu_sq)
        if events and kind == prev_kind and i == prev_index + 1:
            last = events[-1]
            if _badness(kind, mu_sq, nu_sq) < _badness(kind, last.mu_sq, last.nu_sq):
                events[-1] = event
        else:
            events.append(event)
        prev_kind, prev_index = kind, i
    return events


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    predicted_time: float
    mu_sq: float
    nu_sq: float
    leakage: float
    achieved_fidelity: float
    passed: bool
    relative_phase_real: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "predicted_time": self.predicted_time,
            "mu_sq": self.mu_sq,
            "nu_sq": self.nu_sq,
            "leakage": self.leakage,
            "achieved_fidelity": self.achieved_fidelity,
            "relative_phase_real": self.relative_phase_real,
            "pass": self.passed,
        }


def relative_phase_real(mu: complex, nu: complex) -> float:
    """``Re(nu conj(mu)) / |mu nu|``; zero when nu/mu is purely imaginary."""
    denom = abs(mu) * abs(nu)
    if denom == 0:
        return 0.0
    return (nu * mu.conjugate()).real / denom


def verify_prediction(
    spec: ChainSpec, prediction: RevivalPrediction, tol: float = VERIFY_TOL
) -> VerificationReport:
    """Evaluate the end amplitudes at the predicted time and check the claim."""
    if prediction.kind not in (PST, BALANCED_FR):
        raise ValueError(f"nothing to verify for prediction kind {prediction.kind!r}")
    if spec.N != prediction.N:
        raise ConsistencyError(f"prediction made for N={prediction.N}, chain has N={spec.N}")
    ratio = RationalRatio.from_spec(spec)
    if ratio != prediction.ratio:
        raise ConsistencyError(f"chain has alpha/beta = {ratio}, prediction assumed {prediction.ratio}")
    t = prediction.time(spec.beta)
    mu, nu = end_amplitudes(spec, t)
    mu_sq, nu_sq = abs(mu) ** 2, abs(nu) ** 2
    leak = 1.0 - mu_sq - nu_sq
    if prediction.kind == PST:
        return VerificationReport(PST, t, mu_sq, nu_sq, leak, nu_sq, nu_sq > 1 - tol)
    phase = relative_phase_real(mu, nu)
    passed = leak < tol and abs(mu_sq - 0.5) < tol and abs(phase) < PHASE_TOL
    return VerificationReport(BALANCED_FR, t, mu_sq, nu_sq, leak, mu_sq, passed, phase)
