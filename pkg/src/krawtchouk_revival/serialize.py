"""CSV / JSON writers shared by the CLI.

JSON documents have the shape ``{"spec": {"N", "alpha", "beta"}, "result": ...}``.
CSV floats are written with 17 significant digits so they round-trip.
"""

from __future__ import annotations

import json

import numpy as np

from .chain_model import ChainSpec, CouplingProfile
from .revival_analysis import FidelityScan

PROFILE_COLUMNS = ("n", "j1", "j2", "b")
SCAN_COLUMNS = ("t", "mu_sq", "nu_sq", "leakage")
STATE_COLUMNS = ("n", "re", "im", "abs_sq")


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(v) if isinstance(v, (int, np.integer)) else fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def profile_csv(profile: CouplingProfile) -> str:
    return _csv(PROFILE_COLUMNS, profile.rows())


def profile_result(profile: CouplingProfile) -> dict:
    return {
        "j1": profile.j1.tolist(),
        "j2": profile.j2.tolist(),
        "b": profile.b.tolist(),
    }


def scan_csv(result: FidelityScan) -> str:
    return _csv(SCAN_COLUMNS, result.rows())


def scan_result(result: FidelityScan) -> dict:
    return {
        "t": result.times.tolist(),
        "mu_sq": result.mu_sq.tolist(),
        "nu_sq": result.nu_sq.tolist(),
        "leakage": result.leakage.tolist(),
    }


def state_rows(amplitudes: np.ndarray):
    return [(n, a.real, a.imag, abs(a) ** 2) for n, a in enumerate(amplitudes.tolist())]


def state_csv(amplitudes: np.ndarray) -> str:
    return _csv(STATE_COLUMNS, state_rows(amplitudes))


def state_result(amplitudes: np.ndarray, t: float) -> dict:
    return {
        "t": t,
        "re": amplitudes.real.tolist(),
        "im": amplitudes.imag.tolist(),
        "abs_sq": (np.abs(amplitudes) ** 2).tolist(),
    }


def document(spec: ChainSpec, result) -> str:
    return json.dumps({"spec": spec.to_dict(), "result": result}, indent=2, sort_keys=True) + "\n"
