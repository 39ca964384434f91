"""Coupling profile and single-excitation Hamiltonian of the NN + NNN chain."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np

from .krawtchouk import _check_n

RationalLike = Union[Fraction, int, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Parse an exact rational: ``Fraction``, ``int`` or a string like ``"3/4"``.

    Floats are rejected; rationality of alpha/beta cannot be read off a float.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational string")
        try:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class ChainSpec:
    """Chain of ``N + 1`` sites with NNN strength ``alpha`` and NN strength ``beta``."""

    N: int
    alpha: Fraction = field(default=Fraction(0))
    beta: Fraction = field(default=Fraction(1))

    def __post_init__(self) -> None:
        _check_n(self.N, minimum=1)
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))

    @property
    def n_sites(self) -> int:
        return self.N + 1

    def to_dict(self) -> dict:
        return {"N": self.N, "alpha": str(self.alpha), "beta": str(self.beta)}


def nn_coupling(N: int, n: int) -> float:
    """``J_n = sqrt(n (N - n + 1)) / 2``, zero at the boundaries n = 0 and n = N + 1."""
    if not 0 <= n <= N + 1:
        raise ValueError(f"n={n} outside 0..{N + 1}")
    if n == 0 or n == N + 1:
        return 0.0
    return 0.5 * math.sqrt(n * (N - n + 1))


def _hopping(N: int) -> np.ndarray:
    # J_0 .. J_{N+1}
    return np.array([nn_coupling(N, n) for n in range(N + 2)])


@dataclass(frozen=True)
class CouplingProfile:
    """Realized couplings.

    ``j1[k]`` is J^(1)_{k+1} (bond k <-> k+1), ``j2[k]`` is J^(2)_{k+2}
    (bond k <-> k+2) and ``b[n]`` is the field on site n.
    """

    N: int
    j1: np.ndarray
    j2: np.ndarray
    b: np.ndarray

    def rows(self) -> list[tuple[int, float, float, float]]:
        """One row per site n = 0..N with J^(1)_n, J^(2)_n, B_n (zero where the bond does not exist)."""
        j1 = np.concatenate([[0.0], self.j1])
        j2 = np.concatenate([[0.0, 0.0], self.j2])[: self.N + 1]
        return [(n, float(j1[n]), float(j2[n]), float(self.b[n])) for n in range(self.N + 1)]


def coupling_profile(spec: ChainSpec) -> CouplingProfile:
    N = spec.N
    alpha, beta = float(spec.alpha), float(spec.beta)
    J = _hopping(N)
    j1 = beta * J[1 : N + 1]
    j2 = alpha * J[1:N] * J[2 : N + 1]
    # J_n^2 = n (N - n + 1) / 4 taken exactly rather than by squaring a sqrt
    n = np.arange(N + 1)
    b = alpha * (n * (N - n + 1) + (n + 1) * (N - n)) / 4.0
    for arr in (j1, j2, b):
        arr.setflags(write=False)
    return CouplingProfile(N=N, j1=j1, j2=j2, b=b)


def build_j_operator(N: int) -> np.ndarray:
    """Tridiagonal hopping operator J with off-diagonals J_1..J_N."""
    _check_n(N, minimum=1)
    off = _hopping(N)[1 : N + 1]
    return np.diag(off, 1) + np.diag(off, -1)


def build_hamiltonian(spec: ChainSpec) -> np.ndarray:
    """Dense pentadiagonal H in the occupation basis |0>, ..., |N>."""
    prof = coupling_profile(spec)
    H = np.diag(prof.b.copy())
    H += np.diag(prof.j1, 1) + np.diag(prof.j1, -1)
    if spec.N >= 2:
        H += np.diag(prof.j2, 2) + np.diag(prof.j2, -2)
    return H
