"""Symmetric (p = 1/2) Krawtchouk polynomials, normalized to the binomial weight.

``chi(N, n, s)`` is the value of the degree-``n`` polynomial at the grid point
``x_s = s - N/2``.  Column ``s`` of :func:`eigenvector_matrix` is the unit
eigenvector of the hopping operator J with eigenvalue ``x_s``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

N_MAX = 100
# tolerance guarantees in the test suite are stated up to this length
N_TRUSTED = 40


def _check_n(N: int, minimum: int = 0) -> None:
    if not isinstance(N, (int, np.integer)) or isinstance(N, bool):
        raise TypeError(f"N must be an integer, got {N!r}")
    if N < minimum:
        raise ValueError(f"N must be >= {minimum}, got {N}")
    if N > N_MAX:
        raise ValueError(f"N must be <= {N_MAX}, got {N}")
    if N > N_TRUSTED:
        warnings.warn(
            f"N={N} exceeds {N_TRUSTED}; accuracy is only validated for N <= {N_TRUSTED}",
            RuntimeWarning,
            stacklevel=3,
        )


def _check_index(name: str, value: int, N: int) -> None:
    if not 0 <= value <= N:
        raise ValueError(f"{name}={value} outside 0..{N}")


def grid(N: int) -> np.ndarray:
    """Eigenvalues of J: ``x_s = s - N/2`` for ``s = 0..N``."""
    return np.arange(N + 1, dtype=float) - N / 2.0


@lru_cache(maxsize=None)
def _weights(N: int) -> tuple[float, ...]:
    # w_0 = 2^-N in log domain, then w_{s+1} / w_s = (N - s) / (s + 1)
    w = [math.exp(-N * math.log(2.0))]
    for s in range(N):
        w.append(w[-1] * (N - s) / (s + 1))
    return tuple(w)


def weight(N: int, s: int) -> float:
    """Binomial weight ``C(N, s) / 2^N``."""
    _check_n(N)
    _check_index("s", s, N)
    return _weights(N)[s]


def _hopping(N: int) -> np.ndarray:
    n = np.arange(N + 2, dtype=float)
    return 0.5 * np.sqrt(n * (N - n + 1))  # J_0 .. J_{N+1}, both ends zero


@lru_cache(maxsize=None)
def _values(N: int) -> np.ndarray:
    """Matrix ``[n, s] -> chi_n(x_s)`` from the three-term recurrence.

    The forward recurrence picks up the growing parasitic solution once it
    passes the right turning point, so each column is run forward from
    ``chi_0 = 1`` up to the middle of the chain and backward from an
    unnormalized ``chi_N`` down to the middle.  The backward branch is then
    rescaled by least squares over a few overlapping indices.
    """
    J = _hopping(N)
    x = grid(N)
    vals = np.zeros((N + 1, N + 1))
    vals[0] = 1.0
    if N == 0:
        vals.setflags(write=False)
        return vals
    mid = N // 2
    hi = min(N, mid + 2)
    fwd = np.zeros((N + 2, N + 1))
    fwd[0] = 1.0
    for n in range(0, hi):
        prev = fwd[n - 1] if n > 0 else 0.0
        fwd[n + 1] = (x * fwd[n] - J[n] * prev) / J[n + 1]
    lo = max(0, mid - 2)
    bwd = np.zeros((N + 2, N + 1))
    bwd[N] = 1.0
    for n in range(N, lo, -1):
        bwd[n - 1] = (x * bwd[n] - J[n + 1] * bwd[n + 1]) / J[n]
    window = slice(lo, hi + 1)
    scale = (fwd[window] * bwd[window]).sum(axis=0) / (bwd[window] ** 2).sum(axis=0)
    vals[: mid + 1] = fwd[: mid + 1]
    vals[mid + 1 :] = scale * bwd[mid + 1 : N + 1]
    vals.setflags(write=False)
    return vals


def chi(N: int, n: int, s: int) -> float:
    """Normalized Krawtchouk polynomial ``chi_n(x_s)``."""
    _check_n(N)
    _check_index("n", n, N)
    _check_index("s", s, N)
    return float(_values(N)[n, s])


def chi_hypergeometric(N: int, n: int, s: int) -> float:
    """Terminating 2F1 form of ``chi_n(x_s)``, summed in exact rationals.

    Independent of the recurrence; used to check it.  The series alternates,
    so a float sum loses digits quickly with N.
    """
    _check_n(N)
    _check_index("n", n, N)
    _check_index("s", s, N)
    total = Fraction(0)
    term = Fraction(1)
    # (-n)_k (-s)_k / (-N)_k * 2^k / k!
    for k in range(min(n, s) + 1):
        total += term
        if k == min(n, s):
            break
        term *= Fraction((-n + k) * (-s + k) * 2, (-N + k) * (k + 1))
    return (-1) ** n * math.sqrt(math.comb(N, n)) * float(total)


def eigenvector_matrix(N: int) -> np.ndarray:
    """Orthogonal matrix ``O[n, s] = sqrt(w_s) chi_n(x_s)``; columns diagonalize J."""
    _check_n(N, minimum=1)
    return _values(N) * np.sqrt(np.asarray(_weights(N)))[None, :]


@dataclass(frozen=True)
class KrawtchoukTable:
    n_max: int
    weights: np.ndarray
    values: np.ndarray
    grid: np.ndarray

    @property
    def orthogonal(self) -> np.ndarray:
        return self.values * np.sqrt(self.weights)[None, :]


def krawtchouk_table(N: int) -> KrawtchoukTable:
    _check_n(N, minimum=1)
    weights = np.asarray(_weights(N))
    weights.setflags(write=False)
    g = grid(N)
    g.setflags(write=False)
    return KrawtchoukTable(n_max=N, weights=weights, values=_values(N), grid=g)
