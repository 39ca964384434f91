"""Exit criteria for the package, one test per criterion.

Each test logs a PASS/FAIL line (printed in the pytest terminal summary)
before asserting.
"""

import math
import time
from fractions import Fraction

import numpy as np

from krawtchouk_revival import (
    ChainSpec,
    build_hamiltonian,
    build_j_operator,
    detect_revivals,
    end_amplitudes,
    krawtchouk_table,
    predict_balanced_fr,
    predict_pst,
    propagate,
    propagate_oracle,
    scan,
    RationalRatio,
)
from krawtchouk_revival.revival_analysis import BALANCED_FR, NONE, PST, relative_phase_real

from conftest import ACCEPTANCE_LOG


def record(name, ok, detail):
    ACCEPTANCE_LOG.append((name, bool(ok), detail))
    assert ok, f"{name}: {detail}"


def parity_matched(p, q, N):
    return p % 2 == 0 or q % 2 == N % 2


def admissible(pmax=5, qmax=5, nmax=12):
    for p in range(-pmax, pmax + 1):
        for q in range(1, qmax + 1):
            if p == 0 or math.gcd(p, q) != 1:
                continue
            for N in range(1, nmax + 1):
                yield p, q, N


def test_1_nn_pst():
    start = time.perf_counter()
    worst = min(abs(end_amplitudes(ChainSpec(N, 0, 1), math.pi)[1]) ** 2 for N in range(1, 31))
    elapsed = time.perf_counter() - start
    record("1 NN PST", worst >= 1 - 1e-9 and elapsed < 1.0,
           f"min |nu(pi)|^2 = {worst:.16f} over N=1..30 in {elapsed:.3f}s")


def test_2_nnn_pst():
    worst, cases = 1.0, 0
    for p, q, N in admissible():
        if not parity_matched(p, q, N):
            continue
        pred = predict_pst(RationalRatio(p, q), N)
        assert pred.kind == PST
        spec = ChainSpec(N, Fraction(p, q), 1)
        nu_sq = abs(end_amplitudes(spec, pred.time(spec.beta))[1]) ** 2
        worst = min(worst, nu_sq)
        cases += 1
    record("2 NNN PST", worst >= 1 - 1e-8, f"min |nu(pi q)|^2 = {worst:.16f} over {cases} cases")


def test_3_pst_obstruction():
    worst, cases = 0.0, 0
    for p, q, N in admissible():
        if parity_matched(p, q, N):
            continue
        assert predict_pst(RationalRatio(p, q), N).kind == NONE
        nu_sq = abs(end_amplitudes(ChainSpec(N, Fraction(p, q), 1), math.pi * q)[1]) ** 2
        worst = max(worst, nu_sq)
        cases += 1
    single = abs(end_amplitudes(ChainSpec(2, 1, 1), math.pi)[1]) ** 2
    record("3 PST obstruction", worst <= 1 - 1e-3 and single <= 1 - 1e-3,
           f"max |nu(pi q)|^2 = {worst:.3e} over {cases} mismatched cases")


def test_4_balanced_fr():
    worst_leak = worst_bal = worst_phase = 0.0
    cases = 0
    for p, q, N in admissible():
        if p % 2 == 0 or q % 2 != N % 2:
            continue
        pred = predict_balanced_fr(RationalRatio(p, q), N)
        assert pred.kind == BALANCED_FR
        mu, nu = end_amplitudes(ChainSpec(N, Fraction(p, q), 1), pred.time(1))
        worst_leak = max(worst_leak, 1 - abs(mu) ** 2 - abs(nu) ** 2)
        worst_bal = max(worst_bal, abs(abs(mu) ** 2 - 0.5))
        worst_phase = max(worst_phase, abs(relative_phase_real(mu, nu)))
        cases += 1
    ok = worst_leak < 1e-7 and worst_bal < 1e-6 and worst_phase < 1e-6
    record("4 balanced FR", ok,
           f"leakage {worst_leak:.2e}, ||mu|^2-1/2| {worst_bal:.2e}, Re phase {worst_phase:.2e} over {cases} cases")


def test_5_no_fr_in_nn_model():
    found = {}
    for N in range(2, 11):
        events = detect_revivals(scan(ChainSpec(N, 0, 1), 4 * math.pi, 100_000), 1e-6)
        found[N] = sum(e.kind == BALANCED_FR for e in events)
    record("5 no FR in NN model", sum(found.values()) == 0, f"BalancedFR events per N: {found}")


def test_6_sign_law():
    worst = 0.0
    for N in range(1, 41):
        values = krawtchouk_table(N).values
        s = np.arange(N + 1)
        worst = max(worst, np.abs(values[N] - (-1.0) ** (N + s)).max())
    record("6 sign law", worst <= 1e-10, f"max |chi_N(x_s) - (-1)^(N+s)| = {worst:.2e}, N<=40")


def test_7_operator_identity():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        N = int(rng.integers(1, 41))
        alpha = Fraction(int(rng.integers(-32, 33)), int(rng.integers(1, 5)))
        beta = Fraction(int(rng.integers(-32, 33)), int(rng.integers(1, 5)))
        spec = ChainSpec(N, alpha, beta)
        J = build_j_operator(N)
        diff = build_hamiltonian(spec) - float(alpha) * J @ J - float(beta) * J
        worst = max(worst, np.abs(diff).max())
    record("7 operator identity", worst < 1e-12, f"max |H - aJ^2 - bJ| = {worst:.2e} over 100 specs")


def test_8_oracle_equivalence():
    rng = np.random.default_rng(8)
    worst = 0.0
    for _ in range(200):
        N = int(rng.integers(1, 21))
        alpha = Fraction(int(rng.integers(-32, 33)), int(rng.integers(1, 5)))
        beta = Fraction(int(rng.integers(-32, 33)), int(rng.integers(1, 5)))
        spec = ChainSpec(N, alpha, beta)
        site = int(rng.integers(0, N + 1))
        t = float(rng.uniform(-10 * math.pi, 10 * math.pi))
        worst = max(worst, np.abs(propagate(spec, site, t) - propagate_oracle(spec, site, t)).max())
    record("8 oracle equivalence", worst < 1e-9, f"max amplitude deviation = {worst:.2e} over 200 draws")


def test_9_unitarity_and_orthogonality():
    rng = np.random.default_rng(9)
    worst_norm = 0.0
    for _ in range(200):
        N = int(rng.integers(1, 41))
        spec = ChainSpec(N, Fraction(int(rng.integers(-32, 33)), 4), Fraction(int(rng.integers(-32, 33)), 4))
        amp = propagate(spec, int(rng.integers(0, N + 1)), float(rng.uniform(-100, 100)))
        worst_norm = max(worst_norm, abs(np.vdot(amp, amp).real - 1))
    worst_orth = 0.0
    for N in range(1, 41):
        O = krawtchouk_table(N).orthogonal
        worst_orth = max(worst_orth, np.abs(O.T @ O - np.eye(N + 1)).max())
    record("9 unitarity/orthogonality", worst_norm < 1e-12 and worst_orth < 1e-9,
           f"max | |psi|^2 - 1 | = {worst_norm:.2e}, max |O^T O - I| = {worst_orth:.2e}")
