"""Batch command line: export, simulate, scan, predict, verify.

Times default to units of pi/beta (``--time-units pi-over-beta``); pass
``--time-units abs`` for plain time.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import serialize
from .chain_model import ChainSpec, as_fraction, coupling_profile
from .revival_analysis import (
    DETECT_TOL,
    NONE,
    VERIFY_TOL,
    RationalRatio,
    predict_balanced_fr,
    predict_pst,
    scan,
    verify_prediction,
)
from .spectral_dynamics import propagate, propagate_oracle

SUBCOMMANDS = ("export", "simulate", "scan", "predict", "verify")


class CLIError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    N: int
    alpha: Fraction
    beta: Fraction
    t: Optional[float] = None
    t_max: Optional[float] = None
    steps: int = 1001
    time_units: str = "pi-over-beta"
    tol: Optional[float] = None
    kind: str = "pst"
    site: int = 0
    out: Optional[str] = None
    fmt: str = "csv"
    seed: int = 0
    oracle_checks: int = 0

    @property
    def spec(self) -> ChainSpec:
        return ChainSpec(self.N, self.alpha, self.beta)

    def absolute(self, value: float) -> float:
        if self.time_units == "abs":
            return value
        if self.beta == 0:
            raise CLIError("beta = 0: times in units of pi/beta are undefined; use --time-units abs")
        return value * math.pi / abs(float(self.beta))


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="krawtchouk-revival", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--N", type=int, required=True, help="chain has N + 1 sites")
    common.add_argument("--alpha", type=_rational, default=Fraction(0), help="NNN strength, e.g. 1 or 3/4")
    common.add_argument("--beta", type=_rational, default=Fraction(1), help="NN strength")
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    timed = _Parser(add_help=False)
    timed.add_argument("--time-units", choices=("abs", "pi-over-beta"), default="pi-over-beta")

    sub.add_parser("export", parents=[common], help="write the coupling profile")

    p = sub.add_parser("simulate", parents=[common, timed], help="amplitudes at time t")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--site", type=int, default=0, help="initially excited site")

    p = sub.add_parser("scan", parents=[common, timed], help="end populations on a time grid")
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=1001, help="number of grid points, endpoints included")

    for name in ("predict", "verify"):
        p = sub.add_parser(name, parents=[common], help=f"{name} PST or balanced FR")
        p.add_argument("--kind", choices=("pst", "fr"), default="pst")
        if name == "verify":
            p.add_argument("--tol", type=float, default=VERIFY_TOL)
            p.add_argument("--oracle-checks", type=int, default=0,
                           help="also compare against the dense-expm oracle at this many random times")
            p.add_argument("--seed", type=int, default=0)
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    config = RunConfig(**fields)
    try:
        config.spec
    except (TypeError, ValueError) as exc:
        raise CLIError(str(exc)) from None
    if config.tol is not None and not config.tol > 0:
        raise CLIError("--tol must be positive")
    return config


def _predict(config: RunConfig):
    if config.beta == 0:
        raise CLIError("beta = 0 is not supported by the predictors")
    ratio = RationalRatio.from_spec(config.spec)
    fn = predict_pst if config.kind == "pst" else predict_balanced_fr
    return fn(ratio, config.N)


def _certificate_lines(prediction) -> list[str]:
    cert = prediction.certificate
    return [
        f"ratio alpha/beta = {prediction.ratio}",
        f"parity: p {cert['p_parity']}, q {cert['q_parity']}, N {cert['N_parity']}",
        f"rule: {cert['rule']}",
    ]


def execute(config: RunConfig) -> tuple[str, int]:
    """Compute the output text and exit status for ``config``."""
    spec = config.spec
    if config.subcommand == "export":
        prof = coupling_profile(spec)
        if config.fmt == "csv":
            return serialize.profile_csv(prof), 0
        return serialize.document(spec, serialize.profile_result(prof)), 0

    if config.subcommand == "simulate":
        if not 0 <= config.site <= spec.N:
            raise CLIError(f"--site must lie in 0..{spec.N}")
        t = config.absolute(config.t)
        amps = propagate(spec, config.site, t)
        if config.fmt == "csv":
            return serialize.state_csv(amps), 0
        return serialize.document(spec, serialize.state_result(amps, t)), 0

    if config.subcommand == "scan":
        if config.steps < 2:
            raise CLIError("--steps must be >= 2")
        t_max = config.absolute(config.t_max)
        if not t_max > 0:
            raise CLIError("--t-max must be positive")
        result = scan(spec, t_max, config.steps)
        if config.fmt == "csv":
            return serialize.scan_csv(result), 0
        return serialize.document(spec, serialize.scan_result(result)), 0

    prediction = _predict(config)
    if config.subcommand == "predict":
        if config.fmt == "json":
            return serialize.document(spec, prediction.to_dict()), 0
        return "\n".join([prediction.describe(), *_certificate_lines(prediction)]) + "\n", 0

    # verify
    if prediction.kind == NONE:
        raise CLIError(f"predictor returns {prediction.describe()}; nothing to verify")
    report = verify_prediction(spec, prediction, config.tol)
    result = {"prediction": prediction.to_dict(), "report": report.to_dict()}
    status = 0 if report.passed else 1
    if config.oracle_checks > 0:
        rng = np.random.default_rng(config.seed)
        times = rng.uniform(-10 * math.pi, 10 * math.pi, config.oracle_checks) / abs(float(spec.beta))
        dev = max(float(np.abs(propagate(spec, 0, t) - propagate_oracle(spec, 0, t)).max()) for t in times)
        result["oracle_max_deviation"] = dev
        if dev >= 1e-9:
            status = 1
    if config.fmt == "json":
        return serialize.document(spec, result), status
    lines = [
        prediction.describe(),
        f"predicted time = {serialize.fmt(report.predicted_time)}",
        f"|mu|^2 = {serialize.fmt(report.mu_sq)}",
        f"|nu|^2 = {serialize.fmt(report.nu_sq)}",
        f"leakage = {serialize.fmt(report.leakage)}",
    ]
    if report.relative_phase_real is not None:
        lines.append(f"Re(nu conj(mu))/|mu nu| = {serialize.fmt(report.relative_phase_real)}")
    if "oracle_max_deviation" in result:
        lines.append(f"oracle max deviation = {serialize.fmt(result['oracle_max_deviation'])}")
    lines.append("pass" if status == 0 else "FAIL")
    return "\n".join(lines) + "\n", status


def _write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(config: RunConfig) -> int:
    text, status = execute(config)
    if config.out:
        _write(config.out, text)
    else:
        sys.stdout.write(text)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(parse_config(argv))
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
