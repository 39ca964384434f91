#!/usr/bin/env python3
"""Predictor vs. simulation over a grid of (p, q, N).

For each coprime alpha/beta = p/q (beta = 1) and chain length, prints the
predicted PST / balanced-FR time and the populations actually reached there.
Writes CSV to stdout or --out.
"""

import argparse
import csv
import math
import sys
from fractions import Fraction

from krawtchouk_revival import ChainSpec, RationalRatio, end_amplitudes, predict_balanced_fr, predict_pst


def rows(pmax, qmax, nmax):
    for p in range(-pmax, pmax + 1):
        for q in range(1, qmax + 1):
            if math.gcd(p, q) != 1:
                continue
            ratio = RationalRatio(p, q)
            for N in range(1, nmax + 1):
                spec = ChainSpec(N, Fraction(p, q), 1)
                for pred in (predict_pst(ratio, N), predict_balanced_fr(ratio, N)):
                    target = pred.certificate["target"]
                    # for a None prediction, probe the time the rule would have used
                    t = pred.time(1) if pred.time_over_pi_beta else math.pi * q / (2 if target != "PST" else 1)
                    mu, nu = end_amplitudes(spec, t)
                    yield [p, q, N, target, pred.kind, f"{t:.12g}", f"{abs(mu) ** 2:.12g}", f"{abs(nu) ** 2:.12g}"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=5)
    ap.add_argument("--qmax", type=int, default=5)
    ap.add_argument("--nmax", type=int, default=12)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh)
    w.writerow(["p", "q", "N", "target", "predicted", "t", "mu_sq", "nu_sq"])
    for row in rows(args.pmax, args.qmax, args.nmax):
        w.writerow(row)
    if args.out:
        fh.close()


if __name__ == "__main__":
    main()
