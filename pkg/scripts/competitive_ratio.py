#!/usr/bin/env python3
"""Constant-space schedules versus the UCB1 baseline on the gap ladder.

Runs the halving and poly-log(0.5) variants next to UCB1 on linear(K=16)
at T = 1e5 with 50 seeds each and prints the mean-regret ratios.
"""

import sys

from constbandit import cli
from constbandit.cli import reports_from_json

if __name__ == "__main__":
    code = cli.main(["run", "--preset", "competitive_ratio", "--out", "results/ratio"])
    if code == 0:
        with open("results/ratio/results.json", encoding="utf-8") as fh:
            reports = reports_from_json(fh.read())
        baseline = next(r.mean_regret for r in reports if r.policy == "ucb1")
        for rep in reports:
            if rep.policy != "ucb1":
                print(f"{rep.policy} ({rep.schedule}): ratio vs ucb1 = {rep.mean_regret / baseline:.2f}")
    sys.exit(code)
