#!/usr/bin/env python3
"""Unknown-horizon overhead: the doubling wrapper against the known-T policy.

Both run on custom {0.9, 0.6} at T = 1e4 with 50 seeds; the interesting
number is the ratio of mean regrets.
"""

import sys

from constbandit import cli
from constbandit.cli import reports_from_json

if __name__ == "__main__":
    code = cli.main(["run", "--preset", "doubling_overhead", "--out", "results/doubling"])
    if code == 0:
        with open("results/doubling/results.json", encoding="utf-8") as fh:
            reports = reports_from_json(fh.read())
        wrapped = next(r.mean_regret for r in reports if r.policy == "doubling")
        known = next(r.mean_regret for r in reports if r.policy == "constspace")
        print(f"doubling overhead factor: {wrapped / known:.3f}")
    sys.exit(code)
