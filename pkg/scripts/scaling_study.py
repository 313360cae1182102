#!/usr/bin/env python3
"""Regret versus horizon for the halving schedule on a two-arm instance.

Reproduces the log-horizon scaling regime: 50 seeds per horizon over
T in {1e3, 1e4, 1e5, 1e6}, results under results/scaling/.
"""

import sys

from constbandit import cli

if __name__ == "__main__":
    sys.exit(cli.main(["run", "--preset", "log_scaling", "--out", "results/scaling"]))
