"""Step-driven bandit policies with word-level state accounting.

All policies sit behind one interface: ``select_arm()`` is a pure read
returning the arm to pull next, ``observe(reward)`` consumes the reward of
that arm and returns a transition report, ``state_words()`` counts the
machine-word registers retained between steps.

The round-based constant-space policy scans arms one at a time at a target
half-width ``g``, keeping only the best and second-best round means plus
the previous round's reference. Its register count is a fixed constant
regardless of the number of arms; the UCB1 baseline keeps per-arm tables
and exists to exhibit the Theta(K) contrast in the memory audit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .confidence import round_budget
from .schedules import GEOMETRIC, Schedule, next_precision

EXPLORE = "explore"
EXPLOIT = "exploit"

CONTINUE = "continue"
RULED_OUT = "ruled_out"
ARM_DONE = "arm_done"
ROUND_DONE = "round_done"
COMMITTED = "committed"


def default_delta(horizon: int) -> float:
    """Per-deviation failure probability 1/T^3, clamped to 1/8 for T < 2."""
    if horizon < 2:
        return 0.125
    return 1.0 / float(horizon) ** 3


@dataclass(frozen=True)
class PolicyConfig:
    """Named policy plus its schedule and optional confidence override."""

    name: str
    schedule: Schedule = GEOMETRIC
    delta_override: float | None = None

    def __post_init__(self):
        if self.name not in ("constspace", "doubling", "ucb1"):
            raise ValueError(f"unknown policy {self.name!r}")

    def schedule_label(self) -> str:
        return "-" if self.name == "ucb1" else self.schedule.label()


@dataclass(frozen=True)
class RoundClose:
    """Snapshot of a finished scan round, emitted by ``observe``.

    ``event`` is ROUND_DONE when the policy moves on to a finer round and
    COMMITTED when it enters the exploitation phase. Fields carry the
    closing round's values, taken before any reset.
    """

    event: str
    r: int
    g: float
    g_prev: float
    budget: int
    delta: float
    best: int
    mean_best: float
    second: int | None
    mean_second: float
    separated: bool


class ConstSpacePolicy:
    """Round-based UCB holding a constant number of scalar registers.

    Each round scans every arm in index order, pulling it up to ``budget``
    times; an arm whose upper confidence value drops below the previous
    round's best-arm reference (mean minus half the previous half-width) is
    abandoned early. Early abandonment is disabled in round 1, where no
    reference exists yet and every arm receives its full budget. At the end
    of a round the policy commits if the best and second-best round means
    are separated by more than ``g`` (or the horizon ran out), otherwise it
    shrinks ``g`` per its schedule and rescans.

    With a single arm there is nothing to compare; the policy commits to
    arm 0 at construction.
    """

    # Mutable scalar registers retained between steps. Configuration
    # (n_arms, schedule) counts as input, not estimator state.
    REGISTERS = (
        "phase",
        "r",
        "g",
        "g_prev",
        "budget",
        "scan_arm",
        "n",
        "mean_cur",
        "best",
        "mean_best",
        "second",
        "mean_second",
        "prev_best",
        "prev_mean",
        "t",
        "horizon",
        "delta",
        "log_inv_delta",
        "survivors",
        "separated",
    )

    def __init__(
        self,
        n_arms: int,
        horizon: int,
        schedule: Schedule = GEOMETRIC,
        delta: float | None = None,
    ):
        if n_arms < 1:
            raise ValueError("n_arms must be >= 1")
        if horizon < 1:
            raise ValueError("horizon must be >= 1")
        if delta is not None and not 0.0 < delta < 1.0:
            raise ValueError("delta must lie in (0, 1)")
        self.n_arms = n_arms
        self.schedule = schedule
        self.horizon = horizon
        self.delta = default_delta(horizon) if delta is None else delta
        self.log_inv_delta = math.log(1.0 / self.delta)
        self.t = 0
        self.r = 1
        self.g = 0.5
        self.g_prev = 0.5  # placeholder; never consulted while r == 1
        self.budget = round_budget(self.g, self.delta)
        self.scan_arm = 0
        self.n = 0
        self.mean_cur = 0.0
        self.best: int | None = None
        self.mean_best = 0.0
        self.second: int | None = None
        self.mean_second = 0.0
        self.prev_best: int | None = None
        self.prev_mean = 0.0
        self.survivors = 0
        self.separated = False
        self.phase = EXPLORE
        if n_arms == 1:
            self.best = 0
            self.phase = EXPLOIT

    @property
    def exploring(self) -> bool:
        return self.phase == EXPLORE

    def select_arm(self) -> int:
        """Arm to pull next; pure read. After the horizon is exhausted
        mid-scan the policy freezes on its best arm so far."""
        if self.phase == EXPLOIT:
            return self.best
        if self.t >= self.horizon:
            return self.best if self.best is not None else self.scan_arm
        return self.scan_arm

    def observe(self, reward: float):
        """Consume the reward of the arm ``select_arm`` returned.

        Returns CONTINUE, RULED_OUT or ARM_DONE for mid-round transitions,
        or a RoundClose when the observation finished a round. A rule-out
        on the round's final arm is reported through the RoundClose.
        """
        if not 0.0 <= reward <= 1.0:
            raise ValueError(f"reward must lie in [0, 1], got {reward!r}")
        if self.t >= self.horizon:
            raise RuntimeError("horizon exhausted: no further observations accepted")
        self.t += 1
        if self.phase == EXPLOIT:
            return CONTINUE
        n = self.n + 1
        self.n = n
        self.mean_cur = (self.mean_cur * (n - 1) + reward) / n
        if self.r > 1:
            radius = math.sqrt(self.log_inv_delta / (2.0 * n))
            ruled_out = self.mean_cur + radius < self.prev_mean - self.g_prev / 2.0
        else:
            ruled_out = False
        if not ruled_out and n < self.budget:
            return CONTINUE
        return self._finish_arm(ruled_out)

    def _finish_arm(self, ruled_out: bool):
        if not ruled_out:
            self.survivors += 1
        arm, mean = self.scan_arm, self.mean_cur
        if self.best is None or mean > self.mean_best:
            self.second, self.mean_second = self.best, self.mean_best
            self.best, self.mean_best = arm, mean
        elif self.second is None or mean > self.mean_second:
            self.second, self.mean_second = arm, mean
        if arm == self.n_arms - 1:
            return self._finish_round()
        self.scan_arm = arm + 1
        self.n = 0
        self.mean_cur = 0.0
        return RULED_OUT if ruled_out else ARM_DONE

    def _finish_round(self):
        separated = self.mean_best - self.g / 2.0 > self.mean_second + self.g / 2.0
        if separated or self.t >= self.horizon:
            self.phase = EXPLOIT
            self.separated = separated
            return RoundClose(
                COMMITTED, self.r, self.g, self.g_prev, self.budget, self.delta,
                self.best, self.mean_best, self.second, self.mean_second, separated,
            )
        close = RoundClose(
            ROUND_DONE, self.r, self.g, self.g_prev, self.budget, self.delta,
            self.best, self.mean_best, self.second, self.mean_second, False,
        )
        self.prev_best = self.best
        self.prev_mean = self.mean_best
        fraction = None
        if self.schedule.kind == "adaptive":
            fraction = max(self.survivors, 1) / self.n_arms
        self.g_prev = self.g
        self.g = next_precision(self.g, self.schedule, survivor_fraction=fraction)
        self.budget = round_budget(self.g, self.delta)
        self.r += 1
        self.scan_arm = 0
        self.n = 0
        self.mean_cur = 0.0
        self.best = None
        self.mean_best = 0.0
        self.second = None
        self.mean_second = 0.0
        self.survivors = 0
        return close

    def advance_exploitation(self, steps: int) -> None:
        """Skip ``steps`` exploitation pulls in bulk; rewards received while
        exploiting never touch any register, so this is step-equivalent."""
        if self.phase != EXPLOIT:
            raise RuntimeError("policy is still exploring")
        if steps < 0 or self.t + steps > self.horizon:
            raise ValueError("steps exceed the remaining horizon")
        self.t += steps

    def state_words(self) -> int:
        return len(self.REGISTERS)


class DoublingPolicy:
    """Anytime wrapper: restarts the constant-space policy with squared horizons.

    Level l runs the inner policy for exactly T_l steps with a fresh
    delta = 1/T_l^3, starting from T_0 = 10 and squaring, so T_l = 10^(2^l).
    """

    INITIAL_HORIZON = 10

    def __init__(self, n_arms: int, schedule: Schedule = GEOMETRIC):
        if n_arms < 1:
            raise ValueError("n_arms must be >= 1")
        self.n_arms = n_arms
        self.schedule = schedule
        self.level = 0
        self.level_horizon = self.INITIAL_HORIZON
        self.t_total = 0
        self.inner = ConstSpacePolicy(n_arms, self.level_horizon, schedule)

    @property
    def delta(self) -> float:
        return self.inner.delta

    @property
    def exploring(self) -> bool:
        return self.inner.exploring

    def select_arm(self) -> int:
        return self.inner.select_arm()

    def observe(self, reward: float):
        report = self.inner.observe(reward)
        self.t_total += 1
        if self.inner.t >= self.level_horizon:
            self.level += 1
            self.level_horizon = self.level_horizon**2
            self.inner = ConstSpacePolicy(self.n_arms, self.level_horizon, self.schedule)
        return report

    def state_words(self) -> int:
        # level, level_horizon and t_total on top of the inner registers
        return self.inner.state_words() + 3


class Ucb1Policy:
    """Classic index policy: mean plus sqrt(2 ln t / n), per-arm tables.

    Pulls every arm once first; afterwards plays the argmax index with
    ties going to the lowest arm id. Keeps 2K + 1 words of state.
    """

    def __init__(self, n_arms: int):
        if n_arms < 1:
            raise ValueError("n_arms must be >= 1")
        self.n_arms = n_arms
        self.counts = np.zeros(n_arms, dtype=np.int64)
        self.means = np.zeros(n_arms, dtype=np.float64)
        self.t = 0

    def select_arm(self) -> int:
        """Pure read; ``observe`` recomputes the same choice."""
        if self.t < self.n_arms:
            return self.t
        index = self.means + np.sqrt((2.0 * math.log(self.t)) / self.counts)
        return int(np.argmax(index))

    def observe(self, reward: float):
        if not 0.0 <= reward <= 1.0:
            raise ValueError(f"reward must lie in [0, 1], got {reward!r}")
        arm = self.select_arm()
        n = int(self.counts[arm]) + 1
        self.counts[arm] = n
        self.means[arm] = (self.means[arm] * (n - 1) + reward) / n
        self.t += 1
        return CONTINUE

    def state_words(self) -> int:
        return 2 * self.n_arms + 1


def make_policy(config: PolicyConfig, n_arms: int, horizon: int | None):
    """Fresh policy state for an episode.

    ``horizon=None`` means the horizon is unknown to the policy and selects
    the doubling wrapper for the round-based variants. The doubling wrapper
    always manages its own per-level confidence, so any delta override is
    rejected there.
    """
    if config.name == "ucb1":
        return Ucb1Policy(n_arms)
    if config.name == "doubling" or horizon is None:
        if config.delta_override is not None:
            raise ValueError("doubling wrapper sets delta per level; no override")
        return DoublingPolicy(n_arms, config.schedule)
    return ConstSpacePolicy(n_arms, horizon, config.schedule, delta=config.delta_override)
