"""Episode runner, pseudo-regret ledger, guarantee checks and memory audit.

The harness, unlike the policies it drives, is allowed O(K) memory: it
keeps per-arm pull tallies, recomputes each round's running means from the
observed rewards, and compares them against the true means (which it
knows) to flag the clean event: every recorded round estimate staying
within its Hoeffding radius of the truth. The conditional guarantees of
the round-based policy are checked only on clean episodes.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from statistics import fmean, stdev

from .bounds import regret_bound, rmax_bound
from .envs import BanditInstance, RewardStream, make_linear_gaps
from .policies import (
    COMMITTED,
    EXPLOIT,
    ConstSpacePolicy,
    DoublingPolicy,
    PolicyConfig,
    RoundClose,
    make_policy,
)

ACTION_LOG_MAX = 100_000


@dataclass(frozen=True)
class RoundRecord:
    """Harness-side record of one completed scan round."""

    r: int
    level: int
    g: float
    g_prev: float
    budget: int
    delta: float
    pulls: tuple[int, ...]
    best: int
    mean_best: float
    second: int | None
    mean_second: float
    event: str


@dataclass
class EpisodeTrace:
    n_arms: int
    horizon: int
    steps: int
    pull_counts: list[int]
    round_log: list[RoundRecord] | None
    action_log: list[int] | None
    trajectory: list[tuple[int, float]] | None
    clean_event: bool
    r_max_observed: int
    committed_arm: int | None
    separated: bool
    frozen: bool
    level_log: list[tuple[int, int, int]] | None
    delta: float | None
    policy_words: int


def _checkpoints(horizon: int) -> list[int]:
    cps = []
    c = 1
    while c < horizon:
        cps.append(c)
        c *= 2
    cps.append(horizon)
    return cps


def run_episode(
    policy_config: PolicyConfig,
    instance: BanditInstance,
    horizon: int,
    seed: int,
    *,
    action_log: bool | None = None,
    keep_round_log: bool = True,
    collect_trajectory: bool = True,
    fast_exploit: bool = True,
) -> EpisodeTrace:
    """Drive one policy through ``horizon`` select/sample/observe steps.

    ``action_log`` defaults to on for horizons up to 100k. ``fast_exploit``
    fast-forwards the committed exploitation phase in bulk; rewards drawn
    there never influence the policy or the pseudo-regret (which is a pull
    count times gap sum), so the resulting trace is step-equivalent.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    n_arms = instance.n_arms
    known_horizon = None if policy_config.name == "doubling" else horizon
    policy = make_policy(policy_config, n_arms, known_horizon)
    stream = RewardStream(instance, seed)
    true_means = instance.means
    gaps = instance.gaps

    if action_log is None:
        action_log = horizon <= ACTION_LOG_MAX
    actions: list[int] | None = [] if action_log else None

    wrapper = policy if isinstance(policy, DoublingPolicy) else None
    constspace = wrapper is not None or isinstance(policy, ConstSpacePolicy)
    round_records: list[RoundRecord] | None = [] if constspace and keep_round_log else None

    pull_counts = [0] * n_arms
    round_pulls = [0] * n_arms
    round_means = [0.0] * n_arms
    clean = True
    completed_rounds = 0
    rmax_seen = 0
    level = 0
    level_horizon = wrapper.level_horizon if wrapper else horizon
    level_log: list[tuple[int, int, int]] | None = [] if wrapper else None

    delta = policy.delta if constspace else None
    log_inv_delta = math.log(1.0 / delta) if constspace else 0.0

    checkpoints = _checkpoints(horizon) if collect_trajectory else None
    trajectory: list[tuple[int, float]] | None = [] if collect_trajectory else None
    cp_idx = 0
    cum_gap = 0.0

    exploring = policy.exploring if constspace else False
    t = 0
    while t < horizon:
        if fast_exploit and constspace and wrapper is None and not exploring:
            remaining = horizon - t
            arm = policy.best
            policy.advance_exploitation(remaining)
            pull_counts[arm] += remaining
            gap_arm = gaps[arm]
            if actions is not None:
                actions.extend([arm] * remaining)
            if trajectory is not None:
                while cp_idx < len(checkpoints):
                    cp = checkpoints[cp_idx]
                    trajectory.append((cp, cum_gap + gap_arm * (cp - t)))
                    cp_idx += 1
            cum_gap += gap_arm * remaining
            t = horizon
            break

        arm = policy.select_arm()
        reward = stream.draw(arm)
        report = policy.observe(reward)
        t += 1
        pull_counts[arm] += 1
        cum_gap += gaps[arm]
        if actions is not None:
            actions.append(arm)
        if trajectory is not None and cp_idx < len(checkpoints) and t == checkpoints[cp_idx]:
            trajectory.append((t, cum_gap))
            cp_idx += 1

        if exploring:
            n = round_pulls[arm] + 1
            round_pulls[arm] = n
            m = (round_means[arm] * (n - 1) + reward) / n
            round_means[arm] = m
            if clean and abs(m - true_means[arm]) > math.sqrt(log_inv_delta / (2.0 * n)):
                clean = False

        if constspace:
            if type(report) is RoundClose:
                completed_rounds += 1
                if report.event == COMMITTED:
                    exploring = False
                if round_records is not None:
                    round_records.append(
                        RoundRecord(
                            r=report.r,
                            level=level,
                            g=report.g,
                            g_prev=report.g_prev,
                            budget=report.budget,
                            delta=report.delta,
                            pulls=tuple(round_pulls),
                            best=report.best,
                            mean_best=report.mean_best,
                            second=report.second,
                            mean_second=report.mean_second,
                            event=report.event,
                        )
                    )
                for i in range(n_arms):
                    round_pulls[i] = 0
                    round_means[i] = 0.0
            if wrapper is not None and wrapper.level != level:
                level_log.append((level, level_horizon, level_horizon))
                rmax_seen = max(rmax_seen, completed_rounds - 1)
                completed_rounds = 0
                level = wrapper.level
                level_horizon = wrapper.level_horizon
                delta = wrapper.delta
                log_inv_delta = math.log(1.0 / delta)
                exploring = wrapper.exploring
                for i in range(n_arms):
                    round_pulls[i] = 0
                    round_means[i] = 0.0

    if wrapper is not None:
        level_log.append((level, level_horizon, wrapper.inner.t))
    rmax_seen = max(rmax_seen, completed_rounds - 1)

    if constspace:
        inner = wrapper.inner if wrapper else policy
        committed_arm = inner.best if inner.phase == EXPLOIT else None
        separated = inner.separated
        frozen = inner.phase != EXPLOIT
        delta_final = inner.delta
    else:
        committed_arm = None
        separated = False
        frozen = False
        delta_final = None

    return EpisodeTrace(
        n_arms=n_arms,
        horizon=horizon,
        steps=t,
        pull_counts=pull_counts,
        round_log=round_records,
        action_log=actions,
        trajectory=trajectory,
        clean_event=clean if constspace else True,
        r_max_observed=max(0, rmax_seen),
        committed_arm=committed_arm,
        separated=separated,
        frozen=frozen,
        level_log=level_log,
        delta=delta_final,
        policy_words=policy.state_words(),
    )


def pseudo_regret(trace: EpisodeTrace, instance: BanditInstance) -> float:
    """Realized pseudo-regret: sum over arms of pull count times gap."""
    if len(trace.pull_counts) != instance.n_arms:
        raise ValueError("trace and instance arm counts differ")
    return math.fsum(n * g for n, g in zip(trace.pull_counts, instance.gaps))


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    passed: bool
    vacuous: bool = False
    detail: str = ""


@dataclass(frozen=True)
class LemmaReport:
    clean_event: bool
    checks: tuple[LemmaCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks if not c.vacuous)

    @property
    def failures(self) -> tuple[LemmaCheck, ...]:
        return tuple(c for c in self.checks if not c.vacuous and not c.passed)


CHECK_NAMES = (
    "best_arm_full_budget",
    "true_best_full_budget",
    "best_mean_accuracy",
    "round_count_cap",
    "per_arm_pull_cap",
)


def check_lemma_assertions(
    trace: EpisodeTrace, instance: BanditInstance, policy_config: PolicyConfig
) -> LemmaReport:
    """Verify the conditional per-round guarantees against a recorded trace.

    All checks are conditional on the clean event; on unclean episodes every
    check is reported vacuous. Checked per completed round: the round's
    reported best arm and the true best arm received their full budget
    (neither was ruled out early); the reported best mean sits within g/2 of
    the true best mean; the number of completed rounds respects the
    schedule's cap; and every arm's pull count respects both the budget and,
    when its gap exceeds the previous half-width, the early-rule-out cap
    2 ln(1/delta) / (gap - g_prev)^2 + 1.
    """
    if trace.round_log is None:
        raise ValueError("trace has no round log; rerun with keep_round_log=True")
    delta_min = instance.delta_min
    if delta_min is None:
        raise ValueError("instance has no positive gap; guarantees are undefined")
    if not trace.clean_event:
        checks = tuple(
            LemmaCheck(name, True, vacuous=True, detail="clean event failed")
            for name in CHECK_NAMES
        )
        return LemmaReport(False, checks)

    gaps = instance.gaps
    true_best = instance.best
    mu_star = instance.means[true_best]

    def per_round(name, predicate):
        for rec in trace.round_log:
            ok, detail = predicate(rec)
            if not ok:
                return LemmaCheck(name, False, detail=f"round {rec.r} (level {rec.level}): {detail}")
        return LemmaCheck(name, True)

    def best_full(rec):
        got = rec.pulls[rec.best]
        return got == rec.budget, f"best arm {rec.best} pulled {got} of {rec.budget}"

    def true_best_full(rec):
        got = rec.pulls[true_best]
        return got == rec.budget, f"true best arm {true_best} pulled {got} of {rec.budget}"

    def accuracy(rec):
        err = abs(rec.mean_best - mu_star)
        return err <= rec.g / 2.0, f"|mean_best - mu*| = {err:.6g} > g/2 = {rec.g / 2.0:.6g}"

    def pull_cap(rec):
        log_inv = math.log(1.0 / rec.delta)
        for arm, pulled in enumerate(rec.pulls):
            if pulled > rec.budget:
                return False, f"arm {arm} pulled {pulled} over budget {rec.budget}"
            gap = gaps[arm]
            if gap > rec.g_prev:
                cap = 2.0 * log_inv / (gap - rec.g_prev) ** 2 + 1.0
                if pulled > cap:
                    return False, f"arm {arm} pulled {pulled} over rule-out cap {cap:.3f}"
        return True, ""

    cap = rmax_bound(delta_min, policy_config.schedule)
    round_count = LemmaCheck(
        "round_count_cap",
        trace.r_max_observed <= cap,
        detail="" if trace.r_max_observed <= cap else f"r_max {trace.r_max_observed} > cap {cap}",
    )

    checks = (
        per_round("best_arm_full_budget", best_full),
        per_round("true_best_full_budget", true_best_full),
        per_round("best_mean_accuracy", accuracy),
        round_count,
        per_round("per_arm_pull_cap", pull_cap),
    )
    return LemmaReport(True, checks)


@dataclass
class RegretReport:
    """Aggregated result for one (policy, instance, horizon) cell."""

    policy: str
    schedule: str
    instance: str
    n_arms: int
    horizon: int
    seeds: list[int]
    regrets: list[float]
    mean_regret: float
    stddev_regret: float
    bound_value: float
    state_words: int
    r_max_mean: float
    clean_event_rate: float
    best_commit_rate: float
    trajectory_mean: list[list[float]] = field(default_factory=list)
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "RegretReport":
        return cls(**d)


def _cell_seeds(base_seed: int, cell_index: int, n_seeds: int) -> list[int]:
    return [base_seed + cell_index * n_seeds + k for k in range(n_seeds)]


def _run_cell(cell):
    index, policy_config, instance, horizon, seeds, collect_trajectory = cell
    label_kwargs = dict(
        policy=policy_config.name,
        schedule=policy_config.schedule_label(),
        instance=instance.label,
        n_arms=instance.n_arms,
        horizon=horizon,
        seeds=list(seeds),
    )
    try:
        traces = [
            run_episode(
                policy_config,
                instance,
                horizon,
                seed,
                action_log=False,
                collect_trajectory=collect_trajectory,
            )
            for seed in seeds
        ]
        regrets = [pseudo_regret(tr, instance) for tr in traces]
        try:
            bound = regret_bound(instance.gap_profile, horizon, policy_config.schedule)
        except ValueError:
            bound = float("nan")
        words = make_policy(
            policy_config, instance.n_arms, None if policy_config.name == "doubling" else horizon
        ).state_words()
        trajectory_mean: list[list[float]] = []
        if collect_trajectory:
            for idx in range(len(traces[0].trajectory)):
                tick = traces[0].trajectory[idx][0]
                trajectory_mean.append([tick, fmean(tr.trajectory[idx][1] for tr in traces)])
        report = RegretReport(
            **label_kwargs,
            regrets=regrets,
            mean_regret=fmean(regrets),
            stddev_regret=stdev(regrets) if len(regrets) > 1 else 0.0,
            bound_value=bound,
            state_words=words,
            r_max_mean=fmean(tr.r_max_observed for tr in traces),
            clean_event_rate=fmean(1.0 if tr.clean_event else 0.0 for tr in traces),
            best_commit_rate=fmean(
                1.0 if tr.committed_arm == instance.best else 0.0 for tr in traces
            ),
            trajectory_mean=trajectory_mean,
        )
    except Exception as exc:  # a failed cell is recorded, not fatal to the suite
        report = RegretReport(
            **label_kwargs,
            regrets=[],
            mean_regret=float("nan"),
            stddev_regret=float("nan"),
            bound_value=float("nan"),
            state_words=0,
            r_max_mean=float("nan"),
            clean_event_rate=float("nan"),
            best_commit_rate=float("nan"),
            error=f"{type(exc).__name__}: {exc}",
        )
    return index, report


def run_suite(
    policy_configs,
    instances,
    horizons,
    n_seeds: int,
    base_seed: int = 0,
    jobs: int = 1,
    collect_trajectory: bool = True,
) -> list[RegretReport]:
    """Full cross-product of cells, each aggregated over its own seed block.

    Episode seeds are ``base_seed + cell_index * n_seeds + k`` so results
    are independent of execution order and of ``jobs``.
    """
    if not policy_configs or not instances or not horizons:
        raise ValueError("policies, instances and horizons must be non-empty")
    if n_seeds < 1:
        raise ValueError("n_seeds must be >= 1")
    cells = []
    for index, (cfg, inst, horizon) in enumerate(product(policy_configs, instances, horizons)):
        seeds = _cell_seeds(base_seed, index, n_seeds)
        cells.append((index, cfg, inst, horizon, seeds, collect_trajectory))
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, cells))
    else:
        results = [_run_cell(cell) for cell in cells]
    results.sort(key=lambda pair: pair[0])
    return [report for _, report in results]


@dataclass(frozen=True)
class MemoryAuditRow:
    policy: str
    schedule: str
    n_arms: int
    words_at_reset: int
    words_peak: int


def memory_audit(
    policy_configs,
    K_grid,
    *,
    steps: int = 64,
    horizon: int = 100_000,
    seed: int = 0,
) -> list[MemoryAuditRow]:
    """State words at reset and at peak over a short driven episode, per K.

    The episode is deliberately short; the point is to sample the register
    count while the policy actually runs, catching transient per-arm
    allocation.
    """
    if not K_grid:
        raise ValueError("K grid must be non-empty")
    rows = []
    instances = {K: make_linear_gaps(K) if K >= 2 else None for K in K_grid}
    for cfg in policy_configs:
        for K in K_grid:
            instance = instances[K]
            if instance is None:
                raise ValueError("memory audit needs K >= 2")
            policy = make_policy(cfg, K, None if cfg.name == "doubling" else horizon)
            at_reset = policy.state_words()
            peak = at_reset
            stream = RewardStream(instance, seed)
            for _ in range(min(steps, horizon)):
                arm = policy.select_arm()
                policy.observe(stream.draw(arm))
                peak = max(peak, policy.state_words())
            rows.append(
                MemoryAuditRow(cfg.name, cfg.schedule_label(), K, at_reset, peak)
            )
    return rows
