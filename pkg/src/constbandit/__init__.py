"""Constant-space stochastic bandit policies and a seeded measurement harness."""

from .bounds import GapProfile, regret_bound, rmax_bound
from .confidence import hoeffding_radius, round_budget
from .envs import (
    Arm,
    BanditInstance,
    RewardStream,
    bernoulli,
    beta_arm,
    build_preset,
    make_custom,
    make_linear_gaps,
    make_two_group,
    point_mass,
)
from .policies import (
    ARM_DONE,
    COMMITTED,
    CONTINUE,
    ConstSpacePolicy,
    DoublingPolicy,
    PolicyConfig,
    ROUND_DONE,
    RULED_OUT,
    RoundClose,
    Ucb1Policy,
    default_delta,
    make_policy,
)
from .schedules import (
    ADAPTIVE_RATIO,
    GEOMETRIC,
    Schedule,
    next_precision,
    polylog,
    polylog_rounds_bound,
    rounds_to_precision,
)
from .simulator import (
    EpisodeTrace,
    LemmaReport,
    MemoryAuditRow,
    RegretReport,
    RoundRecord,
    check_lemma_assertions,
    memory_audit,
    pseudo_regret,
    run_episode,
    run_suite,
)

__all__ = [
    "ADAPTIVE_RATIO",
    "ARM_DONE",
    "Arm",
    "BanditInstance",
    "COMMITTED",
    "CONTINUE",
    "ConstSpacePolicy",
    "DoublingPolicy",
    "EpisodeTrace",
    "GEOMETRIC",
    "GapProfile",
    "LemmaReport",
    "MemoryAuditRow",
    "PolicyConfig",
    "ROUND_DONE",
    "RULED_OUT",
    "RegretReport",
    "RewardStream",
    "RoundClose",
    "RoundRecord",
    "Schedule",
    "Ucb1Policy",
    "bernoulli",
    "beta_arm",
    "build_preset",
    "check_lemma_assertions",
    "default_delta",
    "hoeffding_radius",
    "make_custom",
    "make_linear_gaps",
    "make_policy",
    "make_two_group",
    "memory_audit",
    "next_precision",
    "point_mass",
    "polylog",
    "polylog_rounds_bound",
    "pseudo_regret",
    "regret_bound",
    "rmax_bound",
    "round_budget",
    "rounds_to_precision",
    "run_episode",
    "run_suite",
]
