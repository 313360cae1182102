import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from constbandit import (
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


def test_arm_means_and_validation():
    assert bernoulli(0.3).mean == 0.3
    assert point_mass(0.7).mean == 0.7
    assert beta_arm(2.0, 5.0).mean == pytest.approx(2.0 / 7.0)
    with pytest.raises(ValueError):
        bernoulli(1.2)
    with pytest.raises(ValueError):
        beta_arm(0.0, 1.0)
    with pytest.raises(ValueError):
        point_mass(-0.1)


def test_make_custom():
    inst = make_custom([0.9, 0.5])
    assert inst.gaps == (0.0, pytest.approx(0.4))
    assert inst.best == 0
    degenerate = make_custom([0.5, 0.5])
    assert degenerate.is_degenerate and degenerate.delta_min is None
    single = make_custom([0.2])
    assert single.n_arms == 1 and not single.is_degenerate
    with pytest.raises(ValueError):
        make_custom([])
    with pytest.raises(ValueError):
        make_custom([0.5, 1.4])


def test_make_linear_gaps():
    inst = make_linear_gaps(4)
    assert inst.means == (1.0, 0.75, 0.5, 0.25)
    assert inst.delta_min == pytest.approx(0.25)
    assert make_linear_gaps(2).delta_min == pytest.approx(0.5)
    assert make_linear_gaps(16).delta_min == pytest.approx(1.0 / 16.0)
    with pytest.raises(ValueError):
        make_linear_gaps(1)
    with pytest.raises(ValueError):
        make_linear_gaps(4, best_mean=0.5)  # ladder leaves [0, 1]


def test_make_two_group_layout():
    inst = make_two_group(4, s=0.5, low_gap=0.1, high_gap=0.5, best_mean=0.9)
    assert inst.means == (0.9, pytest.approx(0.8), pytest.approx(0.4), pytest.approx(0.4))
    assert inst.delta_min == pytest.approx(0.1)


def test_two_group_regimes():
    make_two_group(16, s=0.75, low_gap=0.02, high_gap=0.5, regime="ex1")
    with pytest.raises(ValueError):
        make_two_group(16, s=0.25, low_gap=0.02, high_gap=0.5, regime="ex1")  # minority
    make_two_group(50, s=0.08, low_gap=0.05, high_gap=0.5, regime="ex2")
    with pytest.raises(ValueError):
        make_two_group(50, s=0.4, low_gap=0.05, high_gap=0.5, regime="ex2")  # ratio test fails
    with pytest.raises(ValueError):
        make_two_group(8, s=0.5, low_gap=0.1, high_gap=0.5, regime="ex9")


def test_two_group_validation():
    with pytest.raises(ValueError):
        make_two_group(2, s=0.5, low_gap=0.1, high_gap=0.5)
    with pytest.raises(ValueError):
        make_two_group(8, s=0.5, low_gap=0.5, high_gap=0.1)
    with pytest.raises(ValueError):
        make_two_group(8, s=0.5, low_gap=0.1, high_gap=0.95)  # means leave [0, 1]


@given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=20))
def test_gap_invariants_match_brute_force(means):
    inst = make_custom(means)
    top = max(means)
    assert inst.gaps[inst.best] == 0.0
    assert all(g >= 0.0 for g in inst.gaps)
    positive = [top - m for m in means if top - m > 0.0]
    assert inst.delta_min == (min(positive) if positive else None)


def test_point_mass_and_extreme_bernoulli_draws():
    inst = BanditInstance((point_mass(0.7), bernoulli(1.0), bernoulli(0.0)), "x")
    stream = RewardStream(inst, 5)
    assert all(stream.draw(0) == 0.7 for _ in range(20))
    assert all(stream.draw(1) == 1.0 for _ in range(20))
    assert all(stream.draw(2) == 0.0 for _ in range(20))
    with pytest.raises(IndexError):
        stream.draw(3)


def test_streams_reproducible_and_seed_sensitive():
    inst = make_custom([0.5, 0.5])
    a = RewardStream(inst, 123)
    b = RewardStream(inst, 123)
    assert [a.draw(0) for _ in range(200)] == [b.draw(0) for _ in range(200)]
    c = RewardStream(inst, 124)
    assert [a.draw(1) for _ in range(100)] != [c.draw(1) for _ in range(100)]


def test_streams_indexed_by_arm_and_pull_count():
    # interleaving draws across arms must not perturb any arm's own stream
    inst = make_custom([0.4, 0.6, 0.8])
    solo = RewardStream(inst, 9)
    expected = [solo.draw(1) for _ in range(300)]
    mixed = RewardStream(inst, 9)
    got = []
    for i in range(300):
        mixed.draw(0)
        got.append(mixed.draw(1))
        mixed.draw(2)
        mixed.draw(0)
    assert got == expected


def test_golden_stream_values():
    # pins the PRNG construction (PCG64 per arm via spawn_key) across versions
    inst = make_custom([0.5, 0.3])
    stream = RewardStream(inst, 42)
    assert [stream.draw(0) for _ in range(8)] == [0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0]
    assert [stream.draw(1) for _ in range(8)] == [0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]
    beta_inst = BanditInstance((beta_arm(2.0, 5.0),), "b")
    beta_stream = RewardStream(beta_inst, 42)
    first = [beta_stream.draw(0) for _ in range(3)]
    assert first == pytest.approx([0.324051827664, 0.650658430062, 0.558398397551], abs=1e-11)


def test_empirical_means_match_declared_means():
    inst = BanditInstance((bernoulli(0.5), beta_arm(2.0, 5.0), point_mass(0.3)), "mix")
    stream = RewardStream(inst, 77)
    n = 10**5
    tol = 5.0 * math.sqrt(0.25 / n)
    for arm in range(inst.n_arms):
        mean = sum(stream.draw(arm) for _ in range(n)) / n
        assert abs(mean - inst.means[arm]) < tol


def test_bernoulli_long_run_mean():
    inst = make_custom([0.3])
    stream = RewardStream(inst, 2024)
    n = 10**6
    mean = sum(stream.draw(0) for _ in range(n)) / n
    assert abs(mean - 0.3) < 0.002  # ~3 sigma for a binomial proportion


def test_build_preset_dispatch():
    assert build_preset("linear", K=4).label == "linear(K=4)"
    assert build_preset("custom", means=[0.9, 0.6]).n_arms == 2
    assert build_preset("two_group").n_arms == 8
    assert build_preset("two_group_ex1").delta_min == pytest.approx(0.02)
    assert build_preset("two_group_ex2").n_arms == 50
    with pytest.raises(ValueError):
        build_preset("custom")  # means missing
    with pytest.raises(ValueError):
        build_preset("mystery")
    with pytest.raises(ValueError):
        build_preset("linear", K=4, wings=2)
