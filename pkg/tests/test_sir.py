import math

import numpy as np
import pytest

from cyclerank.ranking import RankResult
from cyclerank.sir import (SirConfig, ThresholdUndefinedError, beta_c,
                           select_seeds, simulate)

from conftest import complete_graph, path_graph, star_graph, triangle
from oracles import random_graph


def test_config_validation():
    g = triangle()
    with pytest.raises(ValueError):
        simulate(g, SirConfig(beta=1.5, seeds=(0,)))
    with pytest.raises(ValueError):
        simulate(g, SirConfig(beta=0.5, mu=0.0, seeds=(0,)))
    with pytest.raises(ValueError):
        simulate(g, SirConfig(beta=0.5, seeds=()))
    with pytest.raises(ValueError):
        simulate(g, SirConfig(beta=0.5, seeds=(7,)))
    with pytest.raises(ValueError):
        simulate(g, SirConfig(beta=0.5, seeds=(0,), runs=0))


def test_beta_c_values():
    assert beta_c(complete_graph(5)) == 0.5  # 4-regular: 4 / (16 - 8)
    assert beta_c(complete_graph(4)) == 1.0  # 3-regular: 3 / (9 - 6)
    with pytest.raises(ThresholdUndefinedError):
        beta_c(path_graph(3))


def test_beta_zero_is_exact():
    g = random_graph(37, 0.15, np.random.default_rng(5))
    out = simulate(g, SirConfig(beta=0.0, seeds=(0, 5, 9), runs=64))
    assert out.r_mean == 3 / g.n
    assert out.r_std == 0.0
    assert np.all(out.per_run == 3 / g.n)


def test_deterministic_limits():
    star = star_graph(10)
    center = star.labels.index("c")
    out = simulate(star, SirConfig(beta=1.0, mu=1.0, seeds=(center,), runs=16))
    assert out.r_mean == 1.0
    tri = triangle()
    out_tri = simulate(tri, SirConfig(beta=1.0, mu=1.0, seeds=(0,), runs=16))
    assert out_tri.r_mean == 1.0


def test_state_conservation_and_monotone_recovered():
    g = random_graph(40, 0.1, np.random.default_rng(11))
    out = simulate(g, SirConfig(beta=0.4, mu=0.5, seeds=(0, 1), runs=25),
                   record=True)
    assert out.trajectories is not None and len(out.trajectories) == 25
    for traj in out.trajectories:
        assert np.all(traj.sum(axis=1) == g.n)
        recovered = traj[:, 2]
        assert np.all(np.diff(recovered) >= 0)
        assert traj[-1, 1] == 0  # runs end with no infectious nodes
    lengths = out.trajectory_lengths()
    assert all(l >= 1 for l in lengths)


def test_simulation_is_deterministic():
    g = random_graph(30, 0.2, np.random.default_rng(3))
    cfg = SirConfig(beta=0.3, mu=0.5, seeds=(1, 2), runs=40, rng_seed=99)
    a = simulate(g, cfg)
    b = simulate(g, cfg)
    assert np.array_equal(a.per_run, b.per_run)
    assert a.r_mean == b.r_mean and a.r_std == b.r_std


def _rank_of_equal_scores(n):
    width = len(str(n - 1))
    labels = tuple(f"{i:0{width}d}" for i in range(n))
    return RankResult.from_scores("dc", np.zeros(n), labels)


def test_select_seeds_counts():
    assert len(select_seeds(_rank_of_equal_scores(1000), 0.02)) == 20
    assert len(select_seeds(_rank_of_equal_scores(1133), 0.03)) == 34
    assert len(select_seeds(_rank_of_equal_scores(10), 1.0)) == 10
    with pytest.raises(ValueError):
        select_seeds(_rank_of_equal_scores(10), 0.0)


def test_select_seeds_tie_break_is_lowest_labels():
    r = _rank_of_equal_scores(100)
    picked = select_seeds(r, 0.02)
    assert [r.labels[i] for i in picked] == ["00", "01"]


def _paired_mean_diff(high, low):
    diff = high.per_run - low.per_run
    se = diff.std(ddof=1) / math.sqrt(len(diff))
    return diff.mean(), se


def test_mean_r_monotone_in_beta():
    g = random_graph(60, 0.08, np.random.default_rng(21))
    seeds = (0, 1, 2)
    lo = simulate(g, SirConfig(beta=0.10, mu=0.5, seeds=seeds, runs=1200))
    hi = simulate(g, SirConfig(beta=0.22, mu=0.5, seeds=seeds, runs=1200))
    mean, se = _paired_mean_diff(hi, lo)
    assert mean > -3 * se  # non-decreasing at 3-sigma


def test_mean_r_monotone_in_seed_count():
    g = random_graph(60, 0.08, np.random.default_rng(22))
    few = simulate(g, SirConfig(beta=0.12, mu=0.5, seeds=(0, 1), runs=1200))
    many = simulate(g, SirConfig(beta=0.12, mu=0.5, seeds=(0, 1, 2, 3, 4, 5),
                                 runs=1200))
    mean, se = _paired_mean_diff(many, few)
    assert mean > -3 * se
