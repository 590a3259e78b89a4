import math

import numpy as np
import pytest

from hsbound.config import RunConfig
from hsbound.errors import InvalidArgumentError
from hsbound.gtable import (
    EXACT,
    MONTE_CARLO,
    MCEstimate,
    build_gtable,
    estimate_g_tilde,
    exact_form,
    exact_g_tilde,
)
from hsbound.verify import g1_pair_grid, g2_pair_quadrature


@pytest.mark.parametrize("d", [1, 2, 3, 5, 8])
def test_exact_definitional(d):
    assert exact_g_tilde(d, 0) == 1.0
    assert exact_g_tilde(d, 1) == 1.0


def test_exact_closed_forms():
    assert exact_g_tilde(2, 2) == pytest.approx(0.4134966715, abs=1e-10)
    assert exact_g_tilde(1, 2) == 0.25
    assert exact_g_tilde(1, 3) == 0.0
    assert exact_g_tilde(1, 7) == 0.0
    assert exact_g_tilde(2, 6) == 0.0
    assert exact_g_tilde(3, 27) == 0.0
    assert exact_g_tilde(3, 2) is None
    assert exact_g_tilde(2, 3) is None
    assert exact_form(2, 2) == "3*sqrt(3)/(4*pi)"


def test_exact_against_independent_quadrature():
    assert abs(exact_g_tilde(2, 2) - g2_pair_quadrature()) < 1e-12
    # midpoint grid at step 1e-3 has O(step) boundary error
    assert abs(exact_g_tilde(1, 2) - g1_pair_grid(1e-3)) < 1e-3


def test_exact_rejects_negative_k():
    with pytest.raises(InvalidArgumentError):
        exact_g_tilde(2, -1)


def test_mc_estimate_fields():
    e = MCEstimate.from_counts(250, 1000)
    assert e.mean == 0.25
    assert e.std_error == math.sqrt(0.25 * 0.75 / 1000)
    assert e.ci_low <= e.mean <= e.ci_high
    z = MCEstimate.from_counts(0, 10**6)
    assert (z.ci_low, z.ci_high) == (0.0, 3e-6)


def test_d1_pair_estimate():
    e = estimate_g_tilde(1, 2, 10**6, master_seed=1)
    assert abs(e.mean - 0.25) < 0.002
    assert abs(e.mean - 0.25) < 5 * e.std_error


def test_d2_pair_estimate_agrees_with_closed_form():
    e = estimate_g_tilde(2, 2, 10**6, master_seed=2)
    assert abs(e.mean - exact_g_tilde(2, 2)) < 5 * e.std_error


@pytest.mark.slow
def test_d1_three_points_never_fit():
    assert estimate_g_tilde(1, 3, 10**7).hits == 0


@pytest.mark.slow
def test_d2_six_points_never_fit():
    assert estimate_g_tilde(2, 6, 10**7).hits == 0


@pytest.mark.parametrize("k", [0, 1])
def test_trivial_k_all_hits(k):
    e = estimate_g_tilde(3, k, 12345)
    assert e.hits == e.samples == 12345


def test_estimate_independent_of_workers():
    runs = [estimate_g_tilde(2, 3, 123_457, master_seed=9, chunk_size=10_000, workers=w) for w in (1, 3, 8)]
    assert runs[0] == runs[1] == runs[2]


def test_estimate_depends_on_seed():
    a = estimate_g_tilde(2, 3, 50_000, master_seed=1, chunk_size=5_000)
    b = estimate_g_tilde(2, 3, 50_000, master_seed=2, chunk_size=5_000)
    assert a.hits != b.hits


def test_std_error_sqrt2_law():
    ratios = []
    for seed in range(10):
        a = estimate_g_tilde(2, 2, 20_000, master_seed=seed, chunk_size=5_000)
        b = estimate_g_tilde(2, 2, 40_000, master_seed=seed, chunk_size=5_000)
        ratios.append(b.std_error / a.std_error)
    assert 0.65 <= np.mean(ratios) <= 0.75


def test_estimate_rejects_bad_arguments():
    with pytest.raises(InvalidArgumentError):
        estimate_g_tilde(2, 2, 0)
    with pytest.raises(InvalidArgumentError):
        estimate_g_tilde(2, 2, 10, confidence_level=1.0)


def test_build_d1_table():
    t = build_gtable(RunConfig(d=1))
    assert t.values() == [1.0, 1.0, 0.25]
    assert t.k_max == 2
    assert t.terminal.k == 3 and t.terminal.value == 0.0 and t.terminal.source == EXACT
    assert all(e.source == EXACT for e in t.entries)


def test_small_d2_table_shape(small_d2_table):
    t = small_d2_table
    assert t.values()[:3] == [1.0, 1.0, exact_g_tilde(2, 2)]
    assert t.k_max == len(t.entries) - 1
    vals = t.values()
    assert all(0 <= v <= 1 for v in vals)
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    for e in t.entries:
        if e.source == MONTE_CARLO:
            assert e.value == e.estimate.mean
    # 2e5 samples cannot see g~_2(5) ~ 5e-7: stops on a zero-hit run
    assert t.k_max == 4
    assert t.terminal.source == MONTE_CARLO and t.terminal.estimate.hits == 0
    assert t.terminal.estimate.ci_high == 3 / 200_000
    assert "0 hits for k=5" in t.truncation_note


def test_build_is_deterministic():
    cfg = RunConfig(d=3, samples_per_k=20_000, chunk_size=3_000, master_seed=5)
    assert build_gtable(cfg, workers=1) == build_gtable(cfg, workers=4)


def test_relative_error_warning():
    t = build_gtable(RunConfig(d=2, samples_per_k=20_000, chunk_size=20_000, rel_error_target=0.01))
    assert "relative error" in t.truncation_note


def test_d3_table_properties():
    t = build_gtable(RunConfig(d=3, samples_per_k=10**5, chunk_size=10**4))
    vals = t.values()
    assert vals[:2] == [1.0, 1.0]
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    assert t.k_max >= 4
