"""Smoke tests for the scnperf extension module."""

import math

import pytest

import scnperf


@pytest.fixture(scope="module")
def env():
    return scnperf.preset_3gpp_case1()


def test_preset_parameters(env):
    assert env.tx_power_mw == pytest.approx(10 ** 2.4, rel=1e-12)
    assert env.noise_mw == pytest.approx(10 ** -9.5, rel=1e-12)
    assert env.segment_count() == 2
    # Field-test constants are recovered at the 1 m reference distance.
    assert scnperf.path_gain(env, 1e-3, True) == pytest.approx(10 ** -4.11, rel=1e-12)
    assert scnperf.path_gain(env, 1e-3, False) == pytest.approx(10 ** -3.29, rel=1e-12)
    assert scnperf.los_probability(env, 0.15) == pytest.approx(0.5)
    assert scnperf.los_probability(env, 0.31) == 0.0


def test_special_functions():
    assert scnperf.hyp2f1_nonpos(1.0, 0.5, 1.5, 0.0) == 1.0
    got = scnperf.hyp2f1_nonpos(1.0, 1.0, 2.0, -1.0)
    assert got == pytest.approx(math.log(2.0), rel=1e-12)
    d, beta = 0.3, 1.0
    assert scnperf.interference_integral_near(3.75, beta, 0.0, d) == pytest.approx(
        d ** (beta + 1) / (beta + 1), rel=1e-15
    )
    with pytest.raises(ValueError):
        scnperf.interference_integral_far(2.0, 1.0, 1.0, 0.3)


def test_coverage_engines_agree(env):
    closed = scnperf.coverage_case1(env, 10.0, 1.0)
    general = scnperf.coverage_general(env, 10.0, 1.0)
    assert closed.value == pytest.approx(general.value, abs=1e-5)
    assert 0.0 <= closed.value <= 1.0
    segments = {(seg, los) for seg, los, _ in closed.term_breakdown}
    assert (1, True) in segments  # the far-LoS slot exists...
    far_los = [v for seg, los, v in closed.term_breakdown if seg == 1 and los]
    assert far_los == [0.0]  # ...and is identically zero


def test_ase_positive_and_increasing_when_sparse(env):
    lo = scnperf.area_spectral_efficiency(env, 2.0, 1.0)
    hi = scnperf.area_spectral_efficiency(env, 8.0, 1.0)
    assert 0.0 < lo.value < hi.value


def test_monte_carlo_matches_analytic(env):
    cfg = scnperf.SimulationConfig(lambda_=10.0, trials=20000, seed=5, gamma_list=[1.0])
    result = scnperf.estimate_coverage(cfg, env)
    assert result.trials == 20000
    gamma, est = result.coverage[0]
    assert gamma == 1.0
    analytic = scnperf.coverage_case1(env, 10.0, 1.0).value
    assert abs(est.value - analytic) <= max(3.0 * est.std_error, 0.01)


def test_monte_carlo_is_deterministic(env):
    cfg = scnperf.SimulationConfig(lambda_=25.0, trials=3000, seed=11, gamma_list=[1.0])
    a = scnperf.estimate_coverage(cfg, env, threads=1)
    b = scnperf.estimate_coverage(cfg, env, threads=3)
    assert a.coverage[0][1].value == b.coverage[0][1].value
    assert a.ase.value == b.ase.value


def test_network_generation(env):
    cfg = scnperf.SimulationConfig(lambda_=50.0, region_radius=1.0, trials=1)
    net = scnperf.generate_network(cfg, env, scnperf.RngStream(seed=2, stream=0))
    assert len(net) > 0
    sinr = scnperf.sinr_of_typical_ue(net, env)
    assert sinr is None or sinr > 0.0
    empty = scnperf.RealizedNetwork()
    assert scnperf.sinr_of_typical_ue(empty, env) is None


def test_find_coverage_peak(env):
    report = scnperf.find_coverage_peak(env, 1.0, 1.0, 100.0)
    assert abs(report.lambda0 - 15.85) <= 0.5
    assert report.bracket_lo < report.lambda0 < report.bracket_hi


def test_config_text_round_trip():
    env = scnperf.env_from_config("model=single_slope\nalpha_nlos=3.5\n")
    assert env.segment_count() == 1
    with pytest.raises(ValueError):
        scnperf.env_from_config("model=single_slope\nalpha_nlos=1.5\n")
    with pytest.raises(ValueError):
        scnperf.env_from_config("nonsense\n")
