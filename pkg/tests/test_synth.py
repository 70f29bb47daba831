import math

import numpy as np
import pytest

from rqc import (
    DEFAULT_PHI,
    Gate,
    GateKind,
    NotReachable,
    SynthConfig,
    budget,
    circular_distance,
    gate_matrix,
    orbit_angle,
    synthesis_error_to_gate_error,
    synthesize,
)
from rqc import synth as synth_mod

from _oracles import brute_force_min_k, exact_circular_distance, exact_orbit_table


def test_default_phi_value():
    assert DEFAULT_PHI == math.tau * (math.sqrt(5.0) - 1.0) / 2.0
    assert format(DEFAULT_PHI, ".17g") == "3.8832220774509332"
    assert 0.0 < DEFAULT_PHI < math.tau


def test_config_validation():
    SynthConfig()
    with pytest.raises(ValueError, match="finite"):
        SynthConfig(phi=math.inf)
    with pytest.raises(ValueError, match="positive"):
        SynthConfig(eps=0.0)
    with pytest.raises(ValueError, match="at least 1"):
        SynthConfig(k_max=0)


def test_phi_itself_needs_one_gate():
    r = synthesize(DEFAULT_PHI, SynthConfig(eps=1e-12))
    assert r.k == 1
    assert r.achieved == DEFAULT_PHI
    assert r.error == 0.0


def test_second_power_found_exactly():
    theta = orbit_angle(2, DEFAULT_PHI)
    r = synthesize(theta, SynthConfig(eps=1e-12))
    assert r.k == 2
    assert r.achieved == theta
    assert r.error <= 1e-15


def test_angles_outside_the_principal_range_are_folded():
    r0 = synthesize(0.5, SynthConfig(eps=1e-3))
    for shift in (math.tau, -math.tau, 3 * math.tau):
        r = synthesize(0.5 + shift, SynthConfig(eps=1e-3))
        assert r.k == r0.k


def test_soundness_against_exact_recomputation():
    # every reported (k, achieved, error) must survive exact recomputation
    rng = np.random.default_rng(100)
    cfg = SynthConfig(eps=1e-3)
    for _ in range(50):
        theta = float(rng.uniform(0, math.tau))
        r = synthesize(theta, cfg)
        assert r.error <= cfg.eps
        assert r.achieved == orbit_angle(r.k, DEFAULT_PHI)
        assert abs(exact_circular_distance(r.k, DEFAULT_PHI, theta) - r.error) <= 5e-15


def test_minimality_against_the_brute_force_oracle():
    table = exact_orbit_table(DEFAULT_PHI, 1 << 16)
    rng = np.random.default_rng(200)
    cfg = SynthConfig(eps=1e-3, k_max=1 << 16)
    for _ in range(25):
        theta = float(rng.uniform(0, math.tau))
        want = brute_force_min_k(theta, DEFAULT_PHI, cfg.eps, cfg.k_max, table)
        got = synthesize(theta, cfg)
        assert want is not None
        assert got.k == want[0]
        assert got.error == pytest.approx(want[1], abs=1e-15)


def test_search_crosses_segment_boundaries():
    # a target sitting on the 70000th orbit point forces the scan past the
    # first table segment of 2^16 entries
    k_want = 70000
    theta = orbit_angle(k_want, DEFAULT_PHI)
    r = synthesize(theta, SynthConfig(eps=1e-12, k_max=80000))
    oracle = brute_force_min_k(theta, DEFAULT_PHI, 1e-12, 80000)
    assert r.k == oracle[0]
    assert r.k == k_want
    assert r.error <= 1e-12


def test_not_reachable_reports_the_closest_miss():
    with pytest.raises(NotReachable) as e:
        synthesize(1.0, SynthConfig(eps=1e-15, k_max=200))
    err = e.value
    assert err.theta == 1.0
    assert 1 <= err.best_k <= 200
    assert err.best_error > 1e-15
    assert err.gate_index is None
    assert "raise k_max or eps" in str(err)
    assert abs(err.best_error - exact_circular_distance(err.best_k, DEFAULT_PHI, 1.0)) <= 1e-12
    # and no k in range actually does better
    table = exact_orbit_table(DEFAULT_PHI, 200)
    d = np.abs(table - 1.0)
    d = np.minimum(d, math.tau - d)
    assert abs(d.min() - err.best_error) <= 1e-12


def test_orbit_table_tracks_the_exact_orbit():
    # float64 table drift must stay under the candidate margin everywhere
    values = synth_mod._orbit(DEFAULT_PHI).ensure(1 << 16)
    exact = exact_orbit_table(DEFAULT_PHI, 1 << 16)
    d = np.abs(values[: 1 << 16] - exact)
    d = np.minimum(d, math.tau - d)
    assert float(d.max()) <= 1e-12


def test_orbit_angle_matches_float_arithmetic_for_small_k():
    # one step is below 2pi, so k = 1 is representable verbatim
    assert orbit_angle(1, 1.5) == 1.5
    assert orbit_angle(4, 1.5) == 6.0
    assert orbit_angle(5, 1.5) == pytest.approx(7.5 - math.tau, abs=1e-15)


def test_gate_error_formula_matches_the_operator_norm():
    rng = np.random.default_rng(300)
    for _ in range(30):
        theta = float(rng.uniform(0, math.tau))
        delta = float(rng.uniform(-0.01, 0.01))
        a = gate_matrix(Gate(GateKind.F, (0, 1), theta + delta))
        b = gate_matrix(Gate(GateKind.F, (0, 1), theta))
        norm = float(np.linalg.norm(a - b, 2))
        assert abs(synthesis_error_to_gate_error(delta) - norm) <= 1e-12


def test_budget_sums_per_gate_errors():
    assert budget([]) == 0.0
    errs = [1e-4, 2e-4, 0.0]
    want = sum(2.0 * abs(math.sin(0.5 * e)) for e in errs)
    assert budget(errs) == pytest.approx(want, abs=1e-18)
    assert budget(errs) <= sum(errs)


def test_synthesize_rejects_non_finite_targets():
    with pytest.raises(ValueError, match="finite"):
        synthesize(math.nan)
