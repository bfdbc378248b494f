import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nanolaser import (
    derive,
    g2_nonlasing_range,
    g2_semiconductor,
    g2_semiconductor_value,
    g2_two_level,
    g2_two_level_at_pump,
    g2_two_level_value,
    g2_upper_bound,
    semi_stationary_n,
    stationary_n,
)
from conftest import dimensionless

# direct substitution: 1 + 2*101/(3 + 101) at gp/2k = 1, N0/delta_th = 100
G2_ZERO_PHOTON = 1.0 + 202.0 / 104.0


def test_two_level_worked_value(std_params):
    assert g2_two_level(0.0, std_params) == pytest.approx(G2_ZERO_PHOTON, rel=1e-12)
    assert g2_two_level_value(0.0, 1.0, 100.0) == pytest.approx(
        G2_ZERO_PHOTON, rel=1e-12
    )


def test_two_level_coherent_limit(std_params):
    assert g2_two_level(1e9, std_params) - 1.0 < 1e-6


def test_two_level_thermal_ceiling_without_emitters():
    # N0/delta_th -> 0: g2(0) spans 4/3 .. 2 as the dephasing ratio sweeps
    assert g2_two_level_value(0.0, 0.0, 0.0) == pytest.approx(4.0 / 3.0, rel=1e-12)
    assert g2_two_level_value(0.0, 1e3, 0.0) == pytest.approx(2.0, abs=1e-2)


def test_nonlasing_range_constants():
    lo, hi = g2_nonlasing_range()
    assert lo == pytest.approx(4.0 / 3.0, rel=1e-12)
    assert hi == 2.0


def test_subthermal_for_large_threshold():
    # delta_th/N0 = 2: sub-thermal whatever the dephasing ratio
    for x in (1e-3, 0.1, 1.0, 10.0, 1e3):
        g2 = g2_two_level_value(0.0, x, 0.5)
        assert 1.0 < g2 < 2.0


def test_superthermal_criterion():
    # low threshold and slow dephasing: bunched beyond thermal
    assert g2_two_level_value(0.0, 0.1, 100.0) > 2.0
    # high threshold: never superthermal, whatever the dephasing
    for x in (1e-3, 0.1, 1.0, 10.0, 1e3):
        assert g2_two_level_value(0.0, x, 1.0 / 0.9) < 2.0


def test_upper_bound_examples(std_params):
    assert g2_upper_bound(std_params) == pytest.approx(3.0, rel=1e-12)
    tiny_feedback = dimensionless(1.0, 1e-9, 10, dth=1.0)
    assert g2_upper_bound(tiny_feedback) == pytest.approx(2.0, rel=1e-8)


def test_zero_photon_value_approaches_bound_for_many_emitters():
    for x in (0.5, 1.0, 4.0):
        bound = 2.0 + 1.0 / x
        value = g2_two_level_value(0.0, x, 1e12)
        assert value < bound
        assert value == pytest.approx(bound, rel=1e-9)


def test_upper_bound_strict_over_threshold_grid():
    for k in range(30):
        dth = 1e-4 * (1e5 ** (k / 29.0))  # 1e-4 .. 10
        for x in (0.05, 0.3, 1.0, 4.0, 40.0):
            bound = 2.0 + 1.0 / x
            assert g2_two_level_value(0.0, x, 1.0 / dth) < bound


@settings(max_examples=150, deadline=None)
@given(
    x=st.floats(1e-3, 1e3),
    r=st.floats(1e-4, 1e4),
    n=st.floats(0.0, 1e6),
)
def test_two_level_strictly_decreasing_in_n(x, r, n):
    # gap large enough that the difference is resolvable in double precision
    hi = 1.01 * n + 1e-3
    assert g2_two_level_value(hi, x, r) < g2_two_level_value(n, x, r)


@settings(max_examples=150, deadline=None)
@given(
    x=st.floats(1e-3, 1e3),
    r=st.floats(1e-4, 1e4),
    n=st.floats(0.0, 1e9),
)
def test_two_level_bounds(x, r, n):
    g2 = g2_two_level_value(n, x, r)
    assert 1.0 < g2 < 2.0 + 1.0 / x


def test_at_pump_composes_with_stationary_n(std_params):
    assert g2_two_level_at_pump(0.0, std_params) == g2_two_level(0.0, std_params)
    for pump in (0.5, 2.0):
        assert g2_two_level_at_pump(pump, std_params) == pytest.approx(
            g2_two_level(stationary_n(pump, std_params), std_params), rel=1e-12
        )


def test_at_pump_superthermal_then_coherent():
    params = dimensionless(2.0 / 3.0, 6.0, 10_000, dth=0.01)
    d = derive(params)
    pumps = [1e-2 * d.p_th * (1e4 ** (k / 59.0)) for k in range(60)]
    values = [g2_two_level_at_pump(p, params) for p in pumps]
    assert values[0] > 2.0  # superthermal at weak pumping
    assert all(b < a for a, b in zip(values, values[1:]))  # monotone decay
    assert values[-1] == pytest.approx(1.0, abs=1e-2)


def test_semiconductor_zero_photon_identity():
    for x in (1e-4, 0.03, 1.0, 7.0, 1e3):
        direct = g2_semiconductor_value(0.0, x)
        rewritten = 2.0 - 2.0 / (3.0 + x)
        assert abs(direct - rewritten) < 1e-12


def test_semiconductor_worked_values(std_params):
    assert g2_semiconductor_value(0.0, 1.0) == pytest.approx(1.5, rel=1e-12)
    assert g2_semiconductor(0.0, std_params) == pytest.approx(1.5, rel=1e-12)
    assert g2_semiconductor_value(1e9, 1.0) == pytest.approx(1.0, abs=1e-6)


@settings(max_examples=150, deadline=None)
@given(x=st.floats(1e-3, 1e3), n=st.floats(0.0, 1e6))
def test_semiconductor_bounds_and_monotonicity(x, n):
    g2 = g2_semiconductor_value(n, x)
    assert 1.0 < g2 < 2.0
    assert g2_semiconductor_value(1.01 * n + 1e-3, x) < g2


def test_emitter_number_pushes_the_two_schemes_apart():
    # two-level: more emitters (larger N0/delta_th) raise g2 at fixed small n
    g2_small = g2_two_level_value(0.1, 1.0, 50.0)
    g2_large = g2_two_level_value(0.1, 1.0, 100.0)
    assert g2_large > g2_small

    # fast-lower-level scheme: more emitters at fixed pump and fixed n_th
    # raise n, hence lower g2
    n_th = 20.0
    pump = 0.5
    previous = None
    for n0 in (50, 100, 200):
        params = dimensionless(2.0 / 3.0, 1.0, n0, dth=n_th / n0)
        g2 = g2_semiconductor(semi_stationary_n(pump, params), params)
        if previous is not None:
            assert g2 < previous
        previous = g2
