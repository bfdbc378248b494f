import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nanolaser import (
    DimensionlessParams,
    InconsistentParametersError,
    LaserParams,
    ParameterError,
    derive,
    from_dimensionless,
    gamma_perp_at,
)
from conftest import dimensionless


def test_derive_worked_example(simple_params):
    d = derive(simple_params)
    assert d.g == pytest.approx(1.0, rel=1e-12)
    assert d.g_c == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert d.delta_th == pytest.approx(2.0, rel=1e-12)
    assert d.p_th == pytest.approx(1.5, rel=1e-12)
    assert d.d_th == pytest.approx(0.2, rel=1e-12)
    assert d.n_th == pytest.approx(2.0, rel=1e-12)
    assert d.lasing


def test_threshold_two_routes_consistent(simple_params, fig1b_params):
    for p in (simple_params, fig1b_params):
        d = derive(p)
        alt = 2.0 * p.kappa / (d.g * p.gamma_par)
        assert d.delta_th == pytest.approx(alt, rel=1e-12)


def test_p_th_undefined_at_pole():
    # delta_th = gamma_perp kappa / (2 omega0^2) = 2 == N0 exactly
    p = LaserParams(omega0=1.0, f=1.0, n_emitters=2, kappa=1.0,
                    gamma_par=1.0, gamma_perp=4.0)
    d = derive(p)
    assert d.delta_th == 2.0
    assert d.p_th is None
    assert not d.lasing


def test_pump_dependent_dephasing_zero_pump():
    p = LaserParams(omega0=1.0, f=1.0, n_emitters=10, kappa=1.0,
                    gamma_par=1.0, gamma_d=0.0, pump_dependent_dephasing=True)
    assert gamma_perp_at(p, 0.0) == 1.0
    assert gamma_perp_at(p, 3.0) == 4.0
    # derive at P = 3 must use gamma_perp = 4
    assert derive(p, 3.0).delta_th == pytest.approx(2.0, rel=1e-12)


@pytest.mark.parametrize(
    "kwargs, field",
    [
        (dict(omega0=0.0), "omega0"),
        (dict(omega0=-1.0), "omega0"),
        (dict(f=0.0), "f"),
        (dict(f=1.5), "f"),
        (dict(n_emitters=0), "n_emitters"),
        (dict(kappa=0.0), "kappa"),
        (dict(gamma_par=-2.0), "gamma_par"),
        (dict(gamma_perp=None), "gamma_perp"),
        (dict(gamma_perp=-4.0), "gamma_perp"),
    ],
)
def test_invalid_params_name_the_field(kwargs, field):
    base = dict(omega0=1.0, f=1.0, n_emitters=10, kappa=1.0,
                gamma_par=1.0, gamma_perp=4.0)
    base.update(kwargs)
    with pytest.raises(ParameterError, match=field):
        LaserParams(**base)


def test_negative_gamma_d_rejected_in_pdd_mode():
    with pytest.raises(ParameterError, match="gamma_d"):
        LaserParams(omega0=1.0, f=1.0, n_emitters=10, kappa=1.0,
                    gamma_par=1.0, gamma_d=-1.0, pump_dependent_dephasing=True)


def test_negative_pump_rejected(simple_params):
    with pytest.raises(ParameterError, match="pump"):
        derive(simple_params, -0.5)


def test_round_trip_exact():
    p = dimensionless(2.0 / 3.0, 1.0, 100, dth=0.01)
    d = derive(p)
    assert d.g == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert d.ratio_2k_gp == pytest.approx(1.0, rel=1e-12)
    assert d.d_th == pytest.approx(0.01, rel=1e-12)
    assert d.g_c == pytest.approx((2.0 / 3.0) / 2.0, rel=1e-12)
    assert p.kappa == 1.0 and p.f == 1.0


@settings(max_examples=200, deadline=None)
@given(
    g=st.floats(1e-3, 1e2),
    ratio=st.floats(1e-4, 1e2),
    dth=st.floats(1e-5, 1e2),
    n0=st.integers(1, 10**6),
)
def test_round_trip_property(g, ratio, dth, n0):
    dp = DimensionlessParams(g=g, ratio_2k_gp=ratio, n_emitters=n0,
                             dth_over_n0=dth)
    d = derive(from_dimensionless(dp))
    assert math.isclose(d.g, g, rel_tol=1e-12)
    assert math.isclose(d.g_c, g / (1.0 + ratio), rel_tol=1e-12)
    assert math.isclose(d.d_th, dth, rel_tol=1e-12)


def test_fig1b_preset_ratios(fig1b_params):
    p = fig1b_params
    d = derive(p)
    assert p.kappa / p.gamma_par == pytest.approx(25.0, rel=1e-12)
    assert p.gamma_perp / p.gamma_par == pytest.approx(20.0, rel=1e-12)
    assert d.ratio_2k_gp == pytest.approx(2.5, rel=1e-12)
    assert d.g_c == pytest.approx(0.048 / 3.5, rel=1e-12)
    # d_th follows from the redundancy delta_th = 2 kappa / (g gamma_par)
    assert d.d_th == pytest.approx(2.0 * 25.0 / (0.048 * 1e4), rel=1e-12)


def test_over_determined_set_rejected():
    # kappa/gamma_par = 1 would need delta_th = 3, but dth*N0 = 1
    with pytest.raises(InconsistentParametersError):
        dimensionless(2.0 / 3.0, 1.0, 100, dth=0.01, kog=1.0)


def test_over_determined_set_accepted_when_consistent():
    # kappa/gamma_par = g * delta_th / 2 = (2/3) * 1 / 2 = 1/3
    p = dimensionless(2.0 / 3.0, 1.0, 100, dth=0.01, kog=1.0 / 3.0)
    assert derive(p).d_th == pytest.approx(0.01, rel=1e-12)


def test_threshold_ratio_required():
    with pytest.raises(ParameterError, match="dth_over_n0 or kappa_over_gpar"):
        DimensionlessParams(g=1.0, ratio_2k_gp=1.0, n_emitters=10)


def test_single_emitter_construction():
    p = dimensionless(0.5, 2.0, 1, dth=3.0)
    d = derive(p)
    assert d.d_th == pytest.approx(3.0, rel=1e-12)
    assert not d.lasing


@settings(max_examples=100, deadline=None)
@given(
    g=st.floats(1e-3, 1e2),
    r1=st.floats(1e-4, 1e2),
    r2=st.floats(1e-4, 1e2),
)
def test_gc_strictly_decreasing_in_ratio(g, r1, r2):
    if r1 == r2:
        return
    lo, hi = sorted((r1, r2))
    gc_lo = derive(dimensionless(g, lo, 10, dth=1.0)).g_c
    gc_hi = derive(dimensionless(g, hi, 10, dth=1.0)).g_c
    assert gc_hi < gc_lo < g


def test_dimensionless_without_dth_uses_rate_ratio():
    p = dimensionless(0.048, 2.5, 10_000, kog=25.0)
    d = derive(p)
    assert d.d_th == pytest.approx(2.0 * 25.0 / (0.048 * 1e4), rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(g=st.floats(1e-3, 1e2), dth=st.floats(1e-5, 0.999999))
def test_p_th_exceeds_one_whenever_defined(g, dth):
    d = derive(dimensionless(g, 1.0, 100, dth=dth))
    assert d.p_th is not None and d.p_th > 1.0
