import pytest

from nanolaser import DimensionlessParams, LaserParams, from_dimensionless


def dimensionless(g, ratio, n0, dth=None, kog=None):
    """Shorthand constructor used throughout the tests."""
    return from_dimensionless(
        DimensionlessParams(
            g=g, ratio_2k_gp=ratio, n_emitters=n0,
            dth_over_n0=dth, kappa_over_gpar=kog,
        )
    )


@pytest.fixture
def simple_params():
    """omega0 = f = kappa = gamma_par = 1, gamma_perp = 4, N0 = 10:
    g = 1, g_c = 2/3, delta_th = 2, p_th = 1.5."""
    return LaserParams(
        omega0=1.0, f=1.0, n_emitters=10, kappa=1.0,
        gamma_par=1.0, gamma_perp=4.0,
    )


@pytest.fixture
def std_params():
    """g = 2/3, 2k/gp = 1, delta_th/N0 = 0.01, N0 = 100."""
    return dimensionless(2.0 / 3.0, 1.0, 100, dth=0.01)


@pytest.fixture
def fig1b_params():
    """kappa/gamma_par = 25, N0 = 1e4, g = 0.048, gamma_perp/gamma_par = 20
    (hence 2 kappa/gamma_perp = 2.5)."""
    return dimensionless(0.048, 2.5, 10_000, kog=25.0)
