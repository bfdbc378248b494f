"""Conventional laser rate equations and the spontaneous-emission factors.

The two-variable limit of the collective model, valid when the
polarization decays much faster than the cavity (2 kappa/gamma_perp << 1):

    dn/dt     = gamma_par [g (n delta + n_e) - (2 kappa/gamma_par) n]
    ddelta/dt = gamma_par [-2 g (n delta + n_e) + P (N0 - delta)
                           - N0 - delta]

with n_e = (N0 + delta)/2.  The fraction of spontaneous emission feeding
the lasing mode is beta = g/(1+g); retaining the collective correction it
becomes beta_c = g/(1 + g + 2 kappa/gamma_perp), strictly smaller for any
nonzero cavity/polarization rate ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .params import LaserParams, derive
from .two_level import stationary_constant_coupling


@dataclass(frozen=True)
class LreState:
    """Rate-equation state: photon number and total inversion."""

    n: float
    delta: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.n, self.delta)


class RenormalizedRates(NamedTuple):
    """Population rates and pumps renormalized by spontaneous emission."""

    gamma_tot: float
    p_prime: float
    gamma_c: float
    p_c: float


def lre_flow(params: LaserParams, pump: float):
    """Return rhs(y) -> (dn, ddelta) over plain 2-tuples."""
    d = derive(params, pump)
    g = d.g
    gpar = params.gamma_par
    k = params.kappa
    n0 = float(params.n_emitters)

    def rhs(y):
        n, delta = y
        gain = g * (n * delta + 0.5 * (n0 + delta))
        return (
            gpar * gain - 2.0 * k * n,
            gpar * (-2.0 * gain + pump * (n0 - delta) - n0 - delta),
        )

    return rhs


def lre_rhs(state: LreState, params: LaserParams, pump: float) -> tuple[float, float]:
    """Raw time derivatives (dn, ddelta) of the rate equations."""
    return lre_flow(params, pump)(state.as_tuple())


def lre_stationary(pump: float, params: LaserParams) -> LreState:
    """Stationary rate-equation state; the constant-coupling solution with
    G = g and the bare threshold inversion."""
    d = derive(params, pump)
    n, delta = stationary_constant_coupling(pump, d.g, d.delta_th, params)
    return LreState(n=n, delta=delta)


def beta(params: LaserParams, pump: float = 0.0) -> float:
    """Spontaneous-emission fraction into the lasing mode, g/(1+g)."""
    g = derive(params, pump).g
    return g / (1.0 + g)


def beta_c(params: LaserParams, pump: float = 0.0) -> float:
    """Collectively corrected spontaneous-emission fraction."""
    d = derive(params, pump)
    return beta_c_from_ratios(d.g, d.ratio_2k_gp)


def beta_c_from_ratios(g: float, ratio_2k_gp: float) -> float:
    """beta_c = g / (1 + g + 2 kappa/gamma_perp) from raw ratios.

    Accepts ratio_2k_gp = 0, where it reduces exactly to beta.
    """
    return g / (1.0 + g + ratio_2k_gp)


def renormalized_rates(
    params: LaserParams, pump: float
) -> RenormalizedRates:
    """Rates with spontaneous emission into the mode folded in.

    gamma_tot = gamma_par (1 + g) and the rescaled pump P' = P gamma_par /
    gamma_tot; gamma_c, P_c are the same construction with the collective
    coupling g_c (which excludes collective spontaneous emission).
    """
    d = derive(params, pump)
    gamma_tot = params.gamma_par * (1.0 + d.g)
    gamma_c = params.gamma_par * (1.0 + d.g_c)
    return RenormalizedRates(
        gamma_tot=gamma_tot,
        p_prime=pump * params.gamma_par / gamma_tot,
        gamma_c=gamma_c,
        p_c=pump * params.gamma_par / gamma_c,
    )
