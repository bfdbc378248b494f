"""Alternative level scheme with an instantly depopulated lower level.

Pumping feeds the upper lasing level from outside the transition and the
lower level empties infinitely fast, so the working variables are
(n, sigma, d_corr, n_e) with the upper population n_e replacing the
inversion:

    dn/dt     = omega0 sigma - 2 kappa n
    dsigma/dt = -(gamma_perp/2 + kappa) sigma
                + 2 omega0 f [n_e (n + 1) + d_corr]
    dd/dt     = -gamma_perp d_corr + omega0 n_e sigma
    dn_e/dt   = -omega0 sigma + gamma_par (P N0 - n_e)

The stationary photon number solves

    g n^2 - theta0 n - (N0 P / n_th) / (1 + 2k/gp) = 0,
    theta0 = N0 P / n_th - 1 - g / (1 + 2k/gp),

with the threshold population n_th = kappa gamma_perp / (2 omega0^2 f),
and the upper population follows from
1 - n_e/n_th = 1 / [1 + (1 + 2k/gp) n].  Photon trapping survives in this
scheme but superthermal statistics does not (see statistics module).

Pump blocking is neglected: n_e is not capped at N0.  Validity requires
n_e << N0; sweeps flag rows where n_e > N0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .params import LaserParams, derive, gamma_perp_at
from .two_level import _positive_root


@dataclass(frozen=True)
class SemiState:
    """Mean-field state (n, sigma, d_corr, n_e) of the fast-lower-level
    scheme."""

    n: float
    sigma: float
    d_corr: float
    n_e: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.n, self.sigma, self.d_corr, self.n_e)


def empty_state() -> SemiState:
    """The unpumped fixed point: everything zero."""
    return SemiState(0.0, 0.0, 0.0, 0.0)


def semi_flow(params: LaserParams, pump: float):
    """Return rhs(y) -> 4-tuple of derivatives over plain tuples."""
    if pump < 0:
        raise ParameterError(f"pump must satisfy >= 0 (got {pump!r})")
    gp = gamma_perp_at(params, pump)
    o = params.omega0
    k = params.kappa
    gpar = params.gamma_par
    pump_rate = gpar * pump * float(params.n_emitters)
    two_of = 2.0 * o * params.f
    sigma_decay = 0.5 * gp + k

    def rhs(y):
        n, sigma, d, n_e = y
        os = o * sigma
        return (
            os - 2.0 * k * n,
            -sigma_decay * sigma + two_of * (n_e * (n + 1.0) + d),
            -gp * d + os * n_e,
            -os + pump_rate - gpar * n_e,
        )

    return rhs


def semi_rhs(
    state: SemiState, params: LaserParams, pump: float
) -> tuple[float, float, float, float]:
    """Time derivatives (dn, dsigma, dd_corr, dn_e) at one state."""
    return semi_flow(params, pump)(state.as_tuple())


def semi_stationary_n(pump: float, params: LaserParams) -> float:
    """Stationary photon number of the fast-lower-level scheme."""
    d = derive(params, pump)
    c = 1.0 + d.ratio_2k_gp
    q = float(params.n_emitters) * pump / d.n_th
    theta0 = q - 1.0 - d.g / c
    # g n^2 - theta0 n - q/c = 0, written as 2 (g/2) n^2 - theta0 n - q/c
    return _positive_root(0.5 * d.g, theta0, q / c)


def semi_stationary_ne(pump: float, params: LaserParams) -> float:
    """Stationary upper-level population, clamped below n_th."""
    d = derive(params, pump)
    u = (1.0 + d.ratio_2k_gp) * semi_stationary_n(pump, params)
    return d.n_th * u / (1.0 + u)


def semi_stationary_state(pump: float, params: LaserParams) -> SemiState:
    """Assemble the full stationary state from the closed forms."""
    d = derive(params, pump)
    n = semi_stationary_n(pump, params)
    n_e = d.n_th * (1.0 + d.ratio_2k_gp) * n / (1.0 + (1.0 + d.ratio_2k_gp) * n)
    return SemiState(
        n=n,
        sigma=2.0 * params.kappa * n / params.omega0,
        d_corr=d.ratio_2k_gp * n_e * n,
        n_e=n_e,
    )


def crossing_pump(params: LaserParams, pump: float = 0.0) -> float:
    """Pump at which the pumped population would reach the threshold value
    (N0 P = n_th); a convenience marker, not a sharp threshold."""
    return derive(params, pump).n_th / float(params.n_emitters)
