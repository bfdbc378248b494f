"""Zero-delay photon autocorrelation g2 for both level schemes.

Closed forms evaluated at a given photon number (normally the stationary
one).  For the two-level model with inter-emitter correlations,

    g2(n) = 1 + (1 + gp/2k)(N0/delta_th + 1)
                / [3 + 6 n (1 + 2k/gp) + (gp/2k)(N0/delta_th + 1)],

which decreases monotonically with n, tends to 1 for strong pumping, and
at n = 0 is bounded above by 2 + 2 kappa/gamma_perp.  Values above 2
(superthermal bunching) require a low threshold delta_th/N0 << 1 together
with slow dephasing gamma_perp/2k <= 1.  For the fast-lower-level scheme,

    g2(n) = 1 + (gp/2k + 1) / [3 + 3 n (1 + 2k/gp) + gp/2k],

with g2(0) = 2 - 2/(3 + gp/2k) < 2: that scheme never bunches above
thermal.
"""

from __future__ import annotations

import math

from .params import LaserParams, derive
from .two_level import stationary_n


def g2_two_level_value(n: float, gp_over_2k: float, n0_over_dth: float) -> float:
    """Two-level g2 from raw ratios; gp_over_2k = 0 is the extreme
    collective limit (taken as the n -> 0 or n > 0 limit as appropriate)."""
    x = gp_over_2k
    w = n0_over_dth + 1.0
    if x == 0.0:
        if n == 0.0:
            return 1.0 + w / 3.0
        return 1.0
    den = 3.0 + 6.0 * n * (1.0 + 1.0 / x) + x * w
    return 1.0 + (1.0 + x) * w / den


def g2_two_level(n: float, params: LaserParams, pump: float = 0.0) -> float:
    """Two-level photon autocorrelation at photon number n."""
    d = derive(params, pump)
    return g2_two_level_value(n, 1.0 / d.ratio_2k_gp, 1.0 / d.d_th)


def g2_two_level_at_pump(pump: float, params: LaserParams) -> float:
    """g2 composed with the stationary photon number at pump P."""
    return g2_two_level(stationary_n(pump, params), params, pump)


def g2_upper_bound(params: LaserParams, pump: float = 0.0) -> float:
    """Strict upper bound 2 + 2 kappa/gamma_perp on g2(n=0)."""
    return 2.0 + derive(params, pump).ratio_2k_gp


def g2_nonlasing_range(params: LaserParams | None = None) -> tuple[float, float]:
    """Range of g2(n=0) attainable deep in the non-lasing regime
    (delta_th/N0 >> 1, caller-asserted): (4/3, 2).

    The lower end is the gamma_perp/2k -> 0 limit, the upper the
    gamma_perp/2k -> infinity limit; params is accepted for signature
    symmetry and not inspected.
    """
    return (4.0 / 3.0, 2.0)


def g2_semiconductor_value(n: float, gp_over_2k: float) -> float:
    """Fast-lower-level-scheme g2 from the raw dephasing ratio."""
    x = gp_over_2k
    if x == 0.0:
        den = 3.0 if n == 0.0 else math.inf
    else:
        den = 3.0 + 3.0 * n * (1.0 + 1.0 / x) + x
    return 1.0 + (x + 1.0) / den


def g2_semiconductor(n: float, params: LaserParams, pump: float = 0.0) -> float:
    """Fast-lower-level-scheme photon autocorrelation at photon number n."""
    d = derive(params, pump)
    return g2_semiconductor_value(n, 1.0 / d.ratio_2k_gp)
