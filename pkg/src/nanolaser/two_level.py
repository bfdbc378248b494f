"""Two-level laser model with emitter-emitter correlations.

Mean-field dynamics of four coupled variables: the intracavity photon
number ``n``, the collective emitter-field correlation ``sigma``, the
collective dipole-dipole correlation ``d_corr`` and the total population
inversion ``delta``:

    dn/dt     = omega0 sigma - 2 kappa n
    dsigma/dt = -(gamma_perp/2 + kappa) sigma
                + 2 omega0 f (n delta + n_e + d_corr),  n_e = (N0 + delta)/2
    dd/dt     = -gamma_perp d_corr + omega0 delta sigma
    ddelta/dt = -2 omega0 sigma + gamma_par [P (N0 - delta) - N0 - delta]

The stationary solution is closed-form.  Eliminating sigma and d_corr
gives an effective coupling g_c [1 + C(delta)] with the collective factor

    C(delta) = (2k/gp)(delta/delta_th) / [1 + (2k/gp)(1 - delta/delta_th)],

and the photon number solves the quadratic

    2 g n^2 - theta(P) n - (g_c/g) P N0/delta_th = 0,
    theta(P) = (P - 1) N0/delta_th - P - 1 - g_c,

whose nonnegative branch is n = [theta + sqrt(theta^2
+ 8 g_c P N0/delta_th)] / (4 g).  The inversion then follows from

    1 - delta/delta_th = (1 + N0/delta_th) / (2 (1 + 2k/gp) n + 1),

and the remaining stationary relations are omega0 sigma = 2 kappa n and
d_corr = (2 kappa/gamma_perp) n delta.

Below threshold C(delta) < 0 suppresses the output relative to the same
model with C = 0 ("photon trapping"); above threshold delta clamps to
delta_th and C to 2 kappa/gamma_perp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError, PoleError, RegimeError
from .params import LaserParams, derive, gamma_perp_at


@dataclass(frozen=True)
class GlreState:
    """Mean-field state (n, sigma, d_corr, delta) of the two-level model."""

    n: float
    sigma: float
    d_corr: float
    delta: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.n, self.sigma, self.d_corr, self.delta)


@dataclass(frozen=True)
class StateDerivative:
    """Time derivatives of the GlreState fields."""

    dn: float
    dsigma: float
    dd_corr: float
    ddelta: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.dn, self.dsigma, self.dd_corr, self.ddelta)


def dark_state(params: LaserParams) -> GlreState:
    """The unpumped fixed point (0, 0, 0, -N0): all emitters in the ground
    state, no photons, no correlations."""
    return GlreState(0.0, 0.0, 0.0, -float(params.n_emitters))


def glre_flow(params: LaserParams, pump: float):
    """Return rhs(y) -> (dn, dsigma, dd, ddelta) over plain 4-tuples.

    Binds all rates once; this is the hot-path form used by the integrator.
    """
    if pump < 0:
        raise ParameterError(f"pump must satisfy >= 0 (got {pump!r})")
    gp = gamma_perp_at(params, pump)
    o = params.omega0
    k = params.kappa
    gpar = params.gamma_par
    n0 = float(params.n_emitters)
    two_of = 2.0 * o * params.f
    sigma_decay = 0.5 * gp + k

    def rhs(y):
        n, sigma, d, delta = y
        os = o * sigma
        return (
            os - 2.0 * k * n,
            -sigma_decay * sigma + two_of * (n * delta + 0.5 * (n0 + delta) + d),
            -gp * d + os * delta,
            -2.0 * os + gpar * (pump * (n0 - delta) - n0 - delta),
        )

    return rhs


def glre_rhs(state: GlreState, params: LaserParams, pump: float) -> StateDerivative:
    """Evaluate the four coupled time derivatives at one state."""
    return StateDerivative(*glre_flow(params, pump)(state.as_tuple()))


def c_factor(delta: float, params: LaserParams, pump: float = 0.0) -> float:
    """Collective-effect strength C(delta).

    Zero at delta = 0, negative below, and clamped to 2 kappa/gamma_perp as
    delta -> delta_th.  The expression has a pole at
    delta/delta_th = 1 + gamma_perp/(2 kappa), beyond the stationary range
    delta < delta_th; hitting it raises PoleError.
    """
    d = derive(params, pump)
    x = delta / d.delta_th
    den = 1.0 + d.ratio_2k_gp * (1.0 - x)
    if den == 0.0:
        raise PoleError(
            f"C(delta) pole at delta/delta_th = {x!r}: stationary states "
            "satisfy delta < delta_th, check the caller"
        )
    return d.ratio_2k_gp * x / den


def _positive_root(a: float, theta: float, source: float) -> float:
    """Nonnegative branch of 2 a x^2 - theta x - source = 0 (a, source >= 0).

    Uses the rationalized form when theta < 0 so the tiny below-threshold
    root is not lost to cancellation.
    """
    sq = math.sqrt(theta * theta + 8.0 * a * source)
    if theta > 0.0:
        return (theta + sq) / (4.0 * a)
    if source == 0.0:
        return 0.0
    return 2.0 * source / (sq - theta)


def stationary_n(pump: float, params: LaserParams) -> float:
    """Stationary photon number of the full model at pump P."""
    d = derive(params, pump)
    r = 1.0 / d.d_th
    theta = (pump - 1.0) * r - pump - 1.0 - d.g_c
    return _positive_root(d.g, theta, (d.g_c / d.g) * pump * r)


def stationary_inversion(pump: float, params: LaserParams) -> float:
    """Stationary total inversion; always in [-N0, delta_th)."""
    d = derive(params, pump)
    n = stationary_n(pump, params)
    u = 2.0 * (1.0 + d.ratio_2k_gp) * n
    return (u * d.delta_th - float(params.n_emitters)) / (u + 1.0)


def stationary_state(pump: float, params: LaserParams) -> GlreState:
    """Assemble the full stationary state from the closed forms.

    sigma and d_corr follow from omega0 sigma = 2 kappa n and
    d_corr = (2 kappa/gamma_perp) n delta; the rhs of the assembled state
    vanishes to rounding.
    """
    d = derive(params, pump)
    n = stationary_n(pump, params)
    delta = stationary_inversion(pump, params)
    return GlreState(
        n=n,
        sigma=2.0 * params.kappa * n / params.omega0,
        d_corr=d.ratio_2k_gp * n * delta,
        delta=delta,
    )


def stationary_constant_coupling(
    pump: float,
    coupling: float,
    threshold: float,
    params: LaserParams,
) -> tuple[float, float]:
    """Stationary (n, delta) of the rate equations with a fixed coupling.

    Solves 0 = G (n delta + n_e) - (2k/gpar) n together with the pump
    balance, for a constant coupling G and its threshold inversion
    threshold = 2 kappa / (gamma_par G).  Shared by the no-collective-
    effects curve (G = g_c) and the conventional rate-equation limit
    (G = g).
    """
    _require_nonneg_pump(pump)
    if coupling <= 0:
        raise ParameterError(f"coupling must satisfy > 0 (got {coupling!r})")
    if threshold <= 0:
        raise ParameterError(f"threshold must satisfy > 0 (got {threshold!r})")
    n0 = float(params.n_emitters)
    r = n0 / threshold
    theta = (pump - 1.0) * r - pump - 1.0 - coupling
    n = _positive_root(coupling, theta, pump * r)
    delta = (2.0 * threshold * n - n0) / (2.0 * n + 1.0)
    return n, delta


def stationary_n_no_ce(pump: float, params: LaserParams) -> float:
    """Stationary photon number with the collective factor forced to zero.

    Equivalent to a constant coupling g_c with effective threshold
    delta_th (1 + 2 kappa/gamma_perp); the comparison curve that isolates
    photon trapping.
    """
    d = derive(params, pump)
    threshold = d.delta_th * (1.0 + d.ratio_2k_gp)
    n, _ = stationary_constant_coupling(pump, d.g_c, threshold, params)
    return n


def saturation_photon_number(params: LaserParams) -> float:
    """Large-pump photon number in the non-lasing regime delta_th/N0 > 1.

    n_s = [(delta_th/N0 - 1)(1 + 2 kappa/gamma_perp)]^-1.  Raises
    RegimeError when the configuration lases (delta_th/N0 <= 1), where no
    saturation occurs.  Evaluated with the zero-pump dephasing rate.
    """
    d = derive(params, 0.0)
    if d.d_th <= 1.0:
        raise RegimeError(
            f"saturation formula requires delta_th/N0 > 1 (got {d.d_th!r}): "
            "this configuration lases at large pump"
        )
    return 1.0 / ((d.d_th - 1.0) * (1.0 + d.ratio_2k_gp))


def _require_nonneg_pump(pump: float) -> None:
    if pump < 0:
        raise ParameterError(f"pump must satisfy >= 0 (got {pump!r})")
