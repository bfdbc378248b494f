"""Independent stationary-solution oracles used to pin expected values.

These solve the stationary balance equations directly by bisection in the
photon number, never touching the closed-form quadratics under test.  The
inversion (or upper population) is eliminated through the pump balance,
which is linear in the state, and the remaining gain-balance residual is
bracketed and bisected to machine precision.
"""

from __future__ import annotations

from nanolaser.params import LaserParams, gamma_perp_at


def bisect(f, lo, hi, iterations=200):
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    assert flo * fhi < 0.0, f"no sign change on [{lo}, {hi}]: {flo}, {fhi}"
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (flo < 0.0) == (fm < 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return 0.5 * (lo + hi)


def _rates(params: LaserParams, pump: float):
    gp = gamma_perp_at(params, pump)
    o2f = params.omega0 * params.omega0 * params.f
    return gp, params.kappa, params.gamma_par, float(params.n_emitters), o2f


def glre_stationary_oracle(params: LaserParams, pump: float):
    """(n, delta) zeroing the reduced stationary system of the full model."""
    gp, k, gpar, n0, o2f = _rates(params, pump)
    if pump == 0.0:
        return 0.0, -n0
    delta_th = gp * k / (2.0 * o2f)
    ratio = 2.0 * k / gp
    g = 4.0 * o2f / (gpar * gp)
    g_c = g / (1.0 + ratio)
    loss = 2.0 * k / gpar

    def delta_of(n):
        return ((pump - 1.0) * n0 - 2.0 * loss * n) / (pump + 1.0)

    def gain_residual(n):
        delta = delta_of(n)
        x = delta / delta_th
        coupling = g_c * (1.0 + ratio * x / (1.0 + ratio * (1.0 - x)))
        return coupling * (n * delta + 0.5 * (n0 + delta)) - loss * n

    n_hi = gpar * pump * n0 / (2.0 * k)
    # keep delta <= delta_th so the collective factor stays left of its pole
    n_lo = max(0.0, ((pump - 1.0) * n0 - (pump + 1.0) * delta_th) / (2.0 * loss))
    n = bisect(gain_residual, n_lo, n_hi)
    return n, delta_of(n)


def constant_coupling_oracle(params: LaserParams, pump: float,
                             coupling: float, threshold: float):
    """(n, delta) for the rate equations with a fixed coupling G and
    threshold inversion 2 kappa / (gamma_par G)."""
    _, k, gpar, n0, _ = _rates(params, pump)
    if pump == 0.0:
        return 0.0, -n0
    loss = 2.0 * k / gpar
    assert abs(coupling * threshold - loss) < 1e-9 * loss

    def delta_of(n):
        return ((pump - 1.0) * n0 - 2.0 * loss * n) / (pump + 1.0)

    def gain_residual(n):
        delta = delta_of(n)
        return coupling * (n * delta + 0.5 * (n0 + delta)) - loss * n

    n_hi = gpar * pump * n0 / (2.0 * k)
    n = bisect(gain_residual, 0.0, n_hi)
    return n, delta_of(n)


def semi_stationary_oracle(params: LaserParams, pump: float):
    """(n, n_e) zeroing the stationary fast-lower-level system."""
    gp, k, gpar, n0, o2f = _rates(params, pump)
    if pump == 0.0:
        return 0.0, 0.0
    n_th = k * gp / (2.0 * o2f)
    c = 1.0 + 2.0 * k / gp
    loss = 2.0 * k / gpar  # == g * n_th

    def residual(n):
        n_e = pump * n0 - loss * n
        return n_e * (1.0 + c * n) - n_th * c * n

    n_hi = pump * n0 / loss
    n = bisect(residual, 0.0, n_hi)
    return n, pump * n0 - loss * n
