"""Explicit time integration for small ODE systems with steady-state
detection.

Two modes, selected by the tolerance fields of IntegrationConfig:

* fixed step: the classic fourth-order Runge-Kutta scheme at dt_initial
  (deterministic, bit-identical across runs);
* adaptive: the Dormand-Prince 5(4) embedded pair with a standard
  step-size controller, engaged when abs_tol and rel_tol are set.

A run stops at t_max, at max_steps, or as soon as the scaled derivative
norm

    max_i |dy_i/dt| / max(|y_i|, 1)

drops below steady_state_tol.  The scale floor of 1 keeps the criterion
meaningful when components span many decades (photon numbers range from
1e-4 to 1e4 across sweeps).

Right-hand sides are autonomous callables ``rhs(y) -> sequence`` over
plain tuples of floats.  Explicit methods only: the model rate ratios are
at worst mildly stiff, and if the adaptive step underflows the error
advises reducing the ratio or using the closed-form stationary solutions.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field

from .errors import (
    NonConvergenceError,
    NonFiniteStateError,
    ParameterError,
    StepUnderflowError,
)

# Dormand-Prince 5(4) tableau; the fifth-order weights B are also the
# last stage row (first-same-as-last).
_A2 = (1.0 / 5.0,)
_A3 = (3.0 / 40.0, 9.0 / 40.0)
_A4 = (44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0)
_A5 = (19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0)
_A6 = (
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
)
_B = (35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0)
_E = (
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
)

_MAX_FACTOR = 5.0
_MIN_FACTOR = 0.2
_SAFETY = 0.9


@dataclass(frozen=True)
class IntegrationConfig:
    """Controls for one integration run.

    abs_tol and rel_tol must be given together; setting them switches from
    fixed-step to adaptive stepping.  t_max = 0 is allowed and yields just
    the initial point.
    """

    dt_initial: float
    t_max: float
    abs_tol: float | None = None
    rel_tol: float | None = None
    steady_state_tol: float = 1e-10
    max_steps: int = 100_000_000

    def __post_init__(self):
        if self.dt_initial <= 0:
            raise ParameterError(
                f"dt_initial must satisfy > 0 (got {self.dt_initial!r})"
            )
        if self.t_max < 0:
            raise ParameterError(f"t_max must satisfy >= 0 (got {self.t_max!r})")
        if (self.abs_tol is None) != (self.rel_tol is None):
            raise ParameterError(
                "abs_tol and rel_tol must be given together to enable "
                "adaptive stepping"
            )
        if self.abs_tol is not None and (self.abs_tol <= 0 or self.rel_tol <= 0):
            raise ParameterError(
                f"abs_tol/rel_tol must satisfy > 0 (got {self.abs_tol!r}, "
                f"{self.rel_tol!r})"
            )
        if self.steady_state_tol <= 0:
            raise ParameterError(
                f"steady_state_tol must satisfy > 0 (got {self.steady_state_tol!r})"
            )
        if self.max_steps < 1:
            raise ParameterError(
                f"max_steps must satisfy >= 1 (got {self.max_steps!r})"
            )

    @property
    def adaptive(self) -> bool:
        return self.abs_tol is not None


@dataclass
class Trajectory:
    """Recorded integration output.

    times are strictly increasing and align one-to-one with states;
    converged reports whether the steady-state criterion fired, and
    final_residual is the scaled derivative norm at the last state.
    """

    times: list[float] = field(default_factory=list)
    states: list[tuple[float, ...]] = field(default_factory=list)
    converged: bool = False
    final_residual: float = math.inf

    @property
    def final_state(self) -> tuple[float, ...]:
        return self.states[-1]


def default_config(kappa: float, gamma_par: float) -> IntegrationConfig:
    """Fixed defaults covering all figure-regime rate ratios with margin."""
    return IntegrationConfig(
        dt_initial=1e-3 / kappa,
        t_max=1e3 * max(1.0 / gamma_par, 1.0 / kappa),
        steady_state_tol=1e-10,
        max_steps=100_000_000,
    )


def scaled_residual(deriv, state) -> float:
    """max_i |d_i| / max(|y_i|, 1), the steady-state detection norm."""
    worst = 0.0
    for d, y in zip(deriv, state):
        scale = abs(y)
        r = abs(d) / (scale if scale > 1.0 else 1.0)
        if r > worst:
            worst = r
    return worst


def _check_finite(y, step, t):
    for v in y:
        if not math.isfinite(v):
            raise NonFiniteStateError(
                f"non-finite state component at step {step}, t = {t!r}: {y!r}",
                step=step,
                time=t,
                state=tuple(y),
            )


def integrate(rhs, initial, config: IntegrationConfig, record_stride: int = 1) -> Trajectory:
    """Integrate dy/dt = rhs(y) from the given initial state.

    Parameters
    ----------
    rhs : callable mapping a state tuple to a derivative sequence of the
        same length; must be total on the reachable domain.
    initial : initial state (any float sequence).
    config : IntegrationConfig; tolerances select fixed vs adaptive mode.
    record_stride : record every record_stride-th accepted step (the
        initial and final states are always recorded).

    Returns
    -------
    Trajectory with times, states, the convergence flag and the final
    scaled residual.

    Raises
    ------
    NonFiniteStateError on NaN/overflow, StepUnderflowError if the
    adaptive controller cannot make progress.
    """
    if record_stride < 1:
        raise ParameterError(
            f"record_stride must satisfy >= 1 (got {record_stride!r})"
        )
    y = tuple(float(v) for v in initial)
    _check_finite(y, 0, 0.0)
    k1 = tuple(rhs(y))
    _check_finite(k1, 0, 0.0)

    traj = Trajectory(times=[0.0], states=[y])
    res = scaled_residual(k1, y)
    if res < config.steady_state_tol or config.t_max == 0.0:
        traj.converged = res < config.steady_state_tol
        traj.final_residual = res
        return traj

    if config.adaptive:
        return _run_adaptive(rhs, y, k1, config, record_stride, traj)
    return _run_fixed(rhs, y, k1, config, record_stride, traj)


def find_steady(rhs, initial, config: IntegrationConfig):
    """Integrate until the steady-state criterion fires and return the
    final state; raise NonConvergenceError (carrying the residual and the
    last state) if t_max or max_steps is hit first."""
    traj = integrate(rhs, initial, config, record_stride=sys.maxsize)
    if not traj.converged:
        raise NonConvergenceError(
            "no steady state within "
            f"t_max = {config.t_max!r} / max_steps = {config.max_steps}: "
            f"final scaled residual {traj.final_residual!r} "
            f"(tol {config.steady_state_tol!r})",
            residual=traj.final_residual,
            state=traj.final_state,
        )
    return traj.final_state


def _run_fixed(rhs, y, k1, config, record_stride, traj):
    t = 0.0
    dt = config.dt_initial
    t_max = config.t_max
    tol = config.steady_state_tol
    steps = 0
    recorded_at = 0
    res = math.inf

    while steps < config.max_steps:
        remaining = t_max - t
        if remaining <= 0.0:
            break
        if remaining <= dt * (1.0 + 1e-12):
            h, t_next = remaining, t_max
        else:
            h, t_next = dt, t + dt

        half = 0.5 * h
        k2 = rhs(tuple(a + half * b for a, b in zip(y, k1)))
        k3 = rhs(tuple(a + half * b for a, b in zip(y, k2)))
        k4 = rhs(tuple(a + h * b for a, b in zip(y, k3)))
        sixth = h / 6.0
        y = tuple(
            a + sixth * (b1 + 2.0 * (b2 + b3) + b4)
            for a, b1, b2, b3, b4 in zip(y, k1, k2, k3, k4)
        )
        t = t_next
        steps += 1
        _check_finite(y, steps, t)

        k1 = tuple(rhs(y))
        res = scaled_residual(k1, y)
        converged = res < tol
        if converged or steps % record_stride == 0:
            traj.times.append(t)
            traj.states.append(y)
            recorded_at = steps
        if converged:
            traj.converged = True
            traj.final_residual = res
            return traj

    if recorded_at != steps:
        traj.times.append(t)
        traj.states.append(y)
    traj.final_residual = res
    return traj


def _run_adaptive(rhs, y, k1, config, record_stride, traj):
    t = 0.0
    dt = config.dt_initial
    t_max = config.t_max
    tol = config.steady_state_tol
    atol = config.abs_tol
    rtol = config.rel_tol
    steps = 0
    attempts = 0
    recorded_at = 0
    res = math.inf

    while attempts < config.max_steps:
        remaining = t_max - t
        if remaining <= 0.0:
            break
        h = dt if dt < remaining else remaining
        # underflow concerns the controller's step, not a final clipped one
        if dt < remaining and dt < 1e-12 * max(abs(t), 1.0):
            raise StepUnderflowError(
                f"adaptive step underflow at t = {t!r} (h = {h!r}): rate "
                "ratio too stiff for an explicit method; reduce the ratio "
                "or use the closed-form stationary solutions"
            )
        attempts += 1

        k2 = rhs(tuple(a + h * _A2[0] * b for a, b in zip(y, k1)))
        k3 = rhs(
            tuple(
                a + h * (_A3[0] * b1 + _A3[1] * b2)
                for a, b1, b2 in zip(y, k1, k2)
            )
        )
        k4 = rhs(
            tuple(
                a + h * (_A4[0] * b1 + _A4[1] * b2 + _A4[2] * b3)
                for a, b1, b2, b3 in zip(y, k1, k2, k3)
            )
        )
        k5 = rhs(
            tuple(
                a + h * (_A5[0] * b1 + _A5[1] * b2 + _A5[2] * b3 + _A5[3] * b4)
                for a, b1, b2, b3, b4 in zip(y, k1, k2, k3, k4)
            )
        )
        k6 = rhs(
            tuple(
                a
                + h
                * (
                    _A6[0] * b1
                    + _A6[1] * b2
                    + _A6[2] * b3
                    + _A6[3] * b4
                    + _A6[4] * b5
                )
                for a, b1, b2, b3, b4, b5 in zip(y, k1, k2, k3, k4, k5)
            )
        )
        y_new = tuple(
            a
            + h
            * (
                _B[0] * b1
                + _B[2] * b3
                + _B[3] * b4
                + _B[4] * b5
                + _B[5] * b6
            )
            for a, b1, b3, b4, b5, b6 in zip(y, k1, k3, k4, k5, k6)
        )
        k7 = tuple(rhs(y_new))

        err_norm = 0.0
        for a, b, e1, e3, e4, e5, e6, e7 in zip(
            y, y_new, k1, k3, k4, k5, k6, k7
        ):
            err = h * (
                _E[0] * e1
                + _E[2] * e3
                + _E[3] * e4
                + _E[4] * e5
                + _E[5] * e6
                + _E[6] * e7
            )
            scale = atol + rtol * max(abs(a), abs(b))
            r = abs(err) / scale
            if r > err_norm or not math.isfinite(r):
                err_norm = r if math.isfinite(r) else math.inf
                if err_norm == math.inf:
                    break

        if err_norm > 1.0:
            if math.isfinite(err_norm):
                factor = max(_MIN_FACTOR, _SAFETY * err_norm ** -0.2)
            else:
                factor = 0.5
            dt = h * min(1.0, factor)
            continue

        # accepted
        t = t_max if h == remaining else t + h
        y = y_new
        k1 = k7
        steps += 1
        _check_finite(y, steps, t)
        if err_norm < 1e-10:
            factor = _MAX_FACTOR
        else:
            factor = min(_MAX_FACTOR, max(_MIN_FACTOR, _SAFETY * err_norm ** -0.2))
        dt = h * factor

        res = scaled_residual(k1, y)
        converged = res < tol
        if converged or steps % record_stride == 0:
            traj.times.append(t)
            traj.states.append(y)
            recorded_at = steps
        if converged:
            traj.converged = True
            traj.final_residual = res
            return traj

    if recorded_at != steps or steps == 0:
        if traj.times[-1] != t:
            traj.times.append(t)
            traj.states.append(y)
    traj.final_residual = res
    return traj
