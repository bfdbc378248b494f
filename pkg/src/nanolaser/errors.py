"""Exception hierarchy shared across the package.

Two broad families matter for callers (and for the CLI exit codes):
configuration/validation problems (`ParameterError` and subclasses) and
numerical failures raised while evaluating or integrating a model
(`NumericalError` and subclasses).
"""


class NanolaserError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(NanolaserError, ValueError):
    """A parameter violates its documented constraint.

    The message always names the offending field and the constraint.
    """


class InconsistentParametersError(ParameterError):
    """A dimensionless parameter set over-determines the rates and the
    redundant values disagree beyond tolerance."""


class RegimeError(NanolaserError, ValueError):
    """A closed-form expression was requested outside its regime of
    validity (e.g. the saturation photon number in a lasing configuration)."""


class NumericalError(NanolaserError, ArithmeticError):
    """Base class for runtime numerical failures."""


class PoleError(NumericalError):
    """Evaluation exactly at a pole of a closed-form expression."""


class NonFiniteStateError(NumericalError):
    """The integrator produced a NaN or infinite state component."""

    def __init__(self, message, step=None, time=None, state=None):
        super().__init__(message)
        self.step = step
        self.time = time
        self.state = state


class StepUnderflowError(NumericalError):
    """The adaptive integrator reduced the step below the resolvable size.

    Usually a sign of a rate ratio too stiff for an explicit method; reduce
    the ratio or use the closed-form stationary solutions instead.
    """


class NonConvergenceError(NumericalError):
    """A steady-state search terminated without meeting the residual
    tolerance; carries the final residual and state for diagnostics."""

    def __init__(self, message, residual=None, state=None):
        super().__init__(message)
        self.residual = residual
        self.state = state
