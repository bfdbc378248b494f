"""Rate-equation models of nanolasers with collective emitter effects.

Closed-form stationary photon output and inversion of a two-level laser
model that retains polarization and inter-emitter correlations, its
conventional rate-equation limit, zero-delay photon statistics (g2) for
two level schemes, explicit time integration with steady-state detection,
and a CSV-producing command line front end.
"""

from .errors import (
    InconsistentParametersError,
    NanolaserError,
    NonConvergenceError,
    NonFiniteStateError,
    NumericalError,
    ParameterError,
    PoleError,
    RegimeError,
    StepUnderflowError,
)
from .integrator import (
    IntegrationConfig,
    Trajectory,
    default_config,
    find_steady,
    integrate,
    scaled_residual,
)
from .lre import (
    LreState,
    RenormalizedRates,
    beta,
    beta_c,
    beta_c_from_ratios,
    lre_flow,
    lre_rhs,
    lre_stationary,
    renormalized_rates,
)
from .params import (
    DerivedParams,
    DimensionlessParams,
    LaserParams,
    derive,
    from_dimensionless,
    gamma_perp_at,
)
from .semiconductor import (
    SemiState,
    crossing_pump,
    empty_state,
    semi_flow,
    semi_rhs,
    semi_stationary_n,
    semi_stationary_ne,
    semi_stationary_state,
)
from .statistics import (
    g2_nonlasing_range,
    g2_semiconductor,
    g2_semiconductor_value,
    g2_two_level,
    g2_two_level_at_pump,
    g2_two_level_value,
    g2_upper_bound,
)
from .two_level import (
    GlreState,
    StateDerivative,
    c_factor,
    dark_state,
    glre_flow,
    glre_rhs,
    saturation_photon_number,
    stationary_constant_coupling,
    stationary_inversion,
    stationary_n,
    stationary_n_no_ce,
    stationary_state,
)

__version__ = "0.1.0"
