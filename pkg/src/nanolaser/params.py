"""Laser parameter sets: physical rates, dimensionless ratios and derived
quantities.

All rates are plain double-precision reals in a common (arbitrary) inverse
time unit; the dimensionless constructor fixes the cavity half-linewidth
``kappa = 1`` so that time is measured in cavity units.  Only the product
``omega0**2 * f`` enters the model equations, so dimensionless construction
stores ``f = 1`` and folds the coupling into ``omega0``.

The central derived quantities:

    g        = 4 omega0^2 f / (gamma_par gamma_perp)   saturation coupling
    g_c      = g / (1 + 2 kappa/gamma_perp)            collective reduction
    delta_th = gamma_perp kappa / (2 omega0^2 f)       threshold inversion
    p_th     = (N0 + delta_th) / (N0 - delta_th)       threshold pump
                                                        (only if N0 > delta_th)
    n_th     = kappa gamma_perp / (2 omega0^2 f)       upper-level threshold
                                                        of the fast-depletion
                                                        scheme (== delta_th)

``delta_th`` always equals ``2 kappa / (g gamma_par)``; both evaluation
routes are kept consistent to relative 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InconsistentParametersError, ParameterError

#: Relative tolerance for the redundant-ratio consistency check in
#: dimensionless construction.
CONSISTENCY_RTOL = 1e-9


def _require(cond: bool, field: str, constraint: str, value) -> None:
    if not cond:
        raise ParameterError(f"{field} must satisfy {constraint} (got {value!r})")


@dataclass(frozen=True)
class LaserParams:
    """Physical parameter set of one laser configuration.

    Attributes
    ----------
    omega0 : vacuum Rabi frequency of the lasing mode [1/time]
    f : mean squared emitter-mode coupling factor, in (0, 1]
    n_emitters : number of two-level emitters N0 (positive integer)
    kappa : half the cavity photon decay rate [1/time] (photon decay is 2 kappa)
    gamma_par : population relaxation rate [1/time]
    gamma_perp : polarization decay rate [1/time]; ignored (may be None) in
        pump-dependent-dephasing mode
    gamma_d : pure dephasing rate [1/time]; only used when
        pump_dependent_dephasing is True
    pump_dependent_dephasing : if True the polarization decay is recomputed
        per pump value as gamma_perp(P) = 2 gamma_d + gamma_par (1 + P)
    """

    omega0: float
    f: float
    n_emitters: int
    kappa: float
    gamma_par: float
    gamma_perp: float | None = None
    gamma_d: float = 0.0
    pump_dependent_dephasing: bool = False

    def __post_init__(self):
        _require(self.omega0 > 0, "omega0", "> 0", self.omega0)
        _require(0 < self.f <= 1, "f", "0 < f <= 1", self.f)
        _require(
            isinstance(self.n_emitters, int) and self.n_emitters >= 1,
            "n_emitters", ">= 1 (integer)", self.n_emitters,
        )
        _require(self.kappa > 0, "kappa", "> 0", self.kappa)
        _require(self.gamma_par > 0, "gamma_par", "> 0", self.gamma_par)
        if self.pump_dependent_dephasing:
            _require(self.gamma_d >= 0, "gamma_d", ">= 0", self.gamma_d)
        else:
            _require(
                self.gamma_perp is not None and self.gamma_perp > 0,
                "gamma_perp", "> 0", self.gamma_perp,
            )

    @property
    def coupling_sq(self) -> float:
        """The product omega0^2 f, the only combination entering dsigma/dt."""
        return self.omega0 * self.omega0 * self.f


def gamma_perp_at(params: LaserParams, pump: float) -> float:
    """Polarization decay rate at the given pump.

    Constant in the default mode; gamma_perp(P) = 2 gamma_d + gamma_par (1+P)
    when pump-dependent dephasing is enabled.
    """
    if params.pump_dependent_dephasing:
        return 2.0 * params.gamma_d + params.gamma_par * (1.0 + pump)
    return params.gamma_perp


@dataclass(frozen=True)
class DimensionlessParams:
    """A laser configuration specified purely by dimensionless ratios.

    The constructor of the corresponding rate set fixes kappa = 1, so the
    ratios here fully determine the physics:

    g : saturation coupling
    ratio_2k_gp : 2 kappa / gamma_perp
    dth_over_n0 : threshold inversion per emitter, delta_th / N0;
        may be omitted when kappa_over_gpar is given
    n_emitters : emitter count N0
    kappa_over_gpar : kappa / gamma_par, the second time-scale ratio;
        may be omitted when dth_over_n0 is given

    The three ratios (g, dth_over_n0, kappa_over_gpar) are mutually
    redundant: delta_th == 2 kappa / (g gamma_par).  Supplying both
    dth_over_n0 and kappa_over_gpar therefore over-determines the set and
    the pair is checked for consistency on conversion.
    """

    g: float
    ratio_2k_gp: float
    n_emitters: int
    dth_over_n0: float | None = None
    kappa_over_gpar: float | None = None

    def __post_init__(self):
        _require(self.g > 0, "g", "> 0", self.g)
        _require(self.ratio_2k_gp > 0, "ratio_2k_gp", "> 0", self.ratio_2k_gp)
        _require(
            isinstance(self.n_emitters, int) and self.n_emitters >= 1,
            "n_emitters", ">= 1 (integer)", self.n_emitters,
        )
        if self.dth_over_n0 is not None:
            _require(self.dth_over_n0 > 0, "dth_over_n0", "> 0", self.dth_over_n0)
        if self.kappa_over_gpar is not None:
            _require(
                self.kappa_over_gpar > 0, "kappa_over_gpar", "> 0",
                self.kappa_over_gpar,
            )
        if self.dth_over_n0 is None and self.kappa_over_gpar is None:
            raise ParameterError(
                "dth_over_n0 or kappa_over_gpar must be given: the threshold "
                "inversion is otherwise undetermined"
            )


@dataclass(frozen=True)
class DerivedParams:
    """Quantities computed once per (configuration, pump) pair.

    p_th is None when N0 <= delta_th: the configuration cannot lase at any
    pump (the photon number saturates instead).
    """

    g: float
    g_c: float
    delta_th: float
    p_th: float | None
    d_th: float
    n_th: float
    ratio_2k_gp: float
    gamma_perp: float

    @property
    def lasing(self) -> bool:
        """True when a semiclassical threshold pump exists (N0 > delta_th)."""
        return self.p_th is not None


def derive(params: LaserParams, pump: float = 0.0) -> DerivedParams:
    """Compute all derived quantities for one configuration at one pump.

    The pump only matters in pump-dependent-dephasing mode, where
    gamma_perp(P) is used throughout; otherwise the result is
    pump-independent.
    """
    _require(pump >= 0, "pump", ">= 0", pump)
    gp = gamma_perp_at(params, pump)
    o2f = params.coupling_sq
    n0 = float(params.n_emitters)

    g = 4.0 * o2f / (params.gamma_par * gp)
    ratio = 2.0 * params.kappa / gp
    g_c = g / (1.0 + ratio)
    delta_th = gp * params.kappa / (2.0 * o2f)
    p_th = (n0 + delta_th) / (n0 - delta_th) if n0 > delta_th else None
    return DerivedParams(
        g=g,
        g_c=g_c,
        delta_th=delta_th,
        p_th=p_th,
        d_th=delta_th / n0,
        n_th=delta_th,
        ratio_2k_gp=ratio,
        gamma_perp=gp,
    )


def from_dimensionless(dp: DimensionlessParams) -> LaserParams:
    """Construct a rate set (kappa = 1 time unit, f = 1) from ratios.

    gamma_perp follows from ratio_2k_gp and omega0 from the threshold
    condition delta_th = dth_over_n0 * N0.  gamma_par is then pinned by g
    through delta_th == 2 kappa / (g gamma_par); when kappa_over_gpar is
    supplied it must agree with that value to relative 1e-9, otherwise the
    set is rejected as inconsistent.  When dth_over_n0 is omitted it is
    derived from kappa_over_gpar instead.

    The round trip ``derive(from_dimensionless(dp))`` reproduces g, g_c and
    d_th to relative 1e-12.
    """
    kappa = 1.0
    gp = 2.0 * kappa / dp.ratio_2k_gp
    n0 = float(dp.n_emitters)

    if dp.dth_over_n0 is not None:
        delta_th = dp.dth_over_n0 * n0
        gamma_par = 2.0 * kappa / (dp.g * delta_th)
        if dp.kappa_over_gpar is not None:
            implied = kappa / gamma_par
            if not math.isclose(
                implied, dp.kappa_over_gpar, rel_tol=CONSISTENCY_RTOL
            ):
                raise InconsistentParametersError(
                    "kappa_over_gpar is inconsistent with (g, dth_over_n0, "
                    f"n_emitters): delta_th = 2 kappa/(g gamma_par) gives "
                    f"{2.0 * dp.kappa_over_gpar / dp.g!r} but dth_over_n0 * N0 "
                    f"= {delta_th!r}; kappa/gamma_par would need to be "
                    f"{implied!r}, got {dp.kappa_over_gpar!r}"
                )
    else:
        gamma_par = kappa / dp.kappa_over_gpar
        delta_th = 2.0 * kappa / (dp.g * gamma_par)

    o2f = gp * kappa / (2.0 * delta_th)
    return LaserParams(
        omega0=math.sqrt(o2f),
        f=1.0,
        n_emitters=dp.n_emitters,
        kappa=kappa,
        gamma_par=gamma_par,
        gamma_perp=gp,
    )
