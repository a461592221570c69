"""Velocity dispersion of a smeared charged probe near a perfectly reflecting plate.

The package computes the Gaussian-packet-averaged velocity dispersion of a
charged particle held at distance z from an ideal mirror, together with its
point-particle, late-time and short-time limits, the plateau/tail switching
decomposition, and brute-force oracles validating every closed form.
"""

from .dispersion import (Component, DispersionResult, ValidityReport,
                         asymptote, dispersion_x, dispersion_z,
                         late_time_reference, point_particle,
                         point_particle_plateau, validity_check)
from .errors import (DomainError, QuadratureError, SingularPointError,
                     VacprobeError)
from .integrals import (IntegralOrder, big_i, coeff_hat, i_reg, j_closed,
                        symmetrize, w_fn, z_fn)
from .kernels import (DecayClass, KernelHandle, kernel_xx, kernel_zz,
                      xx_handle, zz_handle)
from .oracles import (OracleReport, direct_interval_oracle,
                      double_integral_oracle, j_vertical_oracle,
                      mc_gauss_oracle)
from .params import (DEFAULT_QUAD, DimensionlessPoint, PhysicalConfig,
                     QuadratureSpec, derive_dimensionless)
from .smearing import (GaussianTransformSpec, PoleStrategy, gauss_transform,
                       smeared_kernel)
from .switching import (F_CAL_LIMIT_AT_INF, F_CAL_LIMIT_AT_ZERO,
                        LorentzPlateau, f_cal, full_integral,
                        lorentz_plateau_eval, measuring_integral,
                        plateau_moments)

__version__ = "0.1.0"

__all__ = [
    "Component", "DispersionResult", "ValidityReport", "asymptote",
    "dispersion_x", "dispersion_z", "late_time_reference", "point_particle",
    "point_particle_plateau", "validity_check",
    "DomainError", "QuadratureError", "SingularPointError", "VacprobeError",
    "IntegralOrder", "big_i", "coeff_hat", "i_reg", "j_closed", "symmetrize",
    "w_fn", "z_fn",
    "DecayClass", "KernelHandle", "kernel_xx", "kernel_zz", "xx_handle",
    "zz_handle",
    "OracleReport", "direct_interval_oracle", "double_integral_oracle",
    "j_vertical_oracle", "mc_gauss_oracle",
    "DEFAULT_QUAD", "DimensionlessPoint", "PhysicalConfig", "QuadratureSpec",
    "derive_dimensionless",
    "GaussianTransformSpec", "PoleStrategy", "gauss_transform",
    "smeared_kernel",
    "F_CAL_LIMIT_AT_INF", "F_CAL_LIMIT_AT_ZERO", "LorentzPlateau", "f_cal",
    "full_integral", "lorentz_plateau_eval", "measuring_integral",
    "plateau_moments",
    "__version__",
]
