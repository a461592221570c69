"""Physical configuration and reduced (dimension-free) evaluation variables.

Natural units c = hbar = 1 throughout: lengths and times share one unit,
mass is an inverse length, and the coupling enters only as e^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

#: Fine-structure coupling e^2 in natural units.
DEFAULT_CHARGE_SQ = 1.0 / 137.0

#: Flag attached when sigma = 2z/tau lands exactly on the log singularity
#: of the point-particle closed forms.
FLAG_SIGMA_BOUNDARY = "sigma-on-singular-boundary"
#: Flag attached when the packet width is zero (delta-function smearing).
FLAG_POINT_PARTICLE = "point-particle"


@dataclass(frozen=True)
class PhysicalConfig:
    """Probe and measurement parameters in natural units.

    distance_z       distance from the reflecting plate (length, > 0)
    measure_time_tau duration of the measuring plateau (time, > 0)
    packet_width_b   rms temporal width of the probe wave packet (time, >= 0)
    switching_mu     relative switching-tail duration (dimensionless, >= 0)
    charge_sq        coupling e^2 (dimensionless, > 0)
    mass             probe mass (inverse length, > 0)
    """

    distance_z: float
    measure_time_tau: float
    packet_width_b: float = 0.0
    switching_mu: float = 0.0
    charge_sq: float = DEFAULT_CHARGE_SQ
    mass: float = 1.0

    def __post_init__(self):
        for name, value, positive in (
            ("distance_z", self.distance_z, True),
            ("measure_time_tau", self.measure_time_tau, True),
            ("packet_width_b", self.packet_width_b, False),
            ("switching_mu", self.switching_mu, False),
            ("charge_sq", self.charge_sq, True),
            ("mass", self.mass, True),
        ):
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
            if positive and value <= 0:
                raise DomainError(f"{name} must be > 0, got {value!r}")
            if not positive and value < 0:
                raise DomainError(f"{name} must be >= 0, got {value!r}")


@dataclass(frozen=True)
class DimensionlessPoint:
    """Reduced variables used by every integral in the package.

    sigma = 2 z / tau    ratio of the light round-trip time to the plate
                         against the measuring time
    beta  = sqrt(2) b / tau  reduced rms packet width
    nu, xi, eta, chi, lambda_ are evaluation coordinates consumed by the
    quadrature routines; they are zero-initialised here.
    """

    sigma: float
    beta: float
    nu: float = 0.0
    xi: float = 0.0
    eta: float = 0.0
    chi: float = 0.0
    lambda_: float = 0.0
    flags: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.sigma <= 0:
            raise DomainError(f"sigma must be > 0, got {self.sigma!r}")
        if self.beta < 0:
            raise DomainError(f"beta must be >= 0, got {self.beta!r}")


@dataclass(frozen=True)
class QuadratureSpec:
    """Numerical-integration policy shared by all quadrature routines.

    tail_truncation is the half-width of Gaussian transforms in units of
    the Gaussian rms; the default of 10 leaves < 1e-22 of the weight
    outside, far below double precision.  singularity_exclusion is the
    relative half-width inside which direct kernel evaluation is refused
    (quadrature must split at poles, never step over them).
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-13
    max_subdivisions: int = 300
    hermite_nodes: int = 96
    tail_truncation: float = 10.0
    singularity_exclusion: float = 1e-9

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise DomainError("tolerances must be > 0")
        if self.singularity_exclusion <= 0:
            raise DomainError("singularity_exclusion must be > 0")
        if self.max_subdivisions <= 0:
            raise DomainError("max_subdivisions must be > 0")
        if self.hermite_nodes < 8:
            raise DomainError(f"hermite_nodes must be >= 8, got {self.hermite_nodes}")
        if self.tail_truncation < 6:
            raise DomainError(f"tail_truncation must be >= 6, got {self.tail_truncation}")

    def refined(self, factor: float = 0.5) -> "QuadratureSpec":
        """Copy with tolerances tightened by `factor` (for convergence checks)."""
        return QuadratureSpec(
            rel_tol=self.rel_tol * factor,
            abs_tol=self.abs_tol * factor,
            max_subdivisions=self.max_subdivisions,
            hermite_nodes=self.hermite_nodes,
            tail_truncation=self.tail_truncation,
            singularity_exclusion=self.singularity_exclusion,
        )


DEFAULT_QUAD = QuadratureSpec()


def derive_dimensionless(cfg: PhysicalConfig) -> DimensionlessPoint:
    """Reduce a physical configuration to the dimension-free point (sigma, beta).

    Scale-covariant: rescaling tau, z and b by a common factor leaves the
    result unchanged.  sigma = 1 (tau equal to the light round trip) and
    beta = 0 (point particle) are legal but flagged so downstream
    consumers can warn.
    """
    if cfg.distance_z <= 0:
        raise DomainError(f"distance_z must be > 0, got {cfg.distance_z!r}")
    if cfg.measure_time_tau <= 0:
        raise DomainError(f"measure_time_tau must be > 0, got {cfg.measure_time_tau!r}")
    sigma = 2.0 * cfg.distance_z / cfg.measure_time_tau
    beta = math.sqrt(2.0) * cfg.packet_width_b / cfg.measure_time_tau
    flags = []
    if sigma == 1.0:
        flags.append(FLAG_SIGMA_BOUNDARY)
    if beta == 0.0:
        flags.append(FLAG_POINT_PARTICLE)
    return DimensionlessPoint(sigma=sigma, beta=beta, flags=tuple(flags))
