"""Measured velocity dispersions of the probe, their limits and validity checks.

Two independent evaluation routes are shipped and cross-asserted:

  closed_form   prefactor * G_beta[window-bracket], where the bracket is the
                closed-form pair difference of z_fn / w_fn;
  raw_integral  prefactor * G_beta[symmetrized window moment], built from the
                regularized basic integrals directly.

Their agreement at every pole-free point is the cheapest continuous check of
the nontrivial algebra connecting the two.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Literal, Optional

from .errors import DomainError, SingularPointError
from .integrals import coeff_hat, sym_big_i, w_bracket, w_fn, z_bracket
from .params import (DEFAULT_QUAD, PhysicalConfig, QuadratureSpec,
                     derive_dimensionless)
from .smearing import GaussianTransformSpec, PoleStrategy, gauss_transform_report

PI_SQ = math.pi ** 2

#: Regime-flag thresholds on sigma = 2z/tau (documented, not tuned).
LATE_TIME_SIGMA = 0.01      # measuring time >> light round trip
SHORT_TIME_SIGMA = 100.0    # measuring time << light round trip
POLE_ADJACENT_HALF_WIDTH = 0.01   # |sigma - 1| window around the log pole

Route = Literal["closed_form", "raw_integral"]


class Component(enum.Enum):
    Z = "z"
    X_OR_Y = "x_or_y"


@dataclass(frozen=True)
class ValidityReport:
    """Late-time applicability bounds on the probe model.

    displacement_ok:  sqrt(<dv_z^2>) tau < z  (probe barely moves)
    spread_ok:        tau < (b m) z           (packet barely spreads)
    packet_size_ok:   b >= 10 / m             (packet well above Compton size)
    """

    displacement_ok: bool
    spread_ok: bool
    packet_size_ok: bool


@dataclass(frozen=True)
class DispersionResult:
    value: float
    component: Component
    regime: tuple[str, ...]
    error_estimate: float
    validity: Optional[ValidityReport]

    def __post_init__(self):
        if self.error_estimate < 0:
            raise DomainError("error_estimate must be >= 0")

    def to_dict(self) -> dict:
        d = {
            "value": self.value,
            "component": self.component.value,
            "regime": list(self.regime),
            "error_estimate": self.error_estimate,
            "validity": None,
        }
        if self.validity is not None:
            d["validity"] = {
                "displacement_ok": self.validity.displacement_ok,
                "spread_ok": self.validity.spread_ok,
                "packet_size_ok": self.validity.packet_size_ok,
            }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "DispersionResult":
        validity = None
        if d.get("validity") is not None:
            v = d["validity"]
            validity = ValidityReport(bool(v["displacement_ok"]),
                                      bool(v["spread_ok"]),
                                      bool(v["packet_size_ok"]))
        return cls(value=float(d["value"]),
                   component=Component(d["component"]),
                   regime=tuple(d["regime"]),
                   error_estimate=float(d["error_estimate"]),
                   validity=validity)


def _regime_flags(sigma: float, beta: float) -> tuple[str, ...]:
    flags = []
    if sigma <= LATE_TIME_SIGMA:
        flags.append("late_time")
    if sigma >= SHORT_TIME_SIGMA:
        flags.append("short_time")
    if abs(sigma - 1.0) <= POLE_ADJACENT_HALF_WIDTH:
        flags.append("pole_adjacent")
    if beta == 0.0:
        flags.append("point_particle")
    return tuple(flags)


def _point_value_z(cfg: PhysicalConfig, sigma: float) -> float:
    # (e^2 / (4 pi^2 m^2 tau^2 sigma^3)) ln(((1+sigma)/(1-sigma))^2),
    # with the log of the absolute ratio so sigma > 1 is covered.
    tau = cfg.measure_time_tau
    pref = cfg.charge_sq / (4.0 * PI_SQ * cfg.mass ** 2 * tau ** 2 * sigma ** 3)
    return pref * 2.0 * math.log((1.0 + sigma) / abs(1.0 - sigma))


def _point_value_x(cfg: PhysicalConfig, sigma: float) -> float:
    tau = cfg.measure_time_tau
    pref = -2.0 * cfg.charge_sq / (PI_SQ * cfg.mass ** 2 * tau ** 2 * sigma ** 2)
    return pref * w_fn(sigma, 1.0)


def point_particle(cfg: PhysicalConfig, component: Component,
                   with_validity: bool = True) -> DispersionResult:
    """Zero-width-packet dispersion in closed form (no quadrature).

    Singular at sigma = 1 (measuring time equal to the light round trip).
    """
    pt = derive_dimensionless(cfg)
    sigma = pt.sigma
    if sigma == 1.0:
        raise SingularPointError(
            "sigma = 1: the point-particle closed form has a log singularity")
    if component is Component.Z:
        value = _point_value_z(cfg, sigma)
    else:
        value = _point_value_x(cfg, sigma)
    flags = set(_regime_flags(sigma, 0.0))
    flags.add("point_particle")
    result = DispersionResult(value=value, component=component,
                              regime=tuple(sorted(flags)),
                              error_estimate=0.0, validity=None)
    if with_validity and component is Component.Z:
        result = DispersionResult(value=value, component=component,
                                  regime=result.regime, error_estimate=0.0,
                                  validity=validity_check(cfg, result))
    return result


def _smeared(cfg: PhysicalConfig, component: Component, route: Route,
             quad: QuadratureSpec) -> tuple[float, float, float, float]:
    """(value, err, sigma, beta) for the beta > 0 Gaussian-averaged dispersion."""
    pt = derive_dimensionless(cfg)
    sigma, beta = pt.sigma, pt.beta
    tau, m, e2 = cfg.measure_time_tau, cfg.mass, cfg.charge_sq

    if component is Component.Z:
        if route == "closed_form":
            f, pts = z_bracket(sigma)
            pref = 4.0 * e2 / (PI_SQ * m ** 2 * tau ** 2 * sigma ** 2)
        else:
            f, pts = sym_big_i(sigma, tilde=False)
            pref = 2.0 * e2 / (PI_SQ * m ** 2 * tau ** 2)
        strategy = PoleStrategy.SPLIT_LOG
    else:
        if route == "closed_form":
            f, pts = w_bracket(sigma)
            pref = -2.0 * e2 / (PI_SQ * m ** 2 * tau ** 2 * sigma ** 2)
        else:
            f, pts = sym_big_i(sigma, tilde=True)
            pref = -2.0 * e2 / (PI_SQ * m ** 2 * tau ** 2)
        strategy = PoleStrategy.PRINCIPAL_VALUE

    spec = GaussianTransformSpec(beta=beta, quad=quad, pole_strategy=strategy)
    val, err = gauss_transform_report(f, spec, singular_points=pts)
    return pref * val, abs(pref) * err, sigma, beta


def _point_route_value(cfg: PhysicalConfig, component: Component,
                       route: Route, sigma: float) -> float:
    # beta = 0: both routes are closed forms evaluated at nu = 0.
    tau, m, e2 = cfg.measure_time_tau, cfg.mass, cfg.charge_sq
    if route == "closed_form":
        return (_point_value_z(cfg, sigma) if component is Component.Z
                else _point_value_x(cfg, sigma))
    if component is Component.Z:
        f, _ = sym_big_i(sigma, tilde=False)
        return 2.0 * e2 / (PI_SQ * m ** 2 * tau ** 2) * f(0.0)
    f, _ = sym_big_i(sigma, tilde=True)
    return -2.0 * e2 / (PI_SQ * m ** 2 * tau ** 2) * f(0.0)


def _dispersion(cfg: PhysicalConfig, component: Component,
                quad: QuadratureSpec, route: Route) -> DispersionResult:
    if route not in ("closed_form", "raw_integral"):
        raise DomainError(f"unknown route {route!r}")
    pt = derive_dimensionless(cfg)
    sigma, beta = pt.sigma, pt.beta
    if beta == 0.0:
        if sigma == 1.0:
            raise SingularPointError(
                "sigma = 1 with beta = 0 is a singular configuration")
        value, err = _point_route_value(cfg, component, route, sigma), 0.0
    else:
        value, err, sigma, beta = _smeared(cfg, component, route, quad)
    flags = _regime_flags(sigma, beta)
    result = DispersionResult(value=value, component=component, regime=flags,
                              error_estimate=err, validity=None)
    if component is Component.Z:
        result = DispersionResult(value=value, component=component,
                                  regime=flags, error_estimate=err,
                                  validity=validity_check(cfg, result))
    return result


def dispersion_z(cfg: PhysicalConfig, quad: QuadratureSpec = DEFAULT_QUAD,
                 route: Route = "closed_form") -> DispersionResult:
    """Normal-component velocity dispersion accumulated over the measurement."""
    return _dispersion(cfg, Component.Z, quad, route)


def dispersion_x(cfg: PhysicalConfig, quad: QuadratureSpec = DEFAULT_QUAD,
                 route: Route = "closed_form") -> DispersionResult:
    """Parallel-component velocity dispersion (x and y are equal)."""
    return _dispersion(cfg, Component.X_OR_Y, quad, route)


def asymptote(cfg: PhysicalConfig, component: Component,
              regime: Literal["late_time", "short_time"],
              quad: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Asymptotic-law value for the requested regime.

    late_time uses the finite-(sigma, beta) coefficient (requires a
    spread packet, b > 0); short_time is the universal quadratic-in-tau law
    for the normal component.
    """
    pt = derive_dimensionless(cfg)
    tau, m, e2, z = (cfg.measure_time_tau, cfg.mass, cfg.charge_sq,
                     cfg.distance_z)
    if regime == "late_time":
        if pt.beta <= 0:
            raise DomainError(
                "late-time asymptote needs packet_width_b > 0; the beta = 0 "
                "late-time limit is the point-particle plateau instead")
        if component is Component.Z:
            return 4.0 * e2 * coeff_hat(pt.sigma, pt.beta, "A", quad) / (
                PI_SQ * m ** 2 * tau ** 2)
        return -2.0 * e2 * coeff_hat(pt.sigma, pt.beta, "B", quad) / (
            PI_SQ * m ** 2 * tau ** 2)
    if regime == "short_time":
        if component is not Component.Z:
            raise DomainError("the short-time law is established for the "
                              "normal component only")
        return e2 * tau ** 2 / (16.0 * PI_SQ * m ** 2 * z ** 4)
    raise DomainError(f"unknown regime {regime!r}")


def late_time_reference(cfg: PhysicalConfig, component: Component) -> float:
    """Idealized late-time value with the coefficient pinned to 1/12 (normal)
    or 1/6 (parallel); audit reference, not an assertion."""
    tau, m, e2 = cfg.measure_time_tau, cfg.mass, cfg.charge_sq
    if component is Component.Z:
        return 4.0 * e2 * (1.0 / 12.0) / (PI_SQ * m ** 2 * tau ** 2)
    return -2.0 * e2 * (1.0 / 6.0) / (PI_SQ * m ** 2 * tau ** 2)


def point_particle_plateau(cfg: PhysicalConfig, component: Component) -> float:
    """Leading late-time limit of the point-particle closed forms."""
    m, e2 = cfg.mass, cfg.charge_sq
    if component is Component.Z:
        return e2 / (4.0 * PI_SQ * m ** 2 * cfg.distance_z ** 2)
    return -e2 / (3.0 * PI_SQ * m ** 2 * cfg.measure_time_tau ** 2)


def validity_check(cfg: PhysicalConfig, result: DispersionResult) -> ValidityReport:
    """Applicability bounds for a normal-component result.

    The displacement bound needs the z dispersion because only motion
    toward/away from the plate changes the geometry.
    """
    if result.component is not Component.Z:
        raise DomainError("validity_check applies to z-component results")
    tau, z, b, m = (cfg.measure_time_tau, cfg.distance_z,
                    cfg.packet_width_b, cfg.mass)
    displacement_ok = math.sqrt(max(result.value, 0.0)) * tau < z
    spread_ok = tau < b * m * z
    packet_size_ok = b >= 10.0 / m
    return ValidityReport(displacement_ok=displacement_ok,
                          spread_ok=spread_ok,
                          packet_size_ok=packet_size_ok)
