"""Regularized integral family for the box-window velocity-dispersion chains.

The dispersion integrands reduce to integrals of (1 - alpha*u)/(u^2 - sigma^2)^p
over unit intervals [nu, nu+1].  When a pole u = +-sigma falls inside the
interval the integral is assigned its regularized value: the difference of
vertical-line contour integrals rooted at the two endpoints.  j_closed is the
closed form of that endpoint function, i_reg the endpoint difference, and
z_fn / w_fn the closed-form building blocks the symmetrized chains collapse
into.  Every closed form here is cross-checked against brute-force quadrature
in the oracle module.
"""

from __future__ import annotations

import enum
import math
from typing import Callable, Literal

import numpy as np

from .errors import DomainError, SingularPointError
from .params import DEFAULT_QUAD, QuadratureSpec

__all__ = [
    "IntegralOrder", "symmetrize", "j_closed", "i_reg", "big_i",
    "z_fn", "w_fn", "coeff_hat", "z_bracket", "w_bracket", "sym_big_i",
]

# Relative width of the guard band around |nu| = sigma inside which the
# closed forms are refused (log(0) / division by zero territory).
_POLE_GUARD = 1e-13


class IntegralOrder(enum.Enum):
    """Power of the (u^2 - sigma^2) denominator in the basic integral."""

    QUADRATIC = 2   # normal-component chain
    CUBIC = 3       # parallel-component chain


def symmetrize(f: Callable[[float], float], u: float) -> float:
    """Even part of f at u: (f(u) + f(-u)) / 2."""
    return 0.5 * (f(u) + f(-u))


def _guard_pole(nu, sigma) -> None:
    scale = max(1.0, float(sigma))
    bad = np.abs(np.abs(nu) - sigma) <= _POLE_GUARD * scale
    if np.any(bad):
        raise SingularPointError(
            f"|nu| = sigma = {sigma!r} is a singular point of the closed forms")


def _log_ratio(nu, sigma):
    # ln(((|nu|+sigma)/(|nu|-sigma))^2) computed as 2 ln|..| so the value
    # stays defined on |nu| < sigma where the un-squared ratio is negative.
    a = np.abs(nu)
    return 2.0 * np.log((a + sigma) / np.abs(a - sigma))


def j_closed(nu, alpha: int, sigma: float, order: IntegralOrder = IntegralOrder.QUADRATIC):
    """Closed-form endpoint function of the regularized basic integral.

    The regularized value of the unit-interval integral is the difference
    j_closed(nu) - j_closed(nu+1); see i_reg.  sgn(0) := 0, which keeps the
    function continuous across nu = 0 because the log factor it multiplies
    vanishes there.
    """
    if sigma <= 0:
        raise DomainError(f"sigma must be > 0, got {sigma!r}")
    if alpha not in (0, 1):
        raise DomainError(f"alpha must be 0 or 1, got {alpha!r}")
    _guard_pole(nu, sigma)
    nu = np.asarray(nu, dtype=float)
    d = nu * nu - sigma * sigma
    log_term = np.sign(nu) * _log_ratio(nu, sigma)
    if order is IntegralOrder.QUADRATIC:
        out = (nu - alpha * sigma ** 2) / (2.0 * sigma ** 2 * d) \
            - log_term / (8.0 * sigma ** 3)
    elif order is IntegralOrder.CUBIC:
        out = (-alpha / (4.0 * d * d)
               + nu * (5.0 * sigma ** 2 - 3.0 * nu * nu) / (8.0 * sigma ** 4 * d * d)
               + 3.0 * log_term / (32.0 * sigma ** 5))
    else:
        raise DomainError(f"unknown integral order {order!r}")
    return out if out.ndim else float(out)


def i_reg(nu, alpha: int, sigma: float, order: IntegralOrder = IntegralOrder.QUADRATIC):
    """Regularized value of int_nu^{nu+1} (1 - alpha u)/(u^2 - sigma^2)^p du.

    Coincides with the ordinary integral whenever [nu, nu+1] is pole-free
    (direct_interval_oracle checks exactly that); when a pole is interior
    it is the finite regularized assignment.
    """
    return j_closed(nu, alpha, sigma, order) - j_closed(np.asarray(nu, dtype=float) + 1.0,
                                                        alpha, sigma, order)


def big_i(nu, sigma: float, tilde: bool = False):
    """Unit-window moment combination I(nu,1) + nu I(nu,0) of the basic integrals.

    With tilde=True the cubic-chain correction 2 sigma^2 (I~(nu,1) + nu I~(nu,0))
    is added, which is the combination the parallel components reduce to.
    """
    nu = np.asarray(nu, dtype=float)
    out = i_reg(nu, 1, sigma, IntegralOrder.QUADRATIC) \
        + nu * i_reg(nu, 0, sigma, IntegralOrder.QUADRATIC)
    if tilde:
        out = out + 2.0 * sigma ** 2 * (
            i_reg(nu, 1, sigma, IntegralOrder.CUBIC)
            + nu * i_reg(nu, 0, sigma, IntegralOrder.CUBIC))
    return out if out.ndim else float(out)


def z_fn(sigma: float, nu):
    """Log-weighted window function (|nu|/(16 sigma)) ln(((|nu|+sigma)/(|nu|-sigma))^2).

    Even in nu and in sigma, non-negative everywhere defined, with an
    integrable log divergence at |nu| = sigma.  Tends to 1/4 as
    sigma/|nu| -> 0 and vanishes identically at nu = 0.
    """
    if sigma <= 0:
        raise DomainError(f"sigma must be > 0, got {sigma!r}")
    _guard_pole(nu, sigma)
    nu = np.asarray(nu, dtype=float)
    a = np.abs(nu)
    out = a / (8.0 * sigma) * np.log((a + sigma) / np.abs(a - sigma))
    return out if out.ndim else float(out)


def w_fn(sigma: float, nu):
    """Pole-plus-log window function nu^2/(4(nu^2 - sigma^2)) - z_fn(sigma, nu).

    Even in nu and sigma; vanishes at nu = 0 and as sigma -> 0; carries a
    simple pole (plus the log of z_fn) at |nu| = sigma.
    """
    nu = np.asarray(nu, dtype=float)
    z = z_fn(sigma, nu)
    out = nu * nu / (4.0 * (nu * nu - sigma * sigma)) - z
    return out if out.ndim else float(out)


def z_bracket(sigma: float) -> tuple[Callable, tuple[float, ...]]:
    """Difference z_fn(sigma, 1+nu) - z_fn(sigma, nu) with its singular points."""
    def f(nu):
        return z_fn(sigma, 1.0 + np.asarray(nu, dtype=float)) - z_fn(sigma, nu)
    points = _bracket_points(sigma)
    return f, points


def w_bracket(sigma: float) -> tuple[Callable, tuple[float, ...]]:
    """Difference w_fn(sigma, 1+nu) - w_fn(sigma, nu) with its singular points."""
    def f(nu):
        return w_fn(sigma, 1.0 + np.asarray(nu, dtype=float)) - w_fn(sigma, nu)
    points = _bracket_points(sigma)
    return f, points


def _bracket_points(sigma: float) -> tuple[float, ...]:
    # Singularities of the (1+nu, nu) bracket: |nu| = sigma and |1+nu| = sigma.
    return tuple(sorted({sigma, -sigma, -1.0 + sigma, -1.0 - sigma}))


def sym_big_i(sigma: float, tilde: bool = False) -> tuple[Callable[[float], float],
                                                          tuple[float, ...]]:
    """Symmetrized window moment nu -> {big_i(nu)}_S with its singular points."""
    def f(nu: float) -> float:
        return symmetrize(lambda u: big_i(u, sigma, tilde), nu)
    points = tuple(sorted({sigma, -sigma, 1.0 - sigma, -(1.0 - sigma),
                           1.0 + sigma, -(1.0 + sigma)}))
    return f, points


def coeff_hat(sigma: float, beta: float, which: Literal["A", "B"],
              quad: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Finite-(sigma, beta) late-time coefficient: the Gaussian average of a
    window bracket divided by sigma^2.

    which="A" averages the z_fn bracket (integrable log spikes, handled by
    splitting); which="B" averages the w_fn bracket (simple poles, handled
    by principal value).  The sigma -> 0 limit is deliberately NOT taken
    symbolically: the pointwise limit is singular at nu = 0, so only the
    finite-sigma Gaussian average is numerically well-defined.  Deviations
    from the idealized 1/12 and 1/6 estimates are audit output, not
    assertions.
    """
    from .smearing import GaussianTransformSpec, PoleStrategy, gauss_transform

    if sigma <= 0:
        raise DomainError(f"sigma must be > 0, got {sigma!r}")
    if beta <= 0:
        raise DomainError(f"beta must be > 0, got {beta!r}")
    if which == "A":
        f, points = z_bracket(sigma)
        strategy = PoleStrategy.SPLIT_LOG
    elif which == "B":
        f, points = w_bracket(sigma)
        strategy = PoleStrategy.PRINCIPAL_VALUE
    else:
        raise DomainError(f"which must be 'A' or 'B', got {which!r}")
    spec = GaussianTransformSpec(beta=beta, quad=quad, pole_strategy=strategy)
    return gauss_transform(f, spec, singular_points=points) / sigma ** 2
