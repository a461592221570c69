"""Plateau-with-Lorentzian-tails switching profile and its window integrals.

The switching function is 1 on the central plateau |t| <= tau/2 and decays
as mu^2 / ((|t|/tau - 1/2)^2 + mu^2) outside, so the plateau carries area
tau and the two tails carry area pi mu tau together.  measuring_integral is
the plateau-only (box-window) part of the double time integral of a kernel;
full_integral adds the tail and plateau-tail pieces of the decomposition,
whose tail weight function f_cal rises from 0 to pi/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad as _scipy_quad

from .errors import DomainError, QuadratureError, SingularPointError
from .integrals import symmetrize
from .kernels import DecayClass, KernelHandle
from .params import DEFAULT_QUAD, QuadratureSpec

#: Limits of the tail weight function at its domain boundaries.
F_CAL_LIMIT_AT_ZERO = 0.0
F_CAL_LIMIT_AT_INF = math.pi / 2.0


@dataclass(frozen=True)
class LorentzPlateau:
    """Unit plateau of duration tau glued to Lorentzian switching tails.

    mu is the relative switching duration: the tails carry area pi mu tau,
    so mu = 0 is the sudden-switching (pure box) limit.
    """

    tau: float
    mu: float = 0.0

    def __post_init__(self):
        if self.tau <= 0:
            raise DomainError(f"tau must be > 0, got {self.tau!r}")
        if self.mu < 0:
            raise DomainError(f"mu must be >= 0, got {self.mu!r}")

    @property
    def plateau_timescale(self) -> float:
        return self.tau

    @property
    def tail_timescale(self) -> float:
        return math.pi * self.mu * self.tau


def lorentz_plateau_eval(F: LorentzPlateau, t: float) -> float:
    """Switching amplitude at time t; in (0, 1] for mu > 0, continuous at the
    gluing points |t| = tau/2."""
    a = abs(t)
    if a <= F.tau / 2.0:
        return 1.0
    if F.mu == 0.0:
        return 0.0
    s = a / F.tau - 0.5
    return F.mu * F.mu / (s * s + F.mu * F.mu)


def plateau_moments(F: LorentzPlateau,
                    quad: QuadratureSpec = DEFAULT_QUAD) -> tuple[float, float]:
    """(plateau_area, tail_area) of the switching function.

    The plateau area is tau exactly (the profile is identically 1 there);
    the tail area is computed by quadrature and must come out as pi mu tau.
    """
    if F.mu == 0.0:
        return F.tau, 0.0
    val, err = _scipy_quad(lambda t: lorentz_plateau_eval(F, t),
                           F.tau / 2.0, np.inf,
                           epsabs=quad.abs_tol, epsrel=quad.rel_tol,
                           limit=quad.max_subdivisions)
    if err > max(abs(val), quad.abs_tol) * 1e-3:
        raise QuadratureError("tail-area quadrature failed",
                              value=2.0 * val, error_estimate=2.0 * err)
    return F.tau, 2.0 * float(val)


def f_cal(chi: float) -> float:
    """Tail weight function of the plateau/tail decomposition.

    Strictly increasing on (0, inf) from 0 to pi/2:
        (1 - 1/(chi^2+4)) arctan(chi) - ln(1+chi^2) / (chi (chi^2+4))
    """
    if chi <= 0:
        raise DomainError(
            f"chi must be > 0, got {chi!r}; use the F_CAL_LIMIT_* constants "
            "for the boundary values")
    c2 = chi * chi
    return (1.0 - 1.0 / (c2 + 4.0)) * math.atan(chi) \
        - math.log1p(c2) / (chi * (c2 + 4.0))


def _plateau_pole_positions(K: KernelHandle, tau: float, nu: float) -> list[float]:
    # xi values in [0, 1] where K(tau(xi +- nu)) diverges.
    hits = []
    for s in K.singular_points:
        for shift in (nu, -nu):
            for signed in (s, -s):
                xi = signed / tau - shift
                if -1e-12 <= xi <= 1.0 + 1e-12:
                    hits.append(xi)
    return hits


def measuring_integral(K: KernelHandle, tau: float, nu: float,
                       quad: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Box-window part: 2 tau^2 int_0^1 (1-xi) {K(tau(xi+nu))}_S(nu) dxi.

    Refuses windows that cross a kernel pole: those integrals only exist in
    the regularized sense and must go through the closed-form chain in the
    integrals module (the dispersion module routes them there).
    """
    if tau <= 0:
        raise DomainError(f"tau must be > 0, got {tau!r}")
    hits = _plateau_pole_positions(K, tau, nu)
    if hits:
        raise SingularPointError(
            f"kernel poles at xi = {sorted(hits)} lie inside the unit window; "
            "use the regularized closed-form route instead of direct quadrature")

    def integrand(xi: float) -> float:
        return (1.0 - xi) * symmetrize(lambda v: K.evaluator(tau * (xi + v)), nu)

    val, err = _scipy_quad(integrand, 0.0, 1.0,
                           epsabs=quad.abs_tol, epsrel=quad.rel_tol,
                           limit=quad.max_subdivisions)
    if err > max(abs(val), quad.abs_tol) * 1e-3:
        raise QuadratureError("unit-window quadrature failed",
                              value=2.0 * tau * tau * val,
                              error_estimate=2.0 * tau * tau * err)
    return 2.0 * tau * tau * float(val)


def _tail_integral(fn: Callable[[float], float],
                   quad: QuadratureSpec) -> tuple[float, float]:
    """Integrate a decaying integrand over (0, inf).

    The support is located by a log-spaced probe of |fn|; the integral is
    accumulated over geometric segments up to the point where the integrand
    has fallen below abs_tol times its peak, then the cutoff is doubled
    until the added contribution is negligible (Richardson-style check).
    """
    xs = np.geomspace(1e-3, 1e12, 360)
    mags = np.array([abs(fn(float(x))) for x in xs])
    peak = float(mags.max())
    if peak == 0.0:
        return 0.0, 0.0
    above = np.nonzero(mags > 1e-15 * peak)[0]
    cutoff = max(4.0, float(xs[above[-1]]) * 2.0)

    def accumulate(lo: float, hi: float) -> tuple[float, float]:
        total = err_total = 0.0
        edges = [lo]
        e = max(lo, 1.0)
        while e < hi:
            edges.append(e)
            e *= 2.0
        edges.append(hi)
        for a, b in zip(edges, edges[1:]):
            if b <= a:
                continue
            v, err = _scipy_quad(fn, a, b, epsabs=quad.abs_tol,
                                 epsrel=quad.rel_tol,
                                 limit=quad.max_subdivisions)
            total += v
            err_total += err
        return total, err_total

    total, err_total = accumulate(0.0, cutoff)
    for _ in range(8):
        extra, err = accumulate(cutoff, 2.0 * cutoff)
        total += extra
        err_total += err
        cutoff *= 2.0
        if abs(extra) <= max(quad.abs_tol, abs(total) * quad.rel_tol * 10.0):
            break
    else:
        raise QuadratureError("tail integral did not settle under doubling",
                              value=total, error_estimate=err_total)
    return total, err_total


def _check_tail_clear_of_poles(K: KernelHandle, scale: float) -> None:
    # Tail arguments sweep (0, inf) in T; any kernel pole makes the tail
    # integrals divergent in the ordinary sense.
    if K.singular_points:
        raise SingularPointError(
            "tail decomposition is only defined for kernels without poles; "
            f"got singular points {K.singular_points} (argument scale {scale!r})")


def full_integral(K: KernelHandle, F: LorentzPlateau, nu: float,
                  quad: QuadratureSpec = DEFAULT_QUAD,
                  allow_non_decaying: bool = False) -> float:
    """Plateau + tail + plateau-tail decomposition of the double time integral
    of K against the switching profile F.

    Only decaying kernels are accepted: for a constant kernel the
    decomposition misses the plateau-tail cross term 2 pi mu tau^2 (the
    terms sum to tau^2 (1 + pi^2 mu^2) against the exact (1 + pi mu)^2
    tau^2), so non-decaying kernels are rejected unless explicitly forced.
    The agreement for decaying kernels is audited numerically in the verify
    suite, not assumed.
    """
    if K.decay_class is DecayClass.NON_DECAYING and not allow_non_decaying:
        raise DomainError(
            "non-decaying kernel rejected: the plateau/tail decomposition "
            "drops the plateau-tail cross term (2 pi mu tau^2 for a constant "
            "kernel); pass allow_non_decaying=True to force")
    tau, mu = F.tau, F.mu
    term1 = measuring_integral(K, tau, nu, quad)
    if mu == 0.0:
        return term1
    _check_tail_clear_of_poles(K, mu * tau)
    lam = nu / mu

    def sym_k(chi: float, offset: float = 0.0) -> float:
        return symmetrize(lambda l: K.evaluator(mu * tau * (chi + offset + l)), lam)

    def tail_weight_integrand(chi: float) -> float:
        return sym_k(chi) / (chi * chi + 4.0)

    def cross_integrand(chi: float) -> float:
        return (sym_k(chi) - sym_k(chi, offset=1.0 / mu)) * f_cal(chi)

    v2, _ = _tail_integral(tail_weight_integrand, quad)
    v3, _ = _tail_integral(cross_integrand, quad)
    term2 = 4.0 * math.pi * mu * mu * tau * tau * v2
    term3 = 4.0 * mu * mu * tau * tau * v3
    return term1 + term2 + term3
