"""Independent brute-force evaluators backing every closed form in the package.

Nothing here reuses the closed forms it checks: the vertical-contour oracle
integrates the defining contour integrand directly, the interval oracle does
ordinary adaptive quadrature of the raw integrand, the double-integral oracle
evaluates the two-time switching integral on its native 2D domain, and the
Monte Carlo oracle estimates Gaussian averages by sampling.  The closed forms
are accepted only after agreeing with these.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad as _scipy_quad

from .errors import DomainError, QuadratureError, SingularPointError
from .integrals import IntegralOrder
from .kernels import KernelHandle
from .params import DEFAULT_QUAD, QuadratureSpec
from .switching import LorentzPlateau, lorentz_plateau_eval

_TINY = 1e-300


@dataclass(frozen=True)
class OracleReport:
    """One closed-form-versus-oracle comparison."""

    target_name: str
    closed_form_value: float
    oracle_value: float
    rel_deviation: float
    nodes_used: int


def make_report(target_name: str, closed_form_value: float,
                oracle_value: float, nodes_used: int) -> OracleReport:
    rel = abs(closed_form_value - oracle_value) / max(abs(oracle_value), _TINY)
    return OracleReport(target_name, closed_form_value, oracle_value, rel, nodes_used)


class _CountingFn:
    """Wraps a callable and counts evaluations (nodes_used bookkeeping)."""

    def __init__(self, fn):
        self.fn = fn
        self.calls = 0

    def __call__(self, *args):
        self.calls += 1
        return self.fn(*args)


def _segmented_decay_quad(fn, quad: QuadratureSpec,
                          first_edge: float = 1.0) -> tuple[float, int]:
    """Quadrature of a decaying integrand on (0, inf): truncate where the
    magnitude has fallen below abs_tol relative to the peak, then double the
    cutoff until the added piece is negligible."""
    counting = _CountingFn(fn)
    xs = np.geomspace(1e-4, 1e10, 280)
    mags = np.array([abs(counting(float(x))) for x in xs])
    peak = float(mags.max())
    if peak == 0.0:
        return 0.0, counting.calls
    above = np.nonzero(mags > 1e-15 * peak)[0]
    cutoff = max(first_edge, float(xs[above[-1]]) * 2.0)

    def run(lo: float, hi: float) -> float:
        total = 0.0
        edges = [lo]
        e = max(lo, first_edge)
        while e < hi:
            edges.append(e)
            e *= 2.0
        edges.append(hi)
        for a, b in zip(edges, edges[1:]):
            if b <= a:
                continue
            v, _ = _scipy_quad(counting, a, b, epsabs=quad.abs_tol,
                               epsrel=quad.rel_tol, limit=quad.max_subdivisions)
            total += v
        return total

    total = run(0.0, cutoff)
    for _ in range(8):
        extra = run(cutoff, 2.0 * cutoff)
        total += extra
        cutoff *= 2.0
        if abs(extra) <= max(quad.abs_tol, abs(total) * quad.rel_tol * 10.0):
            return total, counting.calls
    raise QuadratureError("vertical/tail oracle did not settle under doubling",
                          value=total)


def j_vertical_oracle(nu: float, alpha: int, sigma: float,
                      order: IntegralOrder = IntegralOrder.QUADRATIC,
                      quad: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Vertical-line contour value of the basic-integral endpoint function.

    Parameterizes the ray from nu straight up into the complex plane as
    nu + i t and integrates Re[i * (1 - alpha(nu+it)) / ((nu+it)^2 - sigma^2)^p]
    over t in (0, inf); the integrand decays as t^(1-2p) so adaptive
    truncation with a doubling check converges.
    """
    if sigma <= 0:
        raise DomainError(f"sigma must be > 0, got {sigma!r}")
    if abs(abs(nu) - sigma) <= 1e-13 * max(1.0, sigma):
        raise SingularPointError(f"contour foot |nu| = sigma = {sigma!r} sits on a pole")
    p = order.value

    def integrand(t: float) -> float:
        zc = complex(nu, t)
        val = (1.0 - alpha * zc) / (zc * zc - sigma * sigma) ** p
        return -val.imag          # Re[i * val]

    value, _ = _segmented_decay_quad(integrand, quad)
    return value


def direct_interval_oracle(nu: float, alpha: int, sigma: float,
                           order: IntegralOrder = IntegralOrder.QUADRATIC,
                           quad: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Ordinary adaptive quadrature of int_nu^{nu+1} (1-alpha u)/(u^2-sigma^2)^p du.

    Refuses pole-crossing intervals: those only have a regularized value.
    """
    if sigma <= 0:
        raise DomainError(f"sigma must be > 0, got {sigma!r}")
    guard = 1e-12 * max(1.0, sigma)
    for pole in (sigma, -sigma):
        if nu - guard <= pole <= nu + 1.0 + guard:
            raise SingularPointError(
                f"pole u = {pole!r} lies inside [{nu!r}, {nu + 1.0!r}]; "
                "only the regularized value exists there")
    p = order.value
    val, err = _scipy_quad(lambda u: (1.0 - alpha * u) / (u * u - sigma * sigma) ** p,
                           nu, nu + 1.0, epsabs=quad.abs_tol, epsrel=quad.rel_tol,
                           limit=quad.max_subdivisions)
    if err > max(abs(val), quad.abs_tol) * 1e-3:
        raise QuadratureError("interval oracle failed", value=val, error_estimate=err)
    return float(val)


def double_integral_oracle(K: KernelHandle, F: LorentzPlateau, nu: float,
                           quad: QuadratureSpec = DEFAULT_QUAD,
                           rel_settle: float = 1e-8) -> float:
    """Direct 2D quadrature of int int F(t') F(t'') K(t' - t'' + tau nu) dt' dt''.

    The integration square is grown until the result settles (the switching
    tails decay only as 1/t^2, so the truncation is driven by the kernel
    decay).  Singular kernels are refused: they are validated through the
    contour chain instead.
    """
    if K.singular_points:
        raise SingularPointError(
            "double-integral oracle only accepts regular kernels; "
            f"got singular points {K.singular_points}")
    tau = F.tau
    breaks = [-tau / 2.0, tau / 2.0]
    shift = tau * nu

    def run(L: float) -> float:
        def inner(tp: float) -> float:
            v, _ = _scipy_quad(
                lambda ts: lorentz_plateau_eval(F, ts) * K.evaluator(tp - ts + shift),
                -L, L, points=breaks, epsabs=quad.abs_tol,
                epsrel=max(quad.rel_tol, 1e-10), limit=quad.max_subdivisions)
            return lorentz_plateau_eval(F, tp) * v
        v, _ = _scipy_quad(inner, -L, L, points=breaks, epsabs=quad.abs_tol,
                           epsrel=max(quad.rel_tol, 1e-10),
                           limit=quad.max_subdivisions)
        return float(v)

    L = tau * (0.5 + max(2.0, 20.0 * F.mu))
    value = run(L)
    for _ in range(10):
        L *= 2.0
        new = run(L)
        drift = abs(new - value) / max(abs(new), _TINY)
        value = new
        if drift <= rel_settle:
            return value
    raise QuadratureError("double-integral oracle did not settle", value=value)


def mc_gauss_oracle(f, beta: float, samples: int = 1_000_000,
                    seed: int = 0, chunk: int = 1_000_000) -> tuple[float, float]:
    """Monte Carlo estimate (mean, std_error) of the Gaussian transform of f.

    Sampling uses counter-based Philox streams spawned per chunk, so the
    estimate is bit-identical for a fixed (seed, samples, chunk) regardless
    of evaluation order.
    """
    if beta <= 0:
        raise DomainError(f"beta must be > 0, got {beta!r}")
    if samples <= 1:
        raise DomainError(f"samples must be > 1, got {samples!r}")
    seqs = np.random.SeedSequence(seed).spawn(math.ceil(samples / chunk))
    total = total_sq = 0.0
    n_done = 0
    for i, seq in enumerate(seqs):
        n = min(chunk, samples - n_done)
        rng = np.random.Generator(np.random.Philox(seq))
        nus = rng.normal(0.0, beta, size=n)
        try:
            vals = np.asarray(f(nus), dtype=float)
            if vals.shape != nus.shape:
                raise TypeError
        except (TypeError, ValueError):
            vals = np.array([float(f(v)) for v in nus])
        total += float(vals.sum())
        total_sq += float((vals * vals).sum())
        n_done += n
    mean = total / n_done
    var = max(total_sq / n_done - mean * mean, 0.0)
    return mean, math.sqrt(var / n_done)
