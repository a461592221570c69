"""Renormalized electric-field correlation kernels in the mirrored half-space.

Both kernels are even functions of the time difference T with a light-cone
pole at |T| = 2z (the round-trip light time to the plate) and inverse-quartic
decay at large |T|:

    K_zz(T, z) =  1 / (pi^2 (T^2 - 4 z^2)^2)
    K_xx(T, z) = -(1/pi^2) (T^2 + 4 z^2) / (T^2 - 4 z^2)^3     (= K_yy)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, SingularPointError
from .params import DEFAULT_QUAD

PI_SQ = math.pi ** 2


class DecayClass(enum.Enum):
    """Large-|T| behavior of a correlation kernel."""

    INVERSE_QUARTIC = "inverse_quartic"
    REGULAR_DECAYING = "regular_decaying"
    NON_DECAYING = "non_decaying"


@dataclass(frozen=True)
class KernelHandle:
    """A kernel packaged with the metadata quadrature routines need.

    evaluator must be even in T wherever defined; singular_points lists the
    |T| values where it diverges (quadrature splits there) and decay_class
    selects the tail-integration strategy.
    """

    evaluator: Callable[[float], float]
    singular_points: tuple[float, ...]
    decay_class: DecayClass


def _check_not_on_pole(T: float, z: float, exclusion: float) -> None:
    # Pole guard: evaluation this close to |T| = 2z is meaningless noise and
    # almost certainly a quadrature routine stepping over the pole.
    if abs(abs(T) - 2.0 * z) < exclusion * 2.0 * z:
        raise SingularPointError(
            f"kernel evaluated on the light-cone pole |T| = 2z "
            f"(T={T!r}, z={z!r})")


def kernel_zz(T: float, z: float, exclusion: float = DEFAULT_QUAD.singularity_exclusion) -> float:
    """Normal-component correlator; positive and even wherever defined."""
    if z <= 0:
        raise DomainError(f"z must be > 0, got {z!r}")
    _check_not_on_pole(T, z, exclusion)
    d = T * T - 4.0 * z * z
    return 1.0 / (PI_SQ * d * d)


def kernel_xx(T: float, z: float, exclusion: float = DEFAULT_QUAD.singularity_exclusion) -> float:
    """Parallel-component correlator (x and y are equal); even in T.

    Positive for |T| < 2z and negative for |T| > 2z: the sign follows the
    cubed denominator.
    """
    if z <= 0:
        raise DomainError(f"z must be > 0, got {z!r}")
    _check_not_on_pole(T, z, exclusion)
    d = T * T - 4.0 * z * z
    return -(T * T + 4.0 * z * z) / (PI_SQ * d * d * d)


def zz_handle(z: float, exclusion: float = DEFAULT_QUAD.singularity_exclusion) -> KernelHandle:
    """Handle for the normal-component kernel at fixed plate distance."""
    return KernelHandle(
        evaluator=lambda T: kernel_zz(T, z, exclusion),
        singular_points=(2.0 * z,),
        decay_class=DecayClass.INVERSE_QUARTIC,
    )


def xx_handle(z: float, exclusion: float = DEFAULT_QUAD.singularity_exclusion) -> KernelHandle:
    """Handle for the parallel-component kernel at fixed plate distance."""
    return KernelHandle(
        evaluator=lambda T: kernel_xx(T, z, exclusion),
        singular_points=(2.0 * z,),
        decay_class=DecayClass.INVERSE_QUARTIC,
    )
