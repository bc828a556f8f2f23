"""q-number arithmetic for real and unit-circle deformation parameters.

Every matrix element in the chain is built from the q-number

    [m] = (q^m - q^{-m}) / (q - q^{-1}),

which reduces to the integer m at q = 1.  Two families of parameters are
supported: real q > 0, and roots of unity q = exp(+-i*pi/d) for integer
d >= 2.  In both cases [m] is real, so Hamiltonians stay real-symmetric.

All functions here are pure and all parameter objects immutable; they are
safe for unrestricted concurrent use.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union


class UnnormalizableStateError(ValueError):
    """A q-factorial hit the truncation zero [d] = 0.

    For q = exp(+-i*pi/d) the number state |m> with m >= d has vanishing
    norm factor K_m = [m]! and cannot be prepared.
    """


@dataclass(frozen=True)
class RealQ:
    """Real deformation parameter q > 0.  q = 1 is the undeformed limit."""

    q: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.q) and self.q > 0):
            raise ValueError(f"real deformation parameter must be finite and > 0, got {self.q}")

    @property
    def label(self) -> str:
        return f"q={self.q:.12g}"


@dataclass(frozen=True)
class RootOfUnity:
    """Deformation parameter q = exp(sign * i*pi/d) for integer d >= 2.

    Only the integer d is stored: q^{2d} = 1 must hold exactly so that
    [d] = 0 is exact and the per-site truncation at occupation d - 1 is
    structural rather than numerical.  The sign does not affect any
    q-number (the sine ratio is even in it); it is kept for reporting.
    """

    d: int
    sign: int = 1

    def __post_init__(self) -> None:
        if not (isinstance(self.d, int) and self.d >= 2):
            raise ValueError(f"root-of-unity order must be an integer >= 2, got {self.d}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def cap(self) -> int:
        """Largest occupation with a normalizable number state."""
        return self.d - 1

    @property
    def label(self) -> str:
        return f"root:{self.d}:{'+' if self.sign > 0 else '-'}"


DeformationParameter = Union[RealQ, RootOfUnity]


def _sin_multiple(d: int, m: int) -> float:
    # sin(m*pi/d) with exact zeros at every multiple of d.
    k = m % (2 * d)
    negate = k >= d
    if negate:
        k -= d
    if k == 0:
        return 0.0
    value = math.sin(min(k, d - k) * math.pi / d)
    return -value if negate else value


def q_number(p: DeformationParameter, m: int) -> float:
    """The q-number [m] for the given parameter.

    Real q uses the sinh form sinh(m*ln q)/sinh(ln q), which is stable for
    q near 1; q = 1 itself returns m (the analytic limit of the 0/0 form).
    Roots of unity use sin(m*pi/d)/sin(pi/d), exact at multiples of d.
    """
    if m < 0:
        raise ValueError(f"q-numbers are defined for m >= 0, got {m}")
    if isinstance(p, RealQ):
        if p.q == 1.0:
            return float(m)
        x = math.log(p.q)
        return math.sinh(m * x) / math.sinh(x)
    return _sin_multiple(p.d, m) / math.sin(math.pi / p.d)


def q_factorial(p: DeformationParameter, m: int) -> float:
    """K_m = [m][m-1]...[1], with K_0 = 1.

    Raises UnnormalizableStateError for roots of unity when m >= d, where
    the product contains the exact zero [d].
    """
    if m < 0:
        raise ValueError(f"q-factorials are defined for m >= 0, got {m}")
    if isinstance(p, RootOfUnity) and m >= p.d:
        raise UnnormalizableStateError(
            f"[{m}]! contains the factor [{p.d}] = 0; the number state |{m}> "
            f"is unnormalizable for q = exp(i*pi/{p.d})"
        )
    out = 1.0
    for k in range(1, m + 1):
        out *= q_number(p, k)
    return out


def occupation_cap(p: DeformationParameter) -> int | None:
    """Per-site occupation cap implied by the parameter (None if uncapped)."""
    return p.cap if isinstance(p, RootOfUnity) else None


def complex_q(p: DeformationParameter) -> complex:
    """The deformation parameter as a complex number (for algebra checks)."""
    if isinstance(p, RealQ):
        return complex(p.q)
    return cmath.exp(1j * p.sign * math.pi / p.d)
