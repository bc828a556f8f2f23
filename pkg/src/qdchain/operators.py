"""Matrix representations of the chain within one Fock layer.

Builds the nearest-neighbor hopping Hamiltonian

    H = sum_j J_j (a_j^dag a_{j+1} + a_{j+1}^dag a_j) / 2

restricted to a fixed-excitation layer, plus the collective spin
operators of the single-excitation sector.  Hopping amplitudes carry the
q-deformed factor sqrt([m_j + 1] [m_{j+1}]), so every matrix here is
real-symmetric for the supported deformation parameters.

The 1/2 belongs to the Hamiltonian, not to the couplings: with the
transfer profile J_j = lam * sqrt(j (n+1-j)) this makes lam * t = pi the
exact perfect-transfer time in the single-excitation sector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
import scipy.linalg

from .deformation import DeformationParameter, q_number
from .fock import FockLayerBasis, Occupation

DEFAULT_MAX_DIM = 5000


@dataclass(frozen=True)
class PSTProfile:
    """Perfect-state-transfer couplings J_j = lam * sqrt(j (n+1-j))."""

    lam: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lam) and self.lam > 0):
            raise ValueError(f"coupling scale must be finite and > 0, got {self.lam}")

    def couplings(self, bonds: int) -> np.ndarray:
        j = np.arange(1, bonds + 1, dtype=float)
        return self.lam * np.sqrt(j * (bonds + 1 - j))

    @property
    def label(self) -> str:
        return f"pst:lambda={self.lam:.12g}"


@dataclass(frozen=True)
class UniformProfile:
    """Constant couplings J_j = J."""

    J: float

    def couplings(self, bonds: int) -> np.ndarray:
        return np.full(bonds, float(self.J))

    @property
    def label(self) -> str:
        return f"uniform:J={self.J:.12g}"


@dataclass(frozen=True)
class CustomProfile:
    """Explicit per-bond couplings (J_1, ..., J_n)."""

    values: tuple[float, ...]

    def couplings(self, bonds: int) -> np.ndarray:
        if len(self.values) != bonds:
            raise ValueError(f"profile has {len(self.values)} couplings, chain has {bonds} bonds")
        return np.asarray(self.values, dtype=float)

    @property
    def label(self) -> str:
        return "custom:" + ",".join(f"{v:.12g}" for v in self.values)


CouplingProfile = Union[PSTProfile, UniformProfile, CustomProfile]


@dataclass(frozen=True)
class LayerHamiltonian:
    """Hopping Hamiltonian on one Fock layer, stored as a real-symmetric matrix."""

    basis: FockLayerBasis
    matrix: np.ndarray
    profile: CouplingProfile
    deformation: DeformationParameter

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def ladder_matrix_element(
    p: DeformationParameter, v: Occupation, j: int
) -> tuple[Occupation, float]:
    """Move one excitation from site j+1 to site j (bond j, 1-based).

    Returns the target occupation vector and the amplitude
    sqrt([m_j + 1] [m_{j+1}]).  When site j+1 is empty the amplitude is
    zero (annihilation of the vacuum) and ``v`` is returned unchanged.
    """
    if not 1 <= j <= len(v) - 1:
        raise ValueError(f"bond index {j} out of range for {len(v)} sites")
    if v[j] == 0:
        return tuple(v), 0.0
    w = list(v)
    w[j - 1] += 1
    w[j] -= 1
    amp = math.sqrt(q_number(p, w[j - 1]) * q_number(p, v[j]))
    return tuple(w), amp


def build_hamiltonian(
    basis: FockLayerBasis,
    profile: CouplingProfile,
    p: DeformationParameter,
    max_dim: int = DEFAULT_MAX_DIM,
) -> LayerHamiltonian:
    """Assemble the layer-restricted Hamiltonian matrix.

    Only pairs of occupation vectors that differ by one excitation hopped
    across a single bond are coupled.  Layers larger than ``max_dim`` are
    rejected: everything downstream is dense, and a dense eigensolve at
    that size is a mistake rather than a computation.
    """
    if len(basis) > max_dim:
        raise ValueError(
            f"layer dimension {len(basis)} exceeds the dense-solver limit {max_dim}"
        )
    couplings = profile.couplings(basis.sites - 1)
    dim = len(basis)
    h = np.zeros((dim, dim), dtype=float)
    for iv, v in enumerate(basis.states):
        for j in range(1, basis.sites):
            if v[j] == 0:
                continue
            w, amp = ladder_matrix_element(p, v, j)
            iw = basis.index.get(w)
            if iw is None:
                # Target exceeds the occupation cap; its amplitude carries
                # the exact zero [d], so dropping it loses nothing.
                continue
            val = 0.5 * couplings[j - 1] * amp
            h[iw, iv] += val
            h[iv, iw] += val
    return LayerHamiltonian(basis=basis, matrix=h, profile=profile, deformation=p)


def lowering_matrix(
    upper: FockLayerBasis, lower: FockLayerBasis, site: int, p: DeformationParameter
) -> np.ndarray:
    """Matrix of the site annihilation operator from ``upper`` to ``lower``.

    ``upper`` is the layer with one more excitation; entry (i, k) is
    sqrt([m_site]) between upper state k and the state with one excitation
    removed at ``site`` (1-based).  Used for operator-identity checks.
    """
    if upper.layer != lower.layer + 1 or upper.sites != lower.sites or upper.cap != lower.cap:
        raise ValueError("bases must be consecutive layers of the same chain")
    if not 1 <= site <= upper.sites:
        raise ValueError(f"site index {site} out of range")
    a = np.zeros((len(lower), len(upper)), dtype=float)
    for k, v in enumerate(upper.states):
        if v[site - 1] == 0:
            continue
        w = list(v)
        w[site - 1] -= 1
        i = lower.index.get(tuple(w))
        if i is not None:
            a[i, k] = math.sqrt(q_number(p, v[site - 1]))
    return a


@dataclass(frozen=True)
class CollectiveSpinOperators:
    """Collective spin operators of the single-excitation sector.

    splus is strictly upper-bidiagonal with entries sqrt(j (n+1-j)),
    sminus its transpose, and sx = (splus + sminus) / 2 equals 1/lam
    times the single-excitation transfer Hamiltonian.
    """

    sx: np.ndarray
    sy: np.ndarray
    splus: np.ndarray
    sminus: np.ndarray


def build_collective(n: int) -> CollectiveSpinOperators:
    """Collective operators on the (n+1)-dimensional single-excitation sector."""
    if n < 1:
        raise ValueError(f"need n >= 1 bonds, got {n}")
    j = np.arange(1, n + 1, dtype=float)
    splus = np.diag(np.sqrt(j * (n + 1 - j)), k=1)
    sminus = splus.T.copy()
    sx = 0.5 * (splus + sminus)
    sy = (splus - sminus) / 2j
    return CollectiveSpinOperators(sx=sx, sy=sy, splus=splus, sminus=sminus)


def verify_rotation_identity(n: int) -> float:
    """Residual of exp(i*pi*sx) sminus exp(-i*pi*sx) = splus in operator norm.

    A half-turn of the collective spin about its x axis swaps the raising
    and lowering operators; this is the algebraic engine behind perfect
    transfer in the single-excitation sector.
    """
    ops = build_collective(n)
    rot = scipy.linalg.expm(1j * math.pi * ops.sx)
    conjugated = rot @ ops.sminus @ rot.conj().T
    return float(np.linalg.norm(conjugated - ops.splus, ord=2))
