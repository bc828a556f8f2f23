"""Time evolution within a Fock layer.

Fidelity sweeps evaluate hundreds of times against one Hamiltonian, so
the propagator caches a single eigendecomposition and applies phases per
time point.  ``evolve_bruteforce`` is a deliberately independent route
(scaling-and-squaring Taylor exponential, no eigensolver) kept for
cross-checking the cached path in tests.

Propagators are immutable; ``evolve`` is pure and safe to call from many
workers at once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import LayerHamiltonian

_NORM_TOL = 1e-10


@dataclass(frozen=True)
class Propagator:
    """Cached eigendecomposition of a layer Hamiltonian.

    Eigenvalues are ascending; eigenvector signs are fixed so the first
    component above 1e-12 in magnitude is positive, making repeated
    diagonalizations bit-identical.
    """

    hamiltonian: LayerHamiltonian
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def diagonalize(h: LayerHamiltonian) -> Propagator:
    try:
        w, v = np.linalg.eigh(h.matrix)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(
            f"eigensolver failed for layer={h.basis.layer} sites={h.basis.sites} "
            f"deformation={h.deformation} profile={h.profile}"
        ) from exc
    for k in range(v.shape[1]):
        lead = np.argmax(np.abs(v[:, k]) > 1e-12)
        if v[lead, k] < 0:
            v[:, k] = -v[:, k]
    w.setflags(write=False)
    v.setflags(write=False)
    return Propagator(hamiltonian=h, eigenvalues=w, eigenvectors=v)


def _check_state(prop_dim: int, psi0: np.ndarray) -> np.ndarray:
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (prop_dim,):
        raise ValueError(f"state has shape {psi0.shape}, layer dimension is {prop_dim}")
    norm = np.linalg.norm(psi0)
    if abs(norm - 1.0) > _NORM_TOL:
        raise ValueError(f"state norm {norm} is not 1 within {_NORM_TOL}")
    return psi0


def evolve(prop: Propagator, psi0: np.ndarray, t: float) -> np.ndarray:
    """exp(-i H t) psi0 via the cached eigendecomposition."""
    psi0 = _check_state(len(prop.eigenvalues), psi0)
    coeffs = prop.eigenvectors.T @ psi0
    return prop.eigenvectors @ (np.exp(-1j * prop.eigenvalues * t) * coeffs)


def evolve_many(prop: Propagator, psi0: np.ndarray, times: np.ndarray) -> np.ndarray:
    """Column k is exp(-i H times[k]) psi0; one pass over the whole grid."""
    psi0 = _check_state(len(prop.eigenvalues), psi0)
    times = np.asarray(times, dtype=float)
    coeffs = prop.eigenvectors.T @ psi0
    phases = np.exp(-1j * np.outer(prop.eigenvalues, times))
    return prop.eigenvectors @ (phases * coeffs[:, None])


def _expm_taylor(a: np.ndarray) -> np.ndarray:
    # Scaling-and-squaring with a Taylor series on the scaled matrix;
    # independent of any eigensolver by construction.
    norm = np.linalg.norm(a, ord=np.inf)
    squarings = 0
    if norm > 0.5:
        squarings = int(np.ceil(np.log2(norm / 0.5)))
    m = a / (2.0**squarings)
    dim = a.shape[0]
    term = np.eye(dim, dtype=complex)
    total = np.eye(dim, dtype=complex)
    for k in range(1, 60):
        term = term @ m / k
        total = total + term
        if np.linalg.norm(term, ord=np.inf) < 1e-20:
            break
    for _ in range(squarings):
        total = total @ total
    return total


def evolve_bruteforce(h: LayerHamiltonian, psi0: np.ndarray, t: float) -> np.ndarray:
    """exp(-i H t) psi0 by direct matrix exponential; test oracle only."""
    psi0 = _check_state(h.dim, psi0)
    return _expm_taylor(-1j * t * h.matrix) @ psi0
