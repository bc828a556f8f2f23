"""Shared test oracles, all deliberately independent of the code paths they check."""

from __future__ import annotations

import numpy as np

import qdchain as qc


def mc_average_fidelity(ch, gate, samples: int, seed: int) -> float:
    """Monte Carlo estimate of the average fidelity over Haar-random pure inputs.

    Samples Gaussian-normalized states and evaluates <psi| U E(|psi><psi|) U^dag |psi>
    directly through the channel tensor; never touches the entanglement-fidelity
    closed form it is used to pin down.
    """
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((samples, ch.dim)) + 1j * rng.standard_normal((samples, ch.dim))
    c = z / np.linalg.norm(z, axis=1, keepdims=True)
    u = gate.matrix()
    gated = np.einsum("ra,mnab,sb->mnrs", u, ch.tensor, u.conj())
    vals = np.einsum("km,kn,kr,ks,mnrs->k", c, c.conj(), c.conj(), c, gated, optimize=True)
    return float(vals.real.mean())


def algebra_defect(p, sites: int, layer: int) -> float:
    """Worst deviation of a a^dag - q a^dag a = q^{-N} on the truncated chain.

    Both operator products are assembled from cross-layer ladder matrices and
    compared row by row against the diagonal q^{-m_site}, restricted to states
    whose occupations all sit strictly below the cap.
    """
    cap = qc.occupation_cap(p)
    qz = qc.complex_q(p)
    mid = qc.build_layer(sites, layer, cap)
    up = qc.build_layer(sites, layer + 1, cap)
    down = qc.build_layer(sites, layer - 1, cap) if layer >= 1 else None
    worst = 0.0
    for site in range(1, sites + 1):
        a_up = qc.lowering_matrix(up, mid, site, p)
        lhs = (a_up @ a_up.T).astype(complex)
        if down is not None:
            a_dn = qc.lowering_matrix(mid, down, site, p)
            lhs -= qz * (a_dn.T @ a_dn)
        for i, v in enumerate(mid.states):
            if cap is not None and any(o >= cap for o in v):
                continue
            expected = np.zeros(len(mid), dtype=complex)
            expected[i] = qz ** (-v[site - 1])
            worst = max(worst, float(np.abs(lhs[i] - expected).max()))
    return worst


def propagator_matrix(prop, t: float) -> np.ndarray:
    """Dense exp(-iHt) reconstructed from a Propagator, for matrix-level comparisons."""
    v = prop.eigenvectors
    return (v * np.exp(-1j * prop.eigenvalues * t)) @ v.T


def haar_state(rng, dim: int) -> np.ndarray:
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)
