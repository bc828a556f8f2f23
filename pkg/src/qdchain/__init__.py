"""Quantum state transfer through a chain of q-deformed oscillators.

The package simulates a nearest-neighbor hopping chain whose ladder
operators obey a a^dag - q a^dag a = q^{-N}.  With transfer-tuned
couplings the single-excitation sector transfers perfectly for every
deformation; encodings that use two or more excitations feel the
q-nonlinearity, and the loss is quantified by the average transfer
fidelity.  Root-of-unity parameters q = exp(i*pi/d) turn each site into a
d-level system, interpolating between a spin-1/2 chain (d = 2) and the
bosonic chain (d -> infinity).
"""

__version__ = "0.1.0"

from .deformation import (
    DeformationParameter,
    RealQ,
    RootOfUnity,
    UnnormalizableStateError,
    complex_q,
    occupation_cap,
    q_factorial,
    q_number,
)
from .fock import FockLayerBasis, Occupation, build_layer
from .operators import (
    CollectiveSpinOperators,
    CouplingProfile,
    CustomProfile,
    LayerHamiltonian,
    PSTProfile,
    UniformProfile,
    build_collective,
    build_hamiltonian,
    ladder_matrix_element,
    lowering_matrix,
    verify_rotation_identity,
)
from .dynamics import Propagator, diagonalize, evolve, evolve_bruteforce, evolve_many
from .transfer import (
    EncodingSpec,
    PhaseGate,
    TransferChannel,
    TransferSimulator,
    average_fidelity,
    encode_and_evolve,
    fidelity_curve,
    gated_fidelity_from_amplitudes,
    optimal_phase_gate,
    refine_phase_gate,
)
from .sweeps import (
    IdentityCheckReport,
    SweepConfig,
    run_identity_check,
    run_max_fidelity_sweep,
    run_time_sweep,
)

__all__ = [
    "DeformationParameter",
    "RealQ",
    "RootOfUnity",
    "UnnormalizableStateError",
    "complex_q",
    "occupation_cap",
    "q_factorial",
    "q_number",
    "FockLayerBasis",
    "Occupation",
    "build_layer",
    "CollectiveSpinOperators",
    "CouplingProfile",
    "CustomProfile",
    "LayerHamiltonian",
    "PSTProfile",
    "UniformProfile",
    "build_collective",
    "build_hamiltonian",
    "ladder_matrix_element",
    "lowering_matrix",
    "verify_rotation_identity",
    "Propagator",
    "diagonalize",
    "evolve",
    "evolve_bruteforce",
    "evolve_many",
    "EncodingSpec",
    "PhaseGate",
    "TransferChannel",
    "TransferSimulator",
    "average_fidelity",
    "encode_and_evolve",
    "fidelity_curve",
    "gated_fidelity_from_amplitudes",
    "optimal_phase_gate",
    "refine_phase_gate",
    "IdentityCheckReport",
    "SweepConfig",
    "run_identity_check",
    "run_max_fidelity_sweep",
    "run_time_sweep",
]
