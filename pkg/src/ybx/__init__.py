"""Numerical library for entangling braid/R-matrix families.

Constructs the unitary braid matrices and their spectral-parameter
families, verifies the defining operator relations under the Lorentz-type
additivity rules, derives the associated Majorana / Z3-parafermion chain
Hamiltonians, and reproduces the quantitative entanglement, Berry-phase,
degeneracy, and l1-norm extremum results at desk scale.
"""

__version__ = "0.1.0"

from .dynamics import (
    BerryResult,
    berry_phase,
    hamiltonian_from_r,
    s3_factorization_check,
    s3_lambda,
    s3_matrix,
    three_body_h,
    two_body_h,
)
from .entangle import SweepResult, concurrence2, l1_norm, sweep_extrema, von_neumann_entropy
from .linalg import (
    eig_hermitian,
    expm_antihermitian,
    frobenius_distance,
    kron,
    partial_trace,
    partial_trace_state,
)
from .majorana import ChainSpec, degeneracy, gamma_emergent, kitaev_chain_h, majorana_op, r_majorana
from .matrices import (
    OMEGA,
    bell_braid,
    braid9,
    clock_shift,
    ising_anyon_pair,
    m9,
    mixed_braids,
    mixed_r,
    off_diagonal_transpose,
    r9,
    type2_r,
    v_conjugator,
    wigner_d_general,
    wigner_d_half,
)
from .mixedspin import run_mixed_check
from .parafermion import (
    parafermion_op,
    qutrit_parity_subspace,
    r_parafermion,
    z3_chain_h,
    z3_gamma,
    z3_parity,
)
from .topo2d import TopoBasis, anyon_braid_check, reduce_to_2d, topo_basis
from .ybe import (
    RelationResidual,
    SpectralTriple,
    check_braid,
    check_mixed_ybe,
    check_ybe,
    dfun_phi,
    lorentz_theta2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
