"""Z3 parafermions from the clock/shift transform, their R-matrices and chain.

N qutrits carry 2N parafermion operators C_1 ... C_2N:

    C_{2k-1} = (Z^dag)^(k-1) x X^dag_k x I...,
    C_{2k}   = (Z^dag)^(k-1) x (XZ)^dag_k x I...

Each C is unitary with C^3 = I and C_i C_j = w^{sgn(j-i)} C_j C_i.
"""
from __future__ import annotations

import numpy as np

from .errors import BadModel, SiteOutOfRange
from .linalg import Array, dagger, kron
from .majorana import ChainSpec
from .matrices import OMEGA, clock_shift, eye


def parafermion_op(index: int, n_qutrits: int) -> Array:
    """Parafermion C_index (1-based) on ``n_qutrits`` qutrits."""
    if not 1 <= index <= 2 * n_qutrits:
        raise SiteOutOfRange(f"index {index} outside 1..{2 * n_qutrits}")
    z, x = clock_shift()
    site, rem = divmod(index + 1, 2)
    head = dagger(x) if rem == 0 else dagger(x @ z)
    op = np.ones((1, 1), dtype=complex)
    for _ in range(site - 1):
        op = kron(op, dagger(z))
    op = kron(op, head)
    if n_qutrits - site > 0:
        op = kron(op, eye(3 ** (n_qutrits - site)))
    return op


def r_parafermion(i: int, theta: float, n_qutrits: int) -> Array:
    """Unitary R_i(theta) built from the neighboring pair (C_i, C_{i+1})."""
    if not 1 <= i <= 2 * n_qutrits - 1:
        raise SiteOutOfRange(f"pair index {i} outside 1..{2 * n_qutrits - 1}")
    ci = parafermion_op(i, n_qutrits)
    cj = parafermion_op(i + 1, n_qutrits)
    dim = 3**n_qutrits
    bracket = eye(dim) + OMEGA**2 * (dagger(ci) @ cj) + OMEGA**2 * (ci @ dagger(cj))
    return np.exp(-1j * theta) * eye(dim) + (2j / 3) * np.sin(theta) * bracket


def z3_chain_h(spec: ChainSpec) -> Array:
    """Open-boundary Z3 parafermion chain; Hermitized with negligible correction.

    H = -(2/3) w^2 [ t1 sum_{i<=N} (C'_{2i-1} C_{2i} + C_{2i-1} C'_{2i})
                   + t2 sum_{i<N}  (C'_{2i} C_{2i+1} + C_{2i} C'_{2i+1}) ]
    where the prime marks the adjoint.  The even-odd sum stops at N-1, so
    C_1 and C_2N stay unpaired when t1 = 0.
    """
    if spec.model != "z3":
        raise BadModel(f"z3_chain_h got model {spec.model!r}")
    n = spec.n_sites
    h = np.zeros((3**n, 3**n), dtype=complex)
    for i in range(1, n + 1):
        a, b = parafermion_op(2 * i - 1, n), parafermion_op(2 * i, n)
        h += spec.theta1dot * (dagger(a) @ b + a @ dagger(b))
    for i in range(1, n):
        a, b = parafermion_op(2 * i, n), parafermion_op(2 * i + 1, n)
        h += spec.theta2dot * (dagger(a) @ b + a @ dagger(b))
    h = -(2.0 / 3.0) * OMEGA**2 * h
    return (h + dagger(h)) / 2


def z3_chain_hermiticity_defect(spec: ChainSpec) -> float:
    """Norm of the anti-Hermitian part of the raw (un-symmetrized) chain sum."""
    if spec.model != "z3":
        raise BadModel(f"expected model 'z3', got {spec.model!r}")
    n = spec.n_sites
    h = np.zeros((3**n, 3**n), dtype=complex)
    for i in range(1, n + 1):
        a, b = parafermion_op(2 * i - 1, n), parafermion_op(2 * i, n)
        h += spec.theta1dot * (dagger(a) @ b + a @ dagger(b))
    for i in range(1, n):
        a, b = parafermion_op(2 * i, n), parafermion_op(2 * i + 1, n)
        h += spec.theta2dot * (dagger(a) @ b + a @ dagger(b))
    h = -(2.0 / 3.0) * OMEGA**2 * h
    return float(np.linalg.norm(h - dagger(h)) / 2)


def z3_parity(n_qutrits: int) -> Array:
    """Z3 symmetry operator P = prod_k C'_{2k-1} C_{2k}; unitary with P^3 = I."""
    p = eye(3**n_qutrits)
    for k in range(1, n_qutrits + 1):
        p = p @ dagger(parafermion_op(2 * k - 1, n_qutrits)) @ parafermion_op(
            2 * k, n_qutrits
        )
    return p


def z3_gamma(n_parafermions: int, n_qutrits: int) -> Array:
    """Emergent parafermion mode for an odd operator count 2n+1.

    Gamma = C'_{2n+1} * prod_{i<=n} C'_{2i-1} C_{2i}; satisfies Gamma^3 = I and
    commutes with every R_i(theta) supported on C_1 ... C_{2n+1}.
    """
    if n_parafermions % 2 == 0:
        raise SiteOutOfRange("emergent mode needs an odd parafermion count")
    if n_parafermions > 2 * n_qutrits:
        raise SiteOutOfRange(
            f"{n_parafermions} parafermions exceed 2*{n_qutrits} available"
        )
    n = (n_parafermions - 1) // 2
    g = dagger(parafermion_op(2 * n + 1, n_qutrits))
    for i in range(1, n + 1):
        g = g @ dagger(parafermion_op(2 * i - 1, n_qutrits)) @ parafermion_op(
            2 * i, n_qutrits
        )
    return g


def two_qutrit_parity() -> Array:
    """Diagonal parity on two qutrits: P|ij> = w^(i+j+2) |ij> (0-based indices)."""
    diag = [OMEGA ** (i + j + 2) for i in range(3) for j in range(3)]
    return np.diag(diag).astype(complex)


def qutrit_braid_pair() -> tuple[Array, Array]:
    """(B12, B23): braid generators of the nearest-neighbor pair rep on 2 qutrits."""
    b12 = kron(
        np.diag(
            [np.exp(-1j * np.pi / 3), np.exp(1j * np.pi / 3), np.exp(-1j * np.pi / 3)]
        ),
        eye(3),
    )
    w = OMEGA
    rows = [
        [w, 0, 0, 0, 0, w, 0, 1, 0],
        [0, w, 0, w, 0, 0, 0, 0, 1],
        [0, 0, w, 0, w, 0, 1, 0, 0],
        [0, 1, 0, w, 0, 0, 0, 0, w],
        [0, 0, 1, 0, w, 0, w, 0, 0],
        [1, 0, 0, 0, 0, w, 0, w, 0],
        [0, 0, w, 0, 1, 0, w, 0, 0],
        [w, 0, 0, 0, 0, 1, 0, w, 0],
        [0, w, 0, 1, 0, 0, 0, 0, w],
    ]
    b23 = (1j * w / np.sqrt(3)) * np.array(rows, dtype=complex)
    return b12, b23


def qutrit_r(slot: int, theta: float) -> Array:
    """Parametrized 9x9 family (2/sqrt3)[cos(theta+pi/6) I + sin(theta) B_slot]."""
    b12, b23 = qutrit_braid_pair()
    b = {12: b12, 23: b23}.get(slot)
    if b is None:
        raise SiteOutOfRange(f"slot must be 12 or 23, got {slot}")
    return (2 / np.sqrt(3)) * (np.cos(theta + np.pi / 6) * eye(9) + np.sin(theta) * b)


# Indices of the parity-w^2 subspace {|11>, |23>, |32>} in 1-based qutrit labels,
# i.e. label pairs (1,1), (2,3), (3,2) -> flat indices 0, 5, 7.
PARITY_SUBSPACE = (0, 5, 7)


def qutrit_parity_subspace(theta: float) -> tuple[Array, Array]:
    """Restriction of the two R-slots to the 3-dim parity block {|11>,|23>,|32>}."""
    idx = list(PARITY_SUBSPACE)
    a12 = qutrit_r(12, theta)[np.ix_(idx, idx)]
    a23 = qutrit_r(23, theta)[np.ix_(idx, idx)]
    return a12, a23


def psi_theta(theta: float) -> Array:
    """Two-qutrit state from applying the 23-slot family to |11>; 9-dim vector."""
    return qutrit_r(23, theta)[:, 0].copy()
