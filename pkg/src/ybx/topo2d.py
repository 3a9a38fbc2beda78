"""Four-qubit topological basis and the reduction of the 16-dim action to 2x2.

The basis pairs qubits (1,2)(3,4) into eigenstates of the local generator
K(phi) (the matrix with K^2 = -I underlying the entangling family):

    psi_pair = (|00> - i e^{i phi} |11>)/sqrt2,   chi_pair = (|01> + i |10>)/sqrt2,

    e1 = (psi_12 psi_34 + chi_12 chi_34)/sqrt2,   e2 = -i K_23 e1.

Both embedded R-slots then close on span{e1, e2} exactly, reducing to
V^dag D(theta, 0) V on slot (1,2) and V^dag D(theta, pi/2) V on slot (2,3).
The published pair states (relative phases e^{-i phi} and -1) do not close:
the diagonal matrix element of the slot-(1,2) action on any such e1 is
cos(theta) - (i/2) sin(theta) sin(2 phi), which can never reach the
required unit-modulus e^{-i theta}; the phases above are the minimal
correction that makes the reduction exact.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBasis, NotClosed
from .linalg import Array, product_basis_state
from .matrices import eye, kron, type2_generator, type2_r
from .ybe import RelationResidual


def pair_states(phi: float) -> tuple[Array, Array]:
    """(psi, chi) Bell-type eigenstates of K(phi) with eigenvalue -i."""
    psi = np.zeros(4, dtype=complex)
    psi[0] = 1.0
    psi[3] = -1j * np.exp(1j * phi)
    chi = np.zeros(4, dtype=complex)
    chi[1] = 1.0
    chi[2] = 1j
    return psi / np.sqrt(2), chi / np.sqrt(2)


def _pair_product(u: Array, v: Array, qu: tuple[int, int], qv: tuple[int, int]) -> Array:
    """Place pair states u, v on 1-based qubit pairs qu, qv of a 4-qubit register."""
    out = np.zeros(16, dtype=complex)
    for a in range(2):
        for b in range(2):
            amp_u = u[2 * a + b]
            if amp_u == 0:
                continue
            for c in range(2):
                for d in range(2):
                    amp = amp_u * v[2 * c + d]
                    if amp == 0:
                        continue
                    labels = [0, 0, 0, 0]
                    labels[qu[0] - 1], labels[qu[1] - 1] = a, b
                    labels[qv[0] - 1], labels[qv[1] - 1] = c, d
                    out += amp * product_basis_state(labels, (2, 2, 2, 2))
    return out


def _embedded(op: Array, slot: int) -> Array:
    if slot == 12:
        return kron(op, eye(4))
    if slot == 23:
        return kron(eye(2), op, eye(2))
    raise ValueError(f"slot must be 12 or 23, got {slot}")


@dataclass(frozen=True)
class TopoBasis:
    """Orthonormal 2-dim fusion basis of the 4-qubit space."""

    e1: Array
    e2: Array
    phi: float


def topo_basis(phi: float = 0.0) -> TopoBasis:
    """Construct the invariant basis; raises DegenerateBasis if it fails."""
    psi, chi = pair_states(phi)
    e1 = (_pair_product(psi, psi, (1, 2), (3, 4))
          + _pair_product(chi, chi, (1, 2), (3, 4))) / np.sqrt(2)
    e2 = -1j * (_embedded(type2_generator(phi), 23) @ e1)
    gram_defect = max(
        abs(np.vdot(e1, e1) - 1.0),
        abs(np.vdot(e2, e2) - 1.0),
        abs(np.vdot(e1, e2)),
    )
    if gram_defect > 1e-12:
        raise DegenerateBasis(f"basis Gram defect {gram_defect}")
    return TopoBasis(e1=e1, e2=e2, phi=phi)


def reduce_to_2d(
    theta: float, phi: float = 0.0, slot: int = 12, closure_tol: float = 1e-10
) -> Array:
    """2x2 matrix of the embedded R-slot restricted to span{e1, e2}.

    Raises NotClosed when either image vector leaks out of the span by more
    than ``closure_tol`` (a convention mismatch, not a numerical accident).
    """
    basis = topo_basis(phi)
    r = _embedded(type2_r(theta, phi), slot)
    cols = [r @ basis.e1, r @ basis.e2]
    block = np.empty((2, 2), dtype=complex)
    for j, col in enumerate(cols):
        block[0, j] = np.vdot(basis.e1, col)
        block[1, j] = np.vdot(basis.e2, col)
        residual = col - block[0, j] * basis.e1 - block[1, j] * basis.e2
        leak = np.linalg.norm(residual)
        if leak > closure_tol:
            raise NotClosed(f"slot {slot} leaks {leak} at theta={theta}, phi={phi}")
    return block


def leakage(theta: float, phi: float = 0.0, slot: int = 12) -> float:
    """Worst out-of-span norm of the embedded slot action on the basis."""
    basis = topo_basis(phi)
    r = _embedded(type2_r(theta, phi), slot)
    worst = 0.0
    for vec in (basis.e1, basis.e2):
        col = r @ vec
        proj = np.vdot(basis.e1, col) * basis.e1 + np.vdot(basis.e2, col) * basis.e2
        worst = max(worst, float(np.linalg.norm(col - proj)))
    return worst


def anyon_braid_check(tolerance: float = 1e-14) -> RelationResidual:
    """Braid relation A B A = B A B of the reduced pi/4 matrices."""
    from .matrices import ising_anyon_pair

    a, b = ising_anyon_pair()
    return RelationResidual.from_sides(a @ b @ a, b @ a @ b, tolerance)
