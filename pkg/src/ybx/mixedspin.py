"""Named runnable checks for the mixed-spin {1, 1/2, 1/2} family.

Check ids: braid1..braid3 (constant braid-type relations), ybe1..ybe3
(parametrized relations, kappa=1 rule), and action-table (the six basis
actions of the 6x6 solution).
"""
from __future__ import annotations

import numpy as np

from .errors import UnknownCheck
from .linalg import Array
from .matrices import eye, kron, mixed_braids, mixed_r, off_diagonal_transpose
from .ybe import RelationResidual, SpectralTriple, check_mixed_ybe

CHECK_IDS = ("braid1", "braid2", "braid3", "ybe1", "ybe2", "ybe3", "action-table")


def _braid_relation(which: int, phi: float, tolerance: float) -> RelationResidual:
    b6, b4 = mixed_braids(phi)
    b6t = off_diagonal_transpose(b6)
    s1_12, s1_23 = kron(b6, eye(2)), kron(eye(2), b6)
    sh_12, sh_23 = kron(b4, eye(3)), kron(eye(3), b4)
    so_12, so_23 = kron(b6t, eye(2)), kron(eye(2), b6t)
    if which == 1:
        lhs, rhs = s1_12 @ s1_23 @ sh_12, sh_23 @ s1_12 @ s1_23
    elif which == 2:
        lhs, rhs = so_12 @ sh_23 @ s1_12, s1_23 @ sh_12 @ so_23
    else:
        lhs, rhs = sh_12 @ so_23 @ so_12, so_23 @ so_12 @ sh_23
    return RelationResidual.from_sides(lhs, rhs, tolerance)


def action_table(theta: float, phi: float) -> dict[int, dict[int, complex]]:
    """Expected 6x6 column amplitudes: input qubit x qutrit, output qutrit x qubit.

    Input columns are ordered (+1/2,+1) ... (-1/2,-1); output rows
    (+1,+1/2), (+1,-1/2), (0,+1/2), (0,-1/2), (-1,+1/2), (-1,-1/2).  The
    qutrit |0> passes through untouched for every theta; the published
    action list swaps cos/sin on the (-1/2,+1) column relative to the
    displayed (and unitary) matrix, so the matrix-consistent version is
    used here.
    """
    c, s = np.cos(theta), np.sin(theta)
    return {
        0: {0: c, 5: -s * np.exp(-1j * phi)},
        1: {2: 1.0},
        2: {1: c, 4: -s},
        3: {1: s, 4: c},
        4: {3: 1.0},
        5: {0: s * np.exp(1j * phi), 5: c},
    }


def _action_table_check(theta: float, phi: float, tolerance: float) -> RelationResidual:
    r6 = mixed_r(theta, phi)[0]
    expected = np.zeros((6, 6), dtype=complex)
    for col, amps in action_table(theta, phi).items():
        for row, amp in amps.items():
            expected[row, col] = amp
    return RelationResidual.from_sides(r6, expected, tolerance)


def run_mixed_check(
    check: str,
    triple: SpectralTriple | None = None,
    phi: float = 0.0,
    tolerance: float | None = None,
) -> RelationResidual:
    """Dispatch one named check; braid/action checks default to tol 1e-12."""
    if check not in CHECK_IDS:
        raise UnknownCheck(f"check {check!r} not one of {CHECK_IDS}")
    if check.startswith("braid"):
        return _braid_relation(int(check[-1]), phi, tolerance or 1e-12)
    if check.startswith("ybe"):
        if triple is None:
            raise UnknownCheck("ybe checks need a SpectralTriple")
        return check_mixed_ybe(f"rel{check[-1]}", triple, phi, tolerance or 1e-10)
    theta = triple.theta1 if triple is not None else np.pi / 5
    return _action_table_check(theta, phi, tolerance or 1e-12)


def qubit_qutrit_entropy(theta: float) -> float:
    """Entanglement entropy of the qubit factor of R6(theta) |+1/2,+1>.

    Equals -c^2 ln c^2 - s^2 ln s^2, maximal at theta = pi/4.
    """
    from .entangle import von_neumann_entropy

    state = mixed_r(theta, 0.0)[0][:, 0]
    # output factors are qutrit x qubit
    return von_neumann_entropy(state, [1], (3, 2))
