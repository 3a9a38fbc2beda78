"""Constructors for every named braid / R-matrix family in the library.

Basis conventions (big-endian tensor indices throughout):

* qubits: {0, 1} = {up, down};
* qutrits: indices {0, 1, 2} (clock/shift constructions);
* spin-1: {+1, 0, -1} mapped to indices {0, 1, 2} (mixed-spin family);
* mixed qubit-qutrit input basis of the 6x6 family:
  (+1/2,+1), (+1/2,0), (+1/2,-1), (-1/2,+1), (-1/2,0), (-1/2,-1).
"""
from __future__ import annotations

import numpy as np

from .errors import UnsupportedSpin
from .linalg import Array, dagger, expm_antihermitian, kron

OMEGA = np.exp(2j * np.pi / 3)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)


def eye(dim: int) -> Array:
    return np.eye(dim, dtype=complex)


def bell_braid() -> Array:
    """4x4 unitary braid generator sending the product basis to Bell states."""
    return np.array(
        [
            [1, 0, 0, 1],
            [0, 1, 1, 0],
            [0, -1, 1, 0],
            [-1, 0, 0, 1],
        ],
        dtype=complex,
    ) / np.sqrt(2)


def type2_r(theta: float, phi: float = 0.0) -> Array:
    """4x4 entangling R-matrix; unitary for all real angles.

    At phi=0 this equals exp(-i*theta*(sigma_y x sigma_x)); at theta=pi/4,
    phi=0 it reaches a braid point (cf. ``bell_braid``).
    """
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [
            [c, 0, 0, s * np.exp(-1j * phi)],
            [0, c, -s, 0],
            [0, s, c, 0],
            [-s * np.exp(1j * phi), 0, 0, c],
        ],
        dtype=complex,
    )


def type2_generator(phi: float = 0.0) -> Array:
    """4x4 generator M with M^2 = -I such that type2_r = cos(theta)(I + tan(theta) M)."""
    return np.array(
        [
            [0, 0, 0, np.exp(-1j * phi)],
            [0, 0, -1, 0],
            [0, 1, 0, 0],
            [-np.exp(1j * phi), 0, 0, 0],
        ],
        dtype=complex,
    )


# 9x9 braid matrix over two qutrits, entries in units of -i/sqrt(3).  The
# overall sign is pinned by the generator algebra: only this choice gives
# eigenvalues {1, w}, an anti-Hermitian M = -(I + 2wB)/sqrt(3) with M^2 = -I,
# and the braid point r9(pi/3) = -w * braid9().
_BRAID9_SYMBOLS = [
    # w = OMEGA, W = OMEGA**2
    "w 0 0 0 0 1 0 w 0",
    "0 w 0 W 0 0 0 0 W",
    "0 0 w 0 w 0 1 0 0",
    "0 W 0 w 0 0 0 0 W",
    "0 0 1 0 w 0 w 0 0",
    "w 0 0 0 0 w 0 1 0",
    "0 0 w 0 1 0 w 0 0",
    "1 0 0 0 0 w 0 w 0",
    "0 W 0 W 0 0 0 0 w",
]


def _parse_omega_table(rows: list[str], unit: complex) -> Array:
    lut = {"0": 0.0, "1": 1.0, "w": OMEGA, "W": OMEGA**2}
    mat = np.array([[lut[tok] for tok in row.split()] for row in rows], dtype=complex)
    return unit * mat


def braid9() -> Array:
    """9x9 unitary braid generator on two qutrits."""
    return _parse_omega_table(_BRAID9_SYMBOLS, -1j / np.sqrt(3))


def m9() -> Array:
    """Anti-Hermitian 9x9 generator with M^2 = -I built from ``braid9``."""
    return -(eye(9) + 2 * OMEGA * braid9()) / np.sqrt(3)


def r9(theta: float) -> Array:
    """Rational 9x9 R-matrix family: cos(theta) I + sin(theta) M.

    Equals exp(theta*M) since M^2 = -I; at theta=pi/3 it reduces to the
    braid matrix up to the global phase -OMEGA.
    """
    return np.cos(theta) * eye(9) + np.sin(theta) * m9()


def wigner_d_half(theta: float, phi: float) -> Array:
    """Spin-1/2 rotation block [[c, -s e^{-i phi}], [s e^{i phi}, c]]."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [[c, -s * np.exp(-1j * phi)], [s * np.exp(1j * phi), c]], dtype=complex
    )


def spin_matrices(j: float) -> tuple[Array, Array]:
    """(Jy, Jz) for spin j, basis ordered m = +j ... -j."""
    dim = int(round(2 * j)) + 1
    m = j - np.arange(dim)
    jz = np.diag(m).astype(complex)
    # raising operator: <m+1| J+ |m> = sqrt(j(j+1) - m(m+1))
    jp = np.zeros((dim, dim), dtype=complex)
    for k in range(1, dim):
        jp[k - 1, k] = np.sqrt(j * (j + 1) - m[k] * (m[k] + 1))
    jm = dagger(jp)
    jy = (jp - jm) / 2j
    return jy, jz


_SUPPORTED_SPINS = (0.5, 1.0, 1.5, 2.0)


def wigner_d_general(j: float, theta: float, phi: float) -> Array:
    """Spin-j rotation D(theta, phi) via the Euler product of Jz and Jy factors.

    The exponent signs are fixed so that j=1/2 reproduces ``wigner_d_half``
    exactly.
    """
    if j not in _SUPPORTED_SPINS:
        raise UnsupportedSpin(f"j={j} not in {_SUPPORTED_SPINS}")
    jy, jz = spin_matrices(j)
    rot_z = expm_antihermitian(-1j * phi * jz)
    rot_y = expm_antihermitian(-2j * theta * jy)
    return rot_z @ rot_y @ dagger(rot_z)


def v_conjugator() -> Array:
    """The fixed unitary (1/sqrt2)[[1, i], [i, 1]] used for the 2x2 reduction."""
    return np.array([[1, 1j], [1j, 1]], dtype=complex) / np.sqrt(2)


def ising_anyon_pair() -> tuple[Array, Array]:
    """2x2 braid pair (A, B): A = diag(e^{-i pi/4}, e^{i pi/4}), B = (1/sqrt2)[[1,i],[i,1]]."""
    a = np.diag([np.exp(-1j * np.pi / 4), np.exp(1j * np.pi / 4)])
    b = np.array([[1, 1j], [1j, 1]], dtype=complex) / np.sqrt(2)
    return a, b


def clock_shift() -> tuple[Array, Array]:
    """3x3 clock Z = diag(1, w, w^2) and cyclic shift X with X|0> = |2>."""
    z = np.diag([1, OMEGA, OMEGA**2]).astype(complex)
    x = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=complex)
    return z, x


def mixed_braids(phi: float = 0.0) -> tuple[Array, Array]:
    """(B6, B4): braid generators of the mixed spin-{1, 1/2} family."""
    e_p = np.exp(1j * phi)
    e_m = np.exp(-1j * phi)
    b6 = np.array(
        [
            [1, 0, 0, 0, 0, e_p],
            [0, 0, 1, 1, 0, 0],
            [0, np.sqrt(2), 0, 0, 0, 0],
            [0, 0, 0, 0, np.sqrt(2), 0],
            [0, 0, -1, 1, 0, 0],
            [-e_m, 0, 0, 0, 0, 1],
        ],
        dtype=complex,
    ) / np.sqrt(2)
    b4 = np.array(
        [
            [1, 0, 0, e_p],
            [0, 1, 1, 0],
            [0, -1, 1, 0],
            [-e_m, 0, 0, 1],
        ],
        dtype=complex,
    ) / np.sqrt(2)
    return b6, b4


def mixed_r(theta: float, phi: float = 0.0) -> tuple[Array, Array]:
    """(R6, R4): parametrized mixed-spin solutions; both reach braids at theta=pi/4."""
    c, s = np.cos(theta), np.sin(theta)
    e_p = np.exp(1j * phi)
    e_m = np.exp(-1j * phi)
    r6 = np.array(
        [
            [c, 0, 0, 0, 0, s * e_p],
            [0, 0, c, s, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, -s, c, 0, 0],
            [-s * e_m, 0, 0, 0, 0, c],
        ],
        dtype=complex,
    )
    r4 = np.array(
        [
            [c, 0, 0, s * e_p],
            [0, c, s, 0],
            [0, -s, c, 0],
            [-s * e_m, 0, 0, c],
        ],
        dtype=complex,
    )
    return r6, r4


def off_diagonal_transpose(a: Array) -> Array:
    """Reflection across the anti-diagonal: out[i, j] = a[n-1-j, n-1-i]."""
    return a[::-1, ::-1].T.copy()


def swap_matrix(dim: int) -> Array:
    """Permutation operator P on C^dim x C^dim with P |ab> = |ba>."""
    p = np.zeros((dim * dim, dim * dim), dtype=complex)
    for a in range(dim):
        for b in range(dim):
            p[b * dim + a, a * dim + b] = 1.0
    return p


def slot12(op: Array, right_dim: int) -> Array:
    """Embed a two-factor operator as op x I acting on factors (1, 2) of three."""
    return kron(op, eye(right_dim))


def slot23(op: Array, left_dim: int) -> Array:
    """Embed a two-factor operator as I x op acting on factors (2, 3) of three."""
    return kron(eye(left_dim), op)
