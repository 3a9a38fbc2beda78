"""Hamiltonians from unitary families, Berry phases, and the 3-body S-matrix.

Sign convention: the Schroedinger relation H(t) = i (dR/dt) R^{-1} is used
whenever a Hamiltonian is extracted from a unitary family (hbar = 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NonUnitaryFamily, NormalizationBroken
from .kernels import loop_phase
from .linalg import Array, dagger, expm_antihermitian, kron
from .majorana import majorana_op
from .matrices import (
    SIGMA_MINUS,
    SIGMA_PLUS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    eye,
)
from .ybe import RelationResidual, lorentz_theta2

TWO_PI = 2 * np.pi


def hamiltonian_from_r(
    r_of_t: Callable[[float], Array], t: float, dt: float = 1e-4
) -> tuple[Array, float]:
    """Hermitian H(t) = i (dR/dt) R^dag by central differences.

    Returns (H, defect) where defect is the norm of the discarded
    anti-Hermitian remainder; the truncation error is O(dt^2).
    """
    r_plus, r_minus, r0 = r_of_t(t + dt), r_of_t(t - dt), r_of_t(t)
    dim = r0.shape[0]
    for r in (r_plus, r_minus, r0):
        if np.linalg.norm(r @ dagger(r) - eye(dim)) > 1e-8:
            raise NonUnitaryFamily("family is not unitary near t")
    h_raw = 1j * ((r_plus - r_minus) / (2 * dt)) @ dagger(r0)
    h = (h_raw + dagger(h_raw)) / 2
    defect = float(np.linalg.norm(h_raw - h))
    return h, defect


def two_body_h(theta: float, phi: float, phidot: float = 1.0) -> Array:
    """4x4 two-spin Hamiltonian of the entangling family (hbar = 1).

    H = phidot sin(t) [ (sin(t)/2)(sz_1 + sz_2)
                        - cos(t)(e^{-i phi} s+s+ + e^{i phi} s-s-) ].
    """
    c, s = np.cos(theta), np.sin(theta)
    sz_sum = kron(SIGMA_Z, eye(2)) + kron(eye(2), SIGMA_Z)
    raise_both = kron(SIGMA_PLUS, SIGMA_PLUS)
    lower_both = kron(SIGMA_MINUS, SIGMA_MINUS)
    return phidot * s * (
        (s / 2) * sz_sum
        - c * (np.exp(-1j * phi) * raise_both + np.exp(1j * phi) * lower_both)
    )


@dataclass(frozen=True)
class BerryResult:
    """Numeric vs analytic adiabatic phases for one theta."""

    theta: float
    gamma_plus: float
    gamma_minus: float
    analytic_plus: float
    analytic_minus: float
    abs_error: float


def _mod_2pi(x: float) -> float:
    return float(np.mod(x, TWO_PI))


def circle_distance(a: float, b: float) -> float:
    """Distance between two phases modulo 2 pi."""
    d = np.mod(a - b, TWO_PI)
    return float(min(d, TWO_PI - d))


def _two_body_h_stack(theta: float, phis: Array) -> Array:
    c, s = np.cos(theta), np.sin(theta)
    n = len(phis)
    h = np.zeros((n, 4, 4), dtype=complex)
    h[:, 0, 0] = s * s
    h[:, 3, 3] = -s * s
    h[:, 0, 3] = -s * c * np.exp(-1j * phis)
    h[:, 3, 0] = -s * c * np.exp(1j * phis)
    return h


def berry_phase(theta: float, n_steps: int = 100_000) -> BerryResult:
    """Discrete closed-loop phases of the two nonzero-energy eigenstates.

    The loop drives phi once around [0, 2 pi); the phase is accumulated via
    the gauge-invariant overlap product, so per-point eigenvector phases do
    not matter.  Values are reported modulo 2 pi and compared against
    pi (1 +/- sin theta) on the circle.
    """
    if n_steps < 1000:
        raise ValueError("n_steps must be at least 1000 for a trustworthy loop")
    phis = np.linspace(0.0, TWO_PI, n_steps, endpoint=False)
    _, vecs = np.linalg.eigh(_two_body_h_stack(theta, phis))
    gamma_minus = _mod_2pi(loop_phase(np.ascontiguousarray(vecs[:, :, 0].copy())))
    gamma_plus = _mod_2pi(loop_phase(np.ascontiguousarray(vecs[:, :, 3].copy())))
    analytic_plus = np.pi * (1 + np.sin(theta))
    analytic_minus = np.pi * (1 - np.sin(theta))
    err = max(
        circle_distance(gamma_plus, analytic_plus),
        circle_distance(gamma_minus, analytic_minus),
    )
    return BerryResult(
        theta=theta,
        gamma_plus=gamma_plus,
        gamma_minus=gamma_minus,
        analytic_plus=_mod_2pi(analytic_plus),
        analytic_minus=_mod_2pi(analytic_minus),
        abs_error=err,
    )


def s3_lambda() -> tuple[Array, Array, Array]:
    """Rotation generators (L1, L2, L3) on three qubits; each squares to -I.

    L1 = -i sy sx I, L2 = -i I sy sx, L3 = -i sy sz sx; identical to the
    Majorana bilinears (g1 g2, g2 g3, g1 g3) of the A-flavor operators.
    """
    l1 = -1j * kron(SIGMA_Y, SIGMA_X, eye(2))
    l2 = -1j * kron(eye(2), SIGMA_Y, SIGMA_X)
    l3 = -1j * kron(SIGMA_Y, SIGMA_Z, SIGMA_X)
    return l1, l2, l3


def _n_dot_lambda(cos_beta: float, sin_beta: float) -> Array:
    l1, l2, l3 = s3_lambda()
    return (cos_beta / np.sqrt(2)) * (l1 + l2) + sin_beta * l3


def s3_matrix(eta: float, beta: float) -> Array:
    """Three-body S-matrix exp(eta n.Lambda) = cos(eta) I + sin(eta) n.Lambda."""
    return np.cos(eta) * eye(8) + np.sin(eta) * _n_dot_lambda(np.cos(beta), np.sin(beta))


def _majorana_triple(theta1: float, theta2: float, theta3: float) -> Array:
    g1 = majorana_op(1, "A", 3)
    g2 = majorana_op(2, "A", 3)
    g3 = majorana_op(3, "A", 3)
    r12 = lambda t: expm_antihermitian(t * (g1 @ g2))
    r23 = lambda t: expm_antihermitian(t * (g2 @ g3))
    return r12(theta1) @ r23(theta2) @ r12(theta3)


def s3_angles(theta1: float, theta3: float) -> tuple[float, float, float, float]:
    """(cos eta, sin eta, cos beta, sin beta) for the factorized triple product.

    theta2 comes from the kappa=1 additivity rule.  sin(beta) carries the
    opposite sign of the published display, which corresponds to the
    reversed (theta1, theta3) placement in the product; this orientation is
    the one that reproduces R12(t1) R23(t2) R12(t3) exactly.
    """
    theta2 = lorentz_theta2(theta1, theta3, kappa=1.0)
    cos_eta = np.cos(theta2) * np.cos(theta1 + theta3)
    root = np.sqrt(1 + np.cos(theta1 - theta3) ** 2)
    sin_eta = np.sin(theta2) * root
    cos_beta = np.sqrt(2) * np.cos(theta1 - theta3) / root
    sin_beta = np.sin(theta1 - theta3) / root
    return float(cos_eta), float(sin_eta), float(cos_beta), float(sin_beta)


def s3_factorization_check(
    theta1: float, theta3: float, tolerance: float = 1e-10
) -> RelationResidual:
    """Compare the Majorana triple product against the closed-form S-matrix.

    Raises NormalizationBroken when cos^2(eta) + sin^2(eta) deviates from 1,
    which only happens off the additivity-constraint surface.
    """
    cos_eta, sin_eta, cos_beta, sin_beta = s3_angles(theta1, theta3)
    deviation = abs(cos_eta**2 + sin_eta**2 - 1.0)
    if deviation > 1e-10:
        raise NormalizationBroken(f"cos^2+sin^2 deviates by {deviation}")
    theta2 = lorentz_theta2(theta1, theta3, kappa=1.0)
    closed = cos_eta * eye(8) + sin_eta * _n_dot_lambda(cos_beta, sin_beta)
    product = _majorana_triple(theta1, theta2, theta3)
    return RelationResidual.from_sides(product, closed, tolerance)


def three_body_h(etadot: float, beta: float) -> Array:
    """8x8 Hamiltonian i etadot [cos(beta)/sqrt2 (g1 g2 + g2 g3) + sin(beta) g1 g3].

    Commutes with the emergent operator -i g1 g2 g3, so every eigenvalue is
    (at least) doubly degenerate.
    """
    return 1j * etadot * _n_dot_lambda(np.cos(beta), np.sin(beta))
