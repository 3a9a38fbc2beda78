"""Jordan-Wigner Majorana operators, their R-matrices, and Kitaev-type chains.

A chain of N spin sites carries 2N Majorana operators.  Flat labels
enumerate them as 2j-1 = (site j, flavor A) and 2j = (site j, flavor B):

    gamma_{j,A} = sz^(j-1) x sx_j x I...,   gamma_{j,B} = sz^(j-1) x sy_j x I...
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadModel, BadParity, NonHermitian, SiteOutOfRange
from .linalg import Array, dagger, expm_antihermitian, is_hermitian, kron
from .matrices import SIGMA_X, SIGMA_Y, SIGMA_Z, eye

DIMENSION_CAP = 4096


@dataclass(frozen=True)
class ChainSpec:
    """Chain parameters: site count, odd-even/even-odd couplings, model tag."""

    n_sites: int
    theta1dot: float = 1.0
    theta2dot: float = 1.0
    model: str = "kitaev"

    def __post_init__(self) -> None:
        if self.n_sites < 2:
            raise SiteOutOfRange("chain needs at least 2 sites")
        local = {"kitaev": 2, "z3": 3}.get(self.model)
        if local is None:
            raise BadModel(f"unknown model {self.model!r}")
        if local**self.n_sites > DIMENSION_CAP:
            raise SiteOutOfRange(
                f"dimension {local}**{self.n_sites} exceeds cap {DIMENSION_CAP}"
            )


def majorana_op(spin_site: int, flavor: str, n_sites: int) -> Array:
    """Hermitian Majorana operator (squares to I) on ``n_sites`` spin sites.

    ``spin_site`` is 1-based; ``flavor`` is "A" (Jordan-Wigner string ending
    in sigma_x) or "B" (ending in sigma_y).
    """
    if not 1 <= spin_site <= n_sites:
        raise SiteOutOfRange(f"site {spin_site} outside 1..{n_sites}")
    if flavor not in ("A", "B"):
        raise SiteOutOfRange(f"flavor must be 'A' or 'B', got {flavor!r}")
    head = SIGMA_X if flavor == "A" else SIGMA_Y
    op = np.ones((1, 1), dtype=complex)
    for _ in range(spin_site - 1):
        op = kron(op, SIGMA_Z)
    op = kron(op, head)
    if n_sites - spin_site > 0:
        op = kron(op, eye(2 ** (n_sites - spin_site)))
    return op


def majorana_flat(index: int, n_sites: int) -> Array:
    """Majorana operator by flat 1-based label: odd -> (site, A), even -> (site, B)."""
    if not 1 <= index <= 2 * n_sites:
        raise SiteOutOfRange(f"flat index {index} outside 1..{2 * n_sites}")
    site, rem = divmod(index + 1, 2)
    return majorana_op(site, "A" if rem == 0 else "B", n_sites)


def r_majorana(i: int, theta: float, n_sites: int, pairing: str = "next-nearest") -> Array:
    """Unitary exp(theta * gamma gamma') for one of the three pairings.

    * "odd-even":     exp(theta gamma_{i,A} gamma_{i,B})       (within site i)
    * "even-odd":     exp(theta gamma_{i,B} gamma_{i+1,A})     (across the bond)
    * "next-nearest": exp(theta gamma_{i,A} gamma_{i+1,A}), equal to the
      embedded 4x4 exp(-i theta sigma_y x sigma_x) on sites (i, i+1).
    """
    if pairing == "odd-even":
        g1, g2 = majorana_op(i, "A", n_sites), majorana_op(i, "B", n_sites)
    elif pairing == "even-odd":
        g1, g2 = majorana_op(i, "B", n_sites), majorana_op(i + 1, "A", n_sites)
    elif pairing == "next-nearest":
        g1, g2 = majorana_op(i, "A", n_sites), majorana_op(i + 1, "A", n_sites)
    else:
        raise SiteOutOfRange(f"unknown pairing {pairing!r}")
    return expm_antihermitian(theta * (g1 @ g2))


def braid_generator(k: int, n_sites: int) -> Array:
    """Braid generator exp((pi/4) gamma_k gamma_{k+1}) in the flat enumeration."""
    g1, g2 = majorana_flat(k, n_sites), majorana_flat(k + 1, n_sites)
    return expm_antihermitian((np.pi / 4) * (g1 @ g2))


def kitaev_chain_h(spec: ChainSpec) -> Array:
    """Open-boundary Majorana pairing chain.

    H = i sum_k t1 gamma_{k,A} gamma_{k,B} + i sum_{k<N} t2 gamma_{k,B} gamma_{k+1,A};
    the even-odd sum stops at N-1 so the end operators gamma_{1,A} and
    gamma_{N,B} stay unpaired when t1 = 0.
    """
    if spec.model != "kitaev":
        raise BadModel(f"kitaev_chain_h got model {spec.model!r}")
    n = spec.n_sites
    h = np.zeros((2**n, 2**n), dtype=complex)
    for k in range(1, n + 1):
        h += 1j * spec.theta1dot * (
            majorana_op(k, "A", n) @ majorana_op(k, "B", n)
        )
    for k in range(1, n):
        h += 1j * spec.theta2dot * (
            majorana_op(k, "B", n) @ majorana_op(k + 1, "A", n)
        )
    return h


def degeneracy(h: Array, rel_gap: float = 1e-8) -> tuple[int, float]:
    """Ground-state degeneracy and gap of a Hermitian matrix.

    Eigenvalues within ``rel_gap`` times the spectral spread of the minimum
    count as one cluster; the gap is the distance from that cluster to the
    next eigenvalue (0.0 when the whole spectrum is one cluster).
    """
    if not is_hermitian(np.asarray(h)):
        raise NonHermitian("degeneracy expects a Hermitian matrix")
    evals = np.linalg.eigvalsh(h)
    spread = float(evals[-1] - evals[0])
    if spread == 0.0:
        return len(evals), 0.0
    cutoff = evals[0] + rel_gap * spread
    deg = int(np.searchsorted(evals, cutoff, side="right"))
    gap = float(evals[deg] - evals[deg - 1]) if deg < len(evals) else 0.0
    return deg, gap


def gamma_emergent(n_majoranas: int, n_sites: int) -> Array:
    """Collective symmetry i^{N(N-1)/2} gamma_1 ... gamma_N for odd N.

    Hermitian, squares to I, and commutes with every braid generator
    exp((pi/4) gamma_k gamma_{k+1}) for k < N.
    """
    if n_majoranas % 2 == 0:
        raise BadParity("emergent Majorana operator needs an odd count")
    if n_majoranas > 2 * n_sites:
        raise SiteOutOfRange(f"{n_majoranas} Majoranas need >= {-(-n_majoranas // 2)} sites")
    out = eye(2**n_sites)
    for k in range(1, n_majoranas + 1):
        out = out @ majorana_flat(k, n_sites)
    return (1j ** (n_majoranas * (n_majoranas - 1) // 2)) * out
