"""Dense complex linear algebra on small tensor-product spaces.

Conventions used throughout the package:

* All operators and states are plain ``numpy`` arrays of dtype complex128;
  tensor-factor structure is passed explicitly as a ``dims`` sequence of
  local dimensions.
* Tensor indices are big-endian: the leftmost factor is the most
  significant, so ``|j1 j2 ... jn>`` has flat index
  ``j1*d2*...*dn + ... + jn``.  Qubit labels {0, 1} mean {up, down}.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import BadFactorIndex, DimMismatch, NonAntiHermitian, NonHermitian

Array = np.ndarray

DEFAULT_TOL = 1e-10


def dagger(a: Array) -> Array:
    return a.conj().T


def frobenius(a: Array) -> float:
    return float(np.linalg.norm(a))


def frobenius_distance(a: Array, b: Array) -> float:
    """Frobenius norm of ``a - b``; zero iff the operands are equal."""
    if a.shape != b.shape:
        raise DimMismatch(f"shape {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def kron(a: Array, b: Array, *rest: Array) -> Array:
    """Kronecker product of two or more operators, left factor most significant."""
    out = np.kron(np.asarray(a), np.asarray(b))
    for m in rest:
        out = np.kron(out, np.asarray(m))
    return out


def is_hermitian(h: Array, rtol: float = 1e-10) -> bool:
    return np.linalg.norm(h - dagger(h)) < rtol * max(1.0, np.linalg.norm(h))


def expm_antihermitian(a: Array, tol: float = 1e-12) -> Array:
    """Unitary exponential of an anti-Hermitian generator.

    Uses the eigendecomposition of the Hermitian matrix ``i*a``, so the
    result is unitary to machine precision.  Raises ``NonAntiHermitian``
    when the generator is not an evolution generator.
    """
    a = np.asarray(a, dtype=complex)
    norm = np.linalg.norm(a)
    if norm > 0 and np.linalg.norm(a + dagger(a)) >= tol * norm:
        raise NonAntiHermitian("generator is not anti-Hermitian")
    h = 1j * a  # Hermitian
    evals, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(-1j * evals)) @ dagger(vecs)


def eig_hermitian(h: Array, rtol: float = 1e-10) -> tuple[Array, Array]:
    """Ascending eigenvalues and orthonormal eigenvector columns of Hermitian ``h``."""
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h, rtol):
        raise NonHermitian("matrix is not Hermitian within tolerance")
    evals, vecs = np.linalg.eigh(h)
    return evals, vecs


def _check_dims(dim: int, dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims or int(np.prod(dims)) != dim:
        raise BadFactorIndex(f"factor shape {dims} does not multiply to {dim}")
    return dims


def partial_trace(rho: Array, keep: Sequence[int], dims: Sequence[int]) -> Array:
    """Reduced density operator of ``rho`` on the tensor factors in ``keep``.

    ``dims`` lists the local dimension of every factor; ``keep`` holds the
    (0-based) factor indices that survive.  Trace and Hermiticity are
    preserved.
    """
    rho = np.asarray(rho)
    dims = _check_dims(rho.shape[0], dims)
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in keep):
        raise BadFactorIndex(f"keep={keep} outside 0..{n - 1}")
    traced = [i for i in range(n) if i not in keep]
    t = rho.reshape(dims + dims)
    # contract each traced row index with its column partner
    for offset, i in enumerate(traced):
        ax = i - offset  # axes shift left as factors are consumed
        t = np.trace(t, axis1=ax, axis2=ax + t.ndim // 2)
    d_keep = int(np.prod([dims[k] for k in keep])) if keep else 1
    return t.reshape(d_keep, d_keep)


def partial_trace_state(psi: Array, keep: Sequence[int], dims: Sequence[int]) -> Array:
    """Reduced density operator of a pure state without forming |psi><psi|."""
    psi = np.asarray(psi).reshape(-1)
    dims = _check_dims(psi.shape[0], dims)
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in keep):
        raise BadFactorIndex(f"keep={keep} outside 0..{n - 1}")
    traced = [i for i in range(n) if i not in keep]
    t = psi.reshape(dims).transpose(keep + traced)
    d_keep = int(np.prod([dims[k] for k in keep])) if keep else 1
    m = t.reshape(d_keep, -1)
    return m @ m.conj().T


def basis_state(index: int, dim: int) -> Array:
    vec = np.zeros(dim, dtype=complex)
    vec[index] = 1.0
    return vec


def product_basis_state(labels: Sequence[int], dims: Sequence[int]) -> Array:
    """|j1 j2 ... jn> as a flat statevector, big-endian index convention."""
    dims = tuple(int(d) for d in dims)
    idx = 0
    for label, d in zip(labels, dims, strict=True):
        if not 0 <= label < d:
            raise BadFactorIndex(f"label {label} outside local dimension {d}")
        idx = idx * d + label
    return basis_state(idx, int(np.prod(dims)))


def commutator(a: Array, b: Array) -> Array:
    return a @ b - b @ a


def anticommutator(a: Array, b: Array) -> Array:
    return a @ b + b @ a
