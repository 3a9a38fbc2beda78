"""Hot inner loops with numba-compiled kernels and a pure-numpy fallback.

Backend selection: set ``YBX_NUMBA=0`` to force the numpy path; by default
numba is used when importable.  ``YBX_THREADS`` caps the numba threading
layer.  Both implementations of every kernel are importable (``*_np`` /
``*_nb``) so tests and benchmarks can compare them directly.

Most heavy lifting in this package is LAPACK-bound (eigh, matmul on
moderate matrices) where numba cannot help; the kernels here cover the
genuinely loopy parts: batched relation residuals over parameter samples
and the discrete loop-phase accumulation.
"""
from __future__ import annotations

import os

import numpy as np

__all__ = ["NUMBA_ENABLED", "loop_phase", "triple_residuals"]


def _env_wants_numba() -> bool:
    return os.environ.get("YBX_NUMBA", "1") not in ("0", "false", "no")


try:
    import numba
    from numba import njit

    _HAVE_NUMBA = True
    threads = os.environ.get("YBX_THREADS")
    if threads:
        try:
            numba.set_num_threads(max(1, int(threads)))
        except (ValueError, RuntimeError):
            pass
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


NUMBA_ENABLED = _HAVE_NUMBA and _env_wants_numba()


def loop_phase_np(vectors: np.ndarray) -> float:
    """-sum_k angle(<v_k|v_{k+1}>) around the closed loop (row k = vector k)."""
    rolled = np.roll(vectors, -1, axis=0)
    overlaps = np.sum(vectors.conj() * rolled, axis=1)
    return float(-np.sum(np.angle(overlaps)))


@njit(cache=True)
def loop_phase_nb(vectors: np.ndarray) -> float:  # pragma: no cover - thin jit twin
    n, d = vectors.shape
    total = 0.0
    for k in range(n):
        nxt = (k + 1) % n
        ov = 0.0 + 0.0j
        for j in range(d):
            ov += np.conj(vectors[k, j]) * vectors[nxt, j]
        total -= np.arctan2(ov.imag, ov.real)
    return total


def triple_residuals_np(
    l1: np.ndarray, l2: np.ndarray, l3: np.ndarray,
    r1: np.ndarray, r2: np.ndarray, r3: np.ndarray,
) -> np.ndarray:
    """Frobenius norm of l1@l2@l3 - r1@r2@r3 per sample (leading axis)."""
    diff = l1 @ l2 @ l3 - r1 @ r2 @ r3
    return np.linalg.norm(diff, axis=(1, 2))


@njit(cache=True)
def triple_residuals_nb(l1, l2, l3, r1, r2, r3):  # pragma: no cover - thin jit twin
    n, d, _ = l1.shape
    out = np.empty(n)
    for s in range(n):
        lhs = l1[s] @ (l2[s] @ l3[s])
        rhs = r1[s] @ (r2[s] @ r3[s])
        acc = 0.0
        for i in range(d):
            for j in range(d):
                z = lhs[i, j] - rhs[i, j]
                acc += z.real * z.real + z.imag * z.imag
        out[s] = np.sqrt(acc)
    return out


def loop_phase(vectors: np.ndarray) -> float:
    vectors = np.ascontiguousarray(vectors, dtype=np.complex128)
    if NUMBA_ENABLED:
        return loop_phase_nb(vectors)
    return loop_phase_np(vectors)


def triple_residuals(l1, l2, l3, r1, r2, r3) -> np.ndarray:
    args = [np.ascontiguousarray(a, dtype=np.complex128) for a in (l1, l2, l3, r1, r2, r3)]
    if NUMBA_ENABLED:
        return triple_residuals_nb(*args)
    return triple_residuals_np(*args)
