"""Seeded verification suites shared by the CLI and the acceptance tests.

Each suite returns a list of check dicts {name, params, residual, passed};
residual-style checks pass when residual < tol, negative controls pass when
the residual EXCEEDS the discrimination floor (they guard against vacuous
checkers and carry params={"control": "negative", ...}).
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from . import dynamics, kernels, majorana, matrices, parafermion, topo2d, ybe
from .linalg import anticommutator, basis_state, commutator, dagger
from .majorana import ChainSpec
from .matrices import eye

NEGATIVE_FLOOR = 1e-3

SUITES = (
    "ybe-4x4",
    "ybe-9x9",
    "ybe-parafermion",
    "ybe-mixed",
    "braid-all",
    "algebra",
    "symmetries",
    "reduction-2d",
    "reduction-3x3",
    "s3-factorize",
)


def _check(name: str, residual: float, tol: float, **params) -> dict:
    return {
        "name": name,
        "params": params,
        "residual": float(residual),
        "passed": bool(residual < tol),
    }


def _control(name: str, residual: float, floor: float = NEGATIVE_FLOOR, **params) -> dict:
    params = {"control": "negative", **params}
    return {
        "name": name,
        "params": params,
        "residual": float(residual),
        "passed": bool(residual > floor),
    }


def sample_angles(
    rng: np.random.Generator, n: int, kappa: float, lo: float = -1.2, hi: float = 1.2
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(theta1, theta2, theta3) samples with theta2 from the additivity rule.

    Draws are rejected near the additivity pole (|1 + kappa t1 t3| < 1e-3).
    """
    t1s = np.empty(n)
    t3s = np.empty(n)
    have = 0
    while have < n:
        cand1, cand3 = rng.uniform(lo, hi, size=(2, n - have))
        ok = np.abs(1.0 + kappa * np.tan(cand1) * np.tan(cand3)) >= 1e-3
        k = int(np.sum(ok))
        t1s[have : have + k] = cand1[ok]
        t3s[have : have + k] = cand3[ok]
        have += k
    t2s = np.arctan((np.tan(t1s) + np.tan(t3s)) / (1.0 + kappa * np.tan(t1s) * np.tan(t3s)))
    return t1s, t2s, t3s


def _stack(build: Callable[[float], np.ndarray], thetas: np.ndarray) -> np.ndarray:
    return np.stack([build(t) for t in thetas])


def family_residuals(
    slot_a: Callable[[float], np.ndarray],
    slot_b: Callable[[float], np.ndarray],
    t1s: np.ndarray,
    t2s: np.ndarray,
    t3s: np.ndarray,
) -> np.ndarray:
    """Batched residuals of A(t1) B(t2) A(t3) - B(t3) A(t2) B(t1)."""
    return kernels.triple_residuals(
        _stack(slot_a, t1s), _stack(slot_b, t2s), _stack(slot_a, t3s),
        _stack(slot_b, t3s), _stack(slot_a, t2s), _stack(slot_b, t1s),
    )


def residuals_type2(rng: np.random.Generator, samples: int) -> np.ndarray:
    t1s, t2s, t3s = sample_angles(rng, samples, kappa=1.0)
    phis = rng.uniform(0.0, 2 * np.pi, samples)
    i2 = eye(2)
    res = np.empty(samples)
    for k in range(samples):
        a = lambda t: np.kron(matrices.type2_r(t, phis[k]), i2)
        b = lambda t: np.kron(i2, matrices.type2_r(t, phis[k]))
        res[k] = family_residuals(a, b, t1s[k : k + 1], t2s[k : k + 1], t3s[k : k + 1])[0]
    return res


def negative_control_type2(theta: float = np.pi / 6) -> float:
    a = lambda t: np.kron(matrices.type2_r(t, 0.0), eye(2))
    b = lambda t: np.kron(eye(2), matrices.type2_r(t, 0.0))
    galilean = np.array([theta]), np.array([2 * theta]), np.array([theta])
    return float(family_residuals(a, b, *galilean)[0])


def residuals_r9(rng: np.random.Generator, samples: int) -> np.ndarray:
    t1s, t2s, t3s = sample_angles(rng, samples, kappa=1.0 / 3.0)
    a = lambda t: np.kron(matrices.r9(t), eye(3))
    b = lambda t: np.kron(eye(3), matrices.r9(t))
    return family_residuals(a, b, t1s, t2s, t3s)


def negative_control_r9(theta: float = np.pi / 6) -> float:
    a = lambda t: np.kron(matrices.r9(t), eye(3))
    b = lambda t: np.kron(eye(3), matrices.r9(t))
    return float(family_residuals(a, b, np.array([theta]), np.array([2 * theta]), np.array([theta]))[0])


def residuals_parafermion(rng: np.random.Generator, samples: int) -> np.ndarray:
    """27-dim parafermionic relation over all adjacent generator pairs."""
    t1s, t2s, t3s = sample_angles(rng, samples, kappa=1.0 / 3.0)
    res = np.empty(samples)
    pairs = [(i, i + 1) for i in range(1, 5)]
    for k in range(samples):
        i, j = pairs[k % len(pairs)]
        a = lambda t: parafermion.r_parafermion(i, t, 3)
        b = lambda t: parafermion.r_parafermion(j, t, 3)
        res[k] = family_residuals(a, b, t1s[k : k + 1], t2s[k : k + 1], t3s[k : k + 1])[0]
    return res


def negative_control_parafermion(theta: float = np.pi / 6) -> float:
    a = lambda t: parafermion.r_parafermion(1, t, 2)
    b = lambda t: parafermion.r_parafermion(2, t, 2)
    return float(family_residuals(a, b, np.array([theta]), np.array([2 * theta]), np.array([theta]))[0])


def residuals_mixed(rng: np.random.Generator, samples: int) -> dict[str, np.ndarray]:
    out = {}
    for rel in ("rel1", "rel2", "rel3"):
        t1s, t2s, t3s = sample_angles(rng, samples, kappa=1.0)
        phis = rng.uniform(0.0, 2 * np.pi, samples)
        vals = np.empty(samples)
        for k in range(samples):
            triple = ybe.SpectralTriple(t1s[k], t2s[k], t3s[k])
            vals[k] = ybe.check_mixed_ybe(rel, triple, phis[k]).residual
        out[rel] = vals
    return out


def negative_control_mixed(theta: float = np.pi / 6) -> float:
    triple = ybe.SpectralTriple(theta, 2 * theta, theta)
    return ybe.check_mixed_ybe("rel1", triple, 0.0).residual


def suite_ybe_4x4(rng, samples, tol):
    res = residuals_type2(rng, samples)
    return [
        _check("type2-ybe-max", res.max(), tol, samples=samples, kappa=1.0),
        _control("type2-ybe-galilean", negative_control_type2(), theta="pi/6"),
    ]


def suite_ybe_9x9(rng, samples, tol):
    res = residuals_r9(rng, samples)
    return [
        _check("r9-ybe-max", res.max(), tol, samples=samples, kappa=1 / 3),
        _control("r9-ybe-galilean", negative_control_r9(), theta="pi/6"),
    ]


def suite_ybe_parafermion(rng, samples, tol):
    res = residuals_parafermion(rng, samples)
    return [
        _check("parafermion-ybe-max", res.max(), tol, samples=samples, kappa=1 / 3),
        _control("parafermion-ybe-galilean", negative_control_parafermion(), theta="pi/6"),
    ]


def suite_ybe_mixed(rng, samples, tol):
    checks = []
    for rel, res in residuals_mixed(rng, samples).items():
        checks.append(_check(f"mixed-{rel}-max", res.max(), tol, samples=samples, kappa=1.0))
    checks.append(_control("mixed-rel1-galilean", negative_control_mixed(), theta="pi/6"))
    return checks


def suite_braid_all(rng, samples, tol):
    from .mixedspin import run_mixed_check

    tol = min(tol, 1e-12)
    checks = [
        _check("bell-braid", ybe.check_braid(matrices.bell_braid(), 2).residual, tol),
        _check("braid9", ybe.check_braid(matrices.braid9(), 3).residual, tol),
        _check("qutrit-pair-braid",
               ybe.RelationResidual.from_sides(
                   *(lambda b12, b23: (b12 @ b23 @ b12, b23 @ b12 @ b23))(
                       *parafermion.qutrit_braid_pair()),
                   tol).residual, tol),
        _check("anyon-aba-bab", topo2d.anyon_braid_check().residual, tol),
        _check("r9-braid-point",
               float(np.linalg.norm(matrices.r9(np.pi / 3) - (-matrices.OMEGA) * matrices.braid9())),
               tol),
    ]
    phi = rng.uniform(0.0, 2 * np.pi)
    for which in ("braid1", "braid2", "braid3"):
        checks.append(_check(f"mixed-{which}", run_mixed_check(which, phi=phi).residual,
                             tol, phi=round(phi, 6)))
    return checks


def suite_algebra(rng, samples, tol):
    checks = []
    # Clifford table on 5 spin sites
    n = 5
    gammas = [majorana.majorana_flat(k, n) for k in range(1, 2 * n + 1)]
    worst = 0.0
    for i in range(2 * n):
        for j in range(i, 2 * n):
            target = 2 * eye(2**n) if i == j else np.zeros((2**n, 2**n))
            worst = max(worst, float(np.linalg.norm(anticommutator(gammas[i], gammas[j]) - target)))
    checks.append(_check("clifford-table", worst, 1e-13, sites=n))
    # Heisenberg-Weyl table on 4 qutrits
    nq = 4
    cs = [parafermion.parafermion_op(k, nq) for k in range(1, 2 * nq + 1)]
    worst_hw = max(
        float(np.linalg.norm(cs[i] @ cs[j] - matrices.OMEGA * cs[j] @ cs[i]))
        for i in range(2 * nq) for j in range(i + 1, 2 * nq)
    )
    worst_cube = max(
        float(np.linalg.norm(np.linalg.matrix_power(c, 3) - eye(3**nq))) for c in cs
    )
    checks.append(_check("heisenberg-weyl-table", worst_hw, 1e-13, qutrits=nq))
    checks.append(_check("parafermion-cubes", worst_cube, 1e-13, qutrits=nq))
    # generator squares
    m4 = matrices.type2_generator(0.0)
    checks.append(_check("m4-squares-to-minus-i", float(np.linalg.norm(m4 @ m4 + eye(4))), 1e-12))
    m9 = matrices.m9()
    checks.append(_check("m9-squares-to-minus-i", float(np.linalg.norm(m9 @ m9 + eye(9))), 1e-12))
    # su(2) closure of the 3-body generators
    l1, l2, l3 = dynamics.s3_lambda()
    closure = max(
        float(np.linalg.norm(commutator(l1, l2) - 2 * l3)),
        float(np.linalg.norm(commutator(l2, l3) - 2 * l1)),
        float(np.linalg.norm(commutator(l1, l3) + 2 * l2)),
    )
    checks.append(_check("lambda-su2-closure", closure, 1e-12))
    beta = rng.uniform(0.0, np.pi)
    ndl = dynamics.s3_matrix(np.pi / 2, beta)  # pure sin(eta) n.Lambda part
    checks.append(_check("n-dot-lambda-squares", float(np.linalg.norm(ndl @ ndl + eye(8))),
                         1e-12, beta=round(beta, 6)))
    return checks


def suite_symmetries(rng, samples, tol):
    checks = []
    thetas = rng.uniform(-2.0, 2.0, max(3, samples // 100))
    # Majorana emergent mode on 3 sites
    g = majorana.gamma_emergent(3, 3)
    worst = max(
        float(np.linalg.norm(commutator(g, _flat_r(i, t, 3))))
        for i in (1, 2) for t in thetas
    )
    checks.append(_check("gamma-commutes-majorana-r", worst, 1e-12, sites=3))
    g5 = majorana.gamma_emergent(5, 3)
    worst = max(
        float(np.linalg.norm(commutator(g5, majorana.braid_generator(k, 3)))) for k in range(1, 5)
    )
    checks.append(_check("gamma5-commutes-braids", worst, 1e-12, majoranas=5))
    # Z3 block: P, Gamma on two qutrits
    cs = [parafermion.parafermion_op(k, 2) for k in range(1, 5)]
    p32 = cs[0] @ dagger(cs[1]) @ cs[2] @ dagger(cs[3])
    gam = matrices.OMEGA * dagger(cs[0]) @ cs[1] @ dagger(cs[2])
    worst_p = max(
        float(np.linalg.norm(commutator(p32, parafermion.r_parafermion(i, t, 2))))
        for i in (1, 2, 3) for t in thetas
    )
    worst_g = max(
        float(np.linalg.norm(commutator(gam, parafermion.r_parafermion(i, t, 2))))
        for i in (1, 2) for t in thetas
    )
    checks.append(_check("z3-parity-commutes-r", worst_p, 1e-12))
    checks.append(_check("z3-gamma-commutes-r", worst_g, 1e-12))
    checks.append(_control("z3-parity-gamma-noncommute",
                           float(np.linalg.norm(commutator(p32, gam))), floor=0.1))
    # Majorana doubling of the 3-body Hamiltonian
    beta = rng.uniform(0.0, np.pi)
    h = dynamics.three_body_h(1.0, beta)
    evals = np.linalg.eigvalsh(h)
    pair_gap = float(np.max(np.abs(evals[0::2] - evals[1::2])))
    checks.append(_check("three-body-doubling", pair_gap, 1e-10, beta=round(beta, 6)))
    return checks


def _flat_r(i: int, theta: float, n_sites: int) -> np.ndarray:
    from .linalg import expm_antihermitian

    g1 = majorana.majorana_flat(i, n_sites)
    g2 = majorana.majorana_flat(i + 1, n_sites)
    return expm_antihermitian(theta * (g1 @ g2))


def suite_reduction_2d(rng, samples, tol):
    from .linalg import dagger as dag

    checks = []
    phi = 0.0
    v = matrices.v_conjugator()
    worst_leak, worst_12, worst_23 = 0.0, 0.0, 0.0
    for theta in np.linspace(0.0, np.pi, 25):
        worst_leak = max(worst_leak, topo2d.leakage(theta, phi, 12), topo2d.leakage(theta, phi, 23))
        b12 = topo2d.reduce_to_2d(theta, phi, 12)
        b23 = topo2d.reduce_to_2d(theta, phi, 23)
        worst_12 = max(worst_12, float(np.linalg.norm(
            b12 - dag(v) @ matrices.wigner_d_half(theta, 0.0) @ v)))
        worst_23 = max(worst_23, float(np.linalg.norm(
            b23 - dag(v) @ matrices.wigner_d_half(theta, np.pi / 2) @ v)))
    checks.append(_check("topo-leakage", worst_leak, tol, grid=25))
    checks.append(_check("slot12-matches-dfunction", worst_12, tol, grid=25))
    checks.append(_check("slot23-matches-dfunction", worst_23, tol, grid=25))
    a, b = matrices.ising_anyon_pair()
    checks.append(_check("slot12-anyon-braid-point",
                         float(np.linalg.norm(topo2d.reduce_to_2d(np.pi / 4, phi, 12) - a)), 1e-12))
    checks.append(_check("slot23-anyon-braid-point",
                         float(np.linalg.norm(topo2d.reduce_to_2d(np.pi / 4, phi, 23) - b)), 1e-12))
    return checks


def suite_reduction_3x3(rng, samples, tol):
    checks = []
    worst_a12, worst_a23 = 0.0, 0.0
    w = matrices.OMEGA
    for theta in np.linspace(0.0, np.pi, 25):
        a12, a23 = parafermion.qutrit_parity_subspace(theta)
        diag = np.diag([np.exp(-1j * theta), np.exp(1j * theta), np.exp(-1j * theta)])
        worst_a12 = max(worst_a12, float(np.linalg.norm(a12 - diag)))
        d = np.cos(theta) - 1j / 3 * np.sin(theta)
        o1 = (2j / 3) * w * np.sin(theta)
        o2 = (2j / 3) * w**2 * np.sin(theta)
        disp = np.array([[d, o2, o1], [o1, d, o2], [o2, o1, d]])
        worst_a23 = max(worst_a23, float(np.linalg.norm(a23 - disp)))
    checks.append(_check("a12-displayed-form", worst_a12, 1e-12, grid=25))
    checks.append(_check("a23-displayed-form", worst_a23, 1e-12, grid=25))
    t1s, t2s, t3s = sample_angles(rng, max(16, samples // 4), kappa=1.0 / 3.0)
    worst = 0.0
    for t1, t2, t3 in zip(t1s, t2s, t3s):
        a = lambda t: parafermion.qutrit_parity_subspace(t)[0]
        b = lambda t: parafermion.qutrit_parity_subspace(t)[1]
        worst = max(worst, float(family_residuals(a, b, np.array([t1]), np.array([t2]), np.array([t3]))[0]))
    checks.append(_check("reduced-3x3-ybe", worst, tol, samples=len(t1s)))
    return checks


def suite_s3_factorize(rng, samples, tol):
    n = max(16, samples // 5)
    worst_res, worst_norm = 0.0, 0.0
    for _ in range(n):
        t1, t3 = rng.uniform(-1.0, 1.0, 2)
        cos_eta, sin_eta, _, _ = dynamics.s3_angles(t1, t3)
        worst_norm = max(worst_norm, abs(cos_eta**2 + sin_eta**2 - 1.0))
        worst_res = max(worst_res, dynamics.s3_factorization_check(t1, t3).residual)
    checks = [
        _check("s3-factorization", worst_res, tol, samples=n),
        _check("s3-eta-normalization", worst_norm, 1e-10, samples=n),
    ]
    ghz = dynamics.s3_matrix(np.pi / 3, np.arctan(1 / np.sqrt(2))) @ basis_state(0, 8)
    ghz_target = np.zeros(8, dtype=complex)
    ghz_target[[0, 3, 5, 6]] = 0.5
    checks.append(_check("ghz-amplitudes", float(np.linalg.norm(ghz - ghz_target)), 1e-12))
    wst = dynamics.s3_matrix(np.pi / 2, np.arctan(1 / np.sqrt(2))) @ basis_state(0, 8)
    w_target = np.zeros(8, dtype=complex)
    w_target[[3, 5, 6]] = 1 / np.sqrt(3)
    checks.append(_check("w-amplitudes", float(np.linalg.norm(wst - w_target)), 1e-12))
    return checks


_SUITE_FNS = {
    "ybe-4x4": suite_ybe_4x4,
    "ybe-9x9": suite_ybe_9x9,
    "ybe-parafermion": suite_ybe_parafermion,
    "ybe-mixed": suite_ybe_mixed,
    "braid-all": suite_braid_all,
    "algebra": suite_algebra,
    "symmetries": suite_symmetries,
    "reduction-2d": suite_reduction_2d,
    "reduction-3x3": suite_reduction_3x3,
    "s3-factorize": suite_s3_factorize,
}


def run_suite(suite: str, samples: int, seed: int, tol: float) -> list[dict]:
    """Run one named suite with a seeded generator; returns check dicts."""
    rng = np.random.default_rng(seed)
    return _SUITE_FNS[suite](rng, samples, tol)


def chain_summary(model: str, n: int, t1: float, t2: float) -> dict:
    """Ground-state data of one chain: energy, degeneracy, gap (+ parities)."""
    spec = ChainSpec(n_sites=n, theta1dot=t1, theta2dot=t2, model=model)
    if model == "kitaev":
        h = majorana.kitaev_chain_h(spec)
    else:
        h = parafermion.z3_chain_h(spec)
    evals, vecs = np.linalg.eigh(h)
    deg, gap = majorana.degeneracy(h)
    out = {
        "model": model,
        "n_sites": n,
        "dimension": h.shape[0],
        "ground_energy": float(evals[0]),
        "degeneracy": deg,
        "gap": gap,
    }
    if model == "z3":
        ground = vecs[:, :deg]
        block = dagger(ground) @ parafermion.z3_parity(n) @ ground
        phases = np.angle(np.linalg.eigvals(block)) / (2 * np.pi / 3)
        sectors = sorted(int(round(p)) % 3 for p in phases)
        out["ground_parities"] = ["1" if s == 0 else ("w" if s == 1 else "w^2") for s in sectors]
    return out
