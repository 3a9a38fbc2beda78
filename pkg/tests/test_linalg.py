import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from ybx import linalg as la
from ybx.errors import BadFactorIndex, DimMismatch, NonAntiHermitian, NonHermitian
from ybx.matrices import SIGMA_X, SIGMA_Y, SIGMA_Z, clock_shift, eye, type2_r


def random_complex(rng, *shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


class TestKron:
    def test_identity_case(self):
        assert_allclose(la.kron(eye(2), eye(2)), eye(4))

    def test_sigma_y_sigma_x_exponential_reaches_entangling_r(self):
        gen = -1j * (np.pi / 4) * la.kron(SIGMA_Y, SIGMA_X)
        # the matrix family carries the phase convention phi=pi for this generator
        assert_allclose(la.expm_antihermitian(gen), type2_r(np.pi / 4, np.pi), atol=1e-14)

    def test_clock_shift_entry(self):
        z, x = clock_shift()
        assert la.kron(z, x)[1, 2] == pytest.approx(1.0)

    def test_mixed_product_rule(self):
        rng = np.random.default_rng(0)
        a, b, c, d = (random_complex(rng, 3, 3) for _ in range(4))
        assert_allclose(la.kron(a, b) @ la.kron(c, d), la.kron(a @ c, b @ d), atol=1e-12)

    def test_associative(self):
        rng = np.random.default_rng(1)
        a, b, c = (random_complex(rng, 2, 2) for _ in range(3))
        assert la.frobenius_distance(la.kron(la.kron(a, b), c), la.kron(a, b, c)) == 0.0


class TestExpmAntihermitian:
    def test_zero_generator(self):
        assert_allclose(la.expm_antihermitian(np.zeros((4, 4))), eye(4))

    def test_unitary_output(self):
        rng = np.random.default_rng(2)
        a = random_complex(rng, 6, 6)
        a = a - la.dagger(a)
        u = la.expm_antihermitian(a)
        assert np.linalg.norm(u @ la.dagger(u) - eye(6)) < 1e-12

    def test_inverse_property(self):
        rng = np.random.default_rng(3)
        a = random_complex(rng, 5, 5)
        a = a - la.dagger(a)
        assert_allclose(la.expm_antihermitian(a) @ la.expm_antihermitian(-a), eye(5), atol=1e-12)

    def test_rejects_hermitian_generator(self):
        with pytest.raises(NonAntiHermitian):
            la.expm_antihermitian(SIGMA_Z)

    def test_matches_power_series(self):
        rng = np.random.default_rng(4)
        a = random_complex(rng, 4, 4)
        a = (a - la.dagger(a)) * 0.1
        series = np.zeros((4, 4), dtype=complex)
        term = eye(4)
        for k in range(1, 40):
            series += term
            term = term @ a / k
        assert_allclose(la.expm_antihermitian(a), series, atol=1e-13)


class TestEigHermitian:
    def test_sigma_z(self):
        evals, _ = la.eig_hermitian(SIGMA_Z)
        assert_allclose(evals, [-1.0, 1.0])

    def test_sigma_x_eigenvectors(self):
        evals, vecs = la.eig_hermitian(SIGMA_X)
        assert_allclose(evals, [-1.0, 1.0])
        for k in range(2):
            assert np.linalg.norm(SIGMA_X @ vecs[:, k] - evals[k] * vecs[:, k]) < 1e-12

    def test_rejects_nonhermitian(self):
        with pytest.raises(NonHermitian):
            la.eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))

    @pytest.mark.parametrize("dim", [2, 17, 128, 513, 1024])
    def test_reconstruction(self, dim):
        rng = np.random.default_rng(dim)
        h = random_complex(rng, dim, dim)
        h = (h + la.dagger(h)) / 2
        evals, vecs = la.eig_hermitian(h)
        scale = max(1.0, np.linalg.norm(h))
        assert np.linalg.norm(h - (vecs * evals) @ la.dagger(vecs)) < 1e-9 * scale
        assert np.linalg.norm(la.dagger(vecs) @ vecs - eye(dim)) < 1e-10 * dim


class TestPartialTrace:
    def test_product_state(self):
        psi = la.product_basis_state([0, 0], (2, 2))
        rho = np.outer(psi, psi.conj())
        assert_allclose(la.partial_trace(rho, [0], (2, 2)), [[1, 0], [0, 0]], atol=1e-15)

    def test_bell_pair_is_maximally_mixed(self):
        bell = (la.product_basis_state([0, 0], (2, 2)) + la.product_basis_state([1, 1], (2, 2))) / np.sqrt(2)
        rho = np.outer(bell, bell.conj())
        assert_allclose(la.partial_trace(rho, [0], (2, 2)), eye(2) / 2, atol=1e-15)

    def test_entangling_column_gives_cos_sin_weights(self):
        theta = 0.73
        psi = type2_r(theta, 0.0)[:, 0]
        rho = la.partial_trace_state(psi, [1], (2, 2))
        assert_allclose(rho, np.diag([np.cos(theta) ** 2, np.sin(theta) ** 2]), atol=1e-14)

    def test_keep_all_factors(self):
        rng = np.random.default_rng(5)
        rho = random_complex(rng, 6, 6)
        rho = rho @ la.dagger(rho)
        assert_allclose(la.partial_trace(rho, [0, 1], (2, 3)), rho, atol=1e-13)

    def test_trace_and_hermiticity_preserved(self):
        rng = np.random.default_rng(6)
        rho = random_complex(rng, 12, 12)
        rho = rho @ la.dagger(rho)
        reduced = la.partial_trace(rho, [1], (2, 3, 2))
        assert np.trace(reduced) == pytest.approx(np.trace(rho).real)
        assert np.linalg.norm(reduced - la.dagger(reduced)) < 1e-12

    def test_state_and_operator_paths_agree(self):
        rng = np.random.default_rng(7)
        psi = random_complex(rng, 8)
        psi /= np.linalg.norm(psi)
        rho = np.outer(psi, psi.conj())
        assert_allclose(
            la.partial_trace(rho, [0, 2], (2, 2, 2)),
            la.partial_trace_state(psi, [0, 2], (2, 2, 2)),
            atol=1e-13,
        )

    def test_bad_factor_index(self):
        rho = eye(4) / 4
        with pytest.raises(BadFactorIndex):
            la.partial_trace(rho, [2], (2, 2))
        with pytest.raises(BadFactorIndex):
            la.partial_trace(rho, [0], (2, 3))


class TestFrobenius:
    def test_equal_operands(self):
        assert la.frobenius_distance(eye(3), eye(3)) == 0.0

    def test_pauli_distance(self):
        assert la.frobenius_distance(SIGMA_X, SIGMA_Y) == pytest.approx(2.0)

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            la.frobenius_distance(eye(2), eye(3))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3))
def test_product_basis_state_round_trip(i, j):
    psi = la.product_basis_state([i, j], (4, 4))
    assert psi[i * 4 + j] == 1.0
    assert np.linalg.norm(psi) == 1.0


@pytest.mark.skipif(
    "YBX_SLOW_TESTS" not in __import__("os").environ,
    reason="dim-4096 eigendecomposition takes minutes; set YBX_SLOW_TESTS=1",
)
def test_reconstruction_at_cap_dimension():
    rng = np.random.default_rng(4096)
    h = random_complex(rng, 4096, 4096)
    h = (h + la.dagger(h)) / 2
    evals, vecs = la.eig_hermitian(h)
    assert np.linalg.norm(h - (vecs * evals) @ la.dagger(vecs)) < 1e-9 * np.linalg.norm(h)
