import numpy as np
import pytest
from numpy.testing import assert_allclose

from ybx import linalg as la
from ybx import matrices as mx
from ybx.errors import UnsupportedSpin

I2, I4, I9 = mx.eye(2), mx.eye(4), mx.eye(9)
W = mx.OMEGA


def is_unitary(u, tol=1e-12):
    return np.linalg.norm(u @ la.dagger(u) - np.eye(u.shape[0])) < tol


def braid_residual(b, local_dim):
    b12 = mx.kron(b, mx.eye(local_dim))
    b23 = mx.kron(mx.eye(local_dim), b)
    return np.linalg.norm(b12 @ b23 @ b12 - b23 @ b12 @ b23)


class TestBellBraid:
    def test_first_row(self):
        assert_allclose(mx.bell_braid()[0], np.array([1, 0, 0, 1]) / np.sqrt(2))

    def test_unitary(self):
        assert is_unitary(mx.bell_braid())

    def test_braid_relation(self):
        assert braid_residual(mx.bell_braid(), 2) < 1e-12

    def test_table_convention_sends_00_to_bell_plus(self):
        # the published ket table lists row sums, i.e. the transpose action
        out = mx.bell_braid().T @ la.basis_state(0, 4)
        assert_allclose(out, np.array([1, 0, 0, 1]) / np.sqrt(2))

    def test_column_action_on_00(self):
        out = mx.bell_braid() @ la.basis_state(0, 4)
        assert_allclose(out, np.array([1, 0, 0, -1]) / np.sqrt(2))


class TestType2R:
    def test_zero_angle(self):
        assert_allclose(mx.type2_r(0.0, 1.3), I4)

    def test_unitary_everywhere(self):
        for theta in np.linspace(-3, 3, 7):
            for phi in np.linspace(0, 2 * np.pi, 5):
                assert is_unitary(mx.type2_r(theta, phi))

    def test_pi_4_column_is_bell_minus(self):
        out = mx.type2_r(np.pi / 4, 0.0) @ la.basis_state(0, 4)
        assert_allclose(out, np.array([1, 0, 0, -1]) / np.sqrt(2), atol=1e-15)

    def test_exponential_form(self):
        # equals exp(-i theta sy x sx) at phi = pi (not phi = 0: the corner
        # signs of the displayed matrix sit on the opposite phase branch)
        theta = 0.41
        gen = -1j * theta * mx.kron(mx.SIGMA_Y, mx.SIGMA_X)
        assert_allclose(mx.type2_r(theta, np.pi), la.expm_antihermitian(gen), atol=1e-13)
        assert np.linalg.norm(mx.type2_r(theta, 0.0) - la.expm_antihermitian(gen)) > 0.1

    def test_generator_form(self):
        theta, phi = 0.57, 2.2
        m = mx.type2_generator(phi)
        assert_allclose(mx.type2_r(theta, phi), np.cos(theta) * (I4 + np.tan(theta) * m), atol=1e-13)

    def test_generator_squares_to_minus_identity(self):
        for phi in (0.0, 0.9, np.pi):
            m = mx.type2_generator(phi)
            assert np.linalg.norm(m @ m + I4) < 1e-12
            assert np.linalg.norm(m + la.dagger(m)) < 1e-12

    def test_braid_point_vs_bell_braid(self):
        # both are braid solutions; they differ entrywise only in the middle
        # block sign pattern (recorded, not forced equal)
        r = mx.type2_r(np.pi / 4, 0.0)
        b = mx.bell_braid()
        diff = r - b
        assert np.linalg.norm(diff[np.ix_([0, 3], [0, 3])]) < 1e-15
        assert np.linalg.norm(diff) == pytest.approx(2.0, abs=1e-12)
        assert braid_residual(r, 2) < 1e-12


class TestBraid9:
    def test_corner_entry(self):
        # sign pinned by the generator algebra; the bare displayed table
        # carries the opposite overall sign
        assert mx.braid9()[0, 0] == pytest.approx(-1j * W / np.sqrt(3))

    def test_unitary(self):
        assert is_unitary(mx.braid9())

    def test_braid_relation(self):
        assert braid_residual(mx.braid9(), 3) < 1e-12

    def test_eigenvalues(self):
        evals = np.linalg.eigvals(mx.braid9())
        dist_to_one = np.min(np.abs(np.subtract.outer(evals, [1.0, W])), axis=1)
        assert np.max(dist_to_one) < 1e-12


class TestM9AndR9:
    def test_m_squares_to_minus_identity(self):
        m = mx.m9()
        assert np.linalg.norm(m @ m + I9) < 1e-12

    def test_m_antihermitian(self):
        m = mx.m9()
        assert np.linalg.norm(m + la.dagger(m)) < 1e-12

    def test_r9_zero(self):
        assert_allclose(mx.r9(0.0), I9)

    def test_r9_equals_matrix_exponential(self):
        theta = 0.83
        assert_allclose(mx.r9(theta), la.expm_antihermitian(theta * mx.m9()), atol=1e-13)

    def test_r9_braid_point(self):
        assert np.linalg.norm(mx.r9(np.pi / 3) - (-W) * mx.braid9()) < 1e-12

    def test_r9_unitary(self):
        for theta in np.linspace(-1.4, 1.4, 9):
            assert is_unitary(mx.r9(theta))

    def test_braid_point_table_row(self):
        # transpose-convention golden row: basis |00> maps to the three-term
        # superposition with weights (w, 1, w) on |00>, |12>, |21>
        out = mx.r9(np.pi / 3).T @ la.basis_state(0, 9)
        expected = np.zeros(9, dtype=complex)
        expected[0], expected[5], expected[7] = W, 1.0, W
        expected *= -W * (-1j / np.sqrt(3))
        assert_allclose(out, expected, atol=1e-14)


class TestWignerD:
    def test_identity_at_zero(self):
        assert_allclose(mx.wigner_d_half(0.0, 1.7), I2)

    def test_pi4_pi2_is_anyon_b(self):
        _, b = mx.ising_anyon_pair()
        assert_allclose(mx.wigner_d_half(np.pi / 4, np.pi / 2), b, atol=1e-15)

    def test_column_l1_norm_is_phi_independent(self):
        theta = 1.1
        for phi in np.linspace(0, 2 * np.pi, 7):
            col = mx.wigner_d_half(theta, phi)[:, 0]
            assert np.sum(np.abs(col)) == pytest.approx(abs(np.cos(theta)) + abs(np.sin(theta)))

    def test_determinant_one(self):
        d = mx.wigner_d_half(0.9, 0.3)
        assert np.linalg.det(d) == pytest.approx(1.0)

    @pytest.mark.parametrize("j", [0.5, 1.0, 1.5, 2.0])
    def test_general_unitary(self, j):
        assert is_unitary(mx.wigner_d_general(j, 0.7, 1.9))

    def test_general_reduces_to_half(self):
        for theta, phi in [(0.3, 0.0), (1.2, 2.5), (-0.8, 4.0)]:
            assert_allclose(
                mx.wigner_d_general(0.5, theta, phi), mx.wigner_d_half(theta, phi), atol=1e-12
            )

    def test_unsupported_spin(self):
        with pytest.raises(UnsupportedSpin):
            mx.wigner_d_general(2.5, 0.1, 0.1)


class TestVConjugator:
    def test_unitary(self):
        assert is_unitary(mx.v_conjugator())

    def test_conjugates_to_anyon_a(self):
        v = mx.v_conjugator()
        a, _ = mx.ising_anyon_pair()
        assert_allclose(la.dagger(v) @ mx.wigner_d_half(np.pi / 4, 0.0) @ v, a, atol=1e-14)

    def test_conjugates_to_anyon_b(self):
        v = mx.v_conjugator()
        _, b = mx.ising_anyon_pair()
        assert_allclose(la.dagger(v) @ mx.wigner_d_half(np.pi / 4, np.pi / 2) @ v, b, atol=1e-14)

    def test_slot12_reduction_is_diagonal_phase(self):
        v = mx.v_conjugator()
        theta = 0.67
        red = la.dagger(v) @ mx.wigner_d_half(theta, 0.0) @ v
        assert_allclose(red, np.diag([np.exp(-1j * theta), np.exp(1j * theta)]), atol=1e-14)


class TestClockShift:
    def test_cubes(self):
        z, x = mx.clock_shift()
        assert_allclose(np.linalg.matrix_power(z, 3), mx.eye(3), atol=1e-14)
        assert_allclose(np.linalg.matrix_power(x, 3), mx.eye(3), atol=1e-14)

    def test_shift_direction(self):
        _, x = mx.clock_shift()
        assert_allclose(x @ la.basis_state(0, 3), la.basis_state(2, 3))

    def test_commutation_factor(self):
        # XZ = w ZX (recorded orientation; the parafermion strings rely on it)
        z, x = mx.clock_shift()
        assert_allclose(x @ z, W * (z @ x), atol=1e-14)


class TestMixedFamilies:
    def test_b4_equals_bell_braid_at_zero_phase(self):
        _, b4 = mx.mixed_braids(0.0)
        assert la.frobenius_distance(b4, mx.bell_braid()) == 0.0

    def test_b6_sqrt2_row(self):
        b6, _ = mx.mixed_braids(0.4)
        expected = np.zeros(6)
        expected[1] = 1.0
        assert_allclose(b6[2], expected, atol=1e-15)

    def test_unitarity(self):
        for phi in (0.0, 1.0, np.pi):
            b6, b4 = mx.mixed_braids(phi)
            assert is_unitary(b6) and is_unitary(b4)
            r6, r4 = mx.mixed_r(0.9, phi)
            assert is_unitary(r6) and is_unitary(r4)

    def test_r_at_zero_is_permutation_like(self):
        r6, _ = mx.mixed_r(0.0, 0.7)
        assert is_unitary(r6)
        assert_allclose(np.abs(r6), np.abs(r6) ** 2, atol=1e-14)  # entries are 0/1

    def test_spectator_qutrit_zero_row(self):
        for theta in np.linspace(0, np.pi, 9):
            r6, _ = mx.mixed_r(theta, 0.3)
            assert_allclose(r6[:, 1], np.eye(6)[2], atol=1e-15)
            assert_allclose(r6[:, 4], np.eye(6)[3], atol=1e-15)

    def test_braid_points(self):
        r6, r4 = mx.mixed_r(np.pi / 4, 0.8)
        b6, b4 = mx.mixed_braids(0.8)
        assert la.frobenius_distance(r6, b6) < 1e-15
        assert la.frobenius_distance(r4, b4) < 1e-15

    def test_r4_vs_type2_entrywise_relation(self):
        # the two 4x4 families are distinct entrywise but related by
        # (theta, phi) -> (-theta, pi - phi); both satisfy the relation checks
        theta, phi = 0.52, 1.1
        _, r4 = mx.mixed_r(theta, phi)
        assert np.linalg.norm(r4 - mx.type2_r(theta, phi)) > 0.1
        assert_allclose(r4, mx.type2_r(-theta, np.pi - phi), atol=1e-14)


class TestOffDiagonalTranspose:
    def test_identity_fixed(self):
        assert_allclose(mx.off_diagonal_transpose(mx.eye(5)), mx.eye(5))

    def test_involution(self):
        rng = np.random.default_rng(8)
        a = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        assert_allclose(mx.off_diagonal_transpose(mx.off_diagonal_transpose(a)), a)

    def test_entry_map(self):
        a = np.arange(16.0).reshape(4, 4)
        ot = mx.off_diagonal_transpose(a)
        for i in range(4):
            for j in range(4):
                assert ot[i, j] == a[3 - j, 3 - i]


def test_swap_matrix_is_braid_solution():
    p = mx.swap_matrix(2)
    assert braid_residual(p, 2) < 1e-15
