import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from ybx import matrices as mx
from ybx import ybe
from ybx.errors import DimMismatch, OutOfRange, SingularDenominator, UnknownCheck

I2, I3 = mx.eye(2), mx.eye(3)

angles = st.floats(-1.2, 1.2)


def away_from_pole(t1, t3, kappa):
    return abs(1 + kappa * np.tan(t1) * np.tan(t3)) > 1e-3


class TestLorentzTheta2:
    def test_fixed_point_at_pi_4(self):
        assert ybe.lorentz_theta2(np.pi / 4, np.pi / 4) == pytest.approx(np.pi / 4)

    def test_pi_6_value(self):
        # tan(pi/6) = 1/sqrt3; (2/sqrt3)/(1 + 1/3) = sqrt3/2
        assert ybe.lorentz_theta2(np.pi / 6, np.pi / 6) == pytest.approx(np.arctan(np.sqrt(3) / 2))
        assert ybe.lorentz_theta2(np.pi / 6, np.pi / 6) == pytest.approx(0.713724, abs=1e-6)

    @settings(max_examples=60, deadline=None)
    @given(angles)
    def test_additive_identity(self, theta):
        assert ybe.lorentz_theta2(theta, 0.0) == pytest.approx(theta, abs=1e-14)

    @settings(max_examples=60, deadline=None)
    @given(angles, angles, st.sampled_from([1.0, 1.0 / 3.0]))
    def test_symmetry(self, t1, t3, kappa):
        if not away_from_pole(t1, t3, kappa):
            return
        assert ybe.lorentz_theta2(t1, t3, kappa) == ybe.lorentz_theta2(t3, t1, kappa)

    @settings(max_examples=60, deadline=None)
    @given(angles, st.sampled_from([1.0, 1.0 / 3.0]))
    def test_opposite_angles_cancel(self, theta, kappa):
        if not away_from_pole(theta, -theta, kappa):
            return
        assert abs(ybe.lorentz_theta2(theta, -theta, kappa)) < 1e-14

    def test_pole(self):
        with pytest.raises(SingularDenominator):
            ybe.lorentz_theta2(np.pi / 4, -np.pi / 4 + 1e-18)


class TestDfunPhi:
    def test_symmetric_pi_4(self):
        assert ybe.dfun_phi(np.pi / 4, np.pi / 4, np.pi / 4) == pytest.approx(np.pi / 2)

    def test_symmetric_near_pi_2(self):
        # float tan(pi/2) is finite but huge, so the generic formula reaches
        # the cos(2 theta)/(1 - cos(2 theta)) = -1/2 limit directly
        val = ybe.dfun_phi(np.pi / 2, np.pi / 2, np.pi / 2)
        assert val == pytest.approx(2 * np.pi / 3, abs=1e-12)

    @settings(max_examples=50, deadline=None)
    @given(angles, angles)
    def test_lorentz_rule_gives_pi_2(self, t1, t3):
        if not away_from_pole(t1, t3, 1.0):
            return
        t2 = ybe.lorentz_theta2(t1, t3)
        if abs(np.tan(t1) * np.tan(t2) * np.tan(t3)) < 1e-2:
            return
        assert ybe.dfun_phi(t1, t2, t3) == pytest.approx(np.pi / 2, abs=1e-9)

    def test_zero_tan_product(self):
        with pytest.raises(SingularDenominator):
            ybe.dfun_phi(0.0, 0.4, 0.6)

    def test_no_real_solution(self):
        # tiny symmetric angles push cos(phi) far above 1
        with pytest.raises(OutOfRange):
            ybe.dfun_phi(0.1, 0.1, 0.1)


class TestCheckYbe:
    def test_identity_slots(self):
        res = ybe.check_ybe(*(I2,) * 6)
        assert res.residual == 0.0 and res.passed

    def test_type2_family_with_rule(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            t1, t3 = rng.uniform(-1.2, 1.2, 2)
            if not away_from_pole(t1, t3, 1.0):
                continue
            t2 = ybe.lorentz_theta2(t1, t3)
            phi = rng.uniform(0, 2 * np.pi)
            r12 = lambda t: mx.kron(mx.type2_r(t, phi), I2)
            r23 = lambda t: mx.kron(I2, mx.type2_r(t, phi))
            res = ybe.check_ybe(r12(t1), r23(t2), r12(t3), r23(t3), r12(t2), r23(t1))
            assert res.residual < 1e-10

    def test_galilean_control_fails_loudly(self):
        t1 = t3 = np.pi / 6
        t2 = t1 + t3
        r12 = lambda t: mx.kron(mx.type2_r(t, 0.0), I2)
        r23 = lambda t: mx.kron(I2, mx.type2_r(t, 0.0))
        res = ybe.check_ybe(r12(t1), r23(t2), r12(t3), r23(t3), r12(t2), r23(t1))
        assert res.residual > 1e-3

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            ybe.check_ybe(I2, I3, I2, I2, I2, I2)


class TestCheckBraid:
    def test_bell(self):
        assert ybe.check_braid(mx.bell_braid(), 2).residual < 1e-12

    def test_braid9(self):
        assert ybe.check_braid(mx.braid9(), 3).residual < 1e-12

    def test_swap(self):
        assert ybe.check_braid(mx.swap_matrix(2), 2).residual < 1e-14

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            ybe.check_braid(mx.bell_braid(), 3)


class TestMixedYbe:
    def test_braid_point(self):
        triple = ybe.SpectralTriple(np.pi / 4, np.pi / 4, np.pi / 4)
        assert ybe.check_mixed_ybe("rel1", triple, 0.0).residual < 1e-12

    def test_lorentz_rule_random(self):
        rng = np.random.default_rng(12)
        for rel in ("rel1", "rel2", "rel3"):
            t1, t3 = rng.uniform(-1.0, 1.0, 2)
            triple = ybe.SpectralTriple(t1, None, t3)
            assert ybe.check_mixed_ybe(rel, triple, rng.uniform(0, 2 * np.pi)).residual < 1e-10

    def test_galilean_control(self):
        triple = ybe.SpectralTriple(np.pi / 5, 2 * np.pi / 5, np.pi / 5)
        assert ybe.check_mixed_ybe("rel3", triple, 0.0).residual > 1e-3

    def test_unknown_family(self):
        with pytest.raises(UnknownCheck):
            ybe.check_mixed_ybe("rel4", ybe.SpectralTriple(0.1, None, 0.2))


class TestSpectralTriple:
    def test_resolves_middle_angle(self):
        triple = ybe.SpectralTriple(0.3, None, 0.4)
        assert triple.resolved_theta2() == pytest.approx(ybe.lorentz_theta2(0.3, 0.4))

    def test_explicit_middle_angle_wins(self):
        triple = ybe.SpectralTriple(0.3, 0.9, 0.4)
        assert triple.resolved_theta2() == 0.9


class TestDFunctionUniversality:
    def test_same_angles_pass_both_representations(self):
        rng = np.random.default_rng(13)
        done = 0
        while done < 25:
            t1, t2, t3 = rng.uniform(-1.2, 1.2, 3)
            prod = np.tan(t1) * np.tan(t2) * np.tan(t3)
            if abs(prod) < 1e-2:
                continue
            try:
                phi = ybe.dfun_phi(t1, t2, t3)
            except OutOfRange:
                continue
            done += 1
            for j in (0.5, 1.0):
                d = lambda t, p: mx.wigner_d_general(j, t, p)
                lhs = d(t1, 0) @ d(t2, phi) @ d(t3, 0)
                rhs = d(t3, phi) @ d(t2, 0) @ d(t1, phi)
                assert np.linalg.norm(lhs - rhs) < 1e-10

    def test_braid_limit_constraint(self):
        # equal angles with cos(phi) = cos(2t)/(1 - cos(2t))
        for theta in np.linspace(np.pi / 6 + 0.02, 1.5, 6):
            cphi = np.cos(2 * theta) / (1 - np.cos(2 * theta))
            phi = np.arccos(cphi)
            for j in (0.5, 1.0):
                d = lambda t, p: mx.wigner_d_general(j, t, p)
                lhs = d(theta, 0) @ d(theta, phi) @ d(theta, 0)
                rhs = d(theta, phi) @ d(theta, 0) @ d(theta, phi)
                assert np.linalg.norm(lhs - rhs) < 1e-10

    def test_braid_limit_matches_ybe_instance(self):
        # a braid check passing at theta* implies the equal-angle relation
        theta = np.pi / 4
        b12 = mx.kron(mx.type2_r(theta, 0.0), I2)
        b23 = mx.kron(I2, mx.type2_r(theta, 0.0))
        res = ybe.check_ybe(b12, b23, b12, b23, b12, b23, tolerance=1e-12)
        assert res.passed
