"""Relation verifiers and spectral-parameter constraint solvers.

The parametrized relation checked everywhere is

    R12(t1) R23(t2) R12(t3) = R23(t3) R12(t2) R23(t1),

with the middle angle fixed by the additivity rule
tan(t2) = (tan(t1) + tan(t3)) / (1 + kappa tan(t1) tan(t3)); kappa = 1 for
the 4x4/mixed families and kappa = 1/3 for the qutrit families.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, OutOfRange, SingularDenominator, UnknownCheck
from .linalg import Array
from .matrices import eye, kron, mixed_r, off_diagonal_transpose


@dataclass(frozen=True)
class SpectralTriple:
    """Angles of one relation instance; theta2=None means "apply the rule"."""

    theta1: float
    theta2: float | None
    theta3: float
    phi: float = 0.0

    def resolved_theta2(self, kappa: float = 1.0) -> float:
        if self.theta2 is None:
            return lorentz_theta2(self.theta1, self.theta3, kappa)
        return self.theta2


@dataclass(frozen=True)
class RelationResidual:
    """Outcome of one operator-relation check."""

    lhs_norm: float
    rhs_norm: float
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual < self.tolerance

    @classmethod
    def from_sides(cls, lhs: Array, rhs: Array, tolerance: float) -> "RelationResidual":
        return cls(
            lhs_norm=float(np.linalg.norm(lhs)),
            rhs_norm=float(np.linalg.norm(rhs)),
            residual=float(np.linalg.norm(lhs - rhs)),
            tolerance=tolerance,
        )


def lorentz_theta2(theta1: float, theta3: float, kappa: float = 1.0) -> float:
    """Middle angle from the additivity rule, principal branch (-pi/2, pi/2)."""
    t1, t3 = np.tan(theta1), np.tan(theta3)
    den = 1.0 + kappa * t1 * t3
    if abs(den) < 1e-12:
        raise SingularDenominator(f"additivity pole at theta1={theta1}, theta3={theta3}")
    return float(np.arctan((t1 + t3) / den))


def dfun_phi(theta1: float, theta2: float, theta3: float) -> float:
    """Rotation-axis angle phi in [0, pi] solving the D-function constraint.

    cos(phi) = ((tan t1 + tan t3 - tan t2) / (tan t1 tan t2 tan t3) - 1) / 2.
    """
    t1, t2, t3 = np.tan(theta1), np.tan(theta2), np.tan(theta3)
    den = t1 * t2 * t3
    if abs(den) < 1e-12:
        raise SingularDenominator("tan(theta1) tan(theta2) tan(theta3) vanishes")
    val = 0.5 * (((t1 + t3) - t2) / den - 1.0)
    if abs(val) > 1.0 + 1e-9:
        raise OutOfRange(f"cos(phi) = {val} has no real phi")
    return float(np.arccos(np.clip(val, -1.0, 1.0)))


def check_ybe(
    r12_1: Array,
    r23_2: Array,
    r12_3: Array,
    r23_3: Array,
    r12_2: Array,
    r23_1: Array,
    tolerance: float = 1e-10,
) -> RelationResidual:
    """Residual of the six-slot relation; operators must be pre-embedded."""
    dims = {m.shape for m in (r12_1, r23_2, r12_3, r23_3, r12_2, r23_1)}
    if len(dims) != 1:
        raise DimMismatch(f"mixed operator shapes {sorted(dims)}")
    lhs = r12_1 @ r23_2 @ r12_3
    rhs = r23_3 @ r12_2 @ r23_1
    return RelationResidual.from_sides(lhs, rhs, tolerance)


def check_braid(b: Array, local_dim: int, tolerance: float = 1e-12) -> RelationResidual:
    """Constant braid relation (B x I)(I x B)(B x I) = (I x B)(B x I)(I x B)."""
    if b.shape != (local_dim**2, local_dim**2):
        raise DimMismatch(f"braid matrix {b.shape} vs local_dim {local_dim}")
    b12 = kron(b, eye(local_dim))
    b23 = kron(eye(local_dim), b)
    return RelationResidual.from_sides(b12 @ b23 @ b12, b23 @ b12 @ b23, tolerance)


def ybe_residual_for_family(
    r_of_theta, triple: SpectralTriple, local_dim: int, kappa: float,
    tolerance: float = 1e-10,
) -> RelationResidual:
    """Check the YBE for a same-spin family R(theta) embedded on three factors."""
    t2 = triple.resolved_theta2(kappa)
    r12 = lambda t: kron(r_of_theta(t), eye(local_dim))
    r23 = lambda t: kron(eye(local_dim), r_of_theta(t))
    return check_ybe(
        r12(triple.theta1), r23(t2), r12(triple.theta3),
        r23(triple.theta3), r12(t2), r23(triple.theta1),
        tolerance,
    )


_MIXED_FAMILIES = ("rel1", "rel2", "rel3")


def _mixed_slots(theta: float, phi: float) -> dict[str, Array]:
    r6, r4 = mixed_r(theta, phi)
    r6t = off_diagonal_transpose(r6)
    return {
        "a12": kron(r6, eye(2)),   # spin (1,1/2) on slots 1,2
        "a23": kron(eye(2), r6),
        "h12": kron(r4, eye(3)),   # spin (1/2,1/2)
        "h23": kron(eye(3), r4),
        "o12": kron(r6t, eye(2)),  # spin (1/2,1)
        "o23": kron(eye(2), r6t),
    }


def check_mixed_ybe(
    family: str,
    triple: SpectralTriple,
    phi: float = 0.0,
    tolerance: float = 1e-10,
) -> RelationResidual:
    """One of the three 12-dim mixed-spin relations, middle angle by kappa=1 rule."""
    if family not in _MIXED_FAMILIES:
        raise UnknownCheck(f"family {family!r} not one of {_MIXED_FAMILIES}")
    t1, t3 = triple.theta1, triple.theta3
    t2 = triple.resolved_theta2(kappa=1.0)
    s = {t: _mixed_slots(t, phi) for t in (t1, t2, t3)}
    if family == "rel1":
        lhs = s[t1]["a12"] @ s[t2]["a23"] @ s[t3]["h12"]
        rhs = s[t3]["h23"] @ s[t2]["a12"] @ s[t1]["a23"]
    elif family == "rel2":
        lhs = s[t1]["o12"] @ s[t2]["h23"] @ s[t3]["a12"]
        rhs = s[t3]["a23"] @ s[t2]["h12"] @ s[t1]["o23"]
    else:
        lhs = s[t1]["h12"] @ s[t2]["o23"] @ s[t3]["o12"]
        rhs = s[t3]["o23"] @ s[t2]["o12"] @ s[t1]["h23"]
    return RelationResidual.from_sides(lhs, rhs, tolerance)
