"""Brute-force verification layer on the matrix-plus-translation form.

Everything here is built directly from cosines and sines and from generic
linear algebra (SVD, least squares) — deliberately none of the rational
half-tangent formulas of the main modules — so its failure modes are
independent of theirs. It shares only the plain value containers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import AxisLine, UnitVec3, Vec3, make_unit
from .errors import TraceSingular
from .rotation import Displacement, GibbsVector, RotationMatrix
from .screw import Screw

_TRACE_TOL = 1e-9
_ZERO_ANGLE_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class HomTransform:
    """Affine rigid map r -> R r + d with R proper orthonormal."""

    R: RotationMatrix
    d: Vec3

    def apply(self, r: Vec3) -> Vec3:
        return self.R.apply(r) + self.d


IDENTITY_HOM = HomTransform(
    RotationMatrix(((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))),
    Vec3(0.0, 0.0, 0.0),
)


def _trig_matrix(axis: Vec3, theta: float) -> RotationMatrix:
    """Rotation matrix from cosines and sines: c I + s K + (1-c) n n^T."""
    c, s = math.cos(theta), math.sin(theta)
    x, y, z = axis.x, axis.y, axis.z
    k = 1.0 - c
    return RotationMatrix(
        (
            (c + k * x * x, k * x * y - s * z, k * x * z + s * y),
            (k * y * x + s * z, c + k * y * y, k * y * z - s * x),
            (k * z * x - s * y, k * z * y + s * x, c + k * z * z),
        )
    )


def hom_from_rotation(point: Vec3, axis: UnitVec3, theta: float) -> HomTransform:
    """Affine form of a rotation about the line (point, axis)."""
    R = _trig_matrix(axis, theta)
    return HomTransform(R, point - R.apply(point))


def hom_from_translation(t: Vec3) -> HomTransform:
    """Affine form of a pure translation."""
    return HomTransform(IDENTITY_HOM.R, t)


def hom_from_displacement(D: Displacement) -> HomTransform:
    """Affine form of a displacement; the rotation matrix is built from the
    recovered angle trigonometrically, not from the rational formula."""
    qn = D.q.norm()
    if qn == 0.0:
        return HomTransform(IDENTITY_HOM.R, D.delta)
    theta = 2.0 * math.atan(qn / 2.0)
    axis = make_unit(D.q.as_vec3())
    return HomTransform(_trig_matrix(axis, theta), D.delta)


def displacement_from_hom(H: HomTransform) -> Displacement:
    """Recover (rotation vector, origin displacement) from the affine form.

    The angle comes from the trace and the skew part; the rotation vector
    is 2 tan(theta/2) times the unit axis. Raises TraceSingular when
    1 + trace <= 1e-9 (half turn: no rotation vector exists).
    """
    tr = H.R.trace()
    if 1.0 + tr <= _TRACE_TOL:
        raise TraceSingular(f"1 + trace = {1.0 + tr}; no rotation vector exists")
    r = H.R.rows
    skew = Vec3(
        (r[2][1] - r[1][2]) / 2.0,
        (r[0][2] - r[2][0]) / 2.0,
        (r[1][0] - r[0][1]) / 2.0,
    )
    sin_t = skew.norm()
    theta = math.atan2(sin_t, (tr - 1.0) / 2.0)
    if theta <= _ZERO_ANGLE_TOL:
        return Displacement(GibbsVector(0.0, 0.0, 0.0), H.d)
    axis = make_unit(skew)
    t = 2.0 * math.tan(theta / 2.0)
    return Displacement(
        GibbsVector(axis.x * t, axis.y * t, axis.z * t), H.d
    )


def hom_compose(H1: HomTransform, H2: HomTransform) -> HomTransform:
    """Affine form of "do H1, then H2": matrix product and translation chain."""
    return HomTransform(H2.R.matmul(H1.R), H2.R.apply(H1.d) + H2.d)


def screw_from_hom_bruteforce(H: HomTransform) -> Screw:
    """Screw parameters of an affine rigid map, by generic linear algebra.

    The axis direction is the eigenvector of R for eigenvalue 1 (smallest
    singular direction of R - I); the angle comes from trace and skew part;
    the axis point is the minimum-norm solution of
    (R - I) p = -(d - (d.axis) axis), which is the foot of the
    perpendicular from the origin; the slide is d.axis. Identity and pure
    translations are returned as their own variants.
    """
    R = np.array(H.R.rows)
    d = np.array(H.d.as_tuple())
    tr = float(np.trace(R))
    skew = np.array(
        [R[2, 1] - R[1, 2], R[0, 2] - R[2, 0], R[1, 0] - R[0, 1]]
    ) / 2.0
    theta = math.atan2(float(np.linalg.norm(skew)), (tr - 1.0) / 2.0)
    if theta <= _ZERO_ANGLE_TOL:
        if float(np.linalg.norm(d)) == 0.0:
            return Screw.identity()
        return Screw.pure_translation(H.d)

    u, sv, vt = np.linalg.svd(R - np.eye(3))
    axis = vt[-1]
    # The skew part fixes the sign down to |sin theta| ~ 1e-12, still three
    # orders above matrix noise; beyond that the half-turn tie-break applies,
    # matching the Screw canonical form.
    if theta < math.pi - 1e-12:
        if float(axis @ skew) < 0.0:
            axis = -axis
    else:
        for c in axis:
            if abs(c) > 1e-12:
                if c < 0.0:
                    axis = -axis
                break
    slide = float(d @ axis)
    perp = d - slide * axis
    # Minimum-norm solution of (R - I) p = -perp from the two genuine
    # singular directions only; the third is pure rounding noise and at
    # small angles it sits above lstsq's default cutoff, so cutting by
    # index (rank is exactly 2 for any non-identity rotation) is the
    # reliable way to keep the axis component out of the solution.
    point = sum(
        (float(u[:, i] @ -perp) / sv[i]) * vt[i] for i in range(2)
    )
    direction = make_unit(Vec3(float(axis[0]), float(axis[1]), float(axis[2])))
    return Screw.general(
        Vec3(float(point[0]), float(point[1]), float(point[2])),
        direction,
        theta,
        slide,
    )
