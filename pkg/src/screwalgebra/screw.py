"""Central-axis (screw) form of a displacement and the classical constructions.

Every rigid displacement is a rotation about one line plus a slide along it.
The Screw type stores that canonical form; the operations here convert to
and from it, split a screw into two plain rotations about skew lines (with
the invariant that ties such a pair to its screw), and recover the axis
geometrically from tracked points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .core import (
    HALF_TURN_TIE_TOL,
    ZERO_DIRECTION_TOL,
    AxisLine,
    Rotation,
    UnitVec3,
    Vec3,
    angle_between,
    canonicalize_rotation,
    distance_between_lines,
    make_unit,
)
from .compose import (
    compose_displacements,
    fold_angle_axis,
    fold_half_angle,
    translation_as_couple,
)
from .errors import (
    DegenerateInput,
    DegenerateResultant,
    GibbsOverflow,
    ParallelPlanes,
)
from .pointfit import Correspondence
from .rotation import (
    GIBBS_ZERO,
    Displacement,
    displacement_of_rotation,
    gibbs_from_axis_angle,
    rodrigues_rotate,
)

ZERO_SLIDE_TOL = 1e-12
PLANE_COLLINEAR_TOL = 1e-9
FIT_CONSISTENCY_TOL = 1e-6


class ScrewKind(Enum):
    IDENTITY = "identity"
    TRANSLATION = "translation"
    GENERAL = "general"


@dataclass(frozen=True, slots=True)
class Screw:
    """Canonical central-axis form of a displacement.

    Three variants: the identity, a pure translation, and the general screw
    with an axis line, an angle theta in (0, pi], and a signed slide along
    the axis direction. In the general form the stored axis point is the
    foot of the perpendicular from the origin, making equal screws compare
    equal; construct through the classmethods, which canonicalize.
    """

    kind: ScrewKind
    translation: Vec3 | None = None
    axis: AxisLine | None = None
    theta: float | None = None
    slide: float | None = None

    @staticmethod
    def identity() -> "Screw":
        return Screw(ScrewKind.IDENTITY)

    @staticmethod
    def pure_translation(t: Vec3) -> "Screw":
        return Screw(ScrewKind.TRANSLATION, translation=t)

    @staticmethod
    def general(
        point: Vec3, direction: UnitVec3, theta: float, slide: float
    ) -> "Screw":
        if theta < 0.0:
            direction, theta, slide = -direction, -theta, -slide
        if theta > math.pi:
            if theta > math.pi + 1e-9:
                raise ValueError(f"screw angle {theta} outside (0, pi]")
            theta = math.pi
        if theta == 0.0:
            raise ValueError("a zero-angle screw is the identity or a translation")
        if abs(theta - math.pi) <= HALF_TURN_TIE_TOL:
            for c in (direction.x, direction.y, direction.z):
                if abs(c) > ZERO_DIRECTION_TOL:
                    if c < 0.0:
                        direction, slide = -direction, -slide
                    break
        foot = point - direction * point.dot(direction)
        return Screw(
            ScrewKind.GENERAL,
            axis=AxisLine(foot, direction),
            theta=theta,
            slide=slide,
        )


class AbsoluteTranslation(NamedTuple):
    """Slide of a displacement along its axis; |delta| when no axis exists."""

    value: float
    translation_only: bool


class ConjugatePair(NamedTuple):
    """Two rotations composing to a screw; degenerate marks a zero-slide input
    (the second rotation is then the zero-angle identity)."""

    line_a: Rotation
    line_b: Rotation
    degenerate: bool


class InvariantSides(NamedTuple):
    """Both sides of the skew-pair identity
    distance * sin nu * sin(thetaA/2) * sin(thetaB/2) = (1/2) |slide| * sin(thetaC/2)."""

    lhs: float
    rhs: float


def screw_from_displacement(D: Displacement) -> Screw:
    """Extract the central axis, angle, and slide of a displacement.

    The axis passes through r0 = delta/2 - delta x q / q^2 (the slide's
    midpoint construction); the slide is the projection of delta on the
    axis direction. A zero rotation vector gives the identity or a pure
    translation.
    """
    if D.q.is_zero():
        if D.delta.norm() == 0.0:
            return Screw.identity()
        return Screw.pure_translation(D.delta)
    qv = D.q.as_vec3()
    q2 = qv.dot(qv)
    direction = make_unit(qv)
    theta = 2.0 * math.atan(math.sqrt(q2) / 2.0)
    slide = D.delta.dot(direction)
    r0 = D.delta * 0.5 - D.delta.cross(qv) / q2
    return Screw.general(r0, direction, theta, slide)


def displacement_from_screw(S: Screw) -> Displacement:
    """Rebuild the displacement: rotate about the axis, then slide along it.

    Raises GibbsOverflow for a half-turn screw, which has no rotation
    vector; evaluate those through the matrix form in the oracle module.
    """
    if S.kind is ScrewKind.IDENTITY:
        return Displacement(GIBBS_ZERO, Vec3(0.0, 0.0, 0.0))
    if S.kind is ScrewKind.TRANSLATION:
        return Displacement(GIBBS_ZERO, S.translation)
    if S.theta >= math.pi - 1e-12:
        raise GibbsOverflow(
            "half-turn screw has no rotation vector; use the matrix form"
        )
    q = gibbs_from_axis_angle(S.axis.dir, S.theta)
    turned = rodrigues_rotate(S.axis.dir, S.theta, S.axis.point)
    delta = S.axis.point - turned + S.axis.dir * S.slide
    return Displacement(q, delta)


def absolute_translation(D: Displacement) -> AbsoluteTranslation:
    """Projection of every point's displacement on the axis direction.

    The projection is the same for all points: the screw's slide. For a
    pure translation there is no axis and the full length |delta| is
    returned with translation_only set.
    """
    if D.q.is_zero():
        return AbsoluteTranslation(D.delta.norm(), True)
    direction = make_unit(D.q.as_vec3())
    return AbsoluteTranslation(D.delta.dot(direction), False)


def conjugate_pair_decompose(S: Screw, thetaB: float, psi: float) -> ConjugatePair:
    """Split a general screw into two plain rotations about skew lines.

    The slide is replaced by a couple of angle thetaB whose first axis runs
    through the screw's axis point (azimuth psi selects one member of the
    infinite family); that axis's rotation folds with the screw's rotation
    into line_a, and the couple's second axis survives as line_b. Composing
    line_a then line_b reproduces the screw.

    A zero-slide screw is already a single rotation: the result is then
    (that rotation, a zero-angle rotation, degenerate=True).
    """
    if S.kind is not ScrewKind.GENERAL:
        raise DegenerateInput("only a general screw splits into a rotation pair")
    c_hat = S.axis.dir
    anchor = S.axis.point
    if abs(S.slide) <= ZERO_SLIDE_TOL:
        return ConjugatePair(
            Rotation(S.axis, S.theta),
            Rotation(AxisLine(anchor, c_hat), 0.0),
            True,
        )
    if not (0.0 < thetaB < math.pi):
        raise DegenerateInput(f"couple angle must lie in (0, pi); got {thetaB}")
    couple = translation_as_couple(c_hat * S.slide, thetaB, psi)
    b_hat = couple.dir
    w, v = fold_half_angle(c_hat, S.theta, b_hat, thetaB)
    theta_a, vec = fold_angle_axis(w, v)
    if vec is None:
        raise DegenerateInput("screw rotation and couple cancel; no pair exists")
    line_a = canonicalize_rotation(
        Rotation(AxisLine(anchor, make_unit(vec)), theta_a)
    )
    line_b = Rotation(AxisLine(anchor + couple.point2, b_hat), -thetaB)
    return ConjugatePair(line_a, line_b, False)


def conjugate_invariant(lineA: Rotation, lineB: Rotation) -> InvariantSides:
    """Evaluate both sides of the skew-pair identity.

    lhs uses only the pair's geometry: axis distance, inter-axis angle, and
    the half-angle sines. rhs uses only the composed screw: half its |slide|
    times the half-angle sine of its rotation. For any two rotations about
    skew lines the two agree.

    Raises DegenerateResultant when the pair composes to the identity; a
    pair composing to a pure translation has rhs = 0.
    """
    a = canonicalize_rotation(lineA)
    b = canonicalize_rotation(lineB)
    dist = distance_between_lines(a.line, b.line)
    nu = angle_between(a.line.dir, b.line.dir)
    lhs = (
        dist
        * math.sin(nu)
        * math.sin(a.angle / 2.0)
        * math.sin(b.angle / 2.0)
    )
    D1 = displacement_of_rotation(a.line.point, a.line.dir, a.angle)
    D2 = displacement_of_rotation(b.line.point, b.line.dir, b.angle)
    composed = screw_from_displacement(compose_displacements(D1, D2))
    if composed.kind is ScrewKind.IDENTITY:
        raise DegenerateResultant("the pair composes to the identity")
    if composed.kind is ScrewKind.TRANSLATION:
        return InvariantSides(lhs, 0.0)
    rhs = 0.5 * abs(composed.slide) * math.sin(composed.theta / 2.0)
    return InvariantSides(lhs, rhs)


def euler_fixed_axis(corrA: Correspondence, corrB: Correspondence) -> AxisLine:
    """Axis of the rotation about the origin carrying A to A' and B to B'.

    The axis direction is normal to both chords (each bisecting normal
    plane passes through the origin); when the chords are parallel the axis
    is recovered instead as the intersection of the planes OAB and OA'B'.

    Raises DegenerateInput for collinear base points, non-rigid data, data
    no origin-fixed rotation explains, or the identity (no unique axis).
    """
    A, Ap = corrA.before, corrA.after
    B, Bp = corrB.before, corrB.after
    scale = max(A.norm(), B.norm(), Ap.norm(), Bp.norm())
    if scale <= 0.0:
        raise DegenerateInput("all points at the origin")
    for before, after in ((A, Ap), (B, Bp)):
        if abs(before.norm() - after.norm()) > FIT_CONSISTENCY_TOL * scale:
            raise DegenerateInput("distances to the origin are not preserved")
    if abs((A - B).norm() - (Ap - Bp).norm()) > FIT_CONSISTENCY_TOL * scale:
        raise DegenerateInput("distance between the points is not preserved")
    if A.cross(B).norm() <= PLANE_COLLINEAR_TOL * scale * scale:
        raise DegenerateInput("base points are collinear with the origin")
    if (Ap - A).norm() <= 1e-12 * scale and (Bp - B).norm() <= 1e-12 * scale:
        raise DegenerateInput("identity motion has no unique axis")

    normal = (Ap - A).cross(Bp - B)
    if normal.norm() > PLANE_COLLINEAR_TOL * scale * scale:
        direction = make_unit(normal)
    else:
        meet = A.cross(B).cross(Ap.cross(Bp))
        if meet.norm() <= PLANE_COLLINEAR_TOL * scale**4:
            raise DegenerateInput(
                "chords parallel and planes coincide; axis not determined"
            )
        direction = make_unit(meet)

    flat_a = A - direction * A.dot(direction)
    flat_ap = Ap - direction * Ap.dot(direction)
    if flat_a.norm() > PLANE_COLLINEAR_TOL * scale:
        u, v = flat_a, flat_ap
    else:
        u = B - direction * B.dot(direction)
        v = Bp - direction * Bp.dot(direction)
        if u.norm() <= PLANE_COLLINEAR_TOL * scale:
            raise DegenerateInput("both points lie on the axis")
    angle = math.atan2(u.cross(v).dot(direction), u.dot(v))
    if angle < 0.0:
        direction, angle = -direction, -angle

    for before, after in ((A, Ap), (B, Bp)):
        if (
            rodrigues_rotate(direction, angle, before) - after
        ).norm() > FIT_CONSISTENCY_TOL * scale:
            raise DegenerateInput(
                "no rotation about the origin carries both points as given"
            )
    return AxisLine(Vec3(0.0, 0.0, 0.0), direction)


def levy_central_axis(
    corrA: Correspondence, corrB: Correspondence, dir: UnitVec3
) -> AxisLine:
    """Central axis of known direction from two tracked points.

    Each tracked point yields a plane: through the chord's midpoint,
    containing the axis direction, normal to the chord. Both planes contain
    the central axis, so their intersection is the axis. When the two
    planes coincide the axis is completed inside that plane from the
    rotation the two points determine there; the returned line's point is
    the foot of the perpendicular from the origin.

    Raises ParallelPlanes for every configuration without a unique
    intersection (a chord parallel to dir, distinct parallel planes, or no
    turning component).
    """
    A, Ap = corrA.before, corrA.after
    B, Bp = corrB.before, corrB.after
    scale = max(A.norm(), B.norm(), Ap.norm(), Bp.norm(), 1e-30)
    chord_a = Ap - A
    chord_b = Bp - B
    n_a = chord_a - dir * chord_a.dot(dir)
    n_b = chord_b - dir * chord_b.dot(dir)
    if (
        n_a.norm() <= PLANE_COLLINEAR_TOL * scale
        or n_b.norm() <= PLANE_COLLINEAR_TOL * scale
    ):
        raise ParallelPlanes("a chord is parallel to the axis direction")
    mid_a = (A + Ap) * 0.5
    mid_b = (B + Bp) * 0.5

    if make_unit(n_a).cross(make_unit(n_b)).norm() > PLANE_COLLINEAR_TOL:
        mat = np.array([n_a.as_tuple(), n_b.as_tuple(), dir.as_tuple()])
        rhs = np.array([n_a.dot(mid_a), n_b.dot(mid_b), 0.0])
        sol = np.linalg.solve(mat, rhs)
        return AxisLine(Vec3(float(sol[0]), float(sol[1]), float(sol[2])), dir)

    if abs(make_unit(n_a).dot(mid_b - mid_a)) > PLANE_COLLINEAR_TOL * scale:
        raise ParallelPlanes("the two construction planes are parallel and distinct")

    # Coincident planes: both chords turn inside one plane through the axis.
    # Recover the in-plane rotation from the relative chord and solve for
    # its fixed point.
    seed = Vec3(1.0, 0.0, 0.0)
    if abs(dir.dot(seed)) > 0.9:
        seed = Vec3(0.0, 1.0, 0.0)
    u = make_unit(seed - dir * dir.dot(seed))
    v = dir.cross(u)

    def flat(p: Vec3) -> tuple[float, float]:
        return (p.dot(u), p.dot(v))

    ax, ay = flat(A)
    bx, by = flat(B)
    apx, apy = flat(Ap)
    bpx, bpy = flat(Bp)
    rx, ry = bx - ax, by - ay
    rpx, rpy = bpx - apx, bpy - apy
    if math.hypot(rx, ry) <= PLANE_COLLINEAR_TOL * scale:
        raise ParallelPlanes("the two tracked points project to one point")
    theta = math.atan2(rx * rpy - ry * rpx, rx * rpx + ry * rpy)
    if abs(theta) <= 1e-12:
        raise ParallelPlanes("no in-plane turning; axis not determined")
    c, s = math.cos(theta), math.sin(theta)
    # (I - R(theta)) center = after - R(theta) before
    gx = apx - (c * ax - s * ay)
    gy = apy - (s * ax + c * ay)
    det = 2.0 * (1.0 - c)
    cx = ((1.0 - c) * gx - s * gy) / det
    cy = (s * gx + (1.0 - c) * gy) / det
    return AxisLine(u * cx + v * cy, dir)


def displaced_line_angle(theta: float, phi: float) -> float:
    """Angle between a line and its image under a rotation.

    For a rotation by theta and a line at angle phi from the rotation axis
    the image makes the angle 2 asin(sin(theta/2) sin(phi)) with the
    original; it depends on nothing else.
    """
    arg = math.sin(theta / 2.0) * math.sin(phi)
    return 2.0 * math.asin(max(-1.0, min(1.0, arg)))
