"""Recovering a displacement from tracked point correspondences.

Three tracked points determine the unique proper rigid motion that carries
them; four or more support a full rigidity-and-orientation check (a mirror
image preserves all distances but flips the signed volume of a tetrahedron,
and no proper motion produces it).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .core import Vec3, make_unit
from .errors import CollinearPoints, CoplanarPoints, NonRigidData, TooFewPoints
from .rotation import Displacement, GibbsVector, RotationMatrix, gibbs_from_matrix

RIGIDITY_REL_TOL = 1e-6
COLLINEAR_REL_TOL = 1e-9
COPLANAR_REL_TOL = 1e-9
PATH_AGREEMENT_TOL = 1e-10


@dataclass(frozen=True, slots=True)
class Correspondence:
    """One tracked point: its position before and after the motion."""

    before: Vec3
    after: Vec3


class RigidityReport(NamedTuple):
    """Distance preservation and orientation verdicts for a point set."""

    rigid: bool
    proper: bool


def _pairwise_scale(points: Sequence[Vec3]) -> float:
    best = 0.0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            best = max(best, (points[i] - points[j]).norm())
    return best


def _check_distances(corrs: Sequence[Correspondence], scale: float) -> bool:
    for i in range(len(corrs)):
        for j in range(i + 1, len(corrs)):
            d0 = (corrs[i].before - corrs[j].before).norm()
            d1 = (corrs[i].after - corrs[j].after).norm()
            if abs(d1 - d0) > RIGIDITY_REL_TOL * max(d0, scale):
                return False
    return True


def _frame(p0: Vec3, p1: Vec3, p2: Vec3) -> tuple[Vec3, Vec3, Vec3]:
    """Right-handed orthonormal frame built on a triangle by Gram-Schmidt."""
    e1 = make_unit(p1 - p0)
    raw = p2 - p0
    e2 = make_unit(raw - e1 * e1.dot(raw))
    e2 = make_unit(e2 - e1 * e1.dot(e2))
    e3 = e1.cross(e2)
    return e1, e2, e3


def fit_displacement(
    c0: Correspondence, c1: Correspondence, c2: Correspondence
) -> Displacement:
    """The unique proper rigid motion carrying three tracked points.

    Builds orthonormal frames on the triangle in both poses and converts the
    frame-to-frame map into the rotation vector; the translation part is the
    image displacement of the origin. The independently solved chord
    equations (see gibbs_by_midpoint_elimination) are evaluated as a
    consistency check on every call.

    Raises CollinearPoints for a degenerate triangle and NonRigidData when
    the pairwise distances disagree beyond rel 1e-6 or the chord equations
    cannot be satisfied.
    """
    corrs = (c0, c1, c2)
    before = [c.before for c in corrs]
    after = [c.after for c in corrs]
    scale = _pairwise_scale(before)
    if scale <= 0.0:
        raise CollinearPoints("the three base points coincide")
    area2 = (before[1] - before[0]).cross(before[2] - before[0]).norm()
    if area2 <= COLLINEAR_REL_TOL * scale * scale:
        raise CollinearPoints("base points are collinear; no frame exists")
    if not _check_distances(corrs, scale):
        raise NonRigidData("pairwise distances are not preserved")

    e = _frame(*before)
    f = _frame(*after)
    rows = tuple(
        tuple(
            f[0].as_tuple()[i] * e[0].as_tuple()[j]
            + f[1].as_tuple()[i] * e[1].as_tuple()[j]
            + f[2].as_tuple()[i] * e[2].as_tuple()[j]
            for j in range(3)
        )
        for i in range(3)
    )
    M = RotationMatrix(rows)
    q = gibbs_from_matrix(M)
    delta = after[0] - M.apply(before[0])
    fitted = Displacement(q, delta)

    defect = _max_distance_defect(corrs, scale)
    _verify_chord_equations(fitted, corrs, scale, defect)
    return fitted


def _max_distance_defect(corrs: Sequence[Correspondence], scale: float) -> float:
    worst = 0.0
    for i in range(len(corrs)):
        for j in range(i + 1, len(corrs)):
            d0 = (corrs[i].before - corrs[j].before).norm()
            d1 = (corrs[i].after - corrs[j].after).norm()
            worst = max(worst, abs(d1 - d0) / max(d0, scale))
    return worst


def _verify_chord_equations(
    fitted: Displacement,
    corrs: Sequence[Correspondence],
    scale: float,
    defect: float,
) -> None:
    """Check the fitted rotation vector against the chord-difference law.

    For a rigid displacement the chords obey
    chord_i - chord_0 = q x (mid_i - mid_0), linear in q. The fitted q must
    satisfy these equations up to rounding plus the data's own rigidity
    defect; a larger residual means the correspondence is not explainable
    by one proper motion.
    """
    q = fitted.q.as_vec3()
    chord0 = corrs[0].after - corrs[0].before
    mid0 = (corrs[0].after + corrs[0].before) * 0.5
    bound = max(PATH_AGREEMENT_TOL * max(1.0, q.norm()), 4.0 * defect) * scale
    for c in corrs[1:]:
        chord = c.after - c.before
        mid = (c.after + c.before) * 0.5
        resid = (chord - chord0) - q.cross(mid - mid0)
        if resid.norm() > bound:
            raise NonRigidData(
                f"chord equations disagree with the frame fit by {resid.norm():.3e}"
            )


def gibbs_by_midpoint_elimination(
    c0: Correspondence, c1: Correspondence, c2: Correspondence
) -> Displacement:
    """Alternative fit: solve the chord-difference equations for q directly.

    The six linear equations chord_i - chord_0 = q x (mid_i - mid_0)
    (i = 1, 2) are solved for q by least squares; the translation follows by
    solving delta - (1/2) q x delta = chord - q x mid for delta. Used as an
    independent cross-check of fit_displacement.
    """
    corrs = (c0, c1, c2)
    chord0 = corrs[0].after - corrs[0].before
    mid0 = (corrs[0].after + corrs[0].before) * 0.5
    rows = []
    rhs = []
    for c in corrs[1:]:
        chord = c.after - c.before
        mid = (c.after + c.before) * 0.5
        w = mid - mid0
        rows.extend(
            [
                [0.0, w.z, -w.y],
                [-w.z, 0.0, w.x],
                [w.y, -w.x, 0.0],
            ]
        )
        d = chord - chord0
        rhs.extend([d.x, d.y, d.z])
    sol, *_ = np.linalg.lstsq(np.array(rows), np.array(rhs), rcond=None)
    q = Vec3(float(sol[0]), float(sol[1]), float(sol[2]))

    gamma = chord0 - q.cross(mid0)
    A = np.array(
        [
            [1.0, q.z / 2.0, -q.y / 2.0],
            [-q.z / 2.0, 1.0, q.x / 2.0],
            [q.y / 2.0, -q.x / 2.0, 1.0],
        ]
    )
    d = np.linalg.solve(A, np.array([gamma.x, gamma.y, gamma.z]))
    return Displacement(
        GibbsVector(q.x, q.y, q.z), Vec3(float(d[0]), float(d[1]), float(d[2]))
    )


def check_rigidity(corrs: Sequence[Correspondence]) -> RigidityReport:
    """Distance-preservation and orientation check for four or more points.

    rigid: every pairwise distance is preserved within rel 1e-6.
    proper: the signed volume of the tetrahedron on the first four points
    keeps its sign (False means the data is a mirror image, which no
    rotation-plus-translation can produce).

    Raises TooFewPoints below four correspondences and CoplanarPoints when
    the first four before-points span no volume (the exception carries the
    rigid verdict in its `rigid` attribute).
    """
    if len(corrs) < 4:
        raise TooFewPoints(f"need at least 4 correspondences, got {len(corrs)}")
    before = [c.before for c in corrs]
    scale = _pairwise_scale(before)
    rigid = scale > 0.0 and _check_distances(corrs, scale)

    def volume(points: Sequence[Vec3]) -> float:
        a = points[1] - points[0]
        b = points[2] - points[0]
        c = points[3] - points[0]
        return a.cross(b).dot(c)

    vol_before = volume(before[:4])
    if abs(vol_before) <= COPLANAR_REL_TOL * scale**3:
        raise CoplanarPoints(
            "first four points are coplanar; orientation is undecidable",
            rigid=rigid,
        )
    vol_after = volume([c.after for c in corrs[:4]])
    return RigidityReport(rigid=rigid, proper=vol_before * vol_after > 0.0)
