"""Shared value types, tolerances, and the orientation convention.

All cross products in this package are right-handed; every angle is in
radians. Types are immutable values and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroVector

UNIT_LENGTH_TOL = 1e-12
ZERO_DIRECTION_TOL = 1e-12
HALF_TURN_TIE_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class Vec3:
    """A point or free vector with finite real components."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise ValueError(f"non-finite component in {(self.x, self.y, self.z)}")

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, s: float) -> "Vec3":
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec3":
        return Vec3(self.x / s, self.y / s, self.z / s)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


ZERO = Vec3(0.0, 0.0, 0.0)
EX = Vec3(1.0, 0.0, 0.0)
EY = Vec3(0.0, 1.0, 0.0)
EZ = Vec3(0.0, 0.0, 1.0)


@dataclass(frozen=True, slots=True)
class UnitVec3(Vec3):
    """A direction: a Vec3 whose length is 1 within 1e-12.

    Construct through make_unit (or directly with already-normalized
    components); the constructor enforces the length invariant.
    """

    def __post_init__(self):
        # Explicit base call: slots=True rebuilds the class, which breaks
        # the zero-argument super() closure.
        Vec3.__post_init__(self)
        if abs(self.norm() - 1.0) > UNIT_LENGTH_TOL:
            raise ValueError(f"not unit length: {(self.x, self.y, self.z)}")

    def __neg__(self) -> "UnitVec3":
        return UnitVec3(-self.x, -self.y, -self.z)


def make_unit(v: Vec3) -> UnitVec3:
    """Normalize v to unit length.

    Raises ZeroVector when |v| <= 1e-12.
    """
    n = v.norm()
    if n <= ZERO_DIRECTION_TOL:
        raise ZeroVector(f"cannot normalize near-zero vector {v.as_tuple()}")
    return UnitVec3(v.x / n, v.y / n, v.z / n)


@dataclass(frozen=True, slots=True)
class AxisLine:
    """An oriented line in space: a point on it and a unit direction."""

    point: Vec3
    dir: UnitVec3


@dataclass(frozen=True, slots=True)
class Rotation:
    """A finite rotation about a fixed line, angle in (-pi, pi] radians."""

    line: AxisLine
    angle: float

    def __post_init__(self):
        if not math.isfinite(self.angle):
            raise ValueError("non-finite rotation angle")
        if not (-math.pi < self.angle <= math.pi + 1e-15):
            raise ValueError(f"rotation angle {self.angle} outside (-pi, pi]")


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Absolute and relative comparison tolerances (both positive)."""

    abs: float = 1e-9
    rel: float = 1e-9

    def __post_init__(self):
        if not (self.abs > 0 and self.rel > 0):
            raise ValueError("tolerances must be positive")

    def close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.abs + self.rel * max(abs(a), abs(b))

    def vec_close(self, a: Vec3, b: Vec3) -> bool:
        scale = max(a.norm(), b.norm())
        return (a - b).norm() <= self.abs + self.rel * scale


def distance_between_lines(a: AxisLine, b: AxisLine) -> float:
    """Minimal distance between two lines (0 when they meet)."""
    n = a.dir.cross(b.dir)
    w = b.point - a.point
    nn = n.norm()
    if nn <= ZERO_DIRECTION_TOL:
        return (w - a.dir * w.dot(a.dir)).norm()
    return abs(w.dot(n)) / nn


def angle_between(u: Vec3, v: Vec3) -> float:
    """Angle between two nonzero vectors, in [0, pi]."""
    return math.atan2(u.cross(v).norm(), u.dot(v))


def canonicalize_rotation(r: Rotation) -> Rotation:
    """Return the same point map with angle in [0, pi].

    A negative angle flips both the axis direction and the angle sign. At a
    half turn, where both directions give the same map, the direction is
    fixed so its first nonzero component is positive.
    """
    dir_, angle = r.line.dir, r.angle
    if angle < 0:
        dir_, angle = -dir_, -angle
    if abs(angle - math.pi) <= HALF_TURN_TIE_TOL:
        for c in (dir_.x, dir_.y, dir_.z):
            if abs(c) > ZERO_DIRECTION_TOL:
                if c < 0:
                    dir_ = -dir_
                break
    if dir_ is r.line.dir and angle == r.angle:
        return r
    return Rotation(AxisLine(r.line.point, dir_), angle)
