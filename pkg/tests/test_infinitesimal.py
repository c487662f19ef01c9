"""Small motions as twists, their composition, and statics."""

from __future__ import annotations

import math
import random

import pytest

from screwalgebra import (
    AxisLine,
    PointForce,
    Twist,
    Vec3,
    compose_twists,
    force_equilibrium,
    hom_compose,
    hom_from_rotation,
    make_unit,
    parallel_rotation_center,
    rotation_moment,
    twist_equilibrium,
    twist_field,
    twist_of_rotation,
    virtual_work,
)
from _util import xyz

Z_THROUGH_X1 = AxisLine(Vec3(1, 0, 0), make_unit(Vec3(0, 0, 1)))


class TestTwistOfRotation:
    def test_small_turn_about_offset_axis(self):
        tw = twist_of_rotation(Z_THROUGH_X1, 1e-3)
        assert xyz(tw.omega) == pytest.approx((0.0, 0.0, 1e-3), abs=1e-18)
        assert xyz(tw.delta) == pytest.approx((0.0, -1e-3, 0.0), abs=1e-18)

    def test_field_vanishes_on_the_axis(self):
        tw = twist_of_rotation(Z_THROUGH_X1, 1e-3)
        assert xyz(twist_field(tw, Vec3(1, 0, 5))) == pytest.approx(
            (0.0, 0.0, 0.0), abs=1e-18
        )

    def test_field_is_linear_in_position(self):
        tw = Twist(Vec3(0.1, -0.2, 0.3), Vec3(0.02, 0.05, -0.01))
        a, b = Vec3(1, 2, 3), Vec3(-2, 0, 1)
        left = twist_field(tw, a + b) + twist_field(tw, Vec3(0, 0, 0))
        right = twist_field(tw, a) + twist_field(tw, b)
        assert xyz(left) == pytest.approx(xyz(right), abs=1e-15)


class TestComposeTwists:
    def test_twists_add(self):
        t1 = Twist(Vec3(1, 0, 0), Vec3(0, 1, 0))
        t2 = Twist(Vec3(0, 2, 0), Vec3(0, 0, 3))
        tot = compose_twists([t1, t2])
        assert xyz(tot.delta) == (1.0, 2.0, 0.0)
        assert xyz(tot.omega) == (0.0, 1.0, 3.0)

    def test_opposite_twists_cancel(self):
        t = Twist(Vec3(1, -2, 3), Vec3(0.5, 0, -1))
        assert twist_equilibrium([t, Twist(-t.delta, -t.omega)])

    def test_linearization_error_shrinks_quadratically(self):
        # Composing finite rotations scaled by eps and comparing against the
        # summed twist prediction: the error is O(eps^2), so halving eps
        # divides it by about four.
        lines = [Z_THROUGH_X1, AxisLine(Vec3(0, 1, 0), make_unit(Vec3(1, 0, 0)))]
        angles = [0.7, -0.4]
        probe = Vec3(0.3, 0.5, -0.2)

        def finite_image(eps: float) -> Vec3:
            h = hom_from_rotation(
                lines[0].point, lines[0].dir, angles[0] * eps
            )
            h = hom_compose(
                h,
                hom_from_rotation(
                    lines[1].point, lines[1].dir, angles[1] * eps
                ),
            )
            return h.apply(probe)

        def twist_image(eps: float) -> Vec3:
            tot = compose_twists(
                [
                    twist_of_rotation(line, angle * eps)
                    for line, angle in zip(lines, angles)
                ]
            )
            return probe + twist_field(tot, probe)

        e1 = (finite_image(1e-2) - twist_image(1e-2)).norm()
        e2 = (finite_image(5e-3) - twist_image(5e-3)).norm()
        assert 3.5 < e1 / e2 < 4.5


class TestRotationMoment:
    def test_matches_twist_field_projection(self):
        line = AxisLine(Vec3(0, 0, 0), make_unit(Vec3(0, 0, 1)))
        m = rotation_moment(line, 0.01, make_unit(Vec3(1, 0, 0)), Vec3(0, 1, 0))
        assert m == pytest.approx(-0.01, abs=1e-15)
        tw = twist_of_rotation(line, 0.01)
        assert m == pytest.approx(
            twist_field(tw, Vec3(0, 1, 0)).dot(Vec3(1, 0, 0)), abs=1e-18
        )


class TestParallelRotationCenter:
    def test_equal_turns_center_at_midpoint(self):
        lines = [
            AxisLine(Vec3(0, 0, 0), make_unit(Vec3(0, 0, 1))),
            AxisLine(Vec3(2, 0, 0), make_unit(Vec3(0, 0, 1))),
        ]
        assert xyz(parallel_rotation_center(lines, [0.4, 0.4])) == pytest.approx(
            (1.0, 0.0, 0.0), abs=1e-12
        )

    def test_weighted_center(self):
        lines = [
            AxisLine(Vec3(1, 0, 0), make_unit(Vec3(0, 0, 1))),
            AxisLine(Vec3(0, 2, 0), make_unit(Vec3(0, 0, 1))),
        ]
        center = parallel_rotation_center(lines, [0.3, 0.7])
        assert xyz(center) == pytest.approx((0.3, 1.4, 0.0), abs=1e-12)

    def test_center_reproduces_the_net_twist(self):
        lines = [
            AxisLine(Vec3(1, 0, 0), make_unit(Vec3(0, 0, 1))),
            AxisLine(Vec3(0, 2, 0), make_unit(Vec3(0, 0, 1))),
        ]
        thetas = [0.3, 0.7]
        center = parallel_rotation_center(lines, thetas)
        total = compose_twists(
            [
                twist_of_rotation(line, theta)
                for line, theta in zip(lines, thetas)
            ]
        )
        single = twist_of_rotation(
            AxisLine(center, make_unit(Vec3(0, 0, 1))), sum(thetas)
        )
        assert xyz(total.delta) == pytest.approx(xyz(single.delta), abs=1e-12)
        assert xyz(total.omega) == pytest.approx(xyz(single.omega), abs=1e-12)


class TestStatics:
    def test_virtual_work_of_a_rotation(self):
        work = virtual_work(
            [PointForce(Vec3(0, 1, 0), Vec3(1, 0, 0))],
            Twist(Vec3(0, 0, 0), Vec3(0, 0, 1)),
        )
        assert work == -1.0

    def test_virtual_work_is_bilinear(self):
        rng = random.Random(59)
        forces = [
            PointForce(
                Vec3(*(rng.randint(-5, 5) for _ in range(3))),
                Vec3(*(rng.randint(-5, 5) for _ in range(3))),
            )
            for _ in range(4)
        ]
        t1 = Twist(Vec3(1, -2, 0), Vec3(0, 1, 3))
        t2 = Twist(Vec3(0, 2, -1), Vec3(2, 0, 1))
        combined = virtual_work(forces, compose_twists([t1, t2]))
        assert combined == virtual_work(forces, t1) + virtual_work(forces, t2)

    def test_pure_couple_is_not_in_equilibrium(self):
        forces = [
            PointForce(Vec3(1, 0, 0), Vec3(0, 1, 0)),
            PointForce(Vec3(-1, 0, 0), Vec3(0, -1, 0)),
        ]
        assert force_equilibrium(forces) is False

    def test_balanced_system_is_in_equilibrium(self):
        forces = [
            PointForce(Vec3(1, 0, 0), Vec3(0, 1, 0)),
            PointForce(Vec3(-1, 0, 0), Vec3(0, -1, 0)),
            PointForce(Vec3(0, 1, 0), Vec3(1, 0, 0)),
            PointForce(Vec3(0, -1, 0), Vec3(-1, 0, 0)),
        ]
        assert force_equilibrium(forces) is True

    def test_equilibrium_means_zero_work_on_every_twist(self):
        forces = [
            PointForce(Vec3(1, 0, 0), Vec3(0, 1, 0)),
            PointForce(Vec3(-1, 0, 0), Vec3(0, -1, 0)),
            PointForce(Vec3(0, 1, 0), Vec3(1, 0, 0)),
            PointForce(Vec3(0, -1, 0), Vec3(-1, 0, 0)),
        ]
        basis = [
            Twist(Vec3(1, 0, 0), Vec3(0, 0, 0)),
            Twist(Vec3(0, 1, 0), Vec3(0, 0, 0)),
            Twist(Vec3(0, 0, 1), Vec3(0, 0, 0)),
            Twist(Vec3(0, 0, 0), Vec3(1, 0, 0)),
            Twist(Vec3(0, 0, 0), Vec3(0, 1, 0)),
            Twist(Vec3(0, 0, 0), Vec3(0, 0, 1)),
        ]
        assert all(abs(virtual_work(forces, tw)) < 1e-12 for tw in basis)
