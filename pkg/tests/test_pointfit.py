"""Recovering a displacement from tracked point correspondences."""

from __future__ import annotations

import math
import random

import pytest

from screwalgebra import (
    CollinearPoints,
    CoplanarPoints,
    Correspondence,
    Displacement,
    GibbsVector,
    NonRigidData,
    TooFewPoints,
    Vec3,
    apply_displacement,
    check_rigidity,
    fit_displacement,
    gibbs_by_midpoint_elimination,
    make_unit,
    rodrigues_rotate,
)
from _util import mnp, xyz

# A quarter turn about the z-axis followed by a unit lift along it.
LIFT_TURN = [
    Correspondence(Vec3(0, 0, 0), Vec3(0, 0, 1)),
    Correspondence(Vec3(1, 0, 0), Vec3(0, 1, 1)),
    Correspondence(Vec3(0, 1, 0), Vec3(-1, 0, 1)),
]


class TestFitDisplacement:
    def test_recovers_quarter_turn_with_lift(self):
        d = fit_displacement(*LIFT_TURN)
        assert mnp(d.q) == pytest.approx((0.0, 0.0, 2.0), abs=1e-12)
        assert xyz(d.delta) == pytest.approx((0.0, 0.0, 1.0), abs=1e-12)

    def test_predicts_a_fourth_point(self):
        d = fit_displacement(*LIFT_TURN)
        assert xyz(apply_displacement(d, Vec3(2, 2, 0))) == pytest.approx(
            (-2.0, 2.0, 1.0), abs=1e-12
        )

    def test_identity_data(self):
        d = fit_displacement(
            Correspondence(Vec3(1, 2, 3), Vec3(1, 2, 3)),
            Correspondence(Vec3(4, 5, 6), Vec3(4, 5, 6)),
            Correspondence(Vec3(7, 8, 10), Vec3(7, 8, 10)),
        )
        assert mnp(d.q) == (0.0, 0.0, 0.0)
        assert xyz(d.delta) == (0.0, 0.0, 0.0)

    def test_random_roundtrip(self):
        rng = random.Random(47)
        for _ in range(100):
            axis = make_unit(Vec3(*(rng.gauss(0, 1) for _ in range(3))))
            theta = rng.uniform(-2.8, 2.8)
            q = GibbsVector.from_vec3(axis * (2.0 * math.tan(theta / 2)))
            delta = Vec3(*(rng.uniform(-2, 2) for _ in range(3)))
            truth = Displacement(q, delta)
            base = [
                Vec3(*(rng.uniform(-3, 3) for _ in range(3))) for _ in range(3)
            ]
            area = (base[1] - base[0]).cross(base[2] - base[0]).norm()
            if area < 0.5:
                continue
            corrs = [
                Correspondence(b, apply_displacement(truth, b)) for b in base
            ]
            fitted = fit_displacement(*corrs)
            assert mnp(fitted.q) == pytest.approx(mnp(q), rel=1e-8, abs=1e-8)
            assert xyz(fitted.delta) == pytest.approx(
                xyz(delta), rel=1e-8, abs=1e-8
            )

    def test_collinear_base_points_rejected(self):
        with pytest.raises(CollinearPoints):
            fit_displacement(
                Correspondence(Vec3(0, 0, 0), Vec3(0, 0, 0)),
                Correspondence(Vec3(1, 0, 0), Vec3(1, 0, 0)),
                Correspondence(Vec3(2, 0, 0), Vec3(2, 0, 0)),
            )

    def test_non_rigid_data_rejected(self):
        with pytest.raises(NonRigidData):
            fit_displacement(
                Correspondence(Vec3(0, 0, 0), Vec3(0, 0, 0)),
                Correspondence(Vec3(1, 0, 0), Vec3(2, 0, 0)),
                Correspondence(Vec3(0, 1, 0), Vec3(0, 1, 0)),
            )


class TestMidpointElimination:
    def test_agrees_with_frame_fit(self):
        alt = gibbs_by_midpoint_elimination(*LIFT_TURN)
        assert mnp(alt.q) == pytest.approx((0.0, 0.0, 2.0), abs=1e-10)
        assert xyz(alt.delta) == pytest.approx((0.0, 0.0, 1.0), abs=1e-10)

    def test_agrees_on_random_motions(self):
        rng = random.Random(53)
        for _ in range(50):
            axis = make_unit(Vec3(*(rng.gauss(0, 1) for _ in range(3))))
            theta = rng.uniform(-2.5, 2.5)
            point = Vec3(*(rng.uniform(-2, 2) for _ in range(3)))
            delta = point - rodrigues_rotate(axis, theta, point)
            q = GibbsVector.from_vec3(axis * (2.0 * math.tan(theta / 2)))
            truth = Displacement(q, delta)
            base = [
                Vec3(*(rng.uniform(-3, 3) for _ in range(3))) for _ in range(3)
            ]
            if (base[1] - base[0]).cross(base[2] - base[0]).norm() < 0.5:
                continue
            corrs = [
                Correspondence(b, apply_displacement(truth, b)) for b in base
            ]
            a = fit_displacement(*corrs)
            b = gibbs_by_midpoint_elimination(*corrs)
            assert mnp(a.q) == pytest.approx(mnp(b.q), rel=1e-9, abs=1e-9)
            assert xyz(a.delta) == pytest.approx(
                xyz(b.delta), rel=1e-9, abs=1e-9
            )


class TestCheckRigidity:
    TET = [
        Correspondence(Vec3(0, 0, 0), Vec3(0, 0, 0)),
        Correspondence(Vec3(1, 0, 0), Vec3(1, 0, 0)),
        Correspondence(Vec3(0, 1, 0), Vec3(0, 1, 0)),
        Correspondence(Vec3(0, 0, 1), Vec3(0, 0, 1)),
    ]

    def test_rigid_tetrahedron(self):
        report = check_rigidity(self.TET)
        assert report.rigid and report.proper

    def test_mirrored_tetrahedron_is_improper(self):
        mirrored = self.TET[:3] + [
            Correspondence(Vec3(0, 0, 1), Vec3(0, 0, -1))
        ]
        report = check_rigidity(mirrored)
        assert report.rigid
        assert not report.proper

    def test_stretched_data_is_not_rigid(self):
        stretched = [
            Correspondence(Vec3(0, 0, 0), Vec3(0, 0, 0)),
            Correspondence(Vec3(1, 0, 0), Vec3(2, 0, 0)),
            Correspondence(Vec3(0, 1, 0), Vec3(0, 1, 0)),
            Correspondence(Vec3(0, 0, 1), Vec3(0, 0, 1)),
        ]
        assert not check_rigidity(stretched).rigid

    def test_too_few_points_rejected(self):
        with pytest.raises(TooFewPoints):
            check_rigidity(self.TET[:3])

    def test_coplanar_points_rejected(self):
        flat = self.TET[:3] + [Correspondence(Vec3(1, 1, 0), Vec3(1, 1, 0))]
        with pytest.raises(CoplanarPoints):
            check_rigidity(flat)
