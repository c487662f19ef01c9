"""Exact algebra of finite and infinitesimal rigid-body displacements.

Rotations are carried by the rational half-tangent vector q = 2 tan(theta/2)
* axis, general displacements by (q, origin displacement), and every
displacement reduces to a screw: a rotation about a central axis plus a
slide along it. The oracle module provides an independent matrix-based
verification path, and the checks module a seeded property suite.
"""

from .core import (
    AxisLine,
    Rotation,
    Tolerance,
    UnitVec3,
    Vec3,
    angle_between,
    canonicalize_rotation,
    distance_between_lines,
    make_unit,
)
from .errors import (
    AngleAtPi,
    CollinearPoints,
    CoplanarPoints,
    CoupleDegenerate,
    DegenerateInput,
    DegenerateResultant,
    GibbsOverflow,
    IntersectingAxes,
    NoAxisDirection,
    NonRigidData,
    ParallelPlanes,
    ParseError,
    ResultantHalfTurn,
    ScrewAlgebraError,
    TooFewPoints,
    TraceSingular,
    ZeroSlide,
    ZeroTranslation,
    ZeroVector,
)
from .rotation import (
    Displacement,
    GibbsVector,
    RotationMatrix,
    Twist,
    apply_displacement,
    axis_angle_from_gibbs,
    displacement_of_rotation,
    gibbs_from_axis_angle,
    gibbs_from_matrix,
    matrix_from_gibbs,
    midpoint_of,
    rodrigues_rotate,
)
from .compose import (
    Couple,
    ResultantFrame,
    SineRatios,
    ThreeAxisResult,
    compose_displacements,
    compose_gibbs,
    couple_translation,
    fold_angle_axis,
    fold_half_angle,
    nonintersecting_pair,
    order_swap_axis,
    resultant_trig,
    sine_proportionality,
    three_axis_resultant,
    translation_as_couple,
)
from .screw import (
    AbsoluteTranslation,
    ConjugatePair,
    InvariantSides,
    Screw,
    ScrewKind,
    absolute_translation,
    conjugate_invariant,
    conjugate_pair_decompose,
    displaced_line_angle,
    displacement_from_screw,
    euler_fixed_axis,
    levy_central_axis,
    screw_from_displacement,
)
from .pointfit import (
    Correspondence,
    RigidityReport,
    check_rigidity,
    fit_displacement,
    gibbs_by_midpoint_elimination,
)
from .infinitesimal import (
    PointForce,
    compose_twists,
    force_equilibrium,
    parallel_rotation_center,
    rotation_moment,
    twist_equilibrium,
    twist_field,
    twist_of_rotation,
    virtual_work,
)
from .oracle import (
    HomTransform,
    displacement_from_hom,
    hom_compose,
    hom_from_displacement,
    hom_from_rotation,
    hom_from_translation,
    screw_from_hom_bruteforce,
)
from .checks import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "AbsoluteTranslation",
    "AngleAtPi",
    "AxisLine",
    "CheckResult",
    "CollinearPoints",
    "ConjugatePair",
    "CoplanarPoints",
    "Correspondence",
    "Couple",
    "CoupleDegenerate",
    "DegenerateInput",
    "DegenerateResultant",
    "Displacement",
    "GibbsOverflow",
    "GibbsVector",
    "HomTransform",
    "IntersectingAxes",
    "InvariantSides",
    "NoAxisDirection",
    "NonRigidData",
    "ParallelPlanes",
    "ParseError",
    "PointForce",
    "ResultantFrame",
    "ResultantHalfTurn",
    "RigidityReport",
    "Rotation",
    "RotationMatrix",
    "Screw",
    "ScrewAlgebraError",
    "ScrewKind",
    "SineRatios",
    "ThreeAxisResult",
    "Tolerance",
    "TooFewPoints",
    "TraceSingular",
    "Twist",
    "UnitVec3",
    "Vec3",
    "ZeroSlide",
    "ZeroTranslation",
    "ZeroVector",
    "absolute_translation",
    "angle_between",
    "apply_displacement",
    "axis_angle_from_gibbs",
    "canonicalize_rotation",
    "check_rigidity",
    "compose_displacements",
    "compose_gibbs",
    "compose_twists",
    "conjugate_invariant",
    "conjugate_pair_decompose",
    "couple_translation",
    "displaced_line_angle",
    "displacement_from_hom",
    "displacement_from_screw",
    "displacement_of_rotation",
    "distance_between_lines",
    "euler_fixed_axis",
    "fit_displacement",
    "fold_angle_axis",
    "fold_half_angle",
    "force_equilibrium",
    "gibbs_by_midpoint_elimination",
    "gibbs_from_axis_angle",
    "gibbs_from_matrix",
    "hom_compose",
    "hom_from_displacement",
    "hom_from_rotation",
    "hom_from_translation",
    "levy_central_axis",
    "make_unit",
    "matrix_from_gibbs",
    "midpoint_of",
    "nonintersecting_pair",
    "order_swap_axis",
    "parallel_rotation_center",
    "resultant_trig",
    "rodrigues_rotate",
    "rotation_moment",
    "run_all",
    "screw_from_displacement",
    "screw_from_hom_bruteforce",
    "sine_proportionality",
    "three_axis_resultant",
    "translation_as_couple",
    "twist_equilibrium",
    "twist_field",
    "twist_of_rotation",
    "virtual_work",
]
