"""Exact rational geometry: rotations, sphere fragments and the ball decomposition."""

from .ball import (
    BallDemo,
    Hemisphere,
    Isometry,
    ball_demo,
    hemisphere_disjoint_check,
    hemisphere_for,
    random_center,
    random_points_in,
    random_unit_point,
)
from .export import CSV_COLUMNS, export_points, label_code, read_ply
from .rational import (
    Rational,
    RationalVector,
    SpherePoint,
    SphereRay,
    parse_rational,
    parse_vector,
    ray,
    sphere_point,
)
from .rotations import (
    PAIRS,
    STANDARD_PAIR,
    ZX_PAIR,
    GeneratorPair,
    RotationMatrix,
    UndefinedAxisError,
    apply,
    commute_check,
    fixed_ray,
    freeness_scan,
    rho,
    stabilizer_scan,
)
from .sphere import (
    InjectivityError,
    LabeledPoint,
    OrbitFragment,
    PointUniverse,
    SphereDemo,
    axis_orbit_demo,
    orbit_fragment,
    sphere_demo,
)

__all__ = [
    "BallDemo",
    "CSV_COLUMNS",
    "GeneratorPair",
    "Hemisphere",
    "InjectivityError",
    "Isometry",
    "LabeledPoint",
    "OrbitFragment",
    "PAIRS",
    "PointUniverse",
    "Rational",
    "RationalVector",
    "RotationMatrix",
    "STANDARD_PAIR",
    "SphereDemo",
    "SpherePoint",
    "SphereRay",
    "UndefinedAxisError",
    "ZX_PAIR",
    "apply",
    "axis_orbit_demo",
    "ball_demo",
    "commute_check",
    "export_points",
    "fixed_ray",
    "freeness_scan",
    "hemisphere_disjoint_check",
    "hemisphere_for",
    "label_code",
    "orbit_fragment",
    "parse_rational",
    "parse_vector",
    "random_center",
    "random_points_in",
    "random_unit_point",
    "ray",
    "read_ply",
    "rho",
    "sphere_demo",
    "sphere_point",
    "stabilizer_scan",
]
