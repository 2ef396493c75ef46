"""Exact rational vectors, unit sphere points and rays."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q``; decimal and float text is rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not an exact rational: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(q: Fraction) -> str:
    return str(q)


class RationalVector(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction

    @classmethod
    def of(cls, x, y, z) -> "RationalVector":
        return cls(Fraction(x), Fraction(y), Fraction(z))

    def dot(self, other: "RationalVector") -> Fraction:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def norm2(self) -> Fraction:
        return self.dot(self)

    def __add__(self, other):  # type: ignore[override]
        return RationalVector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other) -> "RationalVector":
        return RationalVector(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "RationalVector":
        return RationalVector(-self.x, -self.y, -self.z)

    def scale(self, r) -> "RationalVector":
        return RationalVector(self.x * r, self.y * r, self.z * r)

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def text(self) -> str:
        return ",".join(str(c) for c in self)


ZERO = RationalVector(Fraction(0), Fraction(0), Fraction(0))


def parse_vector(text: str) -> RationalVector:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated rationals, got {text!r}")
    return RationalVector(*(parse_rational(p) for p in parts))


def sphere_point(x, y=None, z=None) -> RationalVector:
    """A vector with exact squared norm 1; accepts a vector, three numbers or text."""
    if isinstance(x, str):
        v = parse_vector(x)
    elif y is None:
        v = RationalVector.of(*x)
    else:
        v = RationalVector.of(x, y, z)
    if v.norm2() != 1:
        raise ValueError(f"({v.text()}) is not on the unit sphere: squared norm {v.norm2()}")
    return v


# Sphere points are plain vectors that passed ``sphere_point``.
SpherePoint = RationalVector


def is_sphere_point(v: RationalVector) -> bool:
    return v.norm2() == 1


def common_denominator(v: RationalVector) -> tuple[tuple[int, int, int], int]:
    """(integer numerators, q) with v = numerators / q."""
    q = math.lcm(*(c.denominator for c in v))
    return tuple(int(c * q) for c in v), q  # type: ignore[return-value]


@dataclass(frozen=True)
class SphereRay:
    """A point of the sphere known only up to positive scaling.

    Stored as a primitive integer vector whose first nonzero coordinate is
    positive, together with a sign.
    """

    direction: tuple[int, int, int]
    sign: int = 1

    def __post_init__(self) -> None:
        d = self.direction
        if not any(d):
            raise ValueError("a ray needs a nonzero vector")
        if math.gcd(*d) != 1 or next(c for c in d if c) < 0:
            raise ValueError(f"{d} is not a canonical ray direction")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def of(cls, v) -> "SphereRay":
        """Canonical ray through a nonzero rational or integer vector."""
        if all(isinstance(c, int) for c in v):
            ints = tuple(v)
        else:
            ints, _ = common_denominator(RationalVector.of(*v))
        g = math.gcd(*ints)
        if g == 0:
            raise ValueError("a ray needs a nonzero vector")
        ints = tuple(c // g for c in ints)
        lead = next(c for c in ints if c)
        if lead < 0:
            return cls(tuple(-c for c in ints), -1)  # type: ignore[arg-type]
        return cls(ints, 1)  # type: ignore[arg-type]

    @property
    def vector(self) -> tuple[int, int, int]:
        return tuple(self.sign * c for c in self.direction)  # type: ignore[return-value]

    def __str__(self) -> str:
        return "ray(" + ",".join(str(c) for c in self.vector) + ")"


def ray(a: int, b: int, c: int) -> SphereRay:
    return SphereRay.of((a, b, c))


Point = Union[RationalVector, SphereRay]
