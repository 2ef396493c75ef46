"""Closed hemispheres and the (3n-1)-piece decomposition of the ball.

Every sphere layer r < 1 is labelled by the free-orbit partition.  On the
unit layer the first seed's orbit uses the base sets instead, and the words
left over by them become singleton pieces x_j, which translations move to
the origin.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..paradox import (
    EquidecompWitness,
    ParadoxWitness,
    Piece,
    ball_witness_shape,
    validate,
)
from ..partition import A, B, Leftover, classify_base
from ..report import Report
from ..words import EMPTY, SIGMA, Word, format_word, invert, power
from .rational import ZERO, RationalVector, is_sphere_point
from .rotations import STANDARD_PAIR, GeneratorPair, apply, rho
from .sphere import LabeledPoint, PointUniverse, certify_seeds, gen_partition, _seed_text


@dataclass(frozen=True)
class Hemisphere:
    a: Fraction
    b: Fraction
    c: Fraction
    closed: bool = True

    def __post_init__(self) -> None:
        if not (self.a or self.b or self.c):
            raise ValueError("a hemisphere needs a nonzero normal")

    def contains(self, p) -> bool:
        s = self.a * p[0] + self.b * p[1] + self.c * p[2]
        return s <= 0 if self.closed else s < 0


def hemisphere_for(center) -> Hemisphere:
    """The closed hemisphere {p : <p, center> <= 0}."""
    c = RationalVector.of(*center)
    if c.is_zero():
        raise ValueError("the center must be nonzero")
    return Hemisphere(c.x, c.y, c.z)


def hemisphere_disjoint_check(center, samples) -> Report:
    """For unit p with <p, c> <= 0, check |p - c|^2 = 1 + |c|^2 - 2<p, c> > 1."""
    c = RationalVector.of(*center)
    h = hemisphere_for(c)
    c2 = c.norm2()
    rep = Report("hemisphere_disjoint", {"center": c.text()})
    for p in samples:
        if not is_sphere_point(p):
            raise ValueError(f"sample ({p.text()}) is not an exact unit vector")
        if not h.contains(p):
            continue
        rep.words_checked += 1
        d2 = (p - c).norm2()
        if d2 != 1 + c2 - 2 * p.dot(c):
            rep.add(p.text(), None, "distance identity fails")
        if not d2 > 1:
            rep.add(p.text(), None, f"|p - c|^2 = {d2} is not > 1")
    return rep


def random_rational(rng: random.Random, bound: int = 12) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_center(rng: random.Random, bound: int = 12) -> RationalVector:
    while True:
        v = RationalVector(*(random_rational(rng, bound) for _ in range(3)))
        if not v.is_zero():
            return v


def random_unit_point(rng: random.Random, bound: int = 12) -> RationalVector:
    """Inverse stereographic projection of a random rational point of the plane."""
    u, v = random_rational(rng, bound), random_rational(rng, bound)
    s = u * u + v * v
    return RationalVector(2 * u / (s + 1), 2 * v / (s + 1), (s - 1) / (s + 1))


def random_points_in(h: Hemisphere, rng: random.Random, count: int, bound: int = 12) -> list[RationalVector]:
    """Exact unit points in a closed hemisphere; a point outside is replaced by its antipode."""
    out = []
    for _ in range(count):
        p = random_unit_point(rng, bound)
        out.append(p if h.contains(p) else -p)
    return out


# -- the ball --------------------------------------------------------------------


@dataclass(frozen=True)
class Isometry:
    """x -> rho(rotation) x + shift."""

    rotation: Word = EMPTY
    shift: RationalVector = ZERO

    def apply(self, y, pair: GeneratorPair = STANDARD_PAIR):
        return apply(rho(self.rotation, pair), y) + self.shift

    def inverse_apply(self, y, pair: GeneratorPair = STANDARD_PAIR):
        return apply(rho(invert(self.rotation), pair), y - self.shift)

    def describe(self) -> str:
        parts = []
        if self.rotation:
            parts.append(f"rotate {format_word(self.rotation)!r}")
        if not self.shift.is_zero():
            parts.append(f"translate ({self.shift.text()})")
        return ", ".join(parts) or "identity"


@dataclass(frozen=True, eq=False)
class BallLabeler:
    """Piece label of a sampled ball point, or None if it is not sampled."""

    n: int
    universe: Any
    designated: tuple[int, int]

    def __call__(self, y) -> str | None:
        if y == ZERO:
            return "A0"
        loc = self.universe.locate(y)
        if loc is None:
            return None
        key, w = loc
        if key == self.designated:
            b = classify_base(self.n, w)
            if isinstance(b, Leftover):
                return f"X{b.m + 1}"
            return str(b)
        return str(gen_partition(self.n).classify(w))


@dataclass(frozen=True, eq=False)
class LabelIs:
    labeler: BallLabeler
    label: str

    def __call__(self, y) -> bool:
        return self.labeler(y) == self.label


@dataclass(frozen=True)
class PointIs:
    point: RationalVector

    def __call__(self, y) -> bool:
        return y == self.point


@dataclass
class BallDemo:
    witness: ParadoxWitness
    reports: list[Report]
    points: list[LabeledPoint] = field(default_factory=list)
    universe: PointUniverse | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def ball_layers(radii) -> list[Fraction]:
    """Distinct radii in (0, 1], unit layer first."""
    rs = [Fraction(r) for r in radii]
    if len(set(rs)) != len(rs):
        raise ValueError("radii must be distinct")
    for r in rs:
        if not 0 < r <= 1:
            raise ValueError(f"radius {r} is outside (0, 1]")
    rest = [r for r in rs if r != 1]
    return [Fraction(1)] + rest


def build_ball_witness(n: int, universe: PointUniverse) -> ParadoxWitness:
    part = gen_partition(n)
    labeler = BallLabeler(n, universe, (0, 0))
    x1 = universe.seed_points[0]
    groups = []
    for i in range(n):
        pieces = [
            Piece(str(A(i)), LabelIs(labeler, str(A(i))), Isometry()),
            Piece(str(B(i)), LabelIs(labeler, str(B(i))), Isometry(part.gammas[i])),
        ]
        if i > 0:
            xi = apply(rho(power(Word((SIGMA,)), 1 - i), universe.pair), x1)
            pieces.append(Piece(f"X{i}", PointIs(xi), Isometry(EMPTY, -xi), singleton=True))
        groups.append(EquidecompWitness(f"P{i}", tuple(pieces)))
    info = {
        "partition": part.describe(),
        "movers": {p.ref: p.mover.describe() for g in groups for p in g.pieces},
    }
    return ParadoxWitness(n, tuple(groups), info)


def ball_demo(
    n: int,
    seeds,
    radii,
    depth: int,
    pair: GeneratorPair = STANDARD_PAIR,
    workers: int = 1,
) -> BallDemo:
    """Build and validate the 3n-1 piece witness on sampled layers plus the origin.

    The unit layer is always included; the first seed is the designated
    orbit carrying the singletons x_j = sigma^(1-j) x_1.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    seeds = list(seeds)
    if not seeds:
        raise ValueError("at least one seed is required")
    layers = ball_layers(radii)
    certify_seeds(seeds, 2 * depth, pair)
    part = gen_partition(n)
    ext = max(len(g) for g in part.gammas)
    universe = PointUniverse(seeds, depth, ext, pair, radii=layers, origin=True)
    witness = build_ball_witness(n, universe)

    check = validate(witness, universe, workers)
    check.extra["certificate_bound"] = 2 * depth
    check.extra["seeds"] = [_seed_text(s) for s in seeds]
    check.extra["radii"] = [str(r) for r in layers]
    check.extra["movers"] = witness.info["movers"]
    shape = ball_witness_shape(witness)

    origin = Report("ball_origin", {"n": n})
    origin.words_checked = 1
    pieces = {p.ref: p for p in witness.all_pieces()}
    if not pieces["A0"].contains(ZERO):
        origin.add("0", 0, "origin is not in A0")
    if pieces["B0"].contains(universe.act_inverse(pieces["B0"].mover, ZERO)):
        origin.add("0", 0, "gamma_0(B0) contains the origin")

    labeler = BallLabeler(n, universe, (0, 0))
    points = [LabeledPoint(ZERO, Fraction(0), "A0", "", -1)]
    for li, m, w, y in universe.entries():
        points.append(LabeledPoint(y, layers[li], labeler(y) or "", format_word(w), m))
    check.extra["points"] = len(points)
    return BallDemo(witness, [check, shape, origin], points, universe)
