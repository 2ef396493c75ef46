"""Orbit fragments on the unit sphere and the 2n-piece sphere demo.

A fragment maps every reduced word of length <= D to the exact point
rho(w) . seed.  Pieces of the word partition are carried over to the points
through that map, and the pairing identities are then checked with exact
rotations instead of word arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

from ..orbit import build_orbit_partition, canonical_form, classify_orbit, normalize_omega
from ..paradox import (
    ConfigurationError,
    FreenessError,
    ParadoxWitness,
    f2_paradox_witness,
    transfer_witness,
    validate,
)
from ..partition import TheoremPartition, build_21gen
from ..report import Report
from ..words import EMPTY, SIGMA, Word, enumerate_reduced, format_word, invert, power
from .rational import RationalVector, SphereRay, is_sphere_point
from .rotations import (
    STANDARD_PAIR,
    GeneratorPair,
    act,
    apply,
    fixed_ray,
    int_image,
    rho,
    stabilizer_scan,
)


class InjectivityError(ValueError):
    def __init__(self, first: Word, second: Word, point: Any):
        self.first = first
        self.second = second
        self.point = point
        super().__init__(
            f"words {format_word(first)!r} and {format_word(second)!r} send the seed to the same point"
        )


@dataclass
class OrbitFragment:
    seed: Any
    depth: int
    points: dict[Word, Any]
    index: dict[Any, Word]

    def __len__(self) -> int:
        return len(self.points)

    def locate(self, p) -> Word | None:
        return self.index.get(p)


def orbit_fragment(seed, depth: int, pair: GeneratorPair = STANDARD_PAIR) -> OrbitFragment:
    """Exact points rho(w) . seed for |w| <= depth; raises if two words collide."""
    gens = [rho((x,), pair) for x in range(4)]
    points: dict[Word, Any] = {EMPTY: seed}
    index: dict[Any, Word] = {seed: EMPTY}
    for w in enumerate_reduced(depth):
        if not w:
            continue
        p = apply(gens[w[0]], points[Word(w[1:])])
        if p in index:
            raise InjectivityError(index[p], w, p)
        points[w] = p
        index[p] = w
    return OrbitFragment(seed, depth, points, index)


def seed_certificate(seed, bound: int, pair: GeneratorPair = STANDARD_PAIR) -> list[Word]:
    """Nontrivial words of length <= bound fixing the seed (empty means certified)."""
    return stabilizer_scan(seed, bound, pair)


def _seed_text(seed) -> str:
    return str(seed) if isinstance(seed, SphereRay) else seed.text()


@dataclass(frozen=True)
class LabeledPoint:
    point: RationalVector
    radius: Fraction
    label: str
    word: str
    seed: int


class PointUniverse:
    """Sphere layers of radius r through the orbit fragments of a few seeds.

    Elements are the points of depth <= ``depth``; points reached by the
    movers are looked up in fragments extended by ``extension`` letters.
    """

    def __init__(
        self,
        seeds,
        depth: int,
        extension: int,
        pair: GeneratorPair = STANDARD_PAIR,
        radii=(Fraction(1),),
        origin: bool = False,
    ):
        self.seed_points = list(seeds)
        self.depth = depth
        self.extension = extension
        self.pair = pair
        self.radii = [Fraction(r) for r in radii]
        self.origin = origin
        self.overlaps: list[tuple[int, int, Word, Word]] = []
        frags = [orbit_fragment(s, depth + extension, pair) for s in self.seed_points]
        self.fragments = frags
        self._index: dict[Any, tuple[tuple[int, int], Word]] = {}
        for li, r in enumerate(self.radii):
            for m, frag in enumerate(frags):
                for w, p in frag.points.items():
                    q = p if r == 1 else p.scale(r)
                    hit = self._index.get(q)
                    if hit is not None:
                        if li == 0:
                            self.overlaps.append((hit[0][1], m, hit[1], w))
                        continue
                    self._index[q] = ((li, m), w)
        self._inverse: dict[Any, Any] = {}

    @property
    def name(self) -> str:
        radii = ",".join(str(r) for r in self.radii)
        origin = " plus origin" if self.origin else ""
        return f"{len(self.seed_points)} seed orbit(s), depth {self.depth}, radii {radii}{origin}"

    def entries(self):
        """(layer index, seed index, word, point) for every element except the origin."""
        for li, r in enumerate(self.radii):
            for m, frag in enumerate(self.fragments):
                for w, p in frag.points.items():
                    if len(w) <= self.depth:
                        yield li, m, w, (p if r == 1 else p.scale(r))

    def elements(self) -> list:
        out = [RationalVector.of(0, 0, 0)] if self.origin else []
        out.extend(p for _, _, _, p in self.entries())
        return out

    def _rotation(self, w: Word):
        m = self._inverse.get(w)
        if m is None:
            m = rho(invert(w), self.pair)
            self._inverse[w] = m
        return m

    def act_inverse(self, mover, y):
        if isinstance(mover, Word):
            return apply(self._rotation(mover), y)
        inverse = getattr(mover, "inverse_apply", None)
        if inverse is None:
            raise ConfigurationError(f"mover {mover!r} has no inverse action on points")
        return inverse(y, self.pair)

    def locate(self, y):
        return self._index.get(y)

    def seeds(self) -> list:
        return list(self.seed_points)

    def stabilizer(self, seed_index: int, bound: int) -> list[Word]:
        return seed_certificate(self.seed_points[seed_index], bound, self.pair)

    def label(self, y) -> str:
        loc = self.locate(y)
        if loc is None:
            return f"({y.text()})"
        (li, m), w = loc
        return f"r={self.radii[li]} seed={m} w={format_word(w)!r}"

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_inverse"] = {}
        return state


@lru_cache(maxsize=None)
def gen_partition(n: int) -> TheoremPartition:
    """The partition behind the free-orbit witnesses (omega = sigma^-(n-1))."""
    return build_21gen(n, power(Word((SIGMA,)), -(n - 1)))


def certify_seeds(seeds, bound: int, pair: GeneratorPair) -> None:
    for s in seeds:
        if not isinstance(s, SphereRay) and not is_sphere_point(s):
            raise ValueError(f"seed ({s.text()}) is not an exact unit vector")
        bad = seed_certificate(s, bound, pair)
        if bad:
            raise FreenessError(_seed_text(s), bad[0])


@dataclass
class SphereDemo:
    witness: ParadoxWitness
    reports: list[Report]
    points: list[LabeledPoint] = field(default_factory=list)
    universe: PointUniverse | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def _agreement_report(universe: PointUniverse, part: TheoremPartition, n: int) -> tuple[Report, list[LabeledPoint]]:
    """Word labels against located-point labels, and points against direct products."""
    rep = Report("geometric_symbolic_agreement", {"n": n})
    points = []
    labels: set[str] = set()
    for li, m, w, y in universe.entries():
        rep.words_checked += 1
        seed = universe.seed_points[m]
        direct = _direct_image(w, seed, universe.pair)
        if direct != y:
            rep.add(format_word(w), None, "fragment point differs from rho(w) . seed")
        loc = universe.locate(y)
        word_label = str(part.classify(w))
        if loc is None or str(part.classify(loc[1])) != word_label:
            rep.add(format_word(w), None, "label from the word differs from label of the located point")
        labels.add(word_label)
        points.append(LabeledPoint(y, universe.radii[li], word_label, format_word(w), m))
    rep.extra["labels_used"] = sorted(labels)
    if len(labels) > 2 * n:
        rep.add("", None, f"{len(labels)} labels used, at most {2 * n} allowed")
    return rep, points


def _direct_image(w: Word, seed: RationalVector, pair: GeneratorPair) -> RationalVector:
    m, den = int_image(w, pair)
    return RationalVector(*(sum(Fraction(m[i][k], den) * seed[k] for k in range(3)) for i in range(3)))


def _disjointness_report(universe: PointUniverse) -> Report:
    rep = Report("orbit_disjointness", {"seeds": len(universe.seed_points)})
    rep.words_checked = len(universe._index)
    for a, b, wa, wb in universe.overlaps:
        rep.add(format_word(wb), None, f"seed {b} meets seed {a} at {format_word(wa)!r}: orbits coincide")
    return rep


def sphere_demo(
    n: int,
    seeds,
    depth: int,
    pair: GeneratorPair = STANDARD_PAIR,
    workers: int = 1,
) -> SphereDemo:
    """Label the fragment points by the transferred 2n-piece partition and validate it."""
    if n < 2:
        raise ValueError("n must be >= 2")
    seeds = list(seeds)
    if not seeds:
        raise ValueError("at least one seed is required")
    certify_seeds(seeds, 2 * depth, pair)
    part = gen_partition(n)
    ext = max(len(g) for g in part.gammas)
    universe = PointUniverse(seeds, depth, ext, pair)
    witness = transfer_witness(f2_paradox_witness(n), universe, 2 * depth)
    disjoint = _disjointness_report(universe)
    check = validate(witness, universe, workers)
    check.extra["certificate_bound"] = 2 * depth
    check.extra["seeds"] = [_seed_text(s) for s in seeds]
    agree, points = _agreement_report(universe, part, n)
    check.extra["points"] = len(points)
    return SphereDemo(witness, [disjoint, check, agree], points, universe)


# -- orbits through a rotation axis ---------------------------------------------


def axis_orbit_demo(n: int, omega: tuple, depth: int, pair: GeneratorPair = STANDARD_PAIR) -> Report:
    """Orbit of the fixed ray of omega, classified through canonical forms.

    The seed is moved to match the normalised stabiliser word; then the
    pairing y not in A_i <=> gamma_i^-1 . y in B_i is checked with exact
    rotations of rays.
    """
    norm = normalize_omega(omega)
    orbit = norm.orbit
    seed = apply(rho(norm.rebase, pair), fixed_ray(omega, pair))
    part = build_orbit_partition(n, orbit)
    rep = Report(
        "axis_orbit",
        {"n": n, "omega": format_word(Word(omega)), "depth": depth},
    )
    rep.extra["normalized_omega"] = format_word(orbit.omega)
    rep.extra["seed"] = str(seed)
    rep.extra["variant"] = part.variant.value
    rep.extra["normalization_transcript"] = norm.transcript()

    if act(orbit.omega, seed, pair) != seed:
        rep.add(format_word(orbit.omega), None, "normalised omega does not fix the moved seed")
    short = stabilizer_scan(seed, len(orbit.omega), pair)
    if set(short) != {orbit.omega, orbit.omega_inv}:
        rep.add(
            ",".join(format_word(w) for w in short), None,
            "stabiliser up to |omega| is not exactly omega^{+-1}",
        )

    ext = max(len(g) for g in part.gammas) + len(orbit.omega)
    gens = [rho((x,), pair) for x in range(4)]
    pts: dict[Word, SphereRay] = {EMPTY: seed}
    index: dict[SphereRay, Word] = {}
    for w in enumerate_reduced(depth + ext):
        if w:
            pts[w] = apply(gens[w[0]], pts[Word(w[1:])])
        z = canonical_form(w, orbit).zeta
        prev = index.get(pts[w])
        if prev is None:
            index[pts[w]] = z
        elif prev != z:
            rep.add(format_word(w), None, f"ray shared by canonical words {format_word(prev)!r} and {format_word(z)!r}")

    ginv = [rho(invert(g), pair) for g in part.gammas]
    for z, y in pts.items():
        if len(z) > depth or canonical_form(z, orbit).zeta != z:
            continue
        rep.words_checked += 1
        label = part.partition.classify(z)
        for i in range(n):
            z2 = index.get(apply(ginv[i], y))
            if z2 is None:
                rep.add(format_word(z), i, "gamma_i^-1 . y lies outside the extended fragment")
                continue
            lhs = label != ("A", i)
            rhs = classify_orbit(part, canonical_form(z2, orbit)) == ("B", i)
            if lhs != rhs:
                rep.add(format_word(z), i, "y not in A_i <=> gamma_i^-1 . y in B_i fails on rays")
    return rep
