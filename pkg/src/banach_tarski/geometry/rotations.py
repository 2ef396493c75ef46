"""Rational rotations and the homomorphism from F2 into SO(3).

Bulk sweeps work on integer matrices with an implicit denominator d^|w|,
where d is the common denominator of the generator entries; this keeps every
comparison exact without paying for Fraction normalisation on each step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, partial

from .._sweep import run_tasks
from ..report import Report
from ..words import (
    SIGMA,
    SIGMA_INV,
    TAU,
    TAU_INV,
    Word,
    count_reduced,
    format_word,
    reduce,
    word_key,
)
from .rational import RationalVector, SphereRay, common_denominator

IntMatrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


class UndefinedAxisError(ValueError):
    """rho(w) is the identity, so there is no axis."""


@dataclass(frozen=True)
class RotationMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(c) for c in r) for r in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("a rotation matrix is 3x3")
        object.__setattr__(self, "rows", rows)
        if not self.is_rotation():
            raise ValueError("matrix is not in SO(3): M^T M != I or det != 1")

    @classmethod
    def identity(cls) -> "RotationMatrix":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def __matmul__(self, other: "RotationMatrix") -> "RotationMatrix":
        return RotationMatrix(_matmul(self.rows, other.rows))

    @property
    def T(self) -> "RotationMatrix":
        return RotationMatrix(tuple(zip(*self.rows)))

    def det(self) -> Fraction:
        return _det(self.rows)

    def is_rotation(self) -> bool:
        mtm = _matmul(tuple(zip(*self.rows)), self.rows)
        return mtm == _IDENTITY and self.det() == 1

    def is_identity(self) -> bool:
        return self.rows == _IDENTITY

    def denominators(self) -> set[int]:
        return {c.denominator for r in self.rows for c in r}

    def to_lists(self) -> list[list[str]]:
        return [[str(c) for c in r] for r in self.rows]


_IDENTITY = tuple(tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3))


def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3))


def _det(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


@dataclass(frozen=True)
class GeneratorPair:
    """Images of sigma and tau; inverses act by the transposes."""

    a: RotationMatrix
    b: RotationMatrix
    name: str = "custom"
    den: int = field(init=False, compare=False)
    ints: tuple[IntMatrix, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        d = math.lcm(*self.a.denominators(), *self.b.denominators())
        mats = {
            SIGMA: self.a.rows,
            SIGMA_INV: self.a.T.rows,
            TAU: self.b.rows,
            TAU_INV: self.b.T.rows,
        }
        ints = tuple(
            tuple(tuple(int(c * d) for c in r) for r in mats[x]) for x in range(4)
        )
        object.__setattr__(self, "den", d)
        object.__setattr__(self, "ints", ints)

    def describe(self) -> dict:
        return {"name": self.name, "sigma": self.a.to_lists(), "tau": self.b.to_lists()}


_SIGMA_Z = RotationMatrix(
    (
        (Fraction(3, 5), Fraction(-4, 5), 0),
        (Fraction(4, 5), Fraction(3, 5), 0),
        (0, 0, 1),
    )
)

# Rotations by arccos(3/5) about the z axis (sigma) and the y axis (tau).
# The z/x variant puts (3/5, 4/5, 0) = sigma(1, 0, 0) on the axis of
# sigma tau sigma^-1, so the y axis is the default.
STANDARD_PAIR = GeneratorPair(
    _SIGMA_Z,
    RotationMatrix(
        (
            (Fraction(3, 5), 0, Fraction(4, 5)),
            (0, 1, 0),
            (Fraction(-4, 5), 0, Fraction(3, 5)),
        )
    ),
    name="zy",
)

ZX_PAIR = GeneratorPair(
    _SIGMA_Z,
    RotationMatrix(
        (
            (1, 0, 0),
            (0, Fraction(3, 5), Fraction(-4, 5)),
            (0, Fraction(4, 5), Fraction(3, 5)),
        )
    ),
    name="zx",
)

PAIRS = {"zy": STANDARD_PAIR, "zx": ZX_PAIR}


def _imul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(  # type: ignore[return-value]
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] for j in range(3))
        for i in range(3)
    )


def int_image(w: tuple, pair: GeneratorPair = STANDARD_PAIR) -> tuple[IntMatrix, int]:
    """(N, den) with rho(w) = N / den exactly."""
    m: IntMatrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for x in w:
        m = _imul(m, pair.ints[x])
    return m, pair.den ** len(w)


@lru_cache(maxsize=4096)
def _rho_cached(w: tuple, pair: GeneratorPair) -> RotationMatrix:
    m, den = int_image(w, pair)
    return RotationMatrix(tuple(tuple(Fraction(c, den) for c in r) for r in m))


def rho(w: tuple, pair: GeneratorPair = STANDARD_PAIR) -> RotationMatrix:
    """The rotation assigned to a word: sigma -> a, tau -> b, extended multiplicatively."""
    return _rho_cached(tuple(reduce(w)), pair)


def apply(m: RotationMatrix, p):
    """Exact image of a vector or ray under a rotation."""
    if isinstance(p, SphereRay):
        v = p.vector
        num = [sum(r[k] * v[k] for k in range(3)) for r in m.rows]
        return SphereRay.of(num)
    r = m.rows
    return RationalVector(
        r[0][0] * p[0] + r[0][1] * p[1] + r[0][2] * p[2],
        r[1][0] * p[0] + r[1][1] * p[1] + r[1][2] * p[2],
        r[2][0] * p[0] + r[2][1] * p[1] + r[2][2] * p[2],
    )


def act(w: tuple, p, pair: GeneratorPair = STANDARD_PAIR):
    return apply(rho(w, pair), p)


def _nullspace_line(rows) -> tuple[Fraction, Fraction, Fraction]:
    """A nonzero kernel vector of a rank-2 rational 3x3 matrix."""
    m = [list(r) for r in rows]
    pivots = []
    row = 0
    for col in range(3):
        piv = next((i for i in range(row, 3) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        lead = m[row][col]
        m[row] = [c / lead for c in m[row]]
        for i in range(3):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(3) if c not in pivots]
    if len(free) != 1:
        raise UndefinedAxisError(f"kernel has dimension {len(free)}")
    f = free[0]
    v = [Fraction(0)] * 3
    v[f] = Fraction(1)
    for i, col in enumerate(pivots):
        v[col] = -m[i][f]
    return tuple(v)  # type: ignore[return-value]


def fixed_ray(w: tuple, pair: GeneratorPair = STANDARD_PAIR) -> SphereRay:
    """Canonical ray spanning the rotation axis of rho(w)."""
    m = rho(w, pair)
    if m.is_identity():
        raise UndefinedAxisError(f"rho({format_word(w)!r}) is the identity")
    shifted = tuple(
        tuple(c - (1 if i == j else 0) for j, c in enumerate(r)) for i, r in enumerate(m.rows)
    )
    return SphereRay.of(_nullspace_line(shifted))


def commute_check(u: tuple, v: tuple, pair: GeneratorPair = STANDARD_PAIR) -> bool:
    a, b = rho(u, pair), rho(v, pair)
    return (a @ b).rows == (b @ a).rows


# -- freeness certificate ------------------------------------------------------


def _freeness_task(pair: GeneratorPair, max_len: int, prefix: tuple) -> tuple[list, int, int]:
    """DFS over the reduced words starting with ``prefix``."""
    rep = Report("freeness")
    d = pair.den
    gens = pair.ints
    m0, _ = int_image(prefix, pair)
    stack = [(m0, prefix)]
    checked = 0
    while stack:
        m, w = stack.pop()
        k = len(w)
        checked += 1
        s = d**k
        if m == ((s, 0, 0), (0, s, 0), (0, 0, s)):
            rep.add(format_word(w), None, "rho(w) is the identity")
        s2 = s * s
        for i in range(3):
            for j in range(i, 3):
                g = m[0][i] * m[0][j] + m[1][i] * m[1][j] + m[2][i] * m[2][j]
                if g != (s2 if i == j else 0):
                    rep.add(format_word(w), None, "rho(w) is not orthogonal")
        if _det(m) != s2 * s:
            rep.add(format_word(w), None, "det rho(w) != 1")
        if k < max_len:
            bad = w[-1] ^ 1
            for x in (3, 2, 1, 0):
                if x != bad:
                    stack.append((_imul(m, gens[x]), w + (x,)))
    return rep.violations, rep.violation_count, checked


def freeness_scan(max_len: int, pair: GeneratorPair = STANDARD_PAIR, workers: int = 1) -> Report:
    """Check rho(w) != I, M^T M = I and det = 1 for every reduced w != e, |w| <= max_len."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    prefixes = [(a,) for a in range(4)] if max_len < 2 else [
        (a, b) for a in range(4) for b in range(4) if b != a ^ 1
    ]
    rep = Report("freeness", {"max_len": max_len, "generators": pair.name})
    if max_len >= 2:
        for a in range(4):
            viol, count, checked = _freeness_task(pair, 1, (a,))
            rep.merge(viol, count, checked)
    task = partial(_freeness_task, pair, max_len)
    for viol, count, checked in run_tasks(task, prefixes, workers):
        rep.merge(viol, count, checked)
    expected = count_reduced(max_len) - 1
    rep.extra["expected_nontrivial_words"] = expected
    rep.extra["count_formula"] = "2(3^L - 1)"
    if rep.words_checked != expected:
        rep.add("", None, f"checked {rep.words_checked} words, expected {expected}")
    rep.violations.sort(key=lambda v: (len(v["word"]), v["word"]))
    return rep


# -- stabiliser scans ------------------------------------------------------------


def _stab_task(pair: GeneratorPair, target: tuple, is_ray: bool, max_len: int, first: int) -> list[Word]:
    """Words x.w (built by prepending) whose image fixes the target."""
    d = pair.den
    gens = pair.ints
    found: list[Word] = []

    def mv(g, v):
        return (
            g[0][0] * v[0] + g[0][1] * v[1] + g[0][2] * v[2],
            g[1][0] * v[0] + g[1][1] * v[1] + g[1][2] * v[2],
            g[2][0] * v[0] + g[2][1] * v[1] + g[2][2] * v[2],
        )

    tx, ty, tz = target
    scaled = [tuple(c * d**k for c in target) for k in range(max_len + 1)]
    stack = [(mv(gens[first], target), (first,))]
    while stack:
        v, w = stack.pop()
        k = len(w)
        if is_ray:
            cross = (v[1] * tz - v[2] * ty, v[2] * tx - v[0] * tz, v[0] * ty - v[1] * tx)
            if cross == (0, 0, 0) and v[0] * tx + v[1] * ty + v[2] * tz > 0:
                found.append(Word(w))
        elif v == scaled[k]:
            found.append(Word(w))
        if k < max_len:
            bad = w[0] ^ 1
            for x in range(4):
                if x != bad:
                    stack.append((mv(gens[x], v), (x,) + w))
    return found


@lru_cache(maxsize=64)
def _stabilizer_cached(target: tuple, is_ray: bool, max_len: int, pair: GeneratorPair, workers: int) -> tuple:
    task = partial(_stab_task, pair, target, is_ray, max_len)
    found = [w for part in run_tasks(task, list(range(4)), workers) for w in part]
    return tuple(sorted(found, key=word_key))


def stabilizer_scan(p, max_len: int, pair: GeneratorPair = STANDARD_PAIR, workers: int = 1) -> list[Word]:
    """All reduced w != e with |w| <= max_len and rho(w) p = p, in enumeration order."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if isinstance(p, SphereRay):
        target, is_ray = p.vector, True
    else:
        target, _ = common_denominator(RationalVector.of(*p))
        is_ray = False
    return list(_stabilizer_cached(tuple(target), is_ray, max_len, pair, workers))
