"""Orbits whose points have a nontrivial stabiliser, modelled symbolically.

The orbit of a base point x with Stab(x) = <omega> is F2 modulo right
multiplication by powers of omega.  Each point y = rho . x has a unique
canonical word zeta ending neither in alpha^-1 (alpha = first letter of
omega) nor in omega, and points are classified through their canonical
word.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import partial

from ._sweep import run_chunks
from .partition import PieceIndex, TheoremPartition, build_21gen, build_21tau
from .report import Report
from .words import (
    EMPTY,
    SIGMA,
    SIGMA_INV,
    TAU,
    TAU_INV,
    Word,
    concat,
    enumerate_reduced,
    format_word,
    has_suffix,
    invert,
    power,
    reduce,
)

__all__ = [
    "StabilizedOrbit",
    "OrbitElement",
    "OrbitVariant",
    "OrbitPartition",
    "Normalization",
    "normalize_omega",
    "canonical_form",
    "is_canonical",
    "act",
    "build_orbit_partition",
    "classify_orbit",
    "basepoint_stabilizer",
    "verify_canonical_uniqueness",
    "verify_orbit_pairing",
    "ORBIT_SUITE",
]


@dataclass(frozen=True)
class StabilizedOrbit:
    """An orbit whose base point is fixed exactly by the powers of ``omega``."""

    omega: Word

    def __post_init__(self) -> None:
        w = self.omega
        if not w:
            raise ValueError("omega must be a nontrivial word")
        if reduce(w) != w:
            raise ValueError("omega must be reduced")
        if w[-1] == w[0] ^ 1:
            raise ValueError(f"omega {format_word(w)!r} ends with the inverse of its first letter")
        if w[0] != TAU and any(x != SIGMA_INV for x in w):
            raise ValueError(f"omega {format_word(w)!r} is not normalized (t-initial or S^k)")

    @property
    def alpha(self) -> int:
        return self.omega[0]

    @property
    def omega_inv(self) -> Word:
        return invert(self.omega)


@dataclass(frozen=True)
class OrbitElement:
    zeta: Word

    def __str__(self) -> str:
        return format_word(self.zeta)


@dataclass
class Normalization:
    """Outcome of :func:`normalize_omega`.

    ``rebase`` is the word c such that the new base point is c . x; the steps
    record each conjugation or inversion in order.
    """

    orbit: StabilizedOrbit
    steps: list[dict] = field(default_factory=list)
    rebase: Word = EMPTY

    def transcript(self) -> list[dict]:
        return list(self.steps)


def normalize_omega(omega: tuple) -> Normalization:
    """Bring a stabilising word to the form t... or S^k.

    Conjugating omega by its first letter alpha (omega -> alpha^-1 omega alpha)
    moves the base point to alpha^-1 . x; inverting omega keeps it.
    """
    w = reduce(omega)
    if not w:
        raise ValueError("omega must be a nontrivial word")
    steps: list[dict] = []
    rebase: Word = EMPTY

    while len(w) > 1 and w[-1] == w[0] ^ 1:
        a = w[0]
        w = Word(w[1:-1])
        rebase = concat(Word((a ^ 1,)), rebase)
        steps.append({"step": "cyclic_reduce", "by": format_word((a,)), "omega": format_word(w)})

    has_t = TAU in w
    has_T = TAU_INV in w
    if not has_t and not has_T:
        if w[0] == SIGMA:
            w = invert(w)
            steps.append({"step": "invert", "by": "", "omega": format_word(w)})
        return Normalization(StabilizedOrbit(w), steps, rebase)
    if not has_t:
        w = invert(w)
        steps.append({"step": "invert", "by": "", "omega": format_word(w)})
    while w[0] != TAU:
        a = w[0]
        w = Word(w[1:] + (a,))
        rebase = concat(Word((a ^ 1,)), rebase)
        steps.append({"step": "conjugate", "by": format_word((a,)), "omega": format_word(w)})
    return Normalization(StabilizedOrbit(w), steps, rebase)


def is_canonical(z: tuple, orbit: StabilizedOrbit) -> bool:
    return not (z and z[-1] == orbit.alpha ^ 1) and not has_suffix(z, orbit.omega)


def canonical_form(rho: tuple, orbit: StabilizedOrbit) -> OrbitElement:
    """The unique representative of rho <omega> ending neither in alpha^-1 nor in omega."""
    om = orbit.omega
    bad = orbit.alpha ^ 1
    z = reduce(rho)
    k = len(om)
    while k <= len(z) and z[-k:] == om:
        z = Word(z[:-k])
    guard = len(z) + 1
    while z and z[-1] == bad:
        z = concat(z, om)
        guard -= 1
        if guard < 0:  # pragma: no cover - the padding loop is finite for cyclically reduced omega
            raise RuntimeError(f"canonical form of {format_word(rho)!r} did not settle")
    if not is_canonical(z, orbit):
        raise AssertionError(f"canonical form {format_word(z)!r} violates a suffix condition")
    return OrbitElement(z)


def act(g: tuple, y: OrbitElement, orbit: StabilizedOrbit) -> OrbitElement:
    """g . (zeta . x) = (g zeta) . x, re-canonicalised."""
    return canonical_form(concat(g, y.zeta), orbit)


class OrbitVariant(str, enum.Enum):
    ALPHA_TAU = "alpha_tau"
    OMEGA_SIGMA_K = "omega_sigma_k"


@dataclass(frozen=True, eq=False)
class OrbitPartition:
    n: int
    orbit: StabilizedOrbit
    variant: OrbitVariant
    partition: TheoremPartition

    @property
    def gammas(self) -> tuple[Word, ...]:
        return self.partition.gammas


def build_orbit_partition(n: int, orbit: StabilizedOrbit) -> OrbitPartition:
    if orbit.alpha == TAU:
        return OrbitPartition(n, orbit, OrbitVariant.ALPHA_TAU, build_21tau(n, orbit.omega))
    return OrbitPartition(n, orbit, OrbitVariant.OMEGA_SIGMA_K, build_21gen(n, orbit.omega))


def classify_orbit(part: OrbitPartition, y: OrbitElement) -> PieceIndex:
    return part.partition.classify(y.zeta)


def basepoint_stabilizer(orbit: StabilizedOrbit, max_len: int) -> list[Word]:
    """All words of length <= max_len fixing the base point (canonical form empty)."""
    return [w for w in enumerate_reduced(max_len) if not canonical_form(w, orbit).zeta]


# Reports always enumerate the stabiliser up to this length at most; longer
# powers of omega are checked individually.
STABILIZER_SCAN_CAP = 9


def _stabilizer_check(orbit: StabilizedOrbit, rep: Report) -> dict:
    om = orbit.omega
    bound = min(6 * len(om), STABILIZER_SCAN_CAP)
    found = set(basepoint_stabilizer(orbit, bound))
    expected = set()
    for k in range(-6, 7):
        p = power(om, k)
        if len(p) <= bound:
            expected.add(p)
        elif canonical_form(p, orbit).zeta:
            rep.add(format_word(p), None, f"omega^{k} does not fix the base point")
    for w in sorted(found ^ expected, key=lambda v: (len(v), tuple(v))):
        rep.add(format_word(w), None, "stabiliser of the base point is not exactly <omega>")
    shorter = [w for w in found if 0 < len(w) < len(om)]
    return {
        "scan_bound": bound,
        "stabilizer_words": len(found),
        "powers_checked_up_to": 6,
        "minimal_at_basepoint": not shorter,
        "minimality_note": "orbit-level minimality of omega is an input assumption; "
        "only the base point is scanned",
    }


def _uniqueness_chunk(orbit: StabilizedOrbit, max_len: int, words) -> tuple[list, int, int]:
    rep = Report("canonical_uniqueness")
    om = orbit.omega
    powers = [(k, power(om, k)) for k in (-3, -2, -1, 1, 2, 3)]
    for rho in words:
        c = canonical_form(rho, orbit)
        if not is_canonical(c.zeta, orbit):
            rep.add(format_word(rho), None, "canonical output violates a suffix condition")
        if canonical_form(c.zeta, orbit) != c:
            rep.add(format_word(rho), None, "canonical form not idempotent")
        for k, p in powers:
            other = concat(rho, p)
            if len(other) <= max_len and canonical_form(other, orbit) != c:
                rep.add(format_word(rho), None, f"rho and rho omega^{k} canonicalise differently")
    return rep.violations, rep.violation_count, len(words)


def verify_canonical_uniqueness(
    orbit: StabilizedOrbit, max_len: int, workers: int = 1, transcript: list | None = None
) -> Report:
    words = list(enumerate_reduced(max_len))
    rep = Report(
        "canonical_uniqueness",
        {"omega": format_word(orbit.omega), "max_len": max_len},
    )
    chunk = partial(_uniqueness_chunk, orbit, max_len)
    for viol, count, checked in run_chunks(chunk, words, workers):
        rep.merge(viol, count, checked)
    rep.extra["stabilizer"] = _stabilizer_check(orbit, rep)
    rep.extra["normalization_transcript"] = transcript or []
    return rep


def _orbit_pairing_chunk(part: OrbitPartition, words) -> tuple[list, int, int]:
    rep = Report("orbit_pairing")
    orbit = part.orbit
    p = part.partition
    ginv = [invert(g) for g in part.gammas]
    checked = 0
    for z in words:
        if not is_canonical(z, orbit):
            continue
        checked += 1
        y = OrbitElement(z)
        label = p.classify(z)
        hits = p.memberships(z)
        if hits != [label]:
            rep.add(format_word(z), None, f"membership {[str(q) for q in hits]} vs classifier {label}")
        for i in range(part.n):
            lhs = label != ("A", i)
            rhs = classify_orbit(part, act(ginv[i], y, orbit)) == ("B", i)
            if lhs != rhs:
                rep.add(format_word(z), i, "y not in A_i^O <=> gamma_i^-1 . y in B_i^O fails")
    return rep.violations, rep.violation_count, checked


def verify_orbit_pairing(
    part: OrbitPartition, max_len: int, workers: int = 1, transcript: list | None = None
) -> Report:
    """Check gamma_i(B_i^O) = O - A_i^O over canonical words of length <= max_len."""
    words = list(enumerate_reduced(max_len))
    rep = Report(
        "orbit_pairing",
        {"n": part.n, "omega": format_word(part.orbit.omega), "max_len": max_len},
    )
    for viol, count, checked in run_chunks(partial(_orbit_pairing_chunk, part), words, workers):
        rep.merge(viol, count, checked)
    rep.extra["variant"] = part.variant.value
    rep.extra["partition"] = part.partition.describe()
    rep.extra["normalization_transcript"] = transcript or []
    return rep


ORBIT_SUITE = ("t s", "t s t", "t t S", "S", "S S", "S S S")
