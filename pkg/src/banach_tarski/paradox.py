"""Equidecomposition and (n, r)-paradoxicality witnesses, and their validator.

A witness is data: pieces given by membership predicates plus one mover per
piece.  Validation never materialises images.  For every sampled element y
it checks that y lies in exactly one piece overall, and that for each group
exactly one piece E_k satisfies mover_k^-1 . y in E_k.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field, replace
from functools import partial
from typing import Any, Protocol

from ._sweep import run_chunks
from .orbit import StabilizedOrbit, canonical_form
from .partition import PieceIndex, TheoremPartition, Variant, build_21gen, build_21tau
from .report import Report
from .words import (
    EMPTY,
    SIGMA,
    Word,
    concat,
    enumerate_reduced,
    format_word,
    invert,
    parse,
    power,
)

__all__ = [
    "ConfigurationError",
    "FreenessError",
    "Piece",
    "EquidecompWitness",
    "ParadoxWitness",
    "Universe",
    "F2Universe",
    "SymbolicSeedUniverse",
    "PartitionPiece",
    "TransferredPiece",
    "f2_paradox_witness",
    "validate",
    "assert_lower_bound",
    "transfer_witness",
    "ball_witness_shape",
    "mutate",
    "witness_descriptor",
    "witness_from_descriptor",
]


class ConfigurationError(ValueError):
    """A witness or universe is malformed (e.g. a mover with no inverse action)."""


class FreenessError(ValueError):
    def __init__(self, seed: Any, word: Word):
        self.seed = seed
        self.word = word
        super().__init__(f"seed {seed!r} is fixed by {format_word(word)!r}")


@dataclass(frozen=True)
class Piece:
    ref: str
    contains: Callable[[Any], bool]
    mover: Any
    singleton: bool = False


@dataclass(frozen=True)
class EquidecompWitness:
    """Pieces E_0..E_{r-1} of a source set, with the movers taking them onto the universe."""

    source: str
    pieces: tuple[Piece, ...]

    @property
    def r(self) -> int:
        return len(self.pieces)


@dataclass(frozen=True)
class ParadoxWitness:
    n: int
    groups: tuple[EquidecompWitness, ...]
    info: dict = field(default_factory=dict, compare=False)

    @property
    def r(self) -> int:
        return sum(g.r for g in self.groups)

    def all_pieces(self) -> list[Piece]:
        return [p for g in self.groups for p in g.pieces]


class Universe(Protocol):
    """A finite sample with exact membership and an exact inverse action."""

    name: str

    def elements(self) -> Sequence[Any]: ...

    def act_inverse(self, mover: Any, y: Any) -> Any: ...

    def label(self, y: Any) -> str: ...


@dataclass(frozen=True)
class PartitionPiece:
    """Membership in one piece of a word partition."""

    partition: TheoremPartition
    piece: PieceIndex

    def __call__(self, w) -> bool:
        return self.partition.classify(w) == self.piece


@dataclass(frozen=True)
class ShrunkPiece:
    inner: Callable[[Any], bool]
    removed: Any

    def __call__(self, y) -> bool:
        return y != self.removed and self.inner(y)


@dataclass(frozen=True)
class F2Universe:
    """All reduced words of length <= max_len under left multiplication."""

    max_len: int

    @property
    def name(self) -> str:
        return f"F2 reduced words |w| <= {self.max_len}"

    def elements(self) -> list[Word]:
        return list(enumerate_reduced(self.max_len))

    def act_inverse(self, mover: Any, y: Word) -> Word:
        if not isinstance(mover, Word):
            raise ConfigurationError(f"mover {mover!r} has no inverse action on F2")
        return concat(invert(mover), y)

    def label(self, y: Word) -> str:
        return format_word(y)


@dataclass(frozen=True)
class SymbolicSeedUniverse:
    """Orbit fragments of symbolic seeds: elements are (seed index, canonical word).

    A seed with ``stabilizer=None`` has a free orbit (a copy of F2); otherwise
    its orbit is F2 / <omega> as in :mod:`banach_tarski.orbit`.
    """

    depth: int
    stabilizers: tuple[StabilizedOrbit | None, ...] = (None,)

    @property
    def name(self) -> str:
        return f"{len(self.stabilizers)} symbolic seed orbit(s), depth {self.depth}"

    def _canon(self, m: int, w: Word) -> Word:
        orb = self.stabilizers[m]
        return w if orb is None else canonical_form(w, orb).zeta

    def elements(self) -> list[tuple[int, Word]]:
        out = []
        for m in range(len(self.stabilizers)):
            seen = set()
            for w in enumerate_reduced(self.depth):
                z = self._canon(m, w)
                if z not in seen:
                    seen.add(z)
                    out.append((m, z))
        return out

    def act_inverse(self, mover: Any, y: tuple[int, Word]) -> tuple[int, Word]:
        if not isinstance(mover, Word):
            raise ConfigurationError(f"mover {mover!r} has no inverse action")
        m, z = y
        return m, self._canon(m, concat(invert(mover), z))

    def locate(self, y: tuple[int, Word]) -> tuple[int, Word]:
        return y

    def seeds(self) -> list[tuple[int, Word]]:
        return [(m, EMPTY) for m in range(len(self.stabilizers))]

    def stabilizer(self, seed_index: int, bound: int) -> list[Word]:
        return [
            w for w in enumerate_reduced(bound) if w and not self._canon(seed_index, w)
        ]

    def label(self, y: tuple[int, Word]) -> str:
        return f"{y[0]}:{format_word(y[1])}"


@dataclass(frozen=True)
class TransferredPiece:
    """y lies in E' iff y = g . m for a seed m and g in E."""

    base: Callable[[Any], bool]
    universe: Any

    def __call__(self, y) -> bool:
        loc = self.universe.locate(y)
        if loc is None:
            return False
        return self.base(loc[1])


def _partition_from(desc: dict) -> TheoremPartition:
    n = int(desc["n"])
    omega = parse(desc.get("omega", ""))
    if desc.get("variant", "gen21") == Variant.TAU21.value:
        return build_21tau(n, omega)
    return build_21gen(n, omega)


def f2_paradox_witness(n: int) -> ParadoxWitness:
    """P_j = A_j u B_j, with A_j moved by the identity and B_j by gamma_j."""
    p = build_21gen(n, power(Word((SIGMA,)), -(n - 1)))
    groups = []
    for j in range(n):
        a, b = PieceIndex("A", j), PieceIndex("B", j)
        groups.append(
            EquidecompWitness(
                f"P{j}",
                (
                    Piece(str(a), PartitionPiece(p, a), EMPTY),
                    Piece(str(b), PartitionPiece(p, b), p.gammas[j]),
                ),
            )
        )
    return ParadoxWitness(n, tuple(groups), {"partition": p.describe()})


def assert_lower_bound(witness: ParadoxWitness) -> bool:
    """r >= 2n; a validated witness with fewer pieces cannot exist."""
    return witness.r >= 2 * witness.n


def _validate_chunk(witness: ParadoxWitness, universe: Any, elements) -> tuple[list, int, int]:
    rep = Report("paradox_validate")
    groups = witness.groups
    for y in elements:
        hits = [p.ref for g in groups for p in g.pieces if p.contains(y)]
        if len(hits) != 1:
            rep.add(universe.label(y), None, f"element lies in pieces {hits} (expected exactly one)")
        for j, g in enumerate(groups):
            covers = [p.ref for p in g.pieces if p.contains(universe.act_inverse(p.mover, y))]
            if len(covers) != 1:
                rep.add(
                    universe.label(y),
                    j,
                    f"group {g.source}: element covered by images of {covers} (expected exactly one)",
                )
    return rep.violations, rep.violation_count, len(elements)


def validate(witness: ParadoxWitness, universe: Any, workers: int = 1) -> Report:
    """Check the witness on every element of ``universe`` (membership-dual form)."""
    for piece in witness.all_pieces():
        if piece.mover is None:
            raise ConfigurationError(f"piece {piece.ref} has no mover")
    elements = universe.elements()
    rep = Report(
        "paradox_validate",
        {"n": witness.n, "r": witness.r, "universe": universe.name},
    )
    for viol, count, checked in run_chunks(partial(_validate_chunk, witness, universe), elements, workers):
        rep.merge(viol, count, checked)
    bound = assert_lower_bound(witness)
    rep.extra["lower_bound"] = {"r": witness.r, "two_n": 2 * witness.n, "holds": bound}
    if not bound and rep.passed:
        rep.add("", None, "critical anomaly: a witness with r < 2n validated")
    rep.extra["group_sizes"] = [g.r for g in witness.groups]
    return rep


def transfer_witness(base: ParadoxWitness, universe: Any, freeness_bound: int) -> ParadoxWitness:
    """Carry a witness on F2 over to the seeded orbits of ``universe``.

    Every seed must have no nontrivial stabiliser word of length <=
    ``freeness_bound``.  The global choice of one point per orbit is replaced
    by the universe's explicit finite seed list, so the result speaks only
    about those orbits.
    """
    for m, _ in enumerate(universe.seeds()):
        bad = universe.stabilizer(m, freeness_bound)
        if bad:
            raise FreenessError(m, bad[0])
    groups = tuple(
        EquidecompWitness(
            g.source,
            tuple(replace(p, contains=TransferredPiece(p.contains, universe)) for p in g.pieces),
        )
        for g in base.groups
    )
    info = dict(base.info)
    info["transfer"] = {
        "seeds": len(universe.seeds()),
        "freeness_bound": freeness_bound,
        "scope": "claims restricted to the union of the seeded orbits",
    }
    return ParadoxWitness(base.n, groups, info)


def ball_witness_shape(witness: ParadoxWitness) -> Report:
    """Check the 2 + 3(n-1) shape: 3n-1 pieces, n-1 singletons, one 2-piece group."""
    n = witness.n
    rep = Report("ball_witness_shape", {"n": n})
    pieces = witness.all_pieces()
    singletons = sum(p.singleton for p in pieces)
    sizes = sorted(g.r for g in witness.groups)
    rep.words_checked = len(pieces)
    if len(pieces) != 3 * n - 1:
        rep.add("", None, f"{len(pieces)} pieces, expected {3 * n - 1}")
    if singletons != n - 1:
        rep.add("", None, f"{singletons} singletons, expected {n - 1}")
    if sizes != [2] + [3] * (n - 1):
        rep.add("", None, f"group sizes {sizes}, expected one 2 and {n - 1} threes")
    for g in witness.groups:
        if g.r == 3 and sum(p.singleton for p in g.pieces) != 1:
            rep.add("", None, f"group {g.source} has 3 pieces but not exactly one singleton")
    rep.extra["pieces"] = len(pieces)
    rep.extra["singletons"] = singletons
    rep.extra["group_sizes"] = [g.r for g in witness.groups]
    return rep


def mutate(witness: ParadoxWitness, kind: str, removed: Any = EMPTY) -> ParadoxWitness:
    """Corrupt a witness: ``drop_piece``, ``swap_movers`` or ``shrink_piece``.

    All three touch group 0; ``shrink_piece`` removes ``removed`` from the
    first piece of group 0 that contains it.
    """
    g0 = witness.groups[0]
    pieces = list(g0.pieces)
    if kind == "drop_piece":
        pieces = pieces[:-1]
    elif kind == "swap_movers":
        a, b = pieces[0], pieces[1]
        pieces[0], pieces[1] = replace(a, mover=b.mover), replace(b, mover=a.mover)
    elif kind == "shrink_piece":
        for k, p in enumerate(pieces):
            if p.contains(removed):
                pieces[k] = replace(p, contains=ShrunkPiece(p.contains, removed))
                break
        else:
            raise ValueError("no piece of group 0 contains the element to remove")
    else:
        raise ValueError(f"unknown mutation {kind!r}")
    groups = (EquidecompWitness(g0.source, tuple(pieces)),) + witness.groups[1:]
    return ParadoxWitness(witness.n, groups, dict(witness.info, mutation=kind))


def witness_descriptor(witness: ParadoxWitness, universe_ref: str) -> dict:
    """Replayable JSON form of a word-partition witness."""
    groups = []
    for g in witness.groups:
        groups.append(
            {
                "source_piece": g.source,
                "piece_refs": [p.ref for p in g.pieces],
                "movers": [format_word(p.mover) for p in g.pieces],
            }
        )
    return {
        "n": witness.n,
        "partition": witness.info.get("partition", {}),
        "groups": groups,
        "universe_ref": universe_ref,
    }


def witness_from_descriptor(desc: dict | str) -> ParadoxWitness:
    if isinstance(desc, str):
        desc = json.loads(desc)
    try:
        n = int(desc["n"])
        part = _partition_from(desc.get("partition") or {"n": n, "omega": format_word(power(Word((SIGMA,)), 1 - n))})
        groups = []
        for g in desc["groups"]:
            refs, movers = g["piece_refs"], g["movers"]
            if len(refs) != len(movers):
                raise ConfigurationError(f"group {g['source_piece']}: {len(refs)} pieces but {len(movers)} movers")
            pieces = tuple(
                Piece(ref, PartitionPiece(part, PieceIndex.parse(ref)), parse(mv))
                for ref, mv in zip(refs, movers)
            )
            groups.append(EquidecompWitness(g["source_piece"], pieces))
    except (KeyError, TypeError) as exc:
        raise ConfigurationError(f"malformed witness descriptor: {exc}") from exc
    return ParadoxWitness(n, tuple(groups), {"partition": part.describe()})

