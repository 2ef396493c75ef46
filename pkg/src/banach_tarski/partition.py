"""Partitions of F2 into 2n pieces A_0, B_0, ..., A_{n-1}, B_{n-1}.

Pieces are infinite, so they are represented by membership predicates.  The
base sets are prefix classes:

    A_0* = I(s)          B_0* = I(S^(n-1))         gamma_0 = s^(n-1)
    A_1* = I(t)          B_1* = I(S^(n-2) T)       gamma_1 = t s^(n-2)
    A_i* = I(S^(i-1) t)  B_i* = I(S^(i-2) T)       gamma_i = S^(i-1) t s^(i-2),  2 <= i < n

and they cover every word except the leftovers S^m, 0 <= m <= n-2.  Two
constructions patch the leftovers in while keeping gamma_i(B_i) = F2 - A_i:

* ``build_21gen`` puts a chosen word omega in the same piece as the empty word;
* ``build_21tau`` (omega starting with t) puts S^(i-1) into A_i for every i.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import partial
from typing import NamedTuple

from ._sweep import run_chunks
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
    invert,
    parse,
    power,
    reduce,
)

__all__ = [
    "PieceIndex",
    "Leftover",
    "Variant",
    "TheoremPartition",
    "gamma",
    "gamma_family",
    "base_prefix",
    "classify_base",
    "delta_power_member",
    "build_21gen",
    "build_21tau",
    "classify",
    "green_check",
    "verify_base_pairing",
    "verify_theorem_pairing",
    "omega_suite",
    "tau_suite",
]


class PieceIndex(NamedTuple):
    kind: str  # "A" or "B"
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "PieceIndex":
        if len(text) < 2 or text[0] not in "AB" or not text[1:].isdigit():
            raise ValueError(f"not a piece label: {text!r}")
        return cls(text[0], int(text[1:]))


@dataclass(frozen=True)
class Leftover:
    """The word S^m, 0 <= m <= n-2, which lies in no base set."""

    m: int

    def __str__(self) -> str:
        return f"leftover{self.m}"


def A(i: int) -> PieceIndex:
    return PieceIndex("A", i)


def B(i: int) -> PieceIndex:
    return PieceIndex("B", i)


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")


def gamma(n: int, i: int) -> Word:
    _check_n(n)
    if not 0 <= i < n:
        raise IndexError(f"gamma index {i} out of range for n={n}")
    s = Word((SIGMA,))
    t = Word((TAU,))
    if i == 0:
        return power(s, n - 1)
    if i == 1:
        return concat(t, power(s, n - 2))
    return concat(concat(power(s, -i + 1), t), power(s, i - 2))


def gamma_family(n: int) -> tuple[Word, ...]:
    return tuple(gamma(n, i) for i in range(n))


def base_prefix(n: int, piece: PieceIndex) -> Word:
    """The prefix alpha with base set = I(alpha), straight from the definitions."""
    _check_n(n)
    kind, i = piece
    s, t = Word((SIGMA,)), Word((TAU,))
    if kind == "A":
        if i == 0:
            return s
        if i == 1:
            return t
        return concat(power(s, -i + 1), t)
    if i == 0:
        return power(s, -n + 1)
    if i == 1:
        return concat(power(s, -n + 2), ~t)
    return concat(power(s, -i + 2), ~t)


def classify_base(n: int, w: tuple) -> PieceIndex | Leftover:
    """The base set containing ``w``, or ``Leftover(m)`` when w = S^m, m <= n-2."""
    if not w:
        return Leftover(0)
    x = w[0]
    if x == SIGMA:
        return PieceIndex("A", 0)
    if x == TAU:
        return PieceIndex("A", 1)
    lim = min(len(w), n - 1)
    m = 0
    while m < lim and w[m] == SIGMA_INV:
        m += 1
    if m >= n - 1:
        return PieceIndex("B", 0)
    if m == len(w):
        return Leftover(m)
    if w[m] == TAU:
        return PieceIndex("A", m + 1)
    # w[m] is T (an s cannot follow S in a reduced word)
    if m == n - 2:
        return PieceIndex("B", 1)
    return PieceIndex("B", m + 2)


def delta_power_member(w: tuple, delta: tuple, n: int) -> tuple[int, int] | None:
    """Find (k, m) with w = delta^-k S^m, k >= 0 and 0 <= m < n-1.

    Searches k = 0..|w| by testing whether delta^k w is a power S^m; larger k
    is impossible because the k-th power keeps at least k letters.
    """
    v = Word(w)
    d = Word(delta)
    for k in range(len(w) + 1):
        m = len(v)
        if m < n - 1 and all(x == SIGMA_INV for x in v):
            return k, m
        v = concat(d, v)
    return None


class Variant(str, enum.Enum):
    GEN21 = "gen21"
    TAU21 = "tau21"


_LEFTOVER_DEFAULT_NOTE = "omega is a leftover word; the construction runs as for omega = S^(n-1)"


@dataclass(frozen=True, eq=False)
class TheoremPartition:
    """A total classifier F2 -> {A_i, B_i}.

    For ``GEN21`` the distinguished index ``index`` carries C* (the base set
    holding omega) and D*; ``delta`` satisfies delta(D*) = F2 - C*.  Words
    delta^-k S^m (k >= 0, m < n-1) are moved into C's piece.  For ``TAU21``
    the words gamma_i^-k S^(i-1) (k >= 0) are moved into A_i for i >= 1.
    """

    n: int
    omega: Word
    variant: Variant
    original_omega: Word
    index: int | None = None
    c_piece: PieceIndex | None = None
    d_piece: PieceIndex | None = None
    delta: Word | None = None
    gammas: tuple[Word, ...] = ()
    # word -> tag for the moved families; complete for all words of length <= _covered[0]
    _table: dict = field(default_factory=dict, repr=False, compare=False)
    _covered: list = field(default_factory=lambda: [-1], repr=False, compare=False)

    @property
    def substituted(self) -> bool:
        return self.omega != self.original_omega

    def _extend(self, length: int) -> None:
        start = self._covered[0] + 1
        if start > length:
            return
        # generate a little ahead so the table is not rebuilt one length at a time
        target = max(length, 2 * start, 12)
        n = self.n
        if self.variant is Variant.GEN21:
            inv_delta = invert(self.delta)
            head = power(inv_delta, start)
            for k in range(start, target + 1):
                tail = EMPTY
                for m in range(n - 1):
                    self._table.setdefault(concat(head, tail), (k, m))
                    tail = concat(tail, Word((SIGMA_INV,)))
                head = concat(head, inv_delta)
        else:
            for i in range(1, n):
                inv_g = invert(self.gammas[i])
                suffix = power(Word((SIGMA,)), -(i - 1))
                head = power(inv_g, start)
                for k in range(start, target + 1):
                    self._table.setdefault(concat(head, suffix), (i, k))
                    head = concat(head, inv_g)
        self._covered[0] = target

    def moved(self, w: tuple) -> tuple[int, int] | None:
        """Tag of ``w`` in the moved family, or None.

        GEN21: (k, m) with w = delta^-k S^m.  TAU21: (i, k) with
        w = gamma_i^-k S^(i-1).
        """
        if len(w) > self._covered[0]:
            self._extend(len(w))
        return self._table.get(w)

    def classify(self, w: tuple) -> PieceIndex:
        if len(w) > self._covered[0]:
            self._extend(len(w))
        tag = self._table.get(w)
        if self.variant is Variant.GEN21:
            if tag is not None:
                return self.c_piece
            base = classify_base(self.n, w)
            if isinstance(base, Leftover):  # pragma: no cover - leftovers are all k = 0 members
                raise AssertionError(f"leftover {format_word(w)!r} missed by the moved family")
            return base
        if tag is not None:
            return PieceIndex("A", tag[0])
        base = classify_base(self.n, w)
        if isinstance(base, Leftover):  # pragma: no cover
            raise AssertionError(f"leftover {format_word(w)!r} missed by the moved family")
        return base

    def contains(self, piece: PieceIndex, w: tuple) -> bool:
        """Membership in ``piece`` evaluated from the set definitions directly."""
        return self._contains(piece, classify_base(self.n, w), self.moved(w))

    def memberships(self, w: tuple) -> list[PieceIndex]:
        """Every piece whose defining predicate accepts ``w`` (exactly one when sound)."""
        base, tag = classify_base(self.n, w), self.moved(w)
        return [q for q in self.pieces() if self._contains(q, base, tag)]

    def _contains(self, piece: PieceIndex, base, tag) -> bool:
        if self.variant is Variant.GEN21:
            if piece == self.c_piece:
                return base == piece or tag is not None
            if piece == self.d_piece:
                return base == piece and not (tag is not None and tag[0] >= 1)
            return base == piece
        kind, i = piece
        if i == 0:
            return base == piece
        in_family = tag is not None and tag[0] == i
        if kind == "A":
            return base == piece or in_family
        return base == piece and not (in_family and tag[1] >= 1)

    def pieces(self) -> list[PieceIndex]:
        return [p for i in range(self.n) for p in (A(i), B(i))]

    def describe(self) -> dict:
        out = {
            "variant": self.variant.value,
            "n": self.n,
            "omega": format_word(self.original_omega),
        }
        if self.variant is Variant.GEN21:
            out["effective_omega"] = format_word(self.omega)
            out["index"] = self.index
            out["c_piece"] = str(self.c_piece)
            out["delta"] = format_word(self.delta)
            if self.substituted:
                out["substitution"] = _LEFTOVER_DEFAULT_NOTE
        return out


def build_21gen(n: int, omega: tuple) -> TheoremPartition:
    """Partition with the empty word and ``omega`` in the same piece."""
    _check_n(n)
    original = reduce(omega)
    w = original
    base = classify_base(n, w)
    if isinstance(base, Leftover):
        w = power(Word((SIGMA,)), -(n - 1))
        base = classify_base(n, w)
    kind, i = base
    g = gamma(n, i)
    if kind == "A":
        # C* = A_i*, D* = B_i*, gamma_i(B_i*) = F2 - A_i*
        c, d, delta = A(i), B(i), g
    else:
        # C* = B_i*, D* = A_i*, gamma_i^-1(A_i*) = F2 - B_i*
        c, d, delta = B(i), A(i), invert(g)
    return TheoremPartition(
        n=n,
        omega=w,
        variant=Variant.GEN21,
        original_omega=original,
        index=i,
        c_piece=c,
        d_piece=d,
        delta=delta,
        gammas=gamma_family(n),
    )


def build_21tau(n: int, omega: tuple) -> TheoremPartition:
    """Partition with S^(i-1) in A_i for all i and ``omega`` (starting with t) in A_1."""
    _check_n(n)
    w = reduce(omega)
    if not w or w[0] != TAU:
        raise ValueError(f"omega must begin with t, got {format_word(w)!r}")
    return TheoremPartition(
        n=n,
        omega=w,
        variant=Variant.TAU21,
        original_omega=w,
        gammas=gamma_family(n),
    )


def classify(p: TheoremPartition, w: tuple) -> PieceIndex:
    return p.classify(w)


def green_check(n: int, i: int, k: int, m: int) -> bool:
    """gamma_i^k S^m lies in A_i* and gamma_i^-k S^m lies in B_i*."""
    if k < 1 or not 0 <= m < n - 1:
        raise ValueError("need k >= 1 and 0 <= m < n-1")
    g = gamma(n, i)
    tail = power(Word((SIGMA,)), -m)
    up = concat(power(g, k), tail)
    down = concat(power(g, -k), tail)
    return classify_base(n, up) == A(i) and classify_base(n, down) == B(i)


def _base_pairing_chunk(n: int, words) -> tuple[list, int, int]:
    rep = Report("base_pairing")
    gs = gamma_family(n)
    ginv = [invert(g) for g in gs]
    for w in words:
        cw = classify_base(n, w)
        for i in range(n):
            in_a = cw == ("A", i)
            in_b = cw == ("B", i)
            if (not in_a) != (classify_base(n, concat(ginv[i], w)) == ("B", i)):
                rep.add(format_word(w), i, "w not in A_i* <=> gamma_i^-1 w in B_i* fails")
            if (not in_b) != (classify_base(n, concat(gs[i], w)) == ("A", i)):
                rep.add(format_word(w), i, "w not in B_i* <=> gamma_i w in A_i* fails")
    return rep.violations, rep.violation_count, len(words)


def verify_base_pairing(n: int, max_len: int, workers: int = 1) -> Report:
    """Check gamma_i(B_i*) = F2 - A_i* and gamma_i^-1(A_i*) = F2 - B_i* on all |w| <= max_len."""
    _check_n(n)
    words = list(enumerate_reduced(max_len))
    rep = Report("base_pairing", {"n": n, "omega": None, "max_len": max_len})
    for viol, count, checked in run_chunks(partial(_base_pairing_chunk, n), words, workers):
        rep.merge(viol, count, checked)
    return rep


def _theorem_pairing_chunk(p: TheoremPartition, words) -> tuple[list, int, int]:
    rep = Report("theorem_pairing")
    n = p.n
    ginv = [invert(g) for g in p.gammas]
    for w in words:
        label = p.classify(w)
        hits = p.memberships(w)
        if hits != [label]:
            rep.add(format_word(w), None, f"membership {[str(q) for q in hits]} vs classifier {label}")
        for i in range(n):
            lhs = label != ("A", i)
            rhs = p.classify(concat(ginv[i], w)) == ("B", i)
            if lhs != rhs:
                rep.add(format_word(w), i, "w not in A_i <=> gamma_i^-1 w in B_i fails")
    return rep.violations, rep.violation_count, len(words)


def verify_theorem_pairing(p: TheoremPartition, max_len: int, workers: int = 1) -> Report:
    """Check gamma_i(B_i) = F2 - A_i, totality/disjointness and the anchor memberships."""
    words = list(enumerate_reduced(max_len))
    desc = p.describe()
    rep = Report(
        "theorem_pairing",
        {"n": p.n, "omega": desc["omega"], "max_len": max_len, "variant": desc["variant"]},
    )
    # fill the table before it is pickled to workers
    p._extend(max_len + max(len(g) for g in p.gammas))
    for viol, count, checked in run_chunks(partial(_theorem_pairing_chunk, p), words, workers):
        rep.merge(viol, count, checked)

    anchors: dict[str, str] = {}
    if p.variant is Variant.GEN21:
        home = p.classify(EMPTY)
        for tag, w in (("effective_omega", p.omega), ("omega", p.original_omega)):
            got = p.classify(w)
            anchors[tag] = str(got)
            if got != home:
                rep.add(format_word(w), None, f"epsilon in {home} but {tag} in {got}")
        anchors["epsilon"] = str(home)
    else:
        for i in range(p.n):
            w = power(Word((SIGMA,)), -i + 1)
            got = p.classify(w)
            anchors[f"s^{-i + 1}"] = str(got)
            if got != A(i):
                rep.add(format_word(w), i, f"expected A{i}, got {got}")
        got = p.classify(p.omega)
        anchors["omega"] = str(got)
        if got != A(1):
            rep.add(format_word(p.omega), 1, f"omega expected in A1, got {got}")
    rep.extra["partition"] = desc
    rep.extra["anchors"] = anchors
    return rep


def omega_suite(n: int) -> list[Word]:
    """One omega per base set (extended to length 4-5 where possible) plus every leftover."""
    _check_n(n)
    out: list[Word] = []
    for i in range(n):
        for piece in (A(i), B(i)):
            out.append(_extend_word(base_prefix(n, piece), 5))
    for m in range(n - 1):
        out.append(power(Word((SIGMA,)), -m))
    return out


def tau_suite(n: int) -> list[Word]:
    """t-initial omegas of assorted shapes (the tau construction ignores omega otherwise)."""
    _check_n(n)
    return [parse(x) for x in ("t", "t s", "t S t", "t t S", "t s t", "t s T S t")]


def _extend_word(prefix: Word, length: int) -> Word:
    # append an alternating tail without touching the prefix
    w = tuple(prefix)
    order = (TAU, SIGMA, TAU_INV, SIGMA_INV)
    j = 0
    while len(w) < length:
        x = order[j % 4]
        j += 1
        if w and (x == w[-1] ^ 1 or x == w[-1]):
            continue
        w = w + (x,)
    return Word(w)
