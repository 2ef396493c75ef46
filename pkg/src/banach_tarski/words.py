"""Reduced words in the free group on two generators.

Letters are stored as small ints so that words hash and compare as plain
tuples: ``0 = s``, ``1 = S`` (s inverse), ``2 = t``, ``3 = T`` (t inverse).
The inverse of a letter is ``letter ^ 1``.  The numeric order is also the
enumeration order.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Iterator

__all__ = [
    "Letter",
    "Word",
    "WordParseError",
    "EMPTY",
    "SIGMA",
    "SIGMA_INV",
    "TAU",
    "TAU_INV",
    "reduce",
    "naive_reduce",
    "concat",
    "invert",
    "has_prefix",
    "has_suffix",
    "power",
    "enumerate_reduced",
    "count_reduced",
    "parse",
    "format_word",
    "word_key",
]


class Letter(enum.IntEnum):
    SIGMA = 0
    SIGMA_INV = 1
    TAU = 2
    TAU_INV = 3

    @property
    def inverse(self) -> "Letter":
        return Letter(self ^ 1)


SIGMA, SIGMA_INV, TAU, TAU_INV = 0, 1, 2, 3

_TOKEN = {"s": SIGMA, "S": SIGMA_INV, "t": TAU, "T": TAU_INV}
_GLYPH = {SIGMA: "s", SIGMA_INV: "S", TAU: "t", TAU_INV: "T"}
_PRETTY = {SIGMA: "σ", SIGMA_INV: "σ⁻¹", TAU: "τ", TAU_INV: "τ⁻¹"}


class WordParseError(ValueError):
    def __init__(self, text: str, position: int, token: str):
        self.text = text
        self.position = position
        self.token = token
        super().__init__(f"malformed token {token!r} at position {position} in {text!r}")


class Word(tuple):
    """An element of F2 as its reduced letter sequence.

    ``Word(letters)`` reduces its input.  Arithmetic: ``u * v`` is the
    reduced product, ``~w`` the inverse and ``w ** k`` a power.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()) -> "Word":
        return _w(_reduce_tuple(tuple(int(x) for x in letters)))

    def __mul__(self, other):  # type: ignore[override]
        if not isinstance(other, Word):
            return NotImplemented
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)

    def pretty(self) -> str:
        if not self:
            return "ε"
        return "".join(_PRETTY[x] for x in self)


def _w(letters: tuple) -> Word:
    # no validation; callers guarantee a reduced tuple of ints
    return tuple.__new__(Word, letters)


EMPTY = _w(())


def _reduce_tuple(raw: tuple) -> tuple:
    stack: list[int] = []
    for x in raw:
        if x not in (0, 1, 2, 3):
            raise ValueError(f"not a letter: {x!r}")
        if stack and stack[-1] == x ^ 1:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def reduce(raw: Iterable[int]) -> Word:
    """Return the reduced form of a letter sequence (single stack pass)."""
    return _w(_reduce_tuple(tuple(int(x) for x in raw)))


def naive_reduce(raw: Iterable[int]) -> Word:
    """Reference reducer: delete the leftmost cancelling pair until none is left.

    Quadratic; kept as an independent oracle for :func:`reduce`.
    """
    letters = [int(x) for x in raw]
    changed = True
    while changed:
        changed = False
        for j in range(len(letters) - 1):
            if letters[j] ^ 1 == letters[j + 1]:
                del letters[j : j + 2]
                changed = True
                break
    return _w(tuple(letters))


def concat(u: tuple, v: tuple) -> Word:
    """Reduced product ``u·v`` of two reduced words."""
    nu, nv = len(u), len(v)
    k = 0
    lim = min(nu, nv)
    while k < lim and u[nu - 1 - k] == v[k] ^ 1:
        k += 1
    if k == 0:
        return _w(u + v)
    return _w(u[: nu - k] + v[k:])


def invert(w: tuple) -> Word:
    return _w(tuple(x ^ 1 for x in reversed(w)))


def has_prefix(w: tuple, alpha: tuple) -> bool:
    """True iff ``w`` lies in I(alpha), the words beginning with ``alpha``."""
    return len(alpha) <= len(w) and w[: len(alpha)] == alpha


def has_suffix(w: tuple, beta: tuple) -> bool:
    n = len(beta)
    return n <= len(w) and (n == 0 or w[-n:] == beta)


def power(w: tuple, k: int) -> Word:
    if k < 0:
        w, k = invert(w), -k
    out: Word = EMPTY
    base = _w(tuple(w))
    for _ in range(k):
        out = concat(out, base)
    return out


def count_reduced(max_len: int) -> int:
    """Number of reduced words of length at most ``max_len``: 1 + 2(3^L - 1)."""
    return 1 + 2 * (3**max_len - 1)


def enumerate_reduced(max_len: int) -> Iterator[Word]:
    """Yield every reduced word of length <= max_len exactly once.

    Breadth-first by length; within a length, lexicographic in the letter
    order s < S < t < T.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    yield EMPTY
    layer: list[tuple] = [()]
    for _ in range(max_len):
        nxt: list[tuple] = []
        for w in layer:
            bad = w[-1] ^ 1 if w else -1
            for x in (0, 1, 2, 3):
                if x != bad:
                    nxt.append(w + (x,))
        for w in nxt:
            yield _w(w)
        layer = nxt


def word_key(w: tuple) -> tuple:
    """Sort key matching the enumeration order."""
    return (len(w), tuple(w))


_POWER_RE = re.compile(r"^([sStT])(?:\^(-?\d+))?$")


def parse(text: str) -> Word:
    """Parse whitespace-separated tokens ``s S t T`` (optionally ``s^-3``)."""
    letters: list[int] = []
    pos = 0
    for m in re.finditer(r"\S+", text):
        pos = m.start()
        tok = m.group()
        pm = _POWER_RE.match(tok)
        if pm is None:
            raise WordParseError(text, pos, tok)
        x = _TOKEN[pm.group(1)]
        e = int(pm.group(2)) if pm.group(2) is not None else 1
        if e < 0:
            x, e = x ^ 1, -e
        letters.extend([x] * e)
    return reduce(letters)


def format_word(w: tuple) -> str:
    """Inverse of :func:`parse` on reduced words; the empty word is ``""``."""
    return " ".join(_GLYPH[x] for x in w)
