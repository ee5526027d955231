"""Binary sequences up to a bound, their counting classes, and the extension order.

Two sequences of length at most m are equivalent when they have equal length
and equally many 1s, so a class is canonically a (length, ones) pair.  One
class sits below another when some representative of the first extends some
representative of the second; ``leq_m`` decides this by counting and
``leq_m_oracle`` by literally enumerating representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import BoundMismatchError, TooLongError

__all__ = [
    "SeqClass",
    "SmPoset",
    "class_of",
    "leq_m",
    "leq_m_oracle",
    "representatives",
    "build_Sm",
]


@dataclass(frozen=True, order=True)
class SeqClass:
    """Class of binary sequences with ``length`` bits, ``ones`` of them 1."""

    length: int
    ones: int
    bound: int

    def __post_init__(self):
        if not 0 <= self.ones <= self.length <= self.bound:
            raise ValueError(f"need 0 <= ones <= length <= bound, got {self}")

    @property
    def zeros(self) -> int:
        return self.length - self.ones

    def render(self) -> str:
        return f"{self.length}:{self.ones}"


def class_of(bits: Sequence[int], bound: int) -> SeqClass:
    """The class of a concrete bit sequence under bound ``bound``."""
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be 0 or 1: {bits!r}")
    if len(bits) > bound:
        raise TooLongError(f"sequence of length {len(bits)} exceeds bound {bound}")
    return SeqClass(len(bits), sum(bits), bound)


def _check_bounds(a: SeqClass, b: SeqClass) -> None:
    if a.bound != b.bound:
        raise BoundMismatchError(f"bounds differ: {a.bound} != {b.bound}")


def leq_m(a: SeqClass, b: SeqClass) -> bool:
    """Counting criterion for a <= b: b needs no more ones and no more zeros.

    Equivalent to the existence of representatives s' of a and t' of b with
    t' a prefix of s' (append the missing zeros then the missing ones to a
    sorted representative of b); validated against ``leq_m_oracle``.
    """
    _check_bounds(a, b)
    return b.ones <= a.ones and b.zeros <= a.zeros


def representatives(c: SeqClass) -> Iterator[tuple[int, ...]]:
    """Every concrete bit sequence in the class, in a deterministic order."""
    for ones_at in combinations(range(c.length), c.ones):
        bits = [0] * c.length
        for i in ones_at:
            bits[i] = 1
        yield tuple(bits)


def leq_m_oracle(a: SeqClass, b: SeqClass) -> bool:
    """Definitional a <= b: some representative of a extends one of b."""
    _check_bounds(a, b)
    b_reps = list(representatives(b))
    for s in representatives(a):
        for t in b_reps:
            if s[: len(t)] == t:
                return True
    return False


@dataclass(frozen=True)
class SmPoset:
    """All classes of binary sequences of length at most ``bound``."""

    bound: int
    classes: tuple[SeqClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def leq(self, a: SeqClass, b: SeqClass) -> bool:
        return leq_m(a, b)

    def maximum(self) -> SeqClass:
        return SeqClass(0, 0, self.bound)

    def covers_down(self, c: SeqClass) -> set[SeqClass]:
        """Classes directly below ``c``: one appended 0 or one appended 1."""
        if c.length == self.bound:
            return set()
        return {
            SeqClass(c.length + 1, c.ones, self.bound),
            SeqClass(c.length + 1, c.ones + 1, self.bound),
        }


def build_Sm(m: int) -> SmPoset:
    """The quotient poset of all binary sequences of length at most ``m``."""
    if m < 0:
        raise ValueError("bound must be non-negative")
    classes = tuple(
        SeqClass(length, ones, m) for length in range(m + 1) for ones in range(length + 1)
    )
    return SmPoset(m, classes)
