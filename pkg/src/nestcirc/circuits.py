"""Circuits over simple graphs and the one-step reduction relation.

A circuit is a closed walk with no repeated edges, stored as its vertex
sequence v_0 .. v_n (v_0 == v_n).  Two operations rewrite a circuit at a
proper sub-circuit [i, j]: the internal reduction excises the sub-circuit's
interior and keeps the outer walk, the external reduction keeps the
sub-circuit itself.  Both strictly shrink the circuit, so the rewriting
relation terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import (
    BadLabelError,
    NestcircError,
    NotAnIntersectionError,
    NotASubCircuitError,
    NotClosedError,
    RepeatedEdgeError,
    SelfLoopError,
    TooShortError,
)

__all__ = [
    "Circuit",
    "Intersection",
    "SubCircuitRef",
    "validate_circuit",
    "circuit_equal",
    "intersections",
    "vertex_of",
    "sub_circuit_refs",
    "internal_reduction",
    "external_reduction",
    "one_step_reductions",
    "parse_circuits",
    "format_circuit",
]


def _edge(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True, order=True)
class Circuit:
    """Closed walk with no repeated edges; identity is exact sequence equality.

    Rotations and reflections are distinct circuits: every operation here
    indexes positions from the fixed start v_0.
    """

    vertices: tuple[str, ...]

    def __post_init__(self):
        vs = self.vertices
        for label in vs:
            if not label or any(ch.isspace() for ch in label):
                raise BadLabelError(f"bad vertex label: {label!r}")
        if len(vs) < 4:
            raise TooShortError(f"need at least 3 edges, got {max(len(vs) - 1, 0)}")
        if vs[0] != vs[-1]:
            raise NotClosedError(f"walk starts at {vs[0]} but ends at {vs[-1]}")
        seen: set[tuple[str, str]] = set()
        for k in range(len(vs) - 1):
            if vs[k] == vs[k + 1]:
                raise SelfLoopError(f"self loop at position {k}: {vs[k]}")
            e = _edge(vs[k], vs[k + 1])
            if e in seen:
                raise RepeatedEdgeError("edge {%s,%s} repeated" % e)
            seen.add(e)

    @property
    def n(self) -> int:
        """Index of the final position; equals the number of edges."""
        return len(self.vertices) - 1

    def is_simple_cycle(self) -> bool:
        """True when no vertex repeats except the closing endpoint."""
        interior = self.vertices[:-1]
        return len(set(interior)) == len(interior)

    def __str__(self) -> str:
        return " ".join(self.vertices)


class Intersection(NamedTuple):
    """Index pair (i, j), 0 < i < j < n, whose positions carry equal labels."""

    i: int
    j: int


class SubCircuitRef(NamedTuple):
    """Reference [i, j] to the sub-circuit v_i .. v_j (v_i == v_j, i < j)."""

    i: int
    j: int


def validate_circuit(vertices: Iterable[str]) -> Circuit:
    """Build a circuit from a label sequence, checking every invariant.

    Raises ``TooShortError``, ``NotClosedError``, ``SelfLoopError`` or
    ``RepeatedEdgeError``; the sequence is stored verbatim on success.
    """
    return Circuit(tuple(vertices))


def circuit_equal(a: Circuit, b: Circuit) -> bool:
    """Token-by-token equality of the vertex sequences."""
    return a.vertices == b.vertices


def intersections(c: Circuit) -> set[Intersection]:
    """All intersections of ``c``: pairs at interior positions only."""
    by_label: dict[str, list[int]] = {}
    for idx in range(1, c.n):
        by_label.setdefault(c.vertices[idx], []).append(idx)
    out: set[Intersection] = set()
    for positions in by_label.values():
        out.update(Intersection(i, j) for i, j in combinations(positions, 2))
    return out


def vertex_of(c: Circuit, x: tuple[int, int]) -> str:
    """The vertex associated with intersection ``x``: the shared label v_i."""
    i, j = x
    if not (0 < i < j < c.n) or c.vertices[i] != c.vertices[j]:
        raise NotAnIntersectionError(f"({i},{j}) is not an intersection")
    return c.vertices[i]


def sub_circuit_refs(c: Circuit) -> set[SubCircuitRef]:
    """All proper sub-circuit references [i, j] of ``c``.

    Unlike intersections these may touch index 0 or n; only the whole
    circuit (0, n) is excluded.
    """
    by_label: dict[str, list[int]] = {}
    for idx in range(len(c.vertices)):
        by_label.setdefault(c.vertices[idx], []).append(idx)
    out: set[SubCircuitRef] = set()
    for positions in by_label.values():
        for i, j in combinations(positions, 2):
            if (i, j) != (0, c.n):
                out.add(SubCircuitRef(i, j))
    return out


def _check_ref(c: Circuit, s: tuple[int, int]) -> tuple[int, int]:
    i, j = s
    if not (0 <= i < j <= c.n) or (i, j) == (0, c.n) or c.vertices[i] != c.vertices[j]:
        raise NotASubCircuitError(f"[{i},{j}] is not a proper sub-circuit")
    return i, j


def internal_reduction(c: Circuit, s: tuple[int, int]) -> Circuit:
    """Excise the interior of sub-circuit [i, j], keeping the outer walk."""
    i, j = _check_ref(c, s)
    if i == 0:
        return Circuit(c.vertices[j:])
    return Circuit(c.vertices[: i + 1] + c.vertices[j + 1 :])


def external_reduction(c: Circuit, s: tuple[int, int]) -> Circuit:
    """The sub-circuit v_i .. v_j as a standalone circuit."""
    i, j = _check_ref(c, s)
    return Circuit(c.vertices[i : j + 1])


def one_step_reductions(c: Circuit) -> set[Circuit]:
    """Every circuit reachable from ``c`` in one reduction step.

    Both reductions are taken at every proper sub-circuit reference and the
    results are deduplicated by sequence equality: the rewriting relation
    holds between circuits, not between (circuit, index) pairs.
    """
    out: set[Circuit] = set()
    for ref in sub_circuit_refs(c):
        out.add(internal_reduction(c, ref))
        out.add(external_reduction(c, ref))
    return out


def format_circuit(c: Circuit) -> str:
    """One-line text form: whitespace-separated labels, closed."""
    return str(c)


def parse_circuits(text: str) -> list[Circuit]:
    """Parse the one-circuit-per-line text format.

    Blank lines and lines starting with '#' are skipped.  Invalid lines
    raise ``NestcircError`` with the offending line number in the message.
    """
    out: list[Circuit] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(validate_circuit(line.split()))
        except NestcircError as exc:
            raise NestcircError(f"line {lineno}: {exc}") from exc
    return out
