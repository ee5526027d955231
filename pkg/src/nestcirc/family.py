"""The reduction family of a circuit and its partial order.

The family of a root circuit collects everything reachable by zero or more
reductions, ordered by "is reachable from".  For a perfectly nested root
the family has a closed form: the composes of every consecutive run of
chain links, (m+1)(m+2)/2 members in total.  ``family_bfs_oracle`` stays
fully definitional (plain breadth-first closure of one-step reductions) so
it doubles as an independent check and covers non-PNC roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .circuits import Circuit, external_reduction, internal_reduction, one_step_reductions
from .errors import (
    NotAMemberError,
    NotInFamilyError,
    OutOfRangeError,
    TrivialPncError,
)
from .pnc import ChainOfCycles, Pnc, compose, decompose, recognize

__all__ = [
    "ReductionFamily",
    "ZeroOneSequenceRecord",
    "zero_reduction",
    "one_reduction",
    "family_closed_form",
    "family_bfs_oracle",
    "immediate_predecessors",
    "zero_one_sequence",
    "locate",
]


def zero_reduction(p: Pnc) -> Pnc:
    """Internal reduction at the innermost vertex: drops the innermost link."""
    if p.m == 0:
        raise TrivialPncError("a simple cycle has no 0-reduction")
    return recognize(internal_reduction(p.circuit, p.internal.pair(p.m - 1)))


def one_reduction(p: Pnc) -> Pnc:
    """External reduction at the outermost vertex: drops the outermost link."""
    if p.m == 0:
        raise TrivialPncError("a simple cycle has no 1-reduction")
    return recognize(external_reduction(p.circuit, p.internal.pair(0)))


@dataclass(frozen=True, eq=False)
class ReductionFamily:
    """All reductions of a root circuit with the order "descends from".

    ``members`` is deterministically ordered with the root first.
    ``leq_pairs`` holds every related pair (x, y) meaning x <= y, i.e. y
    reduces to x in zero or more steps.  ``covers_down`` maps each member to
    its immediate predecessors.  For perfectly nested roots ``intervals``
    maps each member to the link range (a, b) it is composed of.
    """

    root: Circuit
    members: tuple[Circuit, ...]
    leq_pairs: frozenset[tuple[Circuit, Circuit]]
    covers_down: Mapping[Circuit, frozenset[Circuit]]
    intervals: Mapping[Circuit, tuple[int, int]] | None = None
    chain: ChainOfCycles | None = None

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, c: Circuit) -> bool:
        return c in self.covers_down

    def leq(self, a: Circuit, b: Circuit) -> bool:
        """Whether a <= b, i.e. b reduces to a."""
        for c in (a, b):
            if c not in self:
                raise NotAMemberError(f"not a member: {c}")
        return (a, b) in self.leq_pairs


def family_closed_form(p: Pnc) -> ReductionFamily:
    """The reduction family of a PNC built from its chain decomposition.

    Members are the composes of link runs a..b; the order is interval
    containment and the cover edges follow the 0-/1-reduction rule (drop
    the innermost link, drop the outermost link).
    """
    chain = decompose(p)
    m = p.m
    member_of: dict[tuple[int, int], Circuit] = {}
    for a in range(m + 1):
        for b in range(a, m + 1):
            member_of[(a, b)] = compose(chain.sub_chain(a, b)).circuit
    ordered = sorted(member_of, key=lambda iv: (iv[0] - iv[1], iv[0]))
    members = tuple(member_of[iv] for iv in ordered)
    leq = frozenset(
        (member_of[(a2, b2)], member_of[(a1, b1)])
        for (a1, b1) in member_of
        for (a2, b2) in member_of
        if a1 <= a2 and b2 <= b1
    )
    covers: dict[Circuit, frozenset[Circuit]] = {}
    for (a, b), circ in member_of.items():
        below = []
        if a < b:
            below = [member_of[(a, b - 1)], member_of[(a + 1, b)]]
        covers[circ] = frozenset(below)
    intervals = {circ: iv for iv, circ in member_of.items()}
    return ReductionFamily(p.circuit, members, leq, covers, intervals, chain)


def family_bfs_oracle(c: Circuit) -> ReductionFamily:
    """Definitional enumeration of the reduction family of any circuit.

    Breadth-first closure of one-step reductions, deduplicated by sequence
    equality; the order is reversed reachability and the cover edges come
    from transitive reduction.
    """
    seen = {c}
    ordered = [c]
    succs: dict[Circuit, list[Circuit]] = {}
    frontier = [c]
    while frontier:
        nxt: list[Circuit] = []
        for x in frontier:
            step = sorted(one_step_reductions(x))
            succs[x] = step
            for s in step:
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = sorted(nxt)
        ordered.extend(frontier)

    # Successors are strictly shorter, so increasing length is a valid
    # evaluation order for the reachability sets.
    reach: dict[Circuit, set[Circuit]] = {}
    for x in sorted(ordered, key=lambda d: d.n):
        r = {x}
        for s in succs[x]:
            r |= reach[s]
        reach[x] = r

    leq = frozenset((a, b) for b in ordered for a in reach[b])
    covers: dict[Circuit, frozenset[Circuit]] = {}
    for b in ordered:
        strictly_below = reach[b] - {b}
        covers[b] = frozenset(
            a
            for a in strictly_below
            if not any(a in reach[mid] for mid in strictly_below if mid != a)
        )
    return ReductionFamily(c, tuple(ordered), leq, covers)


def immediate_predecessors(fam: ReductionFamily, d: Circuit) -> set[Circuit]:
    """The members directly below ``d``: its cover set in the family order.

    For a perfectly nested member these are exactly its 0- and 1-reduction;
    a simple cycle has none.
    """
    if d not in fam:
        raise NotAMemberError(f"not a member: {d}")
    return set(fam.covers_down[d])


@dataclass(frozen=True)
class ZeroOneSequenceRecord:
    """A reduction path from the root using only 0- and 1-reductions.

    ``steps[i+1]`` is the 0-reduction of ``steps[i]`` when ``tags[i] == 0``
    and the 1-reduction when ``tags[i] == 1``; ``tags`` is the path's
    characteristic sequence.
    """

    steps: tuple[Circuit, ...]
    tags: tuple[int, ...]

    @property
    def zeros(self) -> int:
        return self.tags.count(0)

    @property
    def ones(self) -> int:
        return self.tags.count(1)


def _interval_of(p: Pnc, chain: ChainOfCycles, target: Circuit) -> tuple[int, int]:
    for a in range(p.m + 1):
        for b in range(a, p.m + 1):
            if compose(chain.sub_chain(a, b)).circuit == target:
                return a, b
    raise NotInFamilyError(f"not reachable from the root: {target}")


def zero_one_sequence(p: Pnc, target: Circuit) -> ZeroOneSequenceRecord:
    """A canonical 0-1 reduction path from ``p`` to ``target``.

    Emits all 1-reductions first, then all 0-reductions.  Any other valid
    path to the same target has the same length and the same tag counts.
    """
    chain = decompose(p)
    a, b = _interval_of(p, chain, target)
    tags = (1,) * a + (0,) * (p.m - b)
    steps = [p.circuit]
    cur = p
    for tag in tags:
        cur = one_reduction(cur) if tag else zero_reduction(cur)
        steps.append(cur.circuit)
    return ZeroOneSequenceRecord(tuple(steps), tags)


def locate(p: Pnc, p0: int, p1: int) -> Circuit:
    """The member reached by any path of ``p0`` 0-reductions and ``p1`` 1-reductions.

    Closed form: the compose of links p1 .. m-p0, independent of the order
    the reductions are applied in.
    """
    if p0 < 0 or p1 < 0 or p0 + p1 > p.m:
        raise OutOfRangeError(f"p0+p1 must be at most m={p.m}, got {p0}+{p1}")
    return compose(decompose(p).sub_chain(p1, p.m - p0)).circuit
