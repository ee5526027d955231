"""Perfectly nested circuits: recognition, internal order, chain-of-cycles form.

A circuit is perfectly nested (a PNC) when its repeated interior vertices
form one totally nested chain of index pairs

    0 = k_0 < k_1 < ... < k_m < k'_m < ... < k'_1 < k'_0 = n

with pairwise distinct internal vertices.  Equivalently it is a chain of
simple cycles glued sequentially at single joint vertices; ``decompose`` and
``compose`` convert between the two forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import Circuit, validate_circuit
from .errors import (
    NOT_TOTALLY_NESTED,
    START_VERTEX_REPEATS,
    VERTEX_TRIPLE,
    InvalidChainError,
    NotInternalVertexError,
    NotPncError,
    TrivialPncError,
)

__all__ = [
    "InternalSequence",
    "Pnc",
    "ChainOfCycles",
    "recognize",
    "is_pnc",
    "more_internal",
    "outermost",
    "innermost",
    "decompose",
    "compose",
    "random_pnc",
]


@dataclass(frozen=True)
class InternalSequence:
    """Nesting indices of a PNC.

    ``opens`` holds k_1 < ... < k_m and ``closes`` holds k'_m < ... < k'_1,
    both in ascending index order, so the flattened sequence is exactly
    k_1, ..., k_m, k'_m, ..., k'_1.
    """

    opens: tuple[int, ...]
    closes: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.opens)

    def pair(self, t: int) -> tuple[int, int]:
        """The index pair (k, k') of the t-th internal vertex, outermost first."""
        return self.opens[t], self.closes[self.m - 1 - t]

    def flat(self) -> tuple[int, ...]:
        return self.opens + self.closes


@dataclass(frozen=True)
class Pnc:
    """A recognized perfectly nested circuit (m == 0 for a simple cycle)."""

    circuit: Circuit
    internal: InternalSequence

    @property
    def m(self) -> int:
        return self.internal.m

    def internal_labels(self) -> tuple[str, ...]:
        """Internal vertices in nesting order, outermost first."""
        return tuple(self.circuit.vertices[k] for k in self.internal.opens)


@dataclass(frozen=True)
class ChainOfCycles:
    """Simple cycles glued in sequence; joints[j] is shared by links j and j+1.

    Link 0 keeps its own start vertex; every later link is stored rotated so
    that it starts (and ends) at the joint shared with its predecessor.
    """

    links: tuple[Circuit, ...]
    joints: tuple[str, ...]

    def sub_chain(self, a: int, b: int) -> "ChainOfCycles":
        """The chain made of links a..b with the joints between them."""
        if not (0 <= a <= b < len(self.links)):
            raise InvalidChainError(f"no links {a}..{b} in a chain of {len(self.links)}")
        return ChainOfCycles(self.links[a : b + 1], self.joints[a:b])


def recognize(c: Circuit) -> Pnc:
    """Recognize a perfectly nested circuit and extract its internal sequence.

    Checks, in order: the start vertex occurs only at positions 0 and n, no
    other label occurs more than twice, and the pairs of twice-occurring
    labels form one totally nested chain (all opens before all closes, with
    closes in reverse order of their opens).  These conditions are exactly
    the sub-circuit structure a PNC must have, checked in linear time.
    """
    vs, n = c.vertices, c.n
    positions: dict[str, list[int]] = {}
    for idx in range(n):  # position n duplicates position 0
        positions.setdefault(vs[idx], []).append(idx)
    if len(positions[vs[0]]) > 1:
        raise NotPncError(
            START_VERTEX_REPEATS,
            f"start vertex {vs[0]} reappears at position {positions[vs[0]][1]}",
        )
    pairs: list[tuple[int, int]] = []
    for label, where in positions.items():
        if len(where) > 2:
            raise NotPncError(VERTEX_TRIPLE, f"vertex {label} occurs {len(where)} times")
        if len(where) == 2:
            pairs.append((where[0], where[1]))
    pairs.sort()
    opens = tuple(p[0] for p in pairs)
    closes_outer_first = [p[1] for p in pairs]
    for t in range(len(pairs) - 1):
        if closes_outer_first[t] <= closes_outer_first[t + 1]:
            raise NotPncError(
                NOT_TOTALLY_NESTED,
                f"pairs {pairs[t]} and {pairs[t + 1]} do not nest",
            )
    if pairs and opens[-1] >= closes_outer_first[-1]:
        raise NotPncError(NOT_TOTALLY_NESTED, f"pair {pairs[-1]} is not an open/close pair")
    return Pnc(c, InternalSequence(opens, tuple(reversed(closes_outer_first))))


def is_pnc(c: Circuit) -> bool:
    try:
        recognize(c)
    except NotPncError:
        return False
    return True


def more_internal(p: Pnc, u: str, w: str) -> bool:
    """Whether ``u`` is strictly more internal than ``w`` (nested deeper)."""
    labels = p.internal_labels()
    for label in (u, w):
        if label not in labels:
            raise NotInternalVertexError(f"{label} is not an internal vertex")
    return labels.index(u) > labels.index(w)


def outermost(p: Pnc) -> str:
    """The internal vertex opened first (at k_1)."""
    if p.m == 0:
        raise TrivialPncError("a simple cycle has no internal vertices")
    return p.internal_labels()[0]


def innermost(p: Pnc) -> str:
    """The internal vertex opened last (at k_m)."""
    if p.m == 0:
        raise TrivialPncError("a simple cycle has no internal vertices")
    return p.internal_labels()[-1]


def decompose(p: Pnc) -> ChainOfCycles:
    """Split a PNC into its chain of cycles.

    Link 0 is the walk outside [k_1, k'_1], link t sits between consecutive
    nesting levels, and link m is the innermost sub-circuit; joint t is the
    internal vertex v_{k_{t+1}}.  ``compose`` inverts this exactly.
    """
    vs = p.circuit.vertices
    seq = p.internal
    m = seq.m
    if m == 0:
        return ChainOfCycles((p.circuit,), ())
    links = []
    k1, c1 = seq.pair(0)
    links.append(Circuit(vs[: k1 + 1] + vs[c1 + 1 :]))
    for t in range(m - 1):
        a, ca = seq.pair(t)
        b, cb = seq.pair(t + 1)
        links.append(Circuit(vs[a : b + 1] + vs[cb + 1 : ca + 1]))
    km, cm = seq.pair(m - 1)
    links.append(Circuit(vs[km : cm + 1]))
    joints = tuple(vs[k] for k in seq.opens)
    return ChainOfCycles(tuple(links), joints)


def _rotate_to(link: Circuit, label: str) -> Circuit:
    pos = link.vertices.index(label)
    if pos == 0:
        return link
    return Circuit(link.vertices[pos:-1] + link.vertices[: pos + 1])


def _check_chain(chain: ChainOfCycles) -> None:
    links, joints = chain.links, chain.joints
    if not links:
        raise InvalidChainError("a chain needs at least one link")
    if len(links) != len(joints) + 1:
        raise InvalidChainError(
            f"{len(links)} links need {len(links) - 1} joints, got {len(joints)}"
        )
    for t, link in enumerate(links):
        if not link.is_simple_cycle():
            raise InvalidChainError(f"link {t} is not a simple cycle: {link}")
    if len(set(joints)) != len(joints):
        raise InvalidChainError("joint labels must be pairwise distinct")
    label_sets = [set(link.vertices) for link in links]
    for t, joint in enumerate(joints):
        if joint not in label_sets[t] or joint not in label_sets[t + 1]:
            raise InvalidChainError(f"joint {joint} missing from link {t} or {t + 1}")
    # Any label shared between links must be the joint of two adjacent ones,
    # otherwise the composed walk gains an intersection outside the chain.
    for a in range(len(links)):
        for b in range(a + 1, len(links)):
            shared = label_sets[a] & label_sets[b]
            allowed = {joints[a]} if b == a + 1 else set()
            if shared != allowed:
                raise InvalidChainError(
                    f"links {a} and {b} share labels {sorted(shared - allowed)}"
                )
    if joints and joints[0] == links[0].vertices[0]:
        raise InvalidChainError(f"joint {joints[0]} coincides with the start of link 0")


def compose(chain: ChainOfCycles) -> Pnc:
    """Glue a chain of cycles into one perfectly nested circuit.

    The walk follows link 0 to its joint, descends link by link to the
    innermost cycle, goes around it, and closes each link back in reverse
    order.  Links after the first may be given in any rotation; they are
    aligned to start at their entry joint.
    """
    _check_chain(chain)
    links, joints = chain.links, chain.joints
    rotated = [links[0]]
    rotated += [_rotate_to(links[t + 1], joints[t]) for t in range(len(joints))]
    walk = rotated[-1].vertices
    for t in range(len(joints) - 1, -1, -1):
        outer = rotated[t].vertices
        pos = outer.index(joints[t])
        walk = outer[: pos + 1] + walk[1:] + outer[pos + 1 :]
    return recognize(validate_circuit(walk))


_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


class _Lcg:
    """64-bit linear congruential generator; portable across implementations."""

    def __init__(self, seed: int):
        self.state = seed & _LCG_MASK

    def next_int(self) -> int:
        self.state = (self.state * _LCG_MULT + _LCG_INC) & _LCG_MASK
        return self.state

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next_int() % (hi - lo + 1)


def random_pnc(seed: int, m: int, max_link_len: int) -> Pnc:
    """A deterministic random PNC with exactly ``m`` internal vertices.

    Builds m+1 simple cycles on fresh labels g0, g1, ... with edge counts
    uniform in [3, max_link_len], picks a valid joint on each non-final
    link, and composes the chain.  Identical arguments always return the
    identical circuit.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if max_link_len < 3:
        raise ValueError("max_link_len must be at least 3")
    rng = _Lcg(seed)
    counter = 0

    def fresh() -> str:
        nonlocal counter
        label = f"g{counter}"
        counter += 1
        return label

    links: list[Circuit] = []
    joints: list[str] = []
    for t in range(m + 1):
        length = rng.randint(3, max_link_len)
        if t == 0:
            body = [fresh() for _ in range(length)]
        else:
            body = [joints[t - 1]] + [fresh() for _ in range(length - 1)]
        links.append(Circuit(tuple(body) + (body[0],)))
        if t < m:
            joints.append(body[rng.randint(1, length - 1)])
    return compose(ChainOfCycles(tuple(links), tuple(joints)))
