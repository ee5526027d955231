"""The order isomorphism between a PNC's reduction family and sequence classes.

A member composed of links a..b of an m-link-plus-one chain is reached by
exactly a 1-reductions and m-b 0-reductions, in any order, so mapping it to
the class (number of reductions, number of 1-reductions) is well defined.
``verify_iso`` checks exhaustively that this map is a bijection preserving
and reflecting the two orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binseq import SeqClass, SmPoset, leq_m
from .circuits import Circuit, format_circuit
from .errors import DimensionMismatchError
from .family import ReductionFamily, family_closed_form
from .pnc import Pnc

__all__ = ["IsoWitness", "IsoReport", "build_f", "verify_iso"]


@dataclass(frozen=True, eq=False)
class IsoWitness:
    """The member-to-class pairing for a PNC with ``m`` internal vertices."""

    m: int
    pairs: tuple[tuple[Circuit, SeqClass], ...]

    def seq_class_of(self, member: Circuit) -> SeqClass:
        return dict(self.pairs)[member]


def build_f(p: Pnc) -> IsoWitness:
    """Map each family member to its characteristic-sequence class.

    The root goes to the class of the empty sequence; the member made of
    links a..b goes to the class with a + (m-b) bits, a of them ones.
    """
    fam = family_closed_form(p)
    m = p.m
    pairs = []
    for member in fam.members:
        a, b = fam.intervals[member]
        pairs.append((member, SeqClass(a + (m - b), a, m)))
    return IsoWitness(m, tuple(pairs))


@dataclass(frozen=True)
class IsoReport:
    """Outcome of the exhaustive isomorphism check."""

    ok: bool
    pair_count: int
    violations: tuple[str, ...]


def verify_iso(w: IsoWitness, fam: ReductionFamily, sm: SmPoset) -> IsoReport:
    """Check that ``w`` is an order isomorphism between ``fam`` and ``sm``.

    Asserts injectivity, surjectivity onto the class poset, and, over every
    member pair, that family order and class order agree in both directions.
    Violations are reported with their witnessing pair.
    """
    if len(fam) != len(sm):
        raise DimensionMismatchError(f"family has {len(fam)} members, poset {len(sm)} classes")
    violations: list[str] = []
    mapped = dict(w.pairs)
    if set(mapped) != set(fam.members):
        violations.append("pairing does not cover the family members exactly")
    image = list(mapped.values())
    if len(set(image)) != len(image):
        dupes = sorted({c.render() for c in image if image.count(c) > 1})
        violations.append(f"not injective: classes {dupes} repeat")
    if set(image) != set(sm.classes):
        violations.append("not surjective onto the class poset")
    if not violations:
        for x in fam.members:
            for y in fam.members:
                in_family = fam.leq(x, y)
                in_classes = leq_m(mapped[x], mapped[y])
                if in_family != in_classes:
                    violations.append(
                        f"order mismatch on ({format_circuit(x)}, {format_circuit(y)}): "
                        f"family {in_family}, classes {in_classes}"
                    )
    return IsoReport(not violations, len(w.pairs), tuple(violations))
