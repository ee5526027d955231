"""Perfectly nested circuits and their reduction order.

Circuits are closed walks without repeated edges.  Two shrinking rewrites
(internal and external reduction at a sub-circuit) generate a terminating
relation; a circuit whose repeated vertices nest perfectly is equivalent to
a chain of simple cycles, its reduction family has (m+1)(m+2)/2 members for
m internal vertices, and that family is order-isomorphic to the classes of
binary sequences of length at most m under the extension order.
"""

from .binseq import (
    SeqClass,
    SmPoset,
    build_Sm,
    class_of,
    leq_m,
    leq_m_oracle,
    representatives,
)
from .circuits import (
    Circuit,
    Intersection,
    SubCircuitRef,
    circuit_equal,
    external_reduction,
    format_circuit,
    internal_reduction,
    intersections,
    one_step_reductions,
    parse_circuits,
    sub_circuit_refs,
    validate_circuit,
    vertex_of,
)
from .family import (
    ReductionFamily,
    ZeroOneSequenceRecord,
    family_bfs_oracle,
    family_closed_form,
    immediate_predecessors,
    locate,
    one_reduction,
    zero_one_sequence,
    zero_reduction,
)
from .iso import IsoReport, IsoWitness, build_f, verify_iso
from .pnc import (
    ChainOfCycles,
    InternalSequence,
    Pnc,
    compose,
    decompose,
    innermost,
    is_pnc,
    more_internal,
    outermost,
    random_pnc,
    recognize,
)
from . import errors

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
    "ReductionFamily",
    "ZeroOneSequenceRecord",
    "zero_reduction",
    "one_reduction",
    "family_closed_form",
    "family_bfs_oracle",
    "immediate_predecessors",
    "zero_one_sequence",
    "locate",
    "SeqClass",
    "SmPoset",
    "class_of",
    "leq_m",
    "leq_m_oracle",
    "representatives",
    "build_Sm",
    "IsoWitness",
    "IsoReport",
    "build_f",
    "verify_iso",
    "errors",
]
