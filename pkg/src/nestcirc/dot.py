"""Hasse diagrams in DOT format.

One node per element, one directed edge per cover pair, edges pointing from
greater to lesser.  Members of a perfectly nested family are labeled by
their link interval ("C_1..C_2", or "C_1" for a single link); members of an
oracle family carry their raw vertex sequence.
"""

from __future__ import annotations

from .binseq import SmPoset
from .family import ReductionFamily
from .iso import IsoWitness

__all__ = ["family_dot", "sm_dot", "iso_dot", "member_label"]


def _quote(label: str) -> str:
    return '"%s"' % label.replace("\\", "\\\\").replace('"', '\\"')


def member_label(fam: ReductionFamily, member) -> str:
    """Interval notation for PNC families, vertex sequence otherwise."""
    if fam.intervals is not None:
        a, b = fam.intervals[member]
        return f"C_{a}" if a == b else f"C_{a}..C_{b}"
    return str(member)


def _hasse_lines(names, labels, covers, colors=None, indent="  "):
    lines = []
    for node in names:
        attrs = [f"label={_quote(labels[node])}"]
        if colors is not None:
            attrs.append(f'style=filled fillcolor="{colors[node]}"')
        lines.append(f"{indent}{names[node]} [{' '.join(attrs)}];")
    for node in names:
        for below in sorted(covers[node], key=lambda x: names[x]):
            lines.append(f"{indent}{names[node]} -> {names[below]};")
    return lines


def family_dot(fam: ReductionFamily, graph_name: str = "reduction_family") -> str:
    """The family's Hasse diagram as a DOT digraph."""
    names = {member: f"m{i}" for i, member in enumerate(fam.members)}
    labels = {member: member_label(fam, member) for member in fam.members}
    lines = [f"digraph {graph_name} {{", "  rankdir=TB;"]
    lines += _hasse_lines(names, labels, fam.covers_down)
    lines.append("}")
    return "\n".join(lines) + "\n"


def sm_dot(sm: SmPoset, graph_name: str = "seq_classes") -> str:
    """The class poset's Hasse diagram as a DOT digraph."""
    names = {c: f"s{i}" for i, c in enumerate(sm.classes)}
    labels = {c: c.render() for c in sm.classes}
    covers = {c: sm.covers_down(c) for c in sm.classes}
    lines = [f"digraph {graph_name} {{", "  rankdir=TB;"]
    lines += _hasse_lines(names, labels, covers)
    lines.append("}")
    return "\n".join(lines) + "\n"


def iso_dot(w: IsoWitness, fam: ReductionFamily, sm: SmPoset) -> str:
    """Side-by-side Hasse diagrams with matched colors for paired nodes."""
    total = max(len(w.pairs), 1)
    member_color = {}
    class_color = {}
    for i, (member, cls) in enumerate(w.pairs):
        color = f"{i / total:.3f} 0.400 0.950"
        member_color[member] = color
        class_color[cls] = color

    member_names = {member: f"m{i}" for i, member in enumerate(fam.members)}
    member_labels = {member: member_label(fam, member) for member in fam.members}
    class_names = {c: f"s{i}" for i, c in enumerate(sm.classes)}
    class_labels = {c: c.render() for c in sm.classes}
    class_covers = {c: sm.covers_down(c) for c in sm.classes}

    lines = ["digraph iso {", "  rankdir=TB;"]
    lines.append("  subgraph cluster_family {")
    lines.append('    label="reduction family";')
    lines += _hasse_lines(member_names, member_labels, fam.covers_down, member_color, "    ")
    lines.append("  }")
    lines.append("  subgraph cluster_classes {")
    lines.append('    label="sequence classes";')
    lines += _hasse_lines(class_names, class_labels, class_covers, class_color, "    ")
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
