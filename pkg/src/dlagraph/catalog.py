"""The twelve symmetric 2-local generator catalogs and their graph placement.

Each label owns a template set: 2-letter templates stamped onto every edge in
both orientations, and single letters stamped onto every vertex.  Placement
order is edges (sorted) then vertices, deduplicating repeats, so a generator
list is reproducible from (label, graph) alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from dlagraph.graphs import InteractionGraph
from dlagraph.pauli import PauliString, pauli_from_sites

LABELS = ("a0", "a2", "a4", "a6", "a7", "a14", "a16", "a20", "a22", "b0", "b1", "b3")


@dataclass(frozen=True)
class TemplateSet:
    two_local: tuple[str, ...]
    one_local: tuple[str, ...] = ()


CATALOG: dict[str, TemplateSet] = {
    "a0": TemplateSet(("XX",)),
    "a2": TemplateSet(("XY", "YX")),
    "a4": TemplateSet(("XX", "YY")),
    "a6": TemplateSet(("XX", "YZ", "ZY")),
    "a7": TemplateSet(("XX", "YY", "ZZ")),
    "a14": TemplateSet(("XX", "YY", "XY", "YX")),
    "a16": TemplateSet(("XY", "YX", "YZ", "ZY")),
    "a20": TemplateSet(("XX", "YY", "YZ", "ZY")),
    "a22": TemplateSet(("XX", "XY", "YX", "XZ", "ZX")),
    "b0": TemplateSet((), ("X",)),
    "b1": TemplateSet(("XX",), ("X",)),
    "b3": TemplateSet((), ("X", "Y")),
}

# generator sets with the same closure, useful because their frustration
# graphs look different
ALTERNATIVES: dict[str, tuple[TemplateSet, ...]] = {
    "a14": (TemplateSet(("XX",), ("Z",)),),
    "a6": (TemplateSet(("XY", "YX", "ZZ")),),
}


def check_label(label: str) -> str:
    if label not in CATALOG:
        raise ValueError(f"unknown algebra label {label!r}; choose from {', '.join(LABELS)}")
    return label


def is_a_type(label: str) -> bool:
    return check_label(label).startswith("a")


def templates_for(label: str) -> TemplateSet:
    return CATALOG[check_label(label)]


def alternative_templates(label: str) -> tuple[TemplateSet, ...]:
    """Equivalent template sets for the label (possibly empty)."""
    return ALTERNATIVES.get(check_label(label), ())


@dataclass(frozen=True)
class GeneratorSet:
    label: str
    graph: InteractionGraph
    members: tuple[PauliString, ...]

    @property
    def n(self) -> int:
        return self.graph.n


def place_templates(templates: TemplateSet, graph: InteractionGraph) -> tuple[PauliString, ...]:
    """Stamp a template set onto a graph; edge block first, then vertex block."""
    n = graph.n
    members: list[PauliString] = []
    seen: set[int] = set()

    def admit(p: PauliString):
        if p.key not in seen:
            seen.add(p.key)
            members.append(p)

    for (i, j) in graph.edges:
        for t in templates.two_local:
            admit(pauli_from_sites(n, [(i, t[0]), (j, t[1])]))
            admit(pauli_from_sites(n, [(j, t[0]), (i, t[1])]))
    for v in range(n):
        for letter in templates.one_local:
            admit(pauli_from_sites(n, [(v, letter)]))
    return tuple(members)


def place_on_graph(label: str, graph: InteractionGraph) -> GeneratorSet:
    """Primary generators of the labeled algebra on the graph.

    >>> [str(p) for p in place_on_graph("a2", build_graph(2, [(0, 1)])).members]
    ['XY', 'YX']
    """
    check_label(label)
    if is_a_type(label) and graph.edge_count == 0:
        raise ValueError(f"{label} needs at least one edge")
    return GeneratorSet(label, graph, place_templates(templates_for(label), graph))


def place_alternative(label: str, graph: InteractionGraph, which: int = 0) -> GeneratorSet:
    """Like place_on_graph but with one of the label's alternative template sets."""
    alts = alternative_templates(label)
    if not alts:
        raise ValueError(f"no alternative generators recorded for {label}")
    return GeneratorSet(label, graph, place_templates(alts[which], graph))
