"""Structure prediction: which direct sum of simple algebras a placement closes to.

For a connected graph with a vertex of degree > 2 the answer depends only on
the label, the vertex count, and (for four of the labels) bipartiteness and
the parities of the two color classes.  Complete graphs have their own scope
tag since the complete-graph results stand on their own.  Lines and cycles
are deliberately out of scope: the classifier refuses to guess and the caller
can fall back to the closure engine for a dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from dlagraph.catalog import check_label, is_a_type, place_on_graph
from dlagraph.closure import lie_closure
from dlagraph.graphs import (
    InteractionGraph,
    bipartition,
    connected_components,
    is_complete,
    max_degree,
    subgraph,
)

SCOPE_THEOREM = "Theorem1"
SCOPE_COMPLETE = "AppendixB_complete"
SCOPE_DIRECT_SUM = "DirectSum"
SCOPE_ORACLE = "OracleFallback"
SCOPE_OUT = "OutOfScope"

FAMILIES = ("u1", "su", "so", "sp")


def simple_dim(family: str, size: int) -> int:
    """Real dimension of the compact simple (or u1) family member.

    sp uses the compact-group convention: sp(N) has dimension N(2N+1),
    so sp(1) is the 3-dimensional su(2).
    """
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    if family == "u1":
        return 1
    if family == "su":
        return size * size - 1
    if family == "so":
        return size * (size - 1) // 2
    if family == "sp":
        return size * (2 * size + 1)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class Summand:
    family: str
    size: int
    multiplicity: int = 1

    @property
    def dim(self) -> int:
        return self.multiplicity * simple_dim(self.family, self.size)

    def __str__(self) -> str:
        base = f"{self.family}({self.size})"
        return base if self.multiplicity == 1 else f"{base}^{self.multiplicity}"


@dataclass(frozen=True)
class Classification:
    summands: tuple[Summand, ...]
    total_dim: int
    scope: str
    bipartite: tuple[int, int] | None = None


@dataclass(frozen=True)
class NormalForm:
    """Result of reducing a graph under label-preserving moves."""

    kind: str  # "complete" | "complete_bipartite" | "line_or_cycle" | "too_small"
    params: tuple[int, ...] = ()


COMPLETE_REDUCIBLE = {7, 16, 20, 22}
BIPARTITE_SENSITIVE = {2, 4, 6, 14}


def _k_of(label: str) -> int:
    return int(label[1:])


def normal_form(g: InteractionGraph, label: str) -> NormalForm:
    """Equivalence-class normal form of a connected graph for an a-type label.

    Labels a7/a16/a20/a22 reduce any connected graph with n >= 3 to the
    complete graph.  Labels a2/a4/a6/a14 need a vertex of degree > 2 and then
    reduce to K_n (non-bipartite) or K_{l,m} (bipartite).
    """
    check_label(label)
    if label in ("a0", "b0", "b1", "b3"):
        raise ValueError(f"no reduction theory for {label}")
    k = _k_of(label)
    if g.n < 3:
        return NormalForm("too_small", (g.n,))
    if k in COMPLETE_REDUCIBLE:
        return NormalForm("complete", (g.n,))
    if max_degree(g) <= 2:
        return NormalForm("line_or_cycle", (g.n,))
    bip = bipartition(g)
    if bip is None:
        return NormalForm("complete", (g.n,))
    return NormalForm("complete_bipartite", bip.sizes)


def _su(n_exp: int, mult: int = 1) -> Summand:
    return Summand("su", 1 << n_exp, mult)


def _so(n_exp: int, mult: int = 1) -> Summand:
    return Summand("so", 1 << n_exp, mult)


def _sp(n_exp: int, mult: int = 1) -> Summand:
    return Summand("sp", 1 << n_exp, mult)


def _parity_split_su(n: int) -> tuple[Summand, ...]:
    # shared by a4 (non-bipartite) and a7: one su block for odd n, four for even
    if n % 2:
        return (_su(n - 1),)
    return (_su(n - 2, 4),)


def _bipartite_a2(n: int, l: int, m: int) -> tuple[Summand, ...]:
    if l % 2 == 1 and m % 2 == 1:
        return (_su(n - 2, 2),)
    if l % 2 == 0 and m % 2 == 0:
        return (_so(n - 2, 4),)
    return (_so(n - 1),)


def theorem_summands(label: str, n: int, bip_sizes) -> tuple[Summand, ...]:
    """Predicted summands for a connected graph with a degree->2 vertex.

    ``bip_sizes`` is (l, m) for bipartite graphs and None otherwise.
    """
    k = _k_of(label)
    if k == 2:
        if bip_sizes:
            return _bipartite_a2(n, *bip_sizes)
        return (_so(n - 1, 2),)
    if k == 4:
        if bip_sizes:
            return _bipartite_a2(n, *bip_sizes)
        return _parity_split_su(n)
    if k == 6:
        if bip_sizes:
            return _parity_split_su(n)
        return (_su(n - 1, 2),)
    if k == 7:
        return _parity_split_su(n)
    if k == 14:
        if bip_sizes:
            l, m = bip_sizes
            if l % 2 == 1 and m % 2 == 1:
                return (_sp(n - 2, 2),)
            if l % 2 == 0 and m % 2 == 0:
                return (_so(n - 1, 2),)
            return (_su(n - 1),)
        return (_su(n - 1, 2),)
    if k == 16:
        return (_so(n),)
    if k == 20:
        return (_su(n - 1, 2),)
    if k == 22:
        return (_su(n),)
    raise ValueError(f"no structure table row for {label}")


def complete_graph_summands(label: str, n: int) -> tuple[Summand, ...]:
    """Known closures on the complete graph K_n, n >= 3."""
    if n < 3:
        raise ValueError("complete-graph table starts at n=3")
    k = _k_of(label)
    if k == 2:
        return (_so(n - 1, 2),)
    if k in (4, 7):
        return _parity_split_su(n)
    if k in (6, 14, 20):
        return (_su(n - 1, 2),)
    if k == 16:
        return (_so(n),)
    if k == 22:
        return (_su(n),)
    raise ValueError(f"no complete-graph row for {label}")


def _merge(summands) -> tuple[Summand, ...]:
    counts: dict[tuple[str, int], int] = {}
    for s in summands:
        counts[(s.family, s.size)] = counts.get((s.family, s.size), 0) + s.multiplicity
    return tuple(
        Summand(fam, size, mult)
        for (fam, size), mult in sorted(counts.items())
    )


def _finish(summands, scope, bip) -> Classification:
    summands = _merge(summands)
    total = sum(s.dim for s in summands)
    return Classification(summands, total, scope, bip)


def _classify_connected(g: InteractionGraph, label: str, oracle: bool) -> Classification:
    n, e = g.n, g.edge_count
    bip = bipartition(g)
    bip_sizes = bip.sizes if bip else None
    if label == "a0":
        return _finish([Summand("u1", 1, e)] if e else [], SCOPE_THEOREM, bip_sizes)
    if label == "b0":
        return _finish([Summand("u1", 1, n)], SCOPE_THEOREM, bip_sizes)
    if label == "b1":
        return _finish([Summand("u1", 1, n + e)], SCOPE_THEOREM, bip_sizes)
    if label == "b3":
        return _finish([Summand("su", 2, n)], SCOPE_THEOREM, bip_sizes)
    # a-type with k > 0
    if e == 0:
        # an isolated vertex carries no 2-local interaction at all
        return _finish([], SCOPE_THEOREM, bip_sizes)
    if is_complete(g) and n >= 3:
        return _finish(complete_graph_summands(label, n), SCOPE_COMPLETE, bip_sizes)
    if max_degree(g) >= 3:
        return _finish(theorem_summands(label, n, bip_sizes), SCOPE_THEOREM, bip_sizes)
    if oracle:
        dim = lie_closure(place_on_graph(label, g)).dimension
        return Classification((), dim, SCOPE_ORACLE, bip_sizes)
    return Classification((), 0, SCOPE_OUT, bip_sizes)


def classify(g: InteractionGraph, label: str, oracle: bool = False) -> Classification:
    """Predict the closure structure of the labeled placement on g.

    Disconnected graphs classify per component and merge (scope DirectSum).
    Lines, cycles and 2-vertex graphs yield OutOfScope unless ``oracle`` is
    set, in which case the closure engine supplies the dimension with the
    family left unidentified.
    """
    check_label(label)
    comps = connected_components(g)
    whole_bip = bipartition(g)
    whole_sizes = whole_bip.sizes if whole_bip else None
    if len(comps) == 1:
        return _classify_connected(g, label, oracle)
    parts = [_classify_connected(subgraph(g, comp), label, oracle) for comp in comps]
    if any(p.scope == SCOPE_OUT for p in parts):
        return Classification((), 0, SCOPE_OUT, whole_sizes)
    scope = SCOPE_ORACLE if any(p.scope == SCOPE_ORACLE for p in parts) else SCOPE_DIRECT_SUM
    merged = _merge(s for p in parts for s in p.summands)
    total = sum(p.total_dim for p in parts)
    return Classification(merged, total, scope, whole_sizes)


def predicted_dim(g: InteractionGraph, label: str) -> int:
    """total_dim of classify, raising if the input is out of scope."""
    c = classify(g, label)
    if c.scope == SCOPE_OUT:
        raise ValueError("out of scope: no structure prediction for lines/cycles")
    return c.total_dim
