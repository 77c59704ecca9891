"""Undirected interaction graphs: construction, recognition, enumeration.

Vertices are 0..n-1.  Edges are stored sorted as (u, v) with u < v so graph
values hash and compare deterministically.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class InteractionGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [b if a == v else a for (a, b) in self.edges if v in (a, b)]
        return tuple(sorted(out))

    def __str__(self) -> str:
        return f"graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edges) -> InteractionGraph:
    """Validate and normalize an edge list.

    >>> build_graph(5, [(1, 0), (1, 2), (1, 4), (2, 3)]).edges
    ((0, 1), (1, 2), (1, 4), (2, 3))
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    seen = set()
    for (u, v) in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        seen.add((min(u, v), max(u, v)))
    return InteractionGraph(n, tuple(sorted(seen)))


def degrees(g: InteractionGraph) -> tuple[int, ...]:
    d = [0] * g.n
    for (u, v) in g.edges:
        d[u] += 1
        d[v] += 1
    return tuple(d)


def max_degree(g: InteractionGraph) -> int:
    return max(degrees(g))


def _adjacency_sets(g: InteractionGraph):
    adj = [[] for _ in range(g.n)]
    for (u, v) in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return [sorted(a) for a in adj]


def connected_components(g: InteractionGraph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest vertex."""
    adj = _adjacency_sets(g)
    unseen = set(range(g.n))
    out = []
    while unseen:
        root = min(unseen)
        stack, comp = [root], {root}
        unseen.discard(root)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in unseen:
                    unseen.discard(w)
                    comp.add(w)
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: InteractionGraph) -> bool:
    return len(connected_components(g)) == 1


def subgraph(g: InteractionGraph, vertices) -> InteractionGraph:
    """Induced subgraph with vertices relabeled 0..k-1 in sorted order."""
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for (u, v) in g.edges
        if u in index and v in index
    ]
    return build_graph(len(verts), edges)


def add_edges(g: InteractionGraph, extra) -> InteractionGraph:
    return build_graph(g.n, list(g.edges) + list(extra))


@dataclass(frozen=True)
class Bipartition:
    """2-coloring: ``left`` is the color class of each component's least vertex."""

    colors: tuple[int, ...]

    @property
    def left(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == 0)

    @property
    def right(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == 1)

    @property
    def sizes(self) -> tuple[int, int]:
        return len(self.left), len(self.right)


def bipartition(g: InteractionGraph):
    """The Bipartition, or None if some component has an odd cycle."""
    adj = _adjacency_sets(g)
    colors = [-1] * g.n
    for comp in connected_components(g):
        root = comp[0]
        colors[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in adj[v]:
                if colors[w] == -1:
                    colors[w] = 1 - colors[v]
                    queue.append(w)
                elif colors[w] == colors[v]:
                    return None
    return Bipartition(tuple(colors))


def is_complete(g: InteractionGraph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


@dataclass(frozen=True)
class GraphFamily:
    kind: str  # "line" | "cycle" | "complete" | "complete_bipartite" | "other"
    params: tuple[int, ...]


def recognize(g: InteractionGraph) -> GraphFamily:
    """Exact family recognition for a connected graph.

    Overlaps resolve in the order line, cycle, complete, complete bipartite:
    K2 reports line(2), K3 reports cycle(3), C4 reports cycle(4).
    """
    if not is_connected(g):
        raise ValueError("recognize expects a connected graph")
    degs = degrees(g)
    if g.n == 1:
        return GraphFamily("line", (1,))
    if max(degs) <= 2:
        if g.edge_count == g.n - 1:
            return GraphFamily("line", (g.n,))
        return GraphFamily("cycle", (g.n,))
    if is_complete(g):
        return GraphFamily("complete", (g.n,))
    bip = bipartition(g)
    if bip is not None:
        l, m = bip.sizes
        if g.edge_count == l * m:
            return GraphFamily("complete_bipartite", (l, m))
    return GraphFamily("other", (g.n,))


# ------------------------------------------------------------- named graphs

def line_graph(n: int) -> InteractionGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> InteractionGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> InteractionGraph:
    return build_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(l: int, m: int) -> InteractionGraph:
    """K_{l,m}; the left class is vertices 0..l-1."""
    if l < 1 or m < 1:
        raise ValueError("both classes need at least one vertex")
    return build_graph(l + m, [(i, l + j) for i in range(l) for j in range(m)])


def sigma_graph() -> InteractionGraph:
    """Five-vertex tree: hub 1 joined to 0, 2, 4, with a tail 2-3."""
    return build_graph(5, [(0, 1), (1, 2), (1, 4), (2, 3)])


def omega_graph() -> InteractionGraph:
    """Triangle 1-2-3 with pendant vertex 0 attached to 1."""
    return build_graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])


# ----------------------------------------------------------------- parsing

def parse_graph_text(text: str) -> InteractionGraph:
    """Edge-list format: first line 'n <count>', then 'u v' lines, '#' comments."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise ValueError("missing 'n <count>' header line")
    return build_graph(n, edges)


def parse_graph_json(text: str) -> InteractionGraph:
    """JSON format: {"n": 5, "edges": [[0,1], [1,2]]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad graph JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph JSON needs keys 'n' and 'edges'")
    edges = [tuple(e) for e in obj["edges"]]
    if any(len(e) != 2 for e in edges):
        raise ValueError("each edge must be a pair [u, v]")
    return build_graph(int(obj["n"]), edges)


def parse_graph(text: str) -> InteractionGraph:
    """Dispatch on leading '{' between the JSON and edge-list formats."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


_SHORTCUTS = {"sigma": sigma_graph, "omega": omega_graph}


def graph_from_spec(spec: str) -> InteractionGraph:
    """Inline constructors: 'K:5', 'Kb:2,3', 'L:4', 'C:6', 'Sigma', 'Omega'."""
    s = spec.strip()
    low = s.lower()
    if low in _SHORTCUTS:
        return _SHORTCUTS[low]()
    if ":" in s:
        head, _, tail = s.partition(":")
        try:
            args = [int(p) for p in tail.split(",")]
        except ValueError:
            raise ValueError(f"bad graph spec {spec!r}") from None
        if head == "K" and len(args) == 1:
            return complete_graph(args[0])
        if head == "Kb" and len(args) == 2:
            return complete_bipartite(*args)
        if head == "L" and len(args) == 1:
            return line_graph(args[0])
        if head == "C" and len(args) == 1:
            return cycle_graph(args[0])
    raise ValueError(f"bad graph spec {spec!r}")


# -------------------------------------------------- isomorphism enumeration

def enumerate_connected_graphs(n: int, min_max_degree: int = 0) -> list[InteractionGraph]:
    """All connected graphs on n vertices up to isomorphism, one per class.

    Every labeled graph is a bitmask over the n(n-1)/2 vertex pairs; the
    canonical form is the minimum mask over all vertex permutations, computed
    for all masks at once with one matrix product per permutation.  Practical
    through n=6 (32768 masks x 720 permutations).
    """
    if not 1 <= n <= 6:
        raise ValueError("enumeration supported for 1 <= n <= 6")
    if n == 1:
        g = build_graph(1, [])
        return [g] if min_max_degree <= 0 else []
    pairs = list(itertools.combinations(range(n), 2))
    bit_of = {p: i for i, p in enumerate(pairs)}
    nbits = len(pairs)
    masks = np.arange(1 << nbits, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(nbits)) & 1
    canon = masks.copy()
    for perm in itertools.permutations(range(n)):
        weights = np.zeros(nbits, dtype=np.int64)
        for (u, v), b in bit_of.items():
            pu, pv = perm[u], perm[v]
            weights[b] = 1 << bit_of[(min(pu, pv), max(pu, pv))]
        np.minimum(canon, bits @ weights, out=canon)
    reps = np.nonzero(canon == masks)[0]
    out = []
    for mask in reps.tolist():
        edges = [pairs[b] for b in range(nbits) if mask >> b & 1]
        g = build_graph(n, edges)
        if is_connected(g) and max_degree(g) >= min_max_degree:
            out.append(g)
    out.sort(key=lambda g: (g.edge_count, g.edges))
    return out
