"""Tour of the structure tables: what each interaction family generates.

For a handful of graphs, predict the closure structure of all twelve
interaction labels from the tables, then recompute every dimension with the
bracket-closure engine.  The punchline is that the prediction depends on the
graph only through crude features: vertex count, edge count, whether some
vertex has degree > 2, and the bipartition block parities.
"""

from dlagraph import (
    classify,
    complete_bipartite,
    complete_graph,
    lie_closure,
    omega_graph,
    place_on_graph,
    sigma_graph,
    LABELS,
)

GRAPHS = [
    ("star K_{1,3}", complete_bipartite(1, 3)),
    ("diamond (4 vertices, 4 edges)", omega_graph()),
    ("branched tree on 5 vertices", sigma_graph()),
    ("complete K_4", complete_graph(4)),
]

for name, g in GRAPHS:
    print(f"\n=== {name} ===")
    print(f"{'label':>5}  {'structure':<22} {'predicted':>9} {'closure':>8}")
    for label in LABELS:
        cls = classify(g, label)
        actual = lie_closure(place_on_graph(label, g)).dimension
        structure = " + ".join(str(s) for s in cls.summands) or "(trivial)"
        flag = "" if cls.total_dim == actual else "  <-- MISMATCH"
        print(f"{label:>5}  {structure:<22} {cls.total_dim:>9} {actual:>8}{flag}")

# the same label can land on different families depending on block parities:
# on K_{l,m} the a2 family follows the parities of l and m
print("\n=== a2 on complete bipartite blocks: parity decides the family ===")
for l, m in [(1, 3), (1, 4), (2, 4), (3, 3)]:
    cls = classify(complete_bipartite(l, m), "a2")
    structure = " + ".join(str(s) for s in cls.summands)
    print(f"K_{{{l},{m}}}: {structure:<22} dim {cls.total_dim}")
