"""Fixed points of an antiunitary involution carve out the bipartite closure.

Take the a14 family on the complete graph over l+m qubits, and the involution
built from Y letters on the first l sites and X letters on the remaining m.
The strings of the closure that survive the involution form a subalgebra, and
that subalgebra is exactly the closure of the same family on the complete
bipartite graph K_{l,m}.  A closed-form dimension count agrees whenever some
block has at least 3 sites.
"""

from dlagraph import (
    closure_equal,
    complete_bipartite,
    complete_graph,
    fixed_subset,
    lie_closure,
    make_theta,
    place_on_graph,
    upper_bound_dim,
)

print(f"{'(l,m)':>6} {'whole':>6} {'fixed':>6} {'block':>6} {'formula':>8}  verdict")
for l, m in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 3), (2, 4)]:
    theta = make_theta(l, m)
    whole = lie_closure(place_on_graph("a14", complete_graph(l + m)))
    fixed = fixed_subset(theta, whole)
    block = lie_closure(place_on_graph("a14", complete_bipartite(l, m)))
    formula = upper_bound_dim("a14", l, m)
    tight = closure_equal(fixed, block)
    in_hypothesis = l + m >= 4 and max(l, m) >= 3
    verdict = "fixed == block"
    if in_hypothesis:
        verdict += ", formula " + ("exact" if formula == fixed.dimension else "LOOSE")
    else:
        verdict += f", formula {formula} informational"
    assert tight
    print(f"({l},{m})".rjust(6),
          f"{whole.dimension:>6} {fixed.dimension:>6} {block.dimension:>6} {formula:>8}  {verdict}")

print("\nreading the table: restricting the interaction graph from complete to")
print("complete bipartite costs exactly the non-fixed directions, nothing more.")
