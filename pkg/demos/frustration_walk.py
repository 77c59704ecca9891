"""Membership certificates from walks on the anticommutation graph.

A product of generators lies in the closure exactly when one of its colorings
can be built up one generator at a time, each addition or removal touching an
odd number of already-colored neighbors.  The walk below certifies that an
end-to-end coupling on a 5-vertex branched tree is reachable; the second part
shows a target that is in the group generated by the strings but provably not
in the Lie closure, because every coloring of it is walled off.
"""

from dlagraph import (
    build_frustration,
    contains,
    format_pauli,
    lie_closure,
    member_via_frustration,
    parse_pauli,
    place_on_graph,
    product_of,
    sigma_graph,
    toggle,
)

gens = place_on_graph("a2", sigma_graph())
fg = build_frustration(gens)
print("generators of the a2 family on the branched tree 0-1, 1-2, 1-4, 2-3:")
for i, p in enumerate(fg.generators):
    partners = [j for j in range(fg.size) if fg.adjacency[i] >> j & 1]
    print(f"  g{i} {p}   anticommutes with {partners}")

target = parse_pauli("XIIYI")
trace = member_via_frustration(gens, target)
print(f"\ntarget {target}: couples the far ends of the tree, no edge between them")
print(f"shortest certificate: start at g{trace.start}, then {len(trace.steps)} toggles")
coloring = 1 << trace.start
print(f"  start  g{trace.start}  {fg.generators[trace.start]}")
for i in trace.steps:
    action = "remove" if coloring >> i & 1 else "add   "
    coloring = toggle(fg, coloring, i)
    running = format_pauli(product_of(fg, coloring))
    print(f"  {action} g{i}  {fg.generators[i]}   product now {running}")
assert contains(lie_closure(gens), target)

# three strings whose pairwise products cover ZZ, yet ZZ is out of reach:
# its only coloring {YX, XY} has all-even adjacency, so no toggle applies
blocked = [parse_pauli(t) for t in ("YX", "XX", "XY")]
print("\ngenerators YX, XX, XY on two sites:")
print("  ZZ equals the group product YX * XY up to phase, but")
trace = member_via_frustration(blocked, parse_pauli("ZZ"))
member = contains(lie_closure(blocked), parse_pauli("ZZ"))
print(f"  walk certificate: {trace}, closure membership: {member}")
