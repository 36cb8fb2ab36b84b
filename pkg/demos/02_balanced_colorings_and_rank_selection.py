"""Balanced colorings then rank selection, and the additivity of h-entries.

A pure (d-1)-dimensional complex is balanced when its vertices can be
colored with d colors so that every facet shows each color once.  Keeping
only the faces whose colors lie in a chosen set S carves out the
rank-selected subcomplex, and summing a fixed h-entry over all selections
of that size recovers the h-entry of the whole complex.
"""

from itertools import combinations

from topokit import find_balanced_coloring, h_additivity_table, shapes
from topokit import SimplicialComplex

octahedron = shapes.cross_polytope(3)
print(f"Octahedron coloring (antipodal pairs share a color): {octahedron.coloring}")
print()

for pair in combinations(octahedron.colors, 2):
    sub = octahedron.rank_select(pair)
    print(f"  colors {pair}: f = {sub.f_vector()}  (a 4-cycle around the equator)")
print()

table = h_additivity_table(octahedron)
print("h-additivity over color selections:")
for row in table["by_index"]:
    print(
        f"  h_{row['i']} = {row['h']:2d}   sum over |S| = {row['i']} selections:"
        f" {row['sum_over_selections']:2d}"
    )
print(f"  additivity holds: {table['holds']}")
print()

print("Colorings can also be searched for from scratch (exact backtracking):")
hexagon = SimplicialComplex([(i, (i + 1) % 6) for i in range(6)])
print(f"  6-cycle -> {find_balanced_coloring(hexagon)}")
pentagon = SimplicialComplex([(i, (i + 1) % 5) for i in range(5)])
print(f"  5-cycle -> {find_balanced_coloring(pentagon)}  (odd cycles have none)")
print()

report = octahedron.check_properties()
print(f"Property report for the octahedron: {report.as_dict()}")
print(f"Strongly connected: {octahedron.is_strongly_connected()}")
