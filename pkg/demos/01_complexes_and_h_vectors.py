"""Build complexes from facets and read off their face and h-vectors.

The h-vector is the alternating-sum transform of the face counts; for the
nice complexes in this tour its entries are nonnegative and sum to the
number of facets.
"""

from topokit import SimplicialComplex, shapes

octahedron = shapes.cross_polytope(3)
print("The octahedron is the boundary of the 3-dimensional cross-polytope:")
print(f"  {octahedron}")
print(f"  facets: {[list(f) for f in octahedron.facets]}")
print(f"  f-vector (empty face, vertices, edges, triangles): {octahedron.f_vector()}")
print(f"  h-vector: {octahedron.h_vector()}  (palindromic: a sphere)")
print()

hexagon = shapes.cycle_complex(6)
print("A hexagon is a 1-dimensional complex; its h-vector ends with h2 = 1,")
print("the number of independent cycles:")
print(f"  f-vector: {hexagon.f_vector()}   h-vector: {hexagon.h_vector()}")
print()

print("Faces are stored implicitly; any dimension can be enumerated on demand.")
print(f"  octahedron edges: {octahedron.faces(1)}")
print()

path = SimplicialComplex([(0, 1), (1, 2)])
print("Across a facet-size mix the h-vector is refused (it needs a pure complex):")
mixed = SimplicialComplex([(0, 1, 2), (2, 3)])
try:
    mixed.h_vector()
except Exception as error:
    print(f"  {type(error).__name__}: {error}")
print(f"  while the pure path {path.facets} gives h = {path.h_vector()}")
