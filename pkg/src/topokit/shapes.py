"""Canonical generated instances used by the CLI, the demos, and the tests."""

from __future__ import annotations

from itertools import product

from .complex import SimplicialComplex, connected_sum
from .errors import ValidationError
from .poset import SimplicialPoset

# Classical 7-vertex torus triangulation (Moebius): triangles {i, i+1, i+3}
# and {i, i+2, i+3} mod 7.  Not balanced (its 1-skeleton is K7).
_TORUS_FACETS = tuple(
    tuple(sorted(t))
    for i in range(7)
    for t in (((i) % 7, (i + 1) % 7, (i + 3) % 7), ((i) % 7, (i + 2) % 7, (i + 3) % 7))
)

# Classical 6-vertex real projective plane (antipodal quotient of the
# icosahedron); 2-neighborly, every edge lies in exactly two triangles.
_RP2_FACETS = (
    (0, 1, 2),
    (0, 1, 3),
    (0, 2, 4),
    (0, 3, 5),
    (0, 4, 5),
    (1, 2, 5),
    (1, 3, 4),
    (1, 4, 5),
    (2, 3, 4),
    (2, 3, 5),
)


def cross_polytope(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope with the antipodal coloring.

    Vertices 2i and 2i+1 form the i-th antipodal pair and share color i+1;
    facets pick one vertex from every pair, so the coloring is balanced.
    The case d = 3 is the octahedron.
    """
    if d < 1:
        raise ValidationError("cross-polytope dimension must be >= 1")
    facets = [
        tuple(sorted(2 * i + choice[i] for i in range(d)))
        for choice in product((0, 1), repeat=d)
    ]
    coloring = {2 * i + s: i + 1 for i in range(d) for s in (0, 1)}
    return SimplicialComplex(facets, coloring)


def cycle_complex(n: int) -> SimplicialComplex:
    """The n-cycle graph; even cycles carry the alternating 2-coloring."""
    if n < 3:
        raise ValidationError("cycles need at least 3 vertices")
    facets = [tuple(sorted((i, (i + 1) % n))) for i in range(n)]
    coloring = {i: 1 + (i % 2) for i in range(n)} if n % 2 == 0 else None
    return SimplicialComplex(facets, coloring)


def torus_7() -> SimplicialComplex:
    return SimplicialComplex(_TORUS_FACETS)


def projective_plane_6() -> SimplicialComplex:
    return SimplicialComplex(_RP2_FACETS)


def sd_torus() -> SimplicialComplex:
    """Barycentric subdivision of the 7-vertex torus; balanced by face size."""
    return torus_7().barycentric_subdivision()


def sd_projective_plane() -> SimplicialComplex:
    """Barycentric subdivision of the 6-vertex projective plane."""
    return projective_plane_6().barycentric_subdivision()


def double_edge_circle() -> SimplicialPoset:
    """Two atoms joined by two parallel edge elements; realization is a circle."""
    return SimplicialPoset(
        ranks={0: 1, 1: 1, 2: 2, 3: 2},
        covers=[(0, 2), (1, 2), (0, 3), (1, 3)],
        coloring={0: 1, 1: 2},
        labels={0: "u", 1: "v", 2: "e", 3: "f"},
    )


def octahedron_sum(copies: int) -> SimplicialComplex:
    """Iterated connected sum of octahedra, glued along matched facets.

    Each gluing identifies the lexicographically largest facet of the running
    sum with the smallest facet of a fresh octahedron, matching vertices in
    ascending order; colors are aligned automatically.
    """
    if copies < 1:
        raise ValidationError("need at least one copy")
    total = cross_polytope(3)
    for _ in range(copies - 1):
        extra = cross_polytope(3)
        f1 = max(total.facets)
        f2 = min(extra.facets)
        matching = dict(zip(sorted(f1), sorted(f2)))
        total = connected_sum(total, extra, f1, f2, matching)
    return total
