import pytest

from conftest import brute_force_face_counts, h_from_f_by_polynomial

from topokit import (
    FaceNotFoundError,
    MissingColoringError,
    PurityError,
    SimplicialComplex,
    ValidationError,
    connected_sum,
    find_balanced_coloring,
    h_additivity_table,
)
from topokit import shapes


@pytest.fixture(scope="module")
def octahedron():
    return shapes.cross_polytope(3)


# -- face enumeration ---------------------------------------------------------


def test_single_edge_vertices():
    edge = SimplicialComplex([(0, 1)])
    assert edge.faces(0) == [(0,), (1,)]
    assert edge.faces(-1) == [()]


def test_octahedron_edge_count_matches_brute_force(octahedron):
    assert len(octahedron.faces(1)) == 12
    assert octahedron.f_vector() == brute_force_face_counts(octahedron)


def test_face_dimension_out_of_range(octahedron):
    with pytest.raises(ValueError):
        octahedron.faces(3)
    with pytest.raises(ValueError):
        octahedron.faces(-2)


def test_faces_are_lexicographically_sorted(octahedron):
    edges = octahedron.faces(1)
    assert edges == sorted(edges)


# -- f- and h-vectors ----------------------------------------------------------


def test_f_vectors():
    assert SimplicialComplex([(0, 1)]).f_vector() == (1, 2, 1)
    assert shapes.cross_polytope(3).f_vector() == (1, 6, 12, 8)
    assert shapes.cycle_complex(6).f_vector() == (1, 6, 6)


def test_h_vectors():
    assert SimplicialComplex([(0, 1)]).h_vector() == (1, 0, 0)
    assert shapes.cross_polytope(3).h_vector() == (1, 3, 3, 1)
    assert shapes.cycle_complex(6).h_vector() == (1, 4, 1)


def test_h_vector_requires_pure():
    mixed = SimplicialComplex([(0, 1, 2), (2, 3)])
    with pytest.raises(PurityError):
        mixed.h_vector()


def test_h_f_polynomial_identity(corpus):
    # sum_i h_i lam^(d-i) == sum_i f_{i-1} (lam-1)^(d-i), checked at lam = 0, 1, 2
    for complex in corpus.values():
        f, h = complex.f_vector(), complex.h_vector()
        d = len(h) - 1
        for lam in (0, 1, 2):
            lhs = sum(h[i] * lam ** (d - i) for i in range(d + 1))
            assert lhs == h_from_f_by_polynomial(f, lam)


def test_h_vector_sums_to_facet_count(corpus):
    for complex in corpus.values():
        assert sum(complex.h_vector()) == len(complex.facets)


# -- link and star ---------------------------------------------------------------


def test_link_of_empty_face_is_whole_complex(octahedron):
    assert octahedron.link(()) == octahedron


def test_octahedron_vertex_link_is_four_cycle(octahedron):
    link = octahedron.link((0,))
    assert link.f_vector() == (1, 4, 4)
    assert link.is_connected()
    assert link.h_vector() == (1, 2, 1)


def test_link_of_vertex_in_edge():
    edge = SimplicialComplex([(0, 1)])
    assert edge.link((0,)).facets == ((1,),)


def test_link_requires_existing_face(octahedron):
    with pytest.raises(FaceNotFoundError):
        octahedron.link((0, 1))  # antipodal pair, not an edge


def test_closed_star(octahedron):
    assert octahedron.closed_star(()) == octahedron
    star = octahedron.closed_star((0,))
    assert len(star.facets) == 4
    assert all(0 in f for f in star.facets)
    facet = octahedron.facets[0]
    assert octahedron.closed_star(facet).facets == (facet,)


def test_link_coloring_is_restricted(octahedron):
    link = octahedron.link((0,))
    kappa = octahedron.coloring
    assert link.coloring == {v: kappa[v] for v in link.vertices}


# -- rank selection ---------------------------------------------------------------


def test_rank_select_all_colors_is_identity(octahedron):
    assert octahedron.rank_select({1, 2, 3}) == octahedron


def test_rank_select_pair_is_four_cycle(octahedron):
    sub = octahedron.rank_select({1, 2})
    assert sub.f_vector() == (1, 4, 4)
    assert sub.is_connected()


def test_rank_select_empty_is_empty_complex(octahedron):
    sub = octahedron.rank_select(set())
    assert sub.facets == ((),)
    assert sub.f_vector() == (1,)
    assert sub.h_vector() == (1,)


def test_rank_select_needs_coloring():
    with pytest.raises(MissingColoringError):
        shapes.torus_7().rank_select({1, 2})


def test_h_additivity_on_corpus_members(corpus):
    for name in ("octahedron", "cycle6", "sd_rp2"):
        assert h_additivity_table(corpus[name])["holds"]


# -- balanced colorings --------------------------------------------------------------


def test_simplex_coloring_assigns_distinct_colors():
    simplex = SimplicialComplex([(0, 1, 2, 3)])
    coloring = find_balanced_coloring(simplex)
    assert sorted(coloring.values()) == [1, 2, 3, 4]


def test_even_cycle_coloring_alternates():
    coloring = find_balanced_coloring(SimplicialComplex([(i, (i + 1) % 6) for i in range(6)]))
    assert coloring is not None
    for i in range(6):
        assert coloring[i] != coloring[(i + 1) % 6]


def test_odd_cycle_has_no_balanced_coloring():
    five = SimplicialComplex([(i, (i + 1) % 5) for i in range(5)])
    assert find_balanced_coloring(five) is None


def test_coloring_search_is_deterministic():
    hexagon = SimplicialComplex([(i, (i + 1) % 6) for i in range(6)])
    assert find_balanced_coloring(hexagon) == find_balanced_coloring(hexagon)


# -- property checks -------------------------------------------------------------------


def test_octahedron_properties(octahedron):
    report = octahedron.check_properties()
    assert report.pure and report.balanced and report.links_connected


def test_disconnected_complex_fails_link_check():
    two_edges = SimplicialComplex([(0, 1), (2, 3)])
    report = two_edges.check_properties()
    assert report.pure
    assert not report.links_connected


def test_cycle_properties():
    report = shapes.cycle_complex(6).check_properties()
    assert report.pure and report.balanced and report.links_connected


def test_improper_attached_coloring_rejected():
    with pytest.raises(ValidationError):
        SimplicialComplex([(0, 1)], coloring={0: 1, 1: 1})


# -- strong connectivity ------------------------------------------------------------------


def test_octahedron_strongly_connected(octahedron):
    assert octahedron.is_strongly_connected()


def test_two_triangles_sharing_vertex_not_strongly_connected():
    bowtie = SimplicialComplex([(0, 1, 2), (0, 3, 4)])
    assert not bowtie.is_strongly_connected()


def test_single_facet_strongly_connected():
    assert SimplicialComplex([(0, 1, 2)]).is_strongly_connected()


def test_strong_connectivity_requires_pure():
    with pytest.raises(PurityError):
        SimplicialComplex([(0, 1, 2), (2, 3)]).is_strongly_connected()


def test_properties_imply_strong_connectivity(corpus):
    for complex in corpus.values():
        assert complex.check_properties().all_hold
        assert complex.is_strongly_connected()


def test_two_color_selections_are_connected(corpus):
    from itertools import combinations

    for complex in corpus.values():
        for pair in combinations(complex.colors, 2):
            assert complex.rank_select(pair).is_connected()


def test_links_of_small_faces_inherit_properties(corpus):
    for name in ("octahedron", "cross4", "sd_rp2"):
        complex = corpus[name]
        for size in range(0, complex.d - 1):
            for face in complex.faces(size - 1):
                assert complex.link(face).check_properties().all_hold


# -- barycentric subdivision ------------------------------------------------------------------


def test_sd_of_edge_is_path():
    sd = SimplicialComplex([(0, 1)]).barycentric_subdivision()
    assert sd.f_vector() == (1, 3, 2)


def test_sd_of_triangle_has_six_facets():
    sd = SimplicialComplex([(0, 1, 2)]).barycentric_subdivision()
    assert len(sd.facets) == 6


def test_sd_vertex_count_is_face_count(octahedron):
    sd = octahedron.barycentric_subdivision()
    assert sd.f_vector()[1] == 6 + 12 + 8


def test_sd_is_balanced_by_size(corpus):
    for name in ("octahedron", "cycle6"):
        sd = corpus[name].barycentric_subdivision()
        report = sd.check_properties()
        assert report.balanced
        assert set(sd.coloring.values()) == set(range(1, sd.d + 1))


# -- connected sums -----------------------------------------------------------------------------


def test_sum_of_edges_is_path():
    e1 = SimplicialComplex([(0, 1)])
    e2 = SimplicialComplex([(0, 1)])
    total = connected_sum(e1, e2, (1,), (0,), {1: 0})
    assert total.f_vector() == (1, 3, 2)


def test_octahedron_sum_counts():
    total = shapes.octahedron_sum(2)
    assert total.f_vector()[1] == 9
    assert len(total.facets) == 14


def test_sum_of_balanced_is_balanced():
    total = shapes.octahedron_sum(3)
    assert total.check_properties().balanced
    assert len(total.colors) == 3


def test_sum_error_cases():
    oct3 = shapes.cross_polytope(3)
    square = shapes.cycle_complex(4)
    with pytest.raises(ValidationError):
        connected_sum(oct3, square, oct3.facets[0], square.facets[0], {})
    f = oct3.facets[0]
    with pytest.raises(FaceNotFoundError):
        connected_sum(oct3, oct3, (0, 1, 2), f, dict(zip((0, 1, 2), f)))
    with pytest.raises(ValidationError):
        connected_sum(oct3, oct3, f, f, {v: v for v in oct3.facets[1]})


# -- constructor and JSON -----------------------------------------------------------------------


def test_duplicate_facets_rejected():
    with pytest.raises(ValidationError):
        SimplicialComplex([(0, 1), (0, 1)])


def test_contained_facets_rejected():
    with pytest.raises(ValidationError):
        SimplicialComplex([(0, 1, 2), (0, 1)])


def test_from_faces_maximalizes():
    complex = SimplicialComplex.from_faces([(0, 1, 2), (0, 1), (2,)])
    assert complex.facets == ((0, 1, 2),)


def test_json_roundtrip(octahedron):
    data = octahedron.to_json()
    again = SimplicialComplex.from_json(data)
    assert again == octahedron
    assert again.to_json() == data


def test_json_rejects_unsorted_facet():
    with pytest.raises(ValidationError):
        SimplicialComplex.from_json({"type": "complex", "facets": [[1, 0]]})


def test_json_rejects_duplicates():
    with pytest.raises(ValidationError):
        SimplicialComplex.from_json({"type": "complex", "facets": [[0, 1], [0, 1]]})
