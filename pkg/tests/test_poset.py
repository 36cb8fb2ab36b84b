import pytest

from topokit import (
    FaceNotFoundError,
    MissingColoringError,
    PurityError,
    SimplicialComplex,
    SimplicialPoset,
    ValidationError,
    face_poset,
)
from topokit import shapes


def shifted_double_circle(offset):
    base = shapes.double_edge_circle()
    ranks = {x + offset: base.rank(x) for x in base.ids}
    covers = [(lo + offset, hi + offset) for lo, hi in base.covers]
    coloring = {v + offset: c for v, c in base.coloring.items()}
    return ranks, covers, coloring


# -- validation -----------------------------------------------------------------


def test_face_poset_is_valid(corpus):
    assert face_poset(corpus["octahedron"]).validate().valid


def test_double_circle_is_valid(double_circle):
    report = double_circle.validate()
    assert report.valid
    for e in (2, 3):
        assert double_circle.atoms_of(e) == {0, 1}


def test_rank2_element_with_single_atom_invalid():
    poset = SimplicialPoset({0: 1, 1: 2}, [(0, 1)])
    report = poset.validate()
    assert not report.valid
    assert report.element == 1


def test_rank_jump_invalid():
    poset = SimplicialPoset({0: 1, 1: 3}, [(0, 1)])
    report = poset.validate()
    assert not report.valid


def test_shared_atom_sets_invalid():
    # two rank-2 elements below one rank-3 element, both on the same atom pair
    poset = SimplicialPoset(
        {0: 1, 1: 1, 2: 2, 3: 2, 4: 3},
        [(0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 4)],
    )
    assert not poset.validate().valid


# -- face posets -------------------------------------------------------------------


def test_face_poset_of_edge():
    poset = face_poset(SimplicialComplex([(0, 1)]))
    assert len(poset.ids) == 3
    assert len(poset.covers) == 2


def test_face_poset_of_triangle():
    poset = face_poset(SimplicialComplex([(0, 1, 2)]))
    assert len(poset.ids) == 7


def test_face_poset_of_octahedron(corpus):
    assert len(face_poset(corpus["octahedron"]).ids) == 26


# -- order complexes ------------------------------------------------------------------


def test_order_complex_of_edge_poset():
    oc = face_poset(SimplicialComplex([(0, 1)])).order_complex()
    assert oc.f_vector() == (1, 3, 2)


def test_order_complex_of_double_circle(double_circle):
    oc = double_circle.order_complex()
    assert oc.f_vector() == (1, 4, 4)
    assert sorted(oc.facets) == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_order_complex_invariants(corpus, double_circle):
    posets = [double_circle, face_poset(corpus["octahedron"])]
    for poset in posets:
        oc = poset.order_complex()
        assert oc.f_vector()[1] == len(poset.ids)
        assert oc.check_properties().balanced
        assert oc.is_pure == poset.is_pure
        assert set(oc.coloring.values()) == set(range(1, poset.rank_of_poset + 1))
    impure = face_poset(SimplicialComplex([(0, 1, 2), (2, 3)]))
    assert not impure.is_pure
    assert not impure.order_complex().is_pure


def test_order_complex_matches_barycentric_subdivision(corpus):
    for name in ("octahedron", "cycle6"):
        complex = corpus[name]
        oc = face_poset(complex).order_complex()
        sd = complex.barycentric_subdivision()
        assert oc.facets == sd.facets
        assert oc.coloring == sd.coloring


# -- links ---------------------------------------------------------------------------


def test_link_of_bottom_is_whole_poset(double_circle):
    assert double_circle.link(None) is double_circle


def test_double_circle_atom_link(double_circle):
    link = double_circle.link(0)
    assert set(link.ids) == {2, 3}
    assert link.rank(2) == link.rank(3) == 1
    # inherited colors come from the opposite endpoints
    assert link.coloring == {2: 2, 3: 2}


def test_link_of_facet_is_empty(double_circle):
    link = double_circle.link(2)
    assert link.ids == ()


def test_link_of_missing_element(double_circle):
    with pytest.raises(FaceNotFoundError):
        double_circle.link(99)


def test_poset_links_inherit_properties(corpus, double_circle):
    posets = [double_circle, face_poset(corpus["octahedron"])]
    for poset in posets:
        d = poset.rank_of_poset
        for x in poset.ids:
            if poset.rank(x) < d - 1:
                assert poset.link(x).check_properties().all_hold


# -- rank selection --------------------------------------------------------------------


def test_rank_select_everything(double_circle):
    sub = double_circle.rank_select({1, 2})
    assert sub.ids == double_circle.ids
    assert sub.covers == double_circle.covers


def test_rank_select_commutes_with_face_poset(corpus):
    octa = corpus["octahedron"]
    left = face_poset(octa).rank_select({1, 2})
    right = face_poset(octa.rank_select({1, 2}))
    # same shape up to ids: compare rank counts and cover counts
    assert [len(left.elements_of_rank(r)) for r in (1, 2)] == [
        len(right.elements_of_rank(r)) for r in (1, 2)
    ]
    assert len(left.covers) == len(right.covers)


def test_rank_select_needs_coloring():
    poset = face_poset(shapes.torus_7())
    with pytest.raises(MissingColoringError):
        poset.rank_select({1, 2})


def test_two_color_selections_connected(corpus, double_circle):
    from itertools import combinations

    posets = [double_circle] + [face_poset(corpus[n]) for n in ("octahedron", "cycle6")]
    for poset in posets:
        for pair in combinations(poset.palette, 2):
            assert poset.rank_select(pair).is_connected()


# -- properties --------------------------------------------------------------------------


def test_double_circle_properties(double_circle):
    report = double_circle.check_properties()
    assert report.pure and report.balanced and report.links_connected


def test_face_poset_properties(corpus):
    report = face_poset(corpus["octahedron"]).check_properties()
    assert report.pure and report.balanced and report.links_connected


def test_disjoint_union_fails_link_connectivity():
    r1, c1, col1 = shifted_double_circle(0)
    r2, c2, col2 = shifted_double_circle(10)
    union = SimplicialPoset(r1 | r2, c1 + c2, col1 | col2)
    report = union.check_properties()
    assert report.pure
    assert not report.links_connected


# -- f/h-vectors ------------------------------------------------------------------------------


def test_double_circle_f_h(double_circle):
    f, h = double_circle.f_h_vectors()
    assert f == (1, 2, 2)
    assert h == (1, 0, 1)


def test_face_poset_f_h_matches_complex(corpus):
    for name in ("cycle6", "octahedron"):
        complex = corpus[name]
        f, h = face_poset(complex).f_h_vectors()
        assert f == complex.f_vector()
        assert h == complex.h_vector()


def test_single_edge_face_poset_h():
    _, h = face_poset(SimplicialComplex([(0, 1)])).f_h_vectors()
    assert h == (1, 0, 0)


def test_f_h_requires_pure():
    poset = face_poset(SimplicialComplex([(0, 1, 2), (2, 3)]))
    with pytest.raises(PurityError):
        poset.f_h_vectors()


# -- strong connectivity ------------------------------------------------------------------------


def test_double_circle_strongly_connected(double_circle):
    assert double_circle.is_strongly_connected()


def test_face_poset_strong_connectivity_matches(corpus):
    for name in ("octahedron", "sum2"):
        assert face_poset(corpus[name]).is_strongly_connected()


def test_disjoint_union_not_strongly_connected():
    r1, c1, col1 = shifted_double_circle(0)
    r2, c2, col2 = shifted_double_circle(10)
    union = SimplicialPoset(r1 | r2, c1 + c2, col1 | col2)
    assert not union.is_strongly_connected()


def test_poset_properties_imply_strong_connectivity(corpus, double_circle):
    posets = [double_circle] + [
        face_poset(corpus[n]) for n in ("octahedron", "cycle4", "sum2")
    ]
    for poset in posets:
        assert poset.check_properties().all_hold
        assert poset.is_strongly_connected()


# -- serialization -----------------------------------------------------------------------------


def test_poset_json_roundtrip(double_circle):
    data = double_circle.to_json()
    again = SimplicialPoset.from_json(data)
    assert again.ids == double_circle.ids
    assert again.covers == double_circle.covers
    assert again.coloring == double_circle.coloring
    assert again.to_json() == data


def test_poset_json_rank_crosscheck():
    data = {
        "type": "poset",
        "elements": [{"id": 0, "rank": 1}, {"id": 1, "rank": 3}],
        "covers": [[0, 1]],
    }
    with pytest.raises(ValidationError):
        SimplicialPoset.from_json(data)


def test_poset_json_rejects_unknown_cover():
    data = {
        "type": "poset",
        "elements": [{"id": 0, "rank": 1}],
        "covers": [[0, 5]],
    }
    with pytest.raises(ValidationError):
        SimplicialPoset.from_json(data)
