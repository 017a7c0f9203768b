"""Simplicial complexes, the squarefree-ideal correspondence, constructions."""

import random

import pytest

from multibound import (
    EmptyInputError,
    LabelCollisionError,
    NotAFaceError,
    ParseError,
    PreconditionError,
    SimplicialComplex,
    codimension,
    delete_vertex,
    enum_complexes,
    f_vector,
    format_facets,
    from_squarefree_ideal,
    h_vector,
    induced,
    intersection,
    is_balanced,
    is_cone,
    is_flag,
    is_generalized_tree,
    join,
    link,
    minimal_nonfaces,
    multiplicity,
    nonfaces_ideal,
    parse_facets,
    shift_labels,
    union,
)
from conftest import (
    four_cycle,
    hollow_triangle,
    random_complex,
    sq_ideal,
    strip_complex,
    three_isolated,
)


class TestConstruction:
    def test_normalization(self):
        k = SimplicialComplex([(1, 2), (2, 1), (2,)])
        assert k.facets == (frozenset({1, 2}),)
        assert k.vertices == {1, 2}
        assert k.dim == 1

    def test_declared_vertices_become_singletons(self):
        k = SimplicialComplex([(1, 2)], vertices=[1, 2, 3])
        assert frozenset({3}) in k.facets

    def test_empty_rejected(self):
        with pytest.raises(EmptyInputError):
            SimplicialComplex([])

    def test_bad_labels_rejected(self):
        with pytest.raises(PreconditionError):
            SimplicialComplex([(0, 1)])

    def test_faces_are_nonempty_subsets(self):
        k = four_cycle()
        faces = k.faces()
        assert frozenset({1, 2}) in faces
        assert frozenset({1, 3}) not in faces
        assert all(f for f in faces)
        assert len(faces) == 8

    def test_is_simplex(self):
        assert SimplicialComplex([(1, 2, 3)]).is_simplex()
        assert not four_cycle().is_simplex()


class TestStanleyReisner:
    def test_pairwise_nonedges_give_isolated_points(self):
        k = from_squarefree_ideal(sq_ideal(3, {1, 2}, {2, 3}, {1, 3}))
        assert k == three_isolated()

    def test_zero_ideal_gives_simplex(self):
        k = from_squarefree_ideal(sq_ideal(3))
        assert k == SimplicialComplex([(1, 2, 3)])

    def test_two_diagonals_give_four_cycle(self):
        k = from_squarefree_ideal(sq_ideal(4, {1, 3}, {2, 4}))
        assert k == four_cycle()

    def test_non_squarefree_rejected(self):
        from multibound import MonomialIdeal, Monomial

        with pytest.raises(PreconditionError):
            from_squarefree_ideal(MonomialIdeal(2, [Monomial((2, 0))]))

    def test_nonfaces_of_simplex(self):
        assert nonfaces_ideal(SimplicialComplex([(1, 2, 3)])).is_zero()

    def test_nonfaces_of_four_cycle(self):
        assert nonfaces_ideal(four_cycle()) == sq_ideal(4, {1, 3}, {2, 4})

    def test_nonfaces_of_strip(self):
        expected = sq_ideal(6, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 6})
        assert nonfaces_ideal(strip_complex()) == expected

    def test_round_trip_exhaustive_small(self):
        for n in range(1, 6):
            for k in enum_complexes(n):
                assert from_squarefree_ideal(nonfaces_ideal(k)) == k

    def test_minimal_nonfaces_are_minimal(self):
        rng = random.Random(2)
        for _ in range(40):
            k = random_complex(rng)
            nfs = minimal_nonfaces(k)
            for nf in nfs:
                assert not k.has_face(nf)
                for v in nf:
                    assert k.has_face(nf - {v})


class TestVectors:
    def test_four_cycle(self):
        assert f_vector(four_cycle()).counts == (1, 4, 4)
        assert h_vector(four_cycle()) == (1, 2, 1)

    def test_simplex(self):
        k = SimplicialComplex([(1, 2, 3)])
        assert f_vector(k).counts == (1, 3, 3, 1)
        assert h_vector(k) == (1, 0, 0, 0)

    def test_strip(self):
        assert f_vector(strip_complex()).counts == (1, 6, 9, 4)
        assert h_vector(strip_complex()) == (1, 3, 0, 0)

    def test_h_identities_exhaustive(self):
        for n in range(1, 6):
            for k in enum_complexes(n):
                h = h_vector(k)
                d = k.dim + 1
                assert len(h) == d + 1
                assert h[0] == 1
                assert h[1] == k.n - d if d >= 1 else True
                assert sum(h) == multiplicity(k)

    def test_multiplicity(self):
        assert multiplicity(four_cycle()) == 4
        assert multiplicity(three_isolated()) == 3
        assert multiplicity(strip_complex()) == 4

    def test_codimension(self):
        assert codimension(three_isolated()) == 2
        assert codimension(SimplicialComplex([(1, 2, 3)])) == 0
        assert codimension(strip_complex()) == 3


class TestSubcomplexes:
    def test_induced(self):
        k = induced(four_cycle(), {1, 2, 3})
        assert k == SimplicialComplex([(1, 2), (2, 3)])

    def test_induced_keeps_labels(self):
        k = induced(four_cycle(), {3, 4})
        assert k.vertices == {3, 4}

    def test_delete_vertex(self):
        assert delete_vertex(four_cycle(), 1) == SimplicialComplex([(2, 3), (3, 4)])

    def test_link_of_vertex(self):
        assert link(four_cycle(), {1}) == SimplicialComplex([(2,), (4,)])

    def test_link_of_empty_face_is_identity(self):
        k = four_cycle()
        assert link(k, ()) == k

    def test_link_requires_face(self):
        with pytest.raises(NotAFaceError):
            link(four_cycle(), {1, 3})


class TestJoinUnionIntersection:
    def test_join_of_point_pairs_is_four_cycle(self):
        a = SimplicialComplex([(1,), (2,)])
        b = SimplicialComplex([(3,), (4,)])
        j = join(a, b)
        assert j == SimplicialComplex([(1, 3), (1, 4), (2, 3), (2, 4)])

    def test_join_label_collision(self):
        with pytest.raises(LabelCollisionError):
            join(SimplicialComplex([(1,)]), SimplicialComplex([(1, 2)]))

    def test_cone(self):
        cone = join(SimplicialComplex([(5,)]), four_cycle())
        assert is_cone(cone) == {5}
        assert cone.dim == 2

    def test_shift_labels(self):
        shifted = shift_labels(four_cycle(), 10)
        assert shifted.vertices == {11, 12, 13, 14}

    def test_union_and_intersection(self):
        a = SimplicialComplex([(1, 2, 3)])
        b = SimplicialComplex([(2, 3, 4)])
        u = union(a, b)
        assert set(u.facets) == {frozenset({1, 2, 3}), frozenset({2, 3, 4})}
        inter = intersection(a, b)
        assert inter == SimplicialComplex([(2, 3)])

    def test_intersection_void(self):
        assert intersection(SimplicialComplex([(1,)]), SimplicialComplex([(2,)])) is None

    def test_join_nonfaces_are_disjoint_union(self):
        rng = random.Random(4)
        for _ in range(30):
            a = random_complex(rng, max_vertices=4)
            b = shift_labels(random_complex(rng, max_vertices=4), a.n + 5)
            j = join(a, b)
            expected = set(minimal_nonfaces(a)) | set(minimal_nonfaces(b))
            assert set(minimal_nonfaces(j)) == expected
            assert codimension(j) == codimension(a) + codimension(b)

    def test_union_top_face_count(self):
        # equality in f_{d-1}(A u B) <= f_{d-1}(A) + f_{d-1}(B) iff the
        # intersection has no (d-1)-face
        a = SimplicialComplex([(1, 2, 3)])
        b = SimplicialComplex([(2, 3, 4)])
        u = union(a, b)
        assert multiplicity(u) == multiplicity(a) + multiplicity(b)
        same = union(a, SimplicialComplex([(1, 2, 3)]))
        assert multiplicity(same) == 1


class TestPredicates:
    def test_four_cycle_flags(self):
        k = four_cycle()
        assert is_flag(k)
        assert is_cone(k) == frozenset()
        spec = is_balanced(k, (1, 1))
        assert spec is not None
        color_classes: dict[int, set[int]] = {}
        for v, c in spec.coloring:
            color_classes.setdefault(c, set()).add(v)
        assert sorted(map(sorted, color_classes.values())) == [[1, 3], [2, 4]]

    def test_hollow_triangle_not_flag(self):
        assert not is_flag(hollow_triangle())

    def test_strip_is_generalized_tree(self):
        assert is_generalized_tree(strip_complex())

    def test_four_cycle_not_generalized_tree(self):
        # pure with n - d + 1 = 3 != 4 facets
        assert not is_generalized_tree(four_cycle())

    def test_balanced_needs_matching_total(self):
        with pytest.raises(PreconditionError):
            is_balanced(four_cycle(), (1,))

    def test_unbalanced_triangle_boundary(self):
        assert is_balanced(hollow_triangle(), (1, 1)) is None


class TestFacetText:
    def test_parse_basic(self):
        k = parse_facets("1 2\n2 3\n")
        assert k == SimplicialComplex([(1, 2), (2, 3)])

    def test_header_adds_isolated_vertices(self):
        k = parse_facets("vertices: 4\n1 2\n")
        assert k.vertices == {1, 2, 3, 4}

    def test_comments_and_blanks(self):
        k = parse_facets("# top\n\n1 2 3\n")
        assert k == SimplicialComplex([(1, 2, 3)])

    def test_bad_label(self):
        with pytest.raises(ParseError):
            parse_facets("1 a\n")

    def test_empty_rejected(self):
        with pytest.raises(ParseError):
            parse_facets("\n")

    def test_round_trip(self):
        rng = random.Random(6)
        for _ in range(40):
            k = random_complex(rng)
            assert parse_facets(format_facets(k)) == k
