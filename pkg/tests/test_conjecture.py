"""Bound verdicts, Cohen-Macaulay testing, equality families, reductions."""

from fractions import Fraction

import pytest

from multibound import (
    GF2,
    GF3,
    QQ,
    PreconditionError,
    SimplicialComplex,
    ZeroIdealError,
    boundary_join_decomposition,
    check_tensor_equality_conditions,
    check_union_inequality,
    classify_lower_equality,
    classify_upper_equality,
    homred_applicable,
    huneke_miller_check,
    ideal_codimension,
    is_cohen_macaulay,
    join,
    parse_ideal,
    verify_bounds,
)
from conftest import (
    cross_polytope_complex,
    four_cycle,
    hollow_triangle,
    path_graph,
    rp2_complex,
    sq_ideal,
    strip_complex,
    three_isolated,
    two_isolated,
)


class TestCohenMacaulay:
    def test_strip_is_cm(self):
        assert is_cohen_macaulay(strip_complex(), QQ)

    def test_two_disjoint_edges_not_cm(self):
        k = SimplicialComplex([(1, 2), (3, 4)])
        assert not is_cohen_macaulay(k, QQ)

    def test_simplex_is_cm(self):
        assert is_cohen_macaulay(SimplicialComplex([(1, 2, 3, 4)]), QQ)

    def test_disconnected_detected_via_empty_face_link(self):
        # the link of the empty face is the complex itself; a disconnected
        # pure 1-dimensional complex must fail
        k = SimplicialComplex([(1, 2), (3, 4)])
        assert not is_cohen_macaulay(k, GF2)

    def test_rp2_depends_on_field(self):
        rp2 = rp2_complex()
        assert is_cohen_macaulay(rp2, QQ)
        assert not is_cohen_macaulay(rp2, GF2)
        assert is_cohen_macaulay(rp2, GF3)

    def test_nonpure_not_cm(self):
        k = SimplicialComplex([(1, 2, 3), (4,)])
        assert not is_cohen_macaulay(k, QQ)


class TestIdealCodimension:
    def test_squarefree_matches_complex(self):
        from multibound import codimension, from_squarefree_ideal

        ideal = sq_ideal(4, {1, 3}, {2, 4})
        assert ideal_codimension(ideal) == codimension(from_squarefree_ideal(ideal))

    def test_polarization_invariance(self):
        ideal = parse_ideal("x1^2\nx1 x2")
        assert ideal_codimension(ideal) == 1

    def test_zero_ideal_has_codimension_zero(self):
        from multibound import MonomialIdeal

        assert ideal_codimension(MonomialIdeal(2, [])) == 0


class TestVerifyBounds:
    def test_three_isolated_upper_equality(self):
        report = verify_bounds(three_isolated(), "taylor", QQ)
        assert report.c == 2 and report.e == 3
        assert report.upper_value == 3 and report.upper == "equality"
        assert report.lower == "equality"

    def test_strip_taylor(self):
        report = verify_bounds(strip_complex(), "taylor", QQ)
        assert report.e == 4
        assert report.lower_value == 4 and report.lower == "equality"
        assert report.upper_value == 8 and report.upper == "holds"

    def test_four_cycle_minimal_huneke_miller(self):
        report = verify_bounds(four_cycle(), "minimal", QQ)
        assert report.e == 4
        assert report.lower_value == report.upper_value == 4
        assert report.upper == "equality" and report.lower == "equality"
        assert report.cm

    def test_simplex_conventions(self):
        report = verify_bounds(SimplicialComplex([(1, 2, 3)]), "taylor", QQ)
        assert report.c == 0 and report.e == 1
        assert report.lower_value == report.upper_value == 1
        assert report.t is None

    def test_ideal_input_polarizes(self):
        report = verify_bounds(parse_ideal("x1^2\nx1 x2"), "taylor", QQ)
        # polarized complex has facets {2,3} and {1}: one top face, not pure
        assert report.c == 1
        assert report.e == 1
        assert report.upper_value == 2 and report.upper == "holds"
        assert not report.cm and report.lower == "not-applicable"

    def test_zero_ideal_rejected(self):
        from multibound import MonomialIdeal

        with pytest.raises(ZeroIdealError):
            verify_bounds(MonomialIdeal(2, []), "taylor", QQ)

    def test_non_cm_lower_not_applicable(self):
        k = SimplicialComplex([(1, 2), (3, 4)])
        report = verify_bounds(k, "taylor", QQ)
        assert not report.cm
        assert report.lower == "not-applicable"

    def test_json_schema(self):
        doc = verify_bounds(three_isolated(), "taylor", QQ).to_json_dict()
        assert list(doc) == [
            "input",
            "field",
            "resolution",
            "c",
            "e",
            "L",
            "U",
            "cm",
            "upper",
            "lower",
            "t",
            "z",
            "class",
        ]
        assert doc["field"] == "q"
        assert doc["L"] == "3" and doc["U"] == "3"
        assert doc["class"] == "three-isolated-vertices"

    def test_verdicts_exact_not_float(self):
        # L = 20/3 must stay a fraction: e = 4 < 20/3 is a strict hold
        report = verify_bounds(path_graph(5), "taylor", QQ)
        assert report.upper_value == Fraction(20, 3)
        assert report.upper == "holds"


class TestHunekeMiller:
    def test_four_cycle(self):
        assert huneke_miller_check(four_cycle(), QQ)

    def test_strip_pure_and_cm(self):
        # the strip's minimal resolution is linear, hence pure: the identity
        # e = 2*3*4/3! = 4 must hold
        assert huneke_miller_check(strip_complex(), QQ)

    def test_simplex_degenerate(self):
        assert huneke_miller_check(SimplicialComplex([(1, 2)]), QQ)

    def test_rp2_gf2_vacuous(self):
        # not CM over GF(2): premise fails, check passes vacuously
        assert huneke_miller_check(rp2_complex(), GF2)


class TestClassification:
    def test_four_cycle_is_cross_polytope(self):
        up = classify_upper_equality(four_cycle())
        low = classify_lower_equality(four_cycle(), QQ)
        assert up.tag == "cross-polytope-boundary"
        assert low.tag == "cross-polytope-boundary"

    def test_path_on_four_attains_lower(self):
        low = classify_lower_equality(path_graph(4), QQ)
        assert low.tag == "path-length-four"
        report = verify_bounds(path_graph(4), "taylor", QQ)
        assert report.lower == "equality"

    def test_path_on_five_does_not_attain(self):
        # vertices {1,3,5} support three pairwise non-edges, so m = (2,3,3)
        # and L = 3 < 4 = e
        low = classify_lower_equality(path_graph(5), QQ)
        assert low.is_none
        report = verify_bounds(path_graph(5), "taylor", QQ)
        assert report.lower == "holds"
        assert report.lower_value == 3

    def test_strip_tag(self):
        assert classify_lower_equality(strip_complex(), QQ).tag == "six-vertex-strip"

    def test_three_isolated_upper(self):
        assert classify_upper_equality(three_isolated()).tag == "three-isolated-vertices"
        assert classify_upper_equality(two_isolated()).tag == "two-isolated-vertices"

    def test_simplex_tag(self):
        # a simplex is all cone apexes: tag none with the whole vertex set
        # recorded as the simplex factor
        cls = classify_upper_equality(SimplicialComplex([(1, 2)]))
        assert cls.tag == "none"
        assert cls.simplex_vertices == 2

    def test_cone_factor_recorded(self):
        cone = join(SimplicialComplex([(9,)]), four_cycle())
        cls = classify_upper_equality(cone)
        assert cls.tag == "cross-polytope-boundary"
        assert cls.simplex_vertices == 1 and cls.k == 2

    def test_non_flag_rejected(self):
        with pytest.raises(PreconditionError):
            classify_upper_equality(hollow_triangle())
        with pytest.raises(PreconditionError):
            classify_lower_equality(hollow_triangle(), QQ)

    def test_cross_polytopes(self):
        for k in range(1, 4):
            complex_ = cross_polytope_complex(k)
            assert classify_upper_equality(complex_).tag in (
                "cross-polytope-boundary",
                "two-isolated-vertices",
            )
            report = verify_bounds(complex_, "taylor", QQ)
            assert report.upper == "equality" and report.lower == "equality"
            assert report.e == 2**k


class TestBoundaryJoinDecomposition:
    def test_simplex(self):
        assert boundary_join_decomposition(SimplicialComplex([(1, 2, 3)])) == (0, 0)

    def test_four_cycle(self):
        assert boundary_join_decomposition(four_cycle()) == (2, 2)

    def test_hollow_triangle(self):
        assert boundary_join_decomposition(hollow_triangle()) == (3, 1)

    def test_octahedron(self):
        assert boundary_join_decomposition(cross_polytope_complex(3)) == (2, 3)

    def test_star_has_none(self):
        star = SimplicialComplex([(1, 4), (2, 4), (3, 4)])
        assert boundary_join_decomposition(star) is None


class TestTensorEqualityConditions:
    def test_common_ratio(self):
        assert check_tensor_equality_conditions((2, 4), (2, 4, 6), 2, 3)

    def test_different_ratio(self):
        assert not check_tensor_equality_conditions((2, 4), (3, 6), 2, 2)

    def test_not_arithmetic(self):
        assert not check_tensor_equality_conditions((2, 4), (2, 5), 2, 2)


class TestUnionCheck:
    def test_triangles_sharing_edge(self):
        a = SimplicialComplex([(1, 2, 3)])
        b = SimplicialComplex([(2, 3, 4)])
        report = check_union_inequality(a, b, "taylor", QQ)
        assert report.union_branch == "equal-dims"
        assert report.union_hypothesis is True
        assert report.z == 0
        assert report.e == 2 and report.upper == "equality"
        assert report.union_conditions == {
            "same-dimension": True,
            "intersection-vertices-equal-t-plus-d-minus-1": True,
            "no-top-dimensional-intersection-face": True,
        }

    def test_disjoint_edges_strict(self):
        a = SimplicialComplex([(1, 2)])
        b = SimplicialComplex([(3, 4)])
        report = check_union_inequality(a, b, "taylor", QQ)
        # the plain bound is strict (e = 2 < 4 = U) and the equality
        # conditions do not all hold
        assert report.e < report.upper_value
        assert not all(report.union_conditions.values())
        assert report.z == 2
        # the sharpened inequality e <= U - z is tight here
        assert report.union_sharp_bound == 2

    def test_nested_rejected(self):
        a = four_cycle()
        b = SimplicialComplex([(1, 2), (2, 3)])
        with pytest.raises(PreconditionError):
            check_union_inequality(a, b, "taylor", QQ)

    def test_non_induced_rejected(self):
        # A = hollow triangle on {1,2,3} is not induced in the union once
        # B fills the triangle
        a = hollow_triangle()
        b = SimplicialComplex([(1, 2, 3), (3, 4)])
        with pytest.raises(PreconditionError):
            check_union_inequality(a, b, "taylor", QQ)


class TestHomRed:
    def test_three_isolated(self):
        cert = homred_applicable(three_isolated(), "taylor", QQ)
        assert cert.applicable and cert.top_shift_is_n
        assert cert.average == Fraction(3) and cert.top_faces == 3
        assert cert.identity_holds

    def test_four_cycle_minimal(self):
        cert = homred_applicable(four_cycle(), "minimal", QQ)
        assert cert.applicable
        assert cert.identity_holds

    def test_simplex_rejected(self):
        with pytest.raises(PreconditionError):
            homred_applicable(SimplicialComplex([(1, 2, 3)]), "taylor", QQ)

    def test_averaging_identity_always(self):
        from multibound import enum_complexes

        for n in range(2, 5):
            for k in enum_complexes(n):
                if k.n <= k.dim + 1:
                    continue
                cert = homred_applicable(k, "taylor", QQ)
                assert cert.identity_holds
