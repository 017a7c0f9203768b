"""Monomial arithmetic, minimal generating sets, polarization, parsing."""

import pytest

from multibound import (
    DimensionMismatchError,
    EmptyInputError,
    Monomial,
    MonomialIdeal,
    ParseError,
    UnitIdealError,
    format_ideal,
    is_squarefree,
    lcm_of,
    minimalize,
    parse_ideal,
    polarize,
    squarefree_monomial,
    taylor_betti,
    taylor_shifts,
)
from conftest import random_ideal

import random


def m(*exps: int) -> Monomial:
    return Monomial(tuple(exps))


class TestMonomial:
    def test_degree_and_support(self):
        assert m(2, 0, 1).degree == 3
        assert m(2, 0, 1).support == {1, 3}
        assert m(0, 0).is_constant()
        assert m(0, 0).degree == 0

    def test_divides(self):
        assert m(1, 0).divides(m(2, 1))
        assert not m(2, 1).divides(m(1, 1))
        with pytest.raises(DimensionMismatchError):
            m(1, 0).divides(m(1, 0, 0))

    def test_squarefree(self):
        assert m(1, 1, 0).is_squarefree()
        assert not m(2, 0, 0).is_squarefree()

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            m(1, -1)

    def test_empty_exponents_rejected(self):
        with pytest.raises(EmptyInputError):
            Monomial(())

    def test_squarefree_monomial_builder(self):
        assert squarefree_monomial({1, 3}, 3) == m(1, 0, 1)
        with pytest.raises(DimensionMismatchError):
            squarefree_monomial({4}, 3)


class TestLcm:
    def test_two_squarefree(self):
        assert lcm_of([m(1, 1, 0), m(0, 1, 1)]) == m(1, 1, 1)

    def test_with_exponents(self):
        assert lcm_of([m(2, 0), m(1, 1)]) == m(2, 1)

    def test_singleton_identity(self):
        assert lcm_of([m(3, 1)]) == m(3, 1)

    def test_empty_rejected(self):
        with pytest.raises(EmptyInputError):
            lcm_of([])

    def test_mismatched_ambient_rejected(self):
        with pytest.raises(DimensionMismatchError):
            lcm_of([m(1, 0), m(1, 0, 0)])

    def test_associative_commutative_idempotent(self):
        rng = random.Random(7)
        for _ in range(50):
            a, b, c = (
                m(*(rng.randint(0, 3) for _ in range(4))) for _ in range(3)
            )
            assert lcm_of([a, b]) == lcm_of([b, a])
            assert lcm_of([lcm_of([a, b]), c]) == lcm_of([a, lcm_of([b, c])])
            assert lcm_of([a, a]) == a


class TestMinimalize:
    def test_drops_multiples(self):
        ideal = minimalize([m(1, 1, 0), m(1, 1, 1)], 3)
        assert ideal.generators == (m(1, 1, 0),)

    def test_keeps_incomparable(self):
        ideal = minimalize([m(1, 0), m(0, 1)], 2)
        assert ideal.generators == (m(0, 1), m(1, 0))

    def test_exponent_chain(self):
        ideal = minimalize([m(2, 0), m(3, 0), m(1, 1)], 2)
        assert set(ideal.generators) == {m(2, 0), m(1, 1)}

    def test_constant_rejected(self):
        with pytest.raises(UnitIdealError):
            minimalize([m(0, 0), m(1, 0)], 2)

    def test_no_dividing_pair_left(self):
        rng = random.Random(11)
        for _ in range(50):
            ideal = random_ideal(rng, max_vars=4, max_exp=3, max_gens=8)
            gens = ideal.generators
            for i, g in enumerate(gens):
                for h in gens[i + 1 :]:
                    assert not g.divides(h) and not h.divides(g)


class TestMonomialIdeal:
    def test_canonical_order(self):
        ideal = MonomialIdeal(2, [m(1, 1), m(2, 0)])
        degrees = [g.degree for g in ideal.generators]
        assert degrees == sorted(degrees)
        assert ideal.generators == (m(1, 1), m(2, 0))

    def test_nonminimal_rejected(self):
        with pytest.raises(ValueError):
            MonomialIdeal(2, [m(1, 0), m(2, 0)])

    def test_zero_ideal_representable(self):
        assert MonomialIdeal(3, []).is_zero()

    def test_unit_rejected(self):
        with pytest.raises(UnitIdealError):
            MonomialIdeal(2, [m(0, 0)])


class TestPolarize:
    def test_mixed_example(self):
        ideal = MonomialIdeal(2, [m(2, 0), m(1, 1)])
        polar = polarize(ideal)
        assert polar.ambient_vars == 3
        assert is_squarefree(polar)
        assert len(polar) == 2
        # x1 splits into x1, x2 (row-major); x2 becomes x3.
        assert set(polar.generators) == {m(1, 1, 0), m(1, 0, 1)}

    def test_squarefree_fixed_point(self):
        ideal = MonomialIdeal(2, [m(1, 1)])
        assert polarize(ideal) == ideal

    def test_taylor_shifts_invariant(self):
        ideal = MonomialIdeal(2, [m(2, 0), m(1, 1)])
        assert taylor_shifts(ideal) == taylor_shifts(polarize(ideal))
        mins, _ = taylor_shifts(ideal)
        assert mins.values == (2, 3)

    def test_generator_count_and_degrees_preserved(self):
        rng = random.Random(3)
        for _ in range(100):
            ideal = random_ideal(rng, max_vars=4, max_exp=3, max_gens=6)
            polar = polarize(ideal)
            assert is_squarefree(polar)
            assert len(polar) == len(ideal)
            assert sorted(g.degree for g in polar) == sorted(
                g.degree for g in ideal
            )
            assert taylor_betti(ideal) == taylor_betti(polar)

    def test_idempotent_on_squarefree(self):
        # polarizing renumbers away unused variables, after which it fixes
        # the ideal
        rng = random.Random(5)
        for _ in range(30):
            ideal = random_ideal(rng, max_vars=4, max_exp=1, max_gens=6)
            polar = polarize(ideal)
            assert polarize(polar) == polar
            if all(
                any(g.exponents[i] for g in ideal) for i in range(ideal.ambient_vars)
            ):
                assert polar == ideal


class TestIsSquarefree:
    def test_squarefree(self):
        assert is_squarefree(MonomialIdeal(3, [m(1, 1, 0), m(0, 1, 1)]))

    def test_not_squarefree(self):
        assert not is_squarefree(MonomialIdeal(1, [m(2)]))

    def test_zero_ideal_vacuous(self):
        assert is_squarefree(MonomialIdeal(2, []))


class TestIdealText:
    def test_parse_basic(self):
        ideal = parse_ideal("x1 x2\nx2 x3\n")
        assert ideal.ambient_vars == 3
        assert set(ideal.generators) == {m(1, 1, 0), m(0, 1, 1)}

    def test_parse_exponents_comments_blanks(self):
        ideal = parse_ideal("# comment\n\nx1^2\nx1 x2\n")
        assert set(ideal.generators) == {m(2, 0), m(1, 1)}

    def test_vars_header(self):
        ideal = parse_ideal("vars: 4\nx1 x2\n")
        assert ideal.ambient_vars == 4

    def test_parse_minimalizes(self):
        ideal = parse_ideal("x1\nx1 x2\n")
        assert ideal.generators == (m(1, 0),)

    def test_empty_rejected(self):
        with pytest.raises(ParseError):
            parse_ideal("# nothing\n")

    def test_bad_token_has_line_number(self):
        with pytest.raises(ParseError) as info:
            parse_ideal("x1 x2\ny3\n")
        assert "2" in str(info.value)

    def test_round_trip(self):
        rng = random.Random(9)
        for _ in range(50):
            ideal = random_ideal(rng, max_vars=4, max_exp=3, max_gens=6)
            assert parse_ideal(format_ideal(ideal)) == ideal
