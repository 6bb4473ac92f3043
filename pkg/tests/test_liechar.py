from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from stabmult.errors import (
    CutoffError,
    DimensionMismatchError,
    GradingViolationError,
    NonDominantWeightError,
    NotWeylInvariantError,
)
from stabmult.liechar import (
    Character,
    GradedModule,
    GroupShape,
    decompose,
    degree_cutoff,
    format_weight,
    graded_sym_multiplicity,
    integral_grading,
    irreducible_character,
    multiplicity,
    parse_weight,
    recompose,
    restrict_character,
    sym_power_character,
    weyl_dimension,
)
from stabmult.partitions import lr_coefficient, partitions

from oracles import schur_weights_bruteforce

U2 = GroupShape((2,))
U3 = GroupShape((3,))
T2 = GroupShape.torus(2)


@st.composite
def shaped_combination(draw):
    blocks = draw(st.lists(st.integers(1, 3), min_size=1, max_size=3).filter(lambda b: sum(b) <= 5))
    shape = GroupShape(tuple(blocks))
    mults = {}
    for _ in range(draw(st.integers(1, 3))):
        w = []
        for n in blocks:
            w.extend(sorted(draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n)), reverse=True))
        mults[tuple(w)] = mults.get(tuple(w), 0) + draw(st.integers(1, 3))
    return shape, mults


class TestGroupShape:
    def test_basics(self):
        s = GroupShape((2, 1))
        assert s.rank == 3
        assert s.rho() == (1, 0, 0)
        assert s.split((3, 1, 5)) == [(3, 1), (5,)]
        assert s.is_dominant((3, 1, 5))
        assert not s.is_dominant((1, 3, 5))
        assert str(s) == "[2,1]"

    def test_weyl_group_size_and_signs(self):
        elems = list(GroupShape((3, 2)).weyl_group())
        assert len(elems) == 12
        assert sum(sign for _, sign in elems) == 0

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            GroupShape(())

    def test_weight_text(self):
        assert parse_weight("2,0|1,1") == ((2, 0, 1, 1), GroupShape((2, 2)))
        assert parse_weight("3,1") == ((3, 1), None)
        assert format_weight((2, 0, 1, 1), GroupShape((2, 2))) == "2,0|1,1"


class TestIrreducibles:
    def test_standard_and_exterior(self):
        assert irreducible_character(U2, (1, 0)).terms == {(1, 0): 1, (0, 1): 1}
        wedge = irreducible_character(U3, (1, 1, 0))
        assert wedge.terms == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}

    def test_weights_match_tableaux(self):
        for n in (2, 3, 4):
            for size in range(5):
                for lam in partitions(size, n):
                    char = irreducible_character(GroupShape((n,)), lam.padded(n))
                    assert char.terms == dict(schur_weights_bruteforce(lam, n))

    def test_dimension_formula(self):
        shape = GroupShape((3, 2))
        for lam in [(2, 1, 0, 1, 1), (3, 0, -1, 2, -2), (0, 0, 0, 0, 0)]:
            assert irreducible_character(shape, lam).dim == weyl_dimension(shape, lam)

    def test_negative_weights_are_determinant_twists(self):
        dual = irreducible_character(U2, (0, -1))
        assert dual == irreducible_character(U2, (1, 0)).dual()

    def test_errors(self):
        with pytest.raises(NonDominantWeightError):
            irreducible_character(U2, (0, 1))
        with pytest.raises(DimensionMismatchError):
            irreducible_character(U2, (1, 0, 0))

    def test_tensor_products_follow_lr(self):
        n = 3
        shape = GroupShape((n,))
        for mu in partitions(3, n):
            for nu in partitions(2, n):
                prod = irreducible_character(shape, mu.padded(n)) * irreducible_character(shape, nu.padded(n))
                want = {lam.padded(n): lr_coefficient(lam, mu, nu) for lam in partitions(5, n)}
                assert decompose(prod) == {k: v for k, v in want.items() if v}


class TestDecompose:
    def test_symmetric_square(self):
        std = irreducible_character(U2, (1, 0))
        assert decompose(std * std) == {(2, 0): 1, (1, 1): 1}

    def test_not_invariant(self):
        with pytest.raises(NotWeylInvariantError):
            decompose(Character(U2, {(1, 0): 1}))

    def test_restriction_to_block_subgroup(self):
        # S^2(C^4) restricted to U(2) x U(2)
        s2 = irreducible_character(GroupShape((4,)), (2, 0, 0, 0))
        identity = [[int(i == j) for j in range(4)] for i in range(4)]
        res = restrict_character(s2, identity, GroupShape((2, 2)))
        assert decompose(res) == {(2, 0, 0, 0): 1, (1, 0, 1, 0): 1, (0, 0, 2, 0): 1}

    def test_restriction_along_a_map(self):
        # Sym^2 of the standard U(2) module, via the weights (2,0), (1,1), (0,2)
        res = restrict_character(irreducible_character(U3, (1, 0, 0)), [[2, 1, 0], [0, 1, 2]], U2)
        assert decompose(res) == {(2, 0): 1}

    def test_restriction_shape_checks(self):
        with pytest.raises(DimensionMismatchError):
            restrict_character(irreducible_character(U2, (1, 0)), [[1, 0, 0]])

    @settings(max_examples=60, deadline=None)
    @given(shaped_combination())
    def test_round_trip(self, data):
        shape, mults = data
        assert decompose(recompose(shape, mults)) == mults

    @settings(max_examples=40, deadline=None)
    @given(shaped_combination())
    def test_single_multiplicity_agrees(self, data):
        shape, mults = data
        char = recompose(shape, mults)
        for lam, m in mults.items():
            assert multiplicity(char, lam) == m


class TestSymmetricPowers:
    def test_dimensions(self):
        std = irreducible_character(U3, (1, 0, 0))
        for d in range(5):
            assert sym_power_character(std, d).dim == comb(d + 2, 2)

    def test_is_an_irreducible(self):
        std = irreducible_character(U3, (1, 0, 0))
        assert decompose(sym_power_character(std, 3)) == {(3, 0, 0): 1}


class TestGradedMultiplicity:
    def test_module_validation(self):
        ch = Character(T2, {(1, -1): 1})
        GradedModule(ch, (1, 0), 1)
        with pytest.raises(GradingViolationError):
            GradedModule(ch, (0, 1), 1)
        with pytest.raises(GradingViolationError):
            GradedModule(ch, (1, 0), 0)

    def test_one_dimensional_module(self):
        # Sym(W*) for W of weight (1,-1) has weights -k(1,-1), one each
        W = GradedModule(Character(T2, {(1, -1): 1}), (1, 0), 1)
        triv = Character.trivial(T2)
        for k in range(5):
            assert graded_sym_multiplicity(W, triv, (-k, k)) == 1
            assert graded_sym_multiplicity(W, triv, (k + 1, -k - 1)) == 0

    def test_empty_module_is_plain_multiplicity(self):
        W = GradedModule(Character(U2), (0, 0), 1)
        std = irreducible_character(U2, (1, 0))
        assert graded_sym_multiplicity(W, std * std, (1, 1)) == 1

    def test_cutoff_is_tight_for_integer_quotients(self):
        # the degree-2 layer reaches the target exactly when the gap is 2 * margin
        W = GradedModule(Character(T2, {(1, -1): 1}), (1, 0), 1)
        triv = Character.trivial(T2)
        assert degree_cutoff(W, triv, (-2, 2)) == 3
        assert graded_sym_multiplicity(W, triv, (-2, 2)) == 1

    def test_target_checks(self):
        W = GradedModule(Character(U2), (0, 0), 1)
        with pytest.raises(NonDominantWeightError):
            graded_sym_multiplicity(W, Character.trivial(U2), (0, 1))
        with pytest.raises(DimensionMismatchError):
            graded_sym_multiplicity(W, Character.trivial(T2), (0, 0))

    def test_extra_layers_must_vanish(self):
        W = GradedModule(Character(T2, {(1, -1): 1}), (1, 0), 1)
        triv = Character.trivial(T2)
        assert graded_sym_multiplicity(W, triv, (-1, 1), extra_layers=3) == 1

    def test_cutoff_error_is_raised_on_an_unsound_margin(self):
        # the weight pairs to 1, so a claimed margin of 5 puts the cutoff at degree 1,
        # and degree 1 is exactly where the target lives
        W = GradedModule(Character(T2, {(1, -1): 1}), (1, 0), 1)
        object.__setattr__(W, "margin", 5)
        with pytest.raises(CutoffError):
            graded_sym_multiplicity(W, Character.trivial(T2), (-1, 1))

    def test_integral_grading(self):
        assert integral_grading([Fraction(1, 2), Fraction(-1, 3)], Fraction(1, 6)) == ((3, -2), 1)
        assert integral_grading([1, 0], 1) == ((1, 0), 1)
