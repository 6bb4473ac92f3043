from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from stabmult.errors import DegreeCapError, SizeMismatchError
from stabmult.partitions import Partition, conjugate, kostka, partitions
from stabmult.symchar import (
    PowerSumVector,
    centralizer_order,
    class_size,
    kronecker,
    mn_character,
    plethysm_schur,
    schur_to_power_sums,
)

from oracles import frobenius_character, kronecker_bruteforce


def test_class_sizes_sum_to_factorial():
    for n in range(9):
        assert sum(class_size(r) for r in partitions(n)) == factorial(n)
    assert centralizer_order((2, 1, 1)) == 4


class TestCharacters:
    def test_examples(self):
        assert mn_character((3, 1), (2, 2)) == -1
        assert mn_character((2, 1), (3,)) == -1
        assert mn_character((2, 2), (1, 1, 1, 1)) == 2
        assert mn_character((), ()) == 1

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            mn_character((2,), (1,))

    def test_against_frobenius_formula(self):
        for n in range(1, 7):
            for lam in partitions(n):
                for rho in partitions(n):
                    assert mn_character(lam, rho) == frobenius_character(lam, rho), (lam, rho)

    def test_degree_is_standard_tableaux_count(self):
        for lam in partitions(7):
            assert mn_character(lam, (1,) * 7) == kostka(lam, (1,) * 7)

    def test_sign_twist(self):
        # chi^{lam'} = sign * chi^lam
        for lam in partitions(7):
            for rho in partitions(7):
                sign = (-1) ** (7 - len(rho))
                assert mn_character(conjugate(lam), rho) == sign * mn_character(lam, rho)

    def test_large_hook_is_fast(self):
        assert mn_character((20, 1, 1, 1, 1), (24,)) == 1


class TestKronecker:
    def test_oscillation(self):
        assert [kronecker(*(((n, n),) * 3)) for n in range(1, 7)] == [0, 1, 0, 1, 0, 1]

    def test_against_bruteforce(self):
        for n in range(1, 6):
            parts = list(partitions(n))
            for a in parts:
                for b in parts:
                    for c in parts:
                        assert kronecker(a, b, c) == kronecker_bruteforce(a, b, c)

    def test_sign_representation(self):
        for a in partitions(6):
            for b in partitions(6):
                assert kronecker(a, b, (1,) * 6) == int(b == conjugate(a))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            kronecker((2,), (2,), (1,))

    def test_dimension_identity(self):
        # sum_gamma g(a, b, gamma) f^gamma = f^a f^b
        n = 6
        f = {lam: mn_character(lam, (1,) * n) for lam in partitions(n)}
        for a in partitions(n):
            for b in partitions(n):
                assert sum(kronecker(a, b, g) * f[g] for g in f) == f[a] * f[b]

    def test_size_24_square(self):
        assert kronecker((12, 12), (12, 12), (6, 6, 6, 6)) == 1


class TestPowerSums:
    def test_round_trip(self):
        for lam in partitions(6):
            assert schur_to_power_sums(lam).to_schur() == {lam: 1}

    def test_hall_inner_product(self):
        for lam in partitions(5):
            for mu in partitions(5):
                assert schur_to_power_sums(lam).inner(schur_to_power_sums(mu)) == int(lam == mu)

    def test_arithmetic(self):
        p1 = PowerSumVector(1, {(1,): 1})
        square = p1 * p1
        assert square == PowerSumVector(2, {(1, 1): 1})
        assert (square + square).coeffs == {Partition((1, 1)): Fraction(2)}
        assert square.is_virtual_character()
        assert not PowerSumVector(2, {(2,): Fraction(1, 3)}).is_virtual_character()
        with pytest.raises(SizeMismatchError):
            square + p1

    @settings(max_examples=25)
    @given(st.integers(1, 4), st.integers(1, 4))
    def test_product_of_schurs_is_lr(self, i, j):
        from stabmult.partitions import lr_coefficient

        prod = schur_to_power_sums((i,)) * schur_to_power_sums((j,))
        expected = {lam: lr_coefficient(lam, (i,), (j,)) for lam in partitions(i + j)}
        assert prod.to_schur() == {k: v for k, v in expected.items() if v}


class TestPlethysm:
    def test_small_cases(self):
        assert plethysm_schur((2,), (2,)) == {(4,): 1, (2, 2): 1}
        assert plethysm_schur((2,), (1, 1)) == {(2, 2): 1, (1, 1, 1, 1): 1}
        assert plethysm_schur((1, 1), (2,)) == {(3, 1): 1}
        assert plethysm_schur((3,), (2,)) == {(6,): 1, (4, 2): 1, (2, 2, 2): 1}

    def test_degree_cap(self):
        with pytest.raises(DegreeCapError):
            plethysm_schur((3, 2), (3,))
        assert sum(plethysm_schur((3, 2), (3,), cap=15).values()) > 0

    @pytest.mark.parametrize("lam,mu", [((2,), (3,)), ((2, 1), (2,)), ((1, 1, 1), (2,)), ((4,), (2,))])
    def test_dimension_check(self, lam, mu):
        # evaluate at 1^N: dim S_lam(S_mu(C^N)) = sum c_nu dim S_nu(C^N)
        from stabmult.liechar import GroupShape, weyl_dimension

        N = 3
        inner_dim = weyl_dimension(GroupShape((N,)), Partition(mu).padded(N))
        outer = weyl_dimension(GroupShape((inner_dim,)), Partition(lam).padded(inner_dim))
        total = sum(
            c * weyl_dimension(GroupShape((N,)), nu.padded(N))
            for nu, c in plethysm_schur(lam, mu).items()
            if len(nu) <= N
        )
        assert total == outer
