from fractions import Fraction

import pytest

from adjstats.absdiff import (
    DegeneratePoint,
    SingularSpecialization,
    WrongRegime,
    b_closed_chebyshev,
    b_table,
    chebyshev_closed_at_square,
    gf_B_large,
    gf_B_small,
    h_sum_squared,
    h_sum_triple,
    lu_factors,
    lu_verify,
    regime,
)
from adjstats.algebra import QPoly
from adjstats.oracle import distribution_nu


class TestRegime:
    @pytest.mark.parametrize(
        "k,s,want",
        [(2, 3, "trivial"), (3, 3, "trivial"), (3, 2, "small"), (4, 2, "small"),
         (5, 2, "large"), (3, 1, "large")],
    )
    def test_classification(self, k, s, want):
        assert regime(k, s) == want


class TestBTable:
    def test_examples(self):
        assert b_table(3, 2, 2).totals[2] == QPoly((7, 2))  # words 13, 31
        assert b_table(2, 1, 2).totals[2] == QPoly((2, 2))
        assert b_table(2, 3, 4).totals[4] == QPoly((16,))

    @pytest.mark.parametrize("k,s", [(2, 1), (3, 1), (3, 2), (4, 2), (5, 2), (4, 3), (5, 1)])
    def test_matches_oracle(self, k, s):
        table = b_table(k, s, 6)
        for n in range(7):
            assert table.totals[n] == distribution_nu(k, s, n)

    def test_mass_is_word_count(self):
        for k, s in [(3, 1), (5, 2), (4, 4)]:
            for n in range(6):
                assert b_table(k, s, 6).totals[n](1) == k**n

    def test_outer_letter_collapse(self):
        # in the middle band all letters outside [k-s+1, s] share one column
        table = b_table(5, 3, 6)
        for n in range(1, 7):
            row = table.rows[n]
            outer = [row[0], row[1], row[3], row[4]]  # letters 1, 2, 4, 5
            assert all(col == outer[0] for col in outer)


class TestSmallBand:
    def test_series_matches_table(self):
        for k, s in [(3, 2), (4, 2), (4, 3), (5, 3), (6, 3)]:
            series = gf_B_small(k, s).series(10)
            assert series == list(b_table(k, s, 10).totals)

    def test_q_one_is_geometric(self):
        from adjstats.algebra import specialize_q

        series = specialize_q(gf_B_small(3, 2), 1).series(5)
        assert series == [3**n for n in range(6)]

    def test_boundary_alphabet_one_term_recursion(self):
        # k = 2s kills the second term: b_n = (k-1+q) b_{n-1}
        table = b_table(4, 2, 8)
        q = QPoly.var()
        for n in range(2, 9):
            assert table.totals[n] == (3 + q) * table.totals[n - 1]

    def test_wrong_regime_rejected(self):
        with pytest.raises(WrongRegime):
            gf_B_small(5, 2)
        with pytest.raises(WrongRegime):
            gf_B_small(2, 3)


class TestChebyshevClosed:
    def test_examples(self):
        assert b_closed_chebyshev(4, 2, 1, 0) == 4
        assert b_closed_chebyshev(3, 2, 2, 0) == 7
        assert b_closed_chebyshev(3, 2, 3, 1) == 27

    def test_matches_table_at_rationals(self):
        for k, s in [(3, 2), (4, 3), (5, 3)]:
            table = b_table(k, s, 8)
            for q in (Fraction(0), Fraction(-1), Fraction(1, 2), Fraction(7, 3)):
                for n in range(9):
                    assert b_closed_chebyshev(k, s, n, q) == table.totals[n](q)

    def test_literal_chebyshev_form_at_square_arguments(self):
        # (2s-k)(q-1) = 4 for (k, s, q) = (3, 2, 5), so root 2 works
        table = b_table(3, 2, 8)
        for n in range(1, 9):
            assert chebyshev_closed_at_square(3, 2, n, 5, 2) == table.totals[n](5)
        # (2s-k)(q-1) = 9/4 for (k, s, q) = (5, 3, 13/4)
        table = b_table(5, 3, 8)
        for n in range(1, 9):
            got = chebyshev_closed_at_square(5, 3, n, Fraction(13, 4), Fraction(3, 2))
            assert got == table.totals[n](Fraction(13, 4))

    def test_root_validation(self):
        with pytest.raises(ValueError):
            chebyshev_closed_at_square(3, 2, 3, 5, 3)


class TestLargeBand:
    def test_alphabet5_series(self):
        series = gf_B_large(5, 2, 0).series(3)
        assert series == [1, 5, 19, 73]  # n=2: 25 words minus 6 with a jump

    def test_alphabet3_step1(self):
        table = b_table(3, 1, 8)
        series = gf_B_large(3, 1, 0).series(8)
        assert series == [t(0) for t in table.totals]
        assert series[2] == 5  # 9 - 4 mismatch pairs

    @pytest.mark.parametrize("k,s", [(3, 1), (5, 2), (7, 3)])
    def test_matches_table_at_rationals(self, k, s):
        table = b_table(k, s, 8)
        for q in (Fraction(0), Fraction(-1), Fraction(1, 2), Fraction(2)):
            series = gf_B_large(k, s, q).series(8)
            assert series == [t(q) for t in table.totals]

    def test_band_sum_forms_agree(self):
        for d in range(5):
            for q in (Fraction(0), Fraction(2), Fraction(-1, 3)):
                assert h_sum_squared(d, q) == h_sum_triple(d, q)

    def test_singular_specialization(self):
        with pytest.raises(SingularSpecialization):
            gf_B_large(5, 2, 1)

    def test_wrong_regime_rejected(self):
        with pytest.raises(WrongRegime):
            gf_B_large(4, 2, 0)


class TestLU:
    def test_examples(self):
        assert lu_verify(1, Fraction(1, 3), 0)
        assert lu_verify(4, Fraction(1, 7), -1)
        assert lu_verify(0, Fraction(2, 5), Fraction(1, 2))

    def test_factor_shapes(self):
        lower, upper = lu_factors(3, Fraction(1, 5), Fraction(2))
        for i in range(4):
            assert lower.entry(i, i) == 1
            for j in range(4):
                if j > i or i - j >= 2:
                    assert lower.entry(i, j) == 0
                if j - i >= 2 or i > j:
                    assert upper.entry(i, j) == 0

    def test_degenerate_points_rejected(self):
        with pytest.raises(DegeneratePoint):
            lu_verify(2, Fraction(1, 3), 1)
        # U_1(t) = 2t = 0 at t = 0 is unreachable for rational x, q, but a
        # vanishing higher Chebyshev value is: U_2 = 0 at t^2 = 1/4, i.e.
        # 2x(1-q) = 2
        with pytest.raises(DegeneratePoint):
            lu_verify(2, 1, 0)
