import pytest

from adjstats.bijections import (
    ColoredComposition,
    InvalidComposition,
    InvalidSequence,
    InvalidWord,
    colored_compositions,
    composition_to_maneuvers,
    is_level_free_no13_start2,
    is_v_word,
    is_w_word,
    jpp_to_tiling,
    jpp_words,
    maneuvers_to_composition,
    maneuvers_to_v_word,
    tiling_to_jpp,
    tilings,
    v_to_w,
    v_words,
    w_to_v,
    w_words,
)
from adjstats.fibwords import fib_list
from adjstats.kary import KSParams, a_rec_alt
from adjstats.oracle import count_avoiders


def part(size, *colors):
    return (size, frozenset(colors))


class TestCompositions:
    def test_validation(self):
        with pytest.raises(InvalidComposition):
            ColoredComposition((part(2),))  # empty color set
        with pytest.raises(InvalidComposition):
            ColoredComposition((part(2, 3),))  # color outside the part

    def test_encode_examples(self):
        assert composition_to_maneuvers(ColoredComposition((part(1, 1),))) == ()
        two_singletons = ColoredComposition((part(1, 1), part(1, 1)))
        assert composition_to_maneuvers(two_singletons) == (1,)
        assert composition_to_maneuvers(ColoredComposition((part(2, 2),))) == (4,)

    def test_round_trip_small(self):
        for total in range(1, 8):
            for comp in colored_compositions(total):
                moves = composition_to_maneuvers(comp)
                assert len(moves) == total - 1
                assert maneuvers_to_composition(moves) == comp

    def test_counts(self):
        # 1, 4, 14, 48, ... colored compositions of n+1
        expected = [v(0) for v in a_rec_alt(KSParams(4, 2), 6)]
        for n in range(7):
            assert sum(1 for _ in colored_compositions(n + 1)) == expected[n]


class TestManeuvers:
    def test_succession_rule(self):
        assert maneuvers_to_v_word(()) == ()
        assert maneuvers_to_v_word((1, 4)) == (1, 4)
        with pytest.raises(InvalidSequence):
            maneuvers_to_v_word((2, 4))
        with pytest.raises(InvalidSequence):
            maneuvers_to_v_word((1, 3, 4))
        with pytest.raises(InvalidSequence):
            maneuvers_to_v_word((0, 1))

    def test_replay_rejects_invalid(self):
        with pytest.raises(InvalidSequence):
            maneuvers_to_composition((3, 4))

    def test_valid_sequences_are_exactly_v_words(self):
        for n in range(6):
            replayed = {composition_to_maneuvers(c) for c in colored_compositions(n + 1)}
            assert replayed == set(v_words(n))


class TestRewriting:
    def test_examples(self):
        assert v_to_w((1, 1, 3)) == (3, 4, 4)
        assert v_to_w((2, 2, 2)) == (2, 2, 2)
        assert v_to_w((1, 3, 1, 2)) == (3, 4, 1, 2)

    def test_membership_enforced(self):
        with pytest.raises(InvalidWord):
            v_to_w((2, 4))
        with pytest.raises(InvalidWord):
            w_to_v((1, 3))

    def test_length_and_membership_preserved(self):
        for n in range(7):
            for v in v_words(n):
                w = v_to_w(v)
                assert len(w) == len(v)
                assert is_w_word(w)

    def test_round_trips(self):
        for n in range(8):
            for v in v_words(n):
                assert w_to_v(v_to_w(v)) == v
            for w in w_words(n):
                assert v_to_w(w_to_v(w)) == w

    def test_bijection_counts(self):
        for n in range(8):
            target = count_avoiders(4, n, frozenset({(1, 3), (2, 4)}))
            images = {v_to_w(v) for v in v_words(n)}
            assert len(images) == target == sum(1 for _ in w_words(n))


class TestTilingMap:
    def test_examples(self):
        assert jpp_to_tiling((2,)) == (1,)
        assert jpp_to_tiling((2, 1)) == (2,)
        assert jpp_to_tiling((2, 3)) == (1, 1)

    def test_membership_enforced(self):
        assert is_level_free_no13_start2((2, 1, 2))
        assert not is_level_free_no13_start2((1, 2))  # wrong first letter
        assert not is_level_free_no13_start2((2, 2))  # level
        with pytest.raises(InvalidWord):
            jpp_to_tiling((2, 2))
        with pytest.raises(InvalidWord):
            tiling_to_jpp((3,))

    def test_bijection_and_round_trips(self):
        fib = fib_list(15)
        for n in range(13):
            words_n = list(jpp_words(n))
            tilings_n = list(tilings(n))
            assert len(words_n) == fib[n + 1]
            images = [jpp_to_tiling(w) for w in words_n]
            assert sorted(images) == sorted(tilings_n)
            for w in words_n:
                assert tiling_to_jpp(jpp_to_tiling(w)) == w
            for t in tilings_n:
                assert jpp_to_tiling(tiling_to_jpp(t)) == t

    def test_piece_lengths_sum(self):
        for w in jpp_words(9):
            assert sum(jpp_to_tiling(w)) == 9


class TestFamilyPredicates:
    def test_v_and_w(self):
        assert is_v_word((1, 3))
        assert not is_v_word((3, 4))
        assert is_w_word((3, 4))
        assert not is_w_word((1, 3))
