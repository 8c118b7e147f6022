"""Signed-permutation words, parity statistics, snakes, and group iteration."""

import math
from itertools import permutations

import pytest

from artifact.permutations import (
    GROUPS,
    StatVector,
    descent_set_A,
    descent_set_B,
    descent_set_D,
    even_odd_positions_A,
    even_odd_positions_B,
    even_odd_positions_D,
    flip_D,
    flip_all,
    format_word,
    in_type_d,
    inv_A,
    inv_B,
    inv_B_definitional,
    inv_D,
    inv_D_definitional,
    is_snake,
    iterate_group,
    negative_count,
    parse_word,
    stats_A,
    stats_B,
    stats_D,
    validate_word,
)


# ---------------------------------------------------------------------------
# statistics on pinned words
# ---------------------------------------------------------------------------
def test_stats_b_two_one():
    assert stats_B((2, 1)) == StatVector(edes=0, odes=1, easc=1, oasc=0, inv=1)


def test_stats_b_identity():
    word = tuple(range(1, 6))
    vec = stats_B(word)
    assert (vec.edes, vec.odes, vec.inv) == (0, 0, 0)
    assert vec.easc + vec.oasc == 5


def test_stats_b_worked_seven_letter_word():
    vec = stats_B((-3, 2, 7, -6, -4, 1, 5))
    assert vec == StatVector(edes=1, odes=1, easc=3, oasc=2, inv=22)


def test_stats_d_examples():
    assert stats_D((-1, -2)) == StatVector(edes=0, odes=2, easc=0, oasc=0, inv=2)
    assert stats_D((1, 2)) == StatVector(edes=0, odes=0, easc=0, oasc=2, inv=0)
    assert stats_D((2, 1)) == StatVector(edes=0, odes=1, easc=0, oasc=1, inv=1)


def test_stats_a_positions_exclude_zero():
    # positions 1..n-1 only; position 1 is odd, position 2 even
    assert stats_A((2, 1, 3)) == StatVector(edes=0, odes=1, easc=1, oasc=0, inv=1)
    assert stats_A((1,)) == StatVector(edes=0, odes=0, easc=0, oasc=0, inv=0)


def test_descent_sets():
    assert descent_set_B((-3, 2, 7, -6, -4, 1, 5)) == (0, 3)
    assert descent_set_B((2, 1)) == (1,)
    assert descent_set_D((-1, -2)) == (-1, 1)
    assert descent_set_D((2, 1)) == (1,)
    assert descent_set_D((-2, 1)) == (-1,)
    assert descent_set_A((2, 1, 3)) == (1,)


def test_position_rosters():
    assert even_odd_positions_B(1) == (1, 0)
    assert even_odd_positions_B(2) == (1, 1)
    assert even_odd_positions_B(5) == (3, 2)
    assert even_odd_positions_D(2) == (0, 2)
    assert even_odd_positions_D(5) == (2, 3)
    assert even_odd_positions_A(1) == (0, 0)
    assert even_odd_positions_A(4) == (1, 2)


def test_stats_counts_respect_position_rosters():
    for n in range(1, 6):
        for word in iterate_group("B", n):
            vec = stats_B(word)
            even, odd = even_odd_positions_B(n)
            assert vec.edes + vec.easc == even
            assert vec.odes + vec.oasc == odd
    for n in range(2, 6):
        for word in iterate_group("D", n):
            vec = stats_D(word)
            even, odd = even_odd_positions_D(n)
            assert vec.edes + vec.easc == even
            assert vec.odes + vec.oasc == odd


# ---------------------------------------------------------------------------
# inversion statistics: fast pair-count formulas vs definitions
# ---------------------------------------------------------------------------
def test_inv_b_matches_definitional_form():
    for n in range(1, 6):
        for word in iterate_group("B", n):
            assert inv_B(word) == inv_B_definitional(word)


def test_inv_d_matches_definitional_form():
    for n in range(2, 6):
        for word in iterate_group("D", n):
            assert inv_D(word) == inv_D_definitional(word)


def test_inv_a_counts_plain_inversions():
    for word in permutations(range(1, 5)):
        expected = sum(
            1 for i in range(4) for j in range(i + 1, 4) if word[i] > word[j]
        )
        assert inv_A(word) == expected


def test_inv_relation_between_b_and_d():
    """inv_D drops the Negs term from inv_B."""
    for n in range(2, 6):
        for word in iterate_group("D", n):
            assert inv_D(word) == inv_B(word) - negative_count(word)


# ---------------------------------------------------------------------------
# groups and iteration
# ---------------------------------------------------------------------------
def test_group_sizes():
    for n in range(0, 6):
        assert sum(1 for _ in iterate_group("B", n)) == 2**n * math.factorial(n)
        assert sum(1 for _ in iterate_group("A", n)) == math.factorial(n)
    for n in range(2, 6):
        assert sum(1 for _ in iterate_group("D", n)) == 2 ** (n - 1) * math.factorial(n)


def test_d2_members():
    assert set(iterate_group("D", 2)) == {(1, 2), (-1, -2), (2, 1), (-2, -1)}


def test_plus_minus_split_partitions_group():
    for n in range(1, 5):
        plus = set(iterate_group("B+", n))
        minus = set(iterate_group("B-", n))
        assert plus | minus == set(iterate_group("B", n))
        assert not plus & minus
        assert all(w[-1] > 0 for w in plus)
    for n in range(2, 5):
        plus = set(iterate_group("D+", n))
        minus = set(iterate_group("D-", n))
        assert plus | minus == set(iterate_group("D", n))
        assert not plus & minus


def test_descending_suffix_subgroup_sizes():
    """Words whose last n-i entries increase: 2^n C(n,i) i! of them (half in D)."""
    for n in range(1, 6):
        for i in range(0, n):
            count_g = sum(1 for _ in iterate_group("G", n, i=i))
            assert count_g == 2**n * math.comb(n, i) * math.factorial(i)
            count_h = sum(1 for _ in iterate_group("H", n, i=i))
            assert count_h == 2 ** (n - 1) * math.comb(n, i) * math.factorial(i)


def test_g_members_have_increasing_tail():
    for word in iterate_group("G", 4, i=2):
        tail = word[2:]
        assert list(tail) == sorted(tail)


def test_i_parameter_validation():
    with pytest.raises(ValueError):
        list(iterate_group("G", 3))  # missing i
    with pytest.raises(ValueError):
        list(iterate_group("B", 3, i=1))  # i not accepted
    with pytest.raises(ValueError):
        list(iterate_group("G", 3, i=5))  # out of range
    with pytest.raises(ValueError):
        list(iterate_group("nope", 3))


def test_groups_roster_is_frozen():
    assert GROUPS == ("A", "B", "D", "B+", "B-", "D+", "D-", "G", "H", "X", "snakeB", "snakeD")


# ---------------------------------------------------------------------------
# snakes
# ---------------------------------------------------------------------------
def test_is_snake_pinned_examples():
    assert is_snake((2, -1), "B")
    assert not is_snake((1, 2), "B")
    assert is_snake((1,), "B")


def test_snake_b2_members():
    assert set(iterate_group("snakeB", 2)) == {(1, -2), (2, -1), (2, 1)}


def test_snake_d2_members():
    assert set(iterate_group("snakeD", 2)) == {(-1, -2)}


def test_snake_counts():
    expected_b = [1, 1, 3, 11, 57, 361, 2763]
    for n, count in enumerate(expected_b):
        assert sum(1 for _ in iterate_group("snakeB", n)) == count
    expected_d = {2: 1, 3: 5, 4: 23, 5: 151}
    for n, count in expected_d.items():
        assert sum(1 for _ in iterate_group("snakeD", n)) == count


def test_d_snakes_lie_in_d():
    for n in range(2, 6):
        for word in iterate_group("snakeD", n):
            assert in_type_d(word)


# ---------------------------------------------------------------------------
# sign flips
# ---------------------------------------------------------------------------
def test_flip_all_is_involution_negating_everything():
    for n in range(1, 6):
        for word in iterate_group("B", n):
            flipped = flip_all(word)
            assert flipped == tuple(-x for x in word)
            assert flip_all(flipped) == word


def test_flip_d_is_involution_preserving_membership():
    for n in range(2, 6):
        for word in iterate_group("D", n):
            flipped = flip_D(word)
            assert in_type_d(flipped)
            assert flip_D(flipped) == word


def test_flip_d_spares_first_entry_for_odd_rank():
    assert flip_D((1, 2, 3)) == (1, -2, -3)
    assert flip_D((1, 2, 3, 4)) == (-1, -2, -3, -4)


# ---------------------------------------------------------------------------
# textual form
# ---------------------------------------------------------------------------
def test_format_parse_round_trip():
    word = (-3, 2, 7, -6, -4, 1, 5)
    assert format_word(word) == "-3,2,7,-6,-4,1,5"
    assert parse_word(format_word(word)) == word


def test_parse_rejects_bad_words():
    with pytest.raises(ValueError):
        parse_word("1,1")
    with pytest.raises(ValueError):
        parse_word("1,3")  # 2 missing
    with pytest.raises(ValueError):
        parse_word("a,b")


def test_validate_word_accepts_signed_arrangements():
    assert validate_word([-2, 1]) == (-2, 1)
    with pytest.raises(ValueError):
        validate_word([2, 2])
    with pytest.raises(ValueError):
        validate_word([0, 1])
