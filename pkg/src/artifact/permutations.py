"""Signed permutations: representation, iteration, and statistics.

A signed permutation of rank n is stored as a tuple of n nonzero integers
whose absolute values are a permutation of 1..n.  The leading 0 of the
hyperoctahedral convention is implicit and never stored.

Positions for the type-B statistics are 0..n-1, where position i compares
pi_i against pi_{i+1} with pi_0 = 0.  Positions for type D are
{-1, 1, ..., n-1} with pi_{-1} = -pi_1; position -1 counts as odd.  Type-A
(ordinary permutation) positions are 1..n-1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

Word = tuple[int, ...]


# ----------------------------------------------------------------------
# basic predicates and text form
# ----------------------------------------------------------------------
def validate_word(word: Sequence[int]) -> Word:
    w = tuple(word)
    if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)) or 0 in w:
        raise ValueError(f"not a signed permutation: {w}")
    return w


def negative_count(word: Sequence[int]) -> int:
    return sum(1 for x in word if x < 0)


def in_type_d(word: Sequence[int]) -> bool:
    return negative_count(word) % 2 == 0


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(x) for x in word)


def parse_word(text: str) -> Word:
    return validate_word(int(piece) for piece in text.split(","))


# ----------------------------------------------------------------------
# position bookkeeping
# ----------------------------------------------------------------------
def even_odd_positions_B(n: int) -> tuple[int, int]:
    """(#even, #odd) positions among 0..n-1."""
    return (n + 1) // 2, n // 2


def even_odd_positions_D(n: int) -> tuple[int, int]:
    """(#even, #odd) positions among {-1, 1, ..., n-1}; -1 is odd.

    Rank 0 and 1 have no positions: position -1 compares -pi_1 with pi_2,
    which requires n >= 2.
    """
    if n < 2:
        return 0, 0
    odd = 1 + (n - 1 + 1) // 2  # -1 plus odd i in 1..n-1
    even = (n - 1) // 2
    return even, odd


def even_odd_positions_A(n: int) -> tuple[int, int]:
    """(#even, #odd) positions among 1..n-1."""
    if n <= 1:
        return 0, 0
    return (n - 1) // 2, n // 2


# ----------------------------------------------------------------------
# descent sets
# ----------------------------------------------------------------------
def descent_set_B(word: Sequence[int]) -> tuple[int, ...]:
    """Positions i in 0..n-1 with pi_i > pi_{i+1} (pi_0 = 0)."""
    out = []
    prev = 0
    for i, x in enumerate(word):
        if prev > x:
            out.append(i)
        prev = x
    return tuple(out)


def descent_set_D(word: Sequence[int]) -> tuple[int, ...]:
    """Positions i in {-1, 1, ..., n-1} with pi_i > pi_{|i|+1} (pi_{-1} = -pi_1)."""
    n = len(word)
    if n < 2:
        return ()
    out = []
    if -word[0] > word[1]:
        out.append(-1)
    for i in range(1, n):
        if word[i - 1] > word[i]:
            out.append(i)
    return tuple(out)


def descent_set_A(word: Sequence[int]) -> tuple[int, ...]:
    """Positions i in 1..n-1 with pi_i > pi_{i+1}."""
    return tuple(i for i in range(1, len(word)) if word[i - 1] > word[i])


# ----------------------------------------------------------------------
# inversion statistics
# ----------------------------------------------------------------------
def inv_A(word: Sequence[int]) -> int:
    n = len(word)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j]
    )


def negative_magnitude_sum(word: Sequence[int]) -> int:
    return -sum(x for x in word if x < 0)


def inv_B(word: Sequence[int]) -> int:
    """Type-B length: ordinary inversions plus the negative magnitudes."""
    return inv_A(word) + negative_magnitude_sum(word)


def inv_B_definitional(word: Sequence[int]) -> int:
    """The three-term pair-counting form of the type-B length."""
    n = len(word)
    total = negative_count(word)
    for i in range(n):
        for j in range(i + 1, n):
            if word[i] > word[j]:
                total += 1
            if -word[i] > word[j]:
                total += 1
    return total


def inv_D(word: Sequence[int]) -> int:
    """Type-D length: the type-B count without the negative-entry term."""
    return inv_A(word) + negative_magnitude_sum(word) - negative_count(word)


def inv_D_definitional(word: Sequence[int]) -> int:
    n = len(word)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if word[i] > word[j]:
                total += 1
            if -word[i] > word[j]:
                total += 1
    return total


# ----------------------------------------------------------------------
# statistic vectors
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class StatVector:
    edes: int
    odes: int
    easc: int
    oasc: int
    inv: int


def stats_B(word: Sequence[int]) -> StatVector:
    n = len(word)
    edes = odes = 0
    prev = 0
    for i, x in enumerate(word):
        if prev > x:
            if i % 2 == 0:
                edes += 1
            else:
                odes += 1
        prev = x
    evens, odds = even_odd_positions_B(n)
    return StatVector(edes, odes, evens - edes, odds - odes, inv_B(word))


def stats_D(word: Sequence[int]) -> StatVector:
    n = len(word)
    edes = odes = 0
    if n >= 2:
        if -word[0] > word[1]:
            odes += 1
        for i in range(1, n):
            if word[i - 1] > word[i]:
                if i % 2 == 0:
                    edes += 1
                else:
                    odes += 1
    evens, odds = even_odd_positions_D(n)
    return StatVector(edes, odes, evens - edes, odds - odes, inv_D(word))


def stats_A(word: Sequence[int]) -> StatVector:
    n = len(word)
    edes = odes = 0
    for i in range(1, n):
        if word[i - 1] > word[i]:
            if i % 2 == 0:
                edes += 1
            else:
                odes += 1
    evens, odds = even_odd_positions_A(n)
    return StatVector(edes, odes, evens - edes, odds - odes, inv_A(word))


# ----------------------------------------------------------------------
# snakes
# ----------------------------------------------------------------------
def is_snake(word: Sequence[int], family: str) -> bool:
    """Alternating chains: 0<w1>w2<w3>... (B); -w2>w1>w2<w3>... (D).

    Equivalently, the descent set is exactly the odd positions (including
    position -1 for the D chain), so both reduce to a descent-set equality.
    """
    n = len(word)
    if family == "B":
        return descent_set_B(word) == tuple(i for i in range(1, n, 2))
    if family == "D":
        if not in_type_d(word):
            return False
        if n < 2:
            return True
        want = (-1,) + tuple(i for i in range(1, n, 2))
        return descent_set_D(word) == want
    raise ValueError(f"unknown snake family {family!r}")


# ----------------------------------------------------------------------
# sign-flip involutions
# ----------------------------------------------------------------------
def flip_all(word: Sequence[int]) -> Word:
    return tuple(-x for x in word)


def flip_D(word: Sequence[int]) -> Word:
    """Parity-preserving flip: negate all entries, sparing the first when n is odd."""
    if len(word) % 2 == 0:
        return tuple(-x for x in word)
    return (word[0],) + tuple(-x for x in word[1:])


# ----------------------------------------------------------------------
# iteration
# ----------------------------------------------------------------------
GROUPS = (
    "A", "B", "D", "B+", "B-", "D+", "D-", "G", "H", "X", "snakeB", "snakeD",
)


def _signed_words(n: int) -> Iterator[Word]:
    """All of B_n in lexicographic (permutation, sign pattern) order."""
    if n == 0:
        yield ()
        return
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(p * s for p, s in zip(perm, signs))


def iterate_group(group: str, n: int, i: int | None = None) -> Iterator[Word]:
    """Stream the requested family exactly once each, deterministically.

    G and H require the cutoff parameter i with -1 <= i <= n-1: descents are
    allowed only at positions <= i (the last n-i entries increase).
    """
    if n < 0:
        raise ValueError("rank must be nonnegative")
    needs_i = group in ("G", "H")
    if needs_i:
        if i is None:
            raise ValueError(f"family {group} requires the cutoff i")
        if n < 1 or not -1 <= i <= n - 1:
            raise ValueError(f"cutoff i={i} outside -1..{n - 1}")
    elif i is not None:
        raise ValueError(f"family {group} takes no cutoff")

    if group == "A":
        if n == 0:
            yield ()
            return
        yield from itertools.permutations(range(1, n + 1))
        return
    if group == "B":
        yield from _signed_words(n)
        return
    if group == "D":
        yield from (w for w in _signed_words(n) if in_type_d(w))
        return
    if group == "B+":
        yield from (w for w in _signed_words(n) if n and w[-1] > 0)
        return
    if group == "B-":
        yield from (w for w in _signed_words(n) if n and w[-1] < 0)
        return
    if group == "D+":
        yield from (
            w for w in _signed_words(n) if n and w[-1] > 0 and in_type_d(w)
        )
        return
    if group == "D-":
        yield from (
            w for w in _signed_words(n) if n and w[-1] < 0 and in_type_d(w)
        )
        return
    if group == "G":
        allowed = set(range(0, i + 1))
        yield from (
            w for w in _signed_words(n) if set(descent_set_B(w)) <= allowed
        )
        return
    if group == "H":
        allowed = {-1} | set(range(1, i + 1))
        yield from (
            w
            for w in _signed_words(n)
            if in_type_d(w) and set(descent_set_D(w)) <= allowed
        )
        return
    if group == "X":
        yield from (
            w
            for w in _signed_words(n)
            if in_type_d(w) and set(descent_set_D(w)) <= {-1, 1}
        )
        return
    if group == "snakeB":
        yield from (w for w in _signed_words(n) if is_snake(w, "B"))
        return
    if group == "snakeD":
        yield from (
            w for w in _signed_words(n) if in_type_d(w) and is_snake(w, "D")
        )
        return
    raise ValueError(f"unknown group {group!r}")
