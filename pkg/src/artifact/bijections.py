"""Structural maps between smaller groups and descent-constrained families.

The core construction relabels a signed permutation onto a target value set
(order- and sign-preservingly) and juxtaposes a signed subset:

* map_f:   B_k x (signed (n-k)-subsets of [n]) -> G_{n,k}; the subset is
           appended in ascending order.
* map_fD:  D_k x (signed subsets) -> H_{n,k}; when the sign string carries an
           odd number of negatives, the first prefix entry is negated to
           restore even parity.
* map_fpp: B_k/D_k x (plain subsets) -> words ending in the subset written
           positive and descending.

All maps come with inverses; the lemma sums and closed forms they certify
live here too.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .permutations import (
    Word,
    in_type_d,
    inv_B,
    inv_D,
    iterate_group,
    negative_count,
    validate_word,
)
from .polynomials import LaurentPoly, qbinom

SignedSubset = tuple[int, ...]  # distinct absolute values; sign = membership sign


def signed_subsets(n: int, r: int) -> Iterator[SignedSubset]:
    """All signed r-subsets of [n], each as an ascending tuple of values."""
    for base in itertools.combinations(range(1, n + 1), r):
        for signs in itertools.product((1, -1), repeat=r):
            yield tuple(sorted(a * s for a, s in zip(base, signs)))


def plain_subsets(n: int, r: int) -> Iterator[tuple[int, ...]]:
    yield from itertools.combinations(range(1, n + 1), r)


def relabel(word: Iterable[int], targets: Iterable[int]) -> Word:
    """Send the entry with absolute value k to targets[k-1], keeping signs.

    targets must be positive and ascending, so relative order is preserved.
    """
    targets = tuple(targets)
    out = []
    for x in word:
        value = targets[abs(x) - 1]
        out.append(value if x > 0 else -value)
    return tuple(out)


def _check_sizes(prefix_len: int, subset: SignedSubset, n: int) -> tuple[int, ...]:
    used = tuple(sorted(abs(a) for a in subset))
    if len(set(used)) != len(used) or (used and (used[0] < 1 or used[-1] > n)):
        raise ValueError(f"not a signed subset of [{n}]: {subset}")
    if prefix_len + len(subset) != n:
        raise ValueError(
            f"sizes must add to {n}: prefix {prefix_len} + subset {len(subset)}"
        )
    return tuple(v for v in range(1, n + 1) if v not in set(used))


def map_f(sigma: Word, subset: SignedSubset, n: int) -> Word:
    """Relabelled prefix followed by the ascending signed subset."""
    complement = _check_sizes(len(sigma), subset, n)
    return relabel(sigma, complement) + tuple(sorted(subset))


def map_f_inverse(word: Word, r: int) -> tuple[Word, SignedSubset]:
    n = len(word)
    prefix, tail = word[:n - r], word[n - r:]
    ranks = {v: pos + 1 for pos, v in enumerate(sorted(abs(x) for x in prefix))}
    sigma = tuple(ranks[abs(x)] if x > 0 else -ranks[abs(x)] for x in prefix)
    return sigma, tuple(sorted(tail))


def map_fD(sigma: Word, subset: SignedSubset, n: int) -> Word:
    """Type-D juxtaposition with the parity-correcting first-entry flip.

    When the prefix is empty (|subset| = n) the subset is juxtaposed alone:
    there is no entry to flip, and the lemma sum it feeds ranges over all
    sign strings regardless of parity.
    """
    if not in_type_d(sigma):
        raise ValueError(f"prefix not in the even-signed group: {sigma}")
    complement = _check_sizes(len(sigma), subset, n)
    prefix = relabel(sigma, complement)
    if negative_count(subset) % 2 == 1 and prefix:
        prefix = (-prefix[0],) + prefix[1:]
    return prefix + tuple(sorted(subset))


def map_fD_inverse(word: Word, r: int) -> tuple[Word, SignedSubset]:
    sigma, subset = map_f_inverse(word, r)
    if negative_count(subset) % 2 == 1 and sigma:
        sigma = (-sigma[0],) + sigma[1:]
    return sigma, subset


def map_fpp(psi: Word, subset: tuple[int, ...], n: int, family: str = "B") -> Word:
    """Relabelled prefix followed by the subset written positive, descending."""
    if any(a < 0 for a in subset):
        raise ValueError("descending-suffix subsets carry no signs")
    if family == "D" and not in_type_d(psi):
        raise ValueError(f"prefix not in the even-signed group: {psi}")
    complement = _check_sizes(len(psi), subset, n)
    return relabel(psi, complement) + tuple(sorted(subset, reverse=True))


def map_fpp_inverse(word: Word, r: int) -> tuple[Word, tuple[int, ...]]:
    n = len(word)
    sigma, _ = map_f_inverse(word, r)
    return sigma, tuple(sorted(word[n - r:]))


# ----------------------------------------------------------------------
# descending-suffix families
# ----------------------------------------------------------------------
def iterate_descending_suffix(family: str, n: int, k: int) -> Iterator[Word]:
    """Words whose last k+1 entries are positive and strictly descending.

    family 'B' ranges over B_n, family 'D' over D_n.
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"suffix length k+1={k + 1} outside 1..{n}")
    group = "B" if family == "B" else "D"
    for word in iterate_group(group, n):
        tail = word[n - k - 1:]
        if all(x > 0 for x in tail) and all(
            tail[j] > tail[j + 1] for j in range(len(tail) - 1)
        ):
            yield word


# ----------------------------------------------------------------------
# lemma sums and closed forms
# ----------------------------------------------------------------------
def ascending_positive(values: Iterable[int]) -> Word:
    return tuple(sorted(values))


def poly_lemma21_sum(n: int, r: int) -> LaurentPoly:
    """Sum of q^{inv_B} over identity-prefixed signed-subset juxtapositions."""
    terms: dict[tuple[int, ...], int] = {}
    for subset in signed_subsets(n, r):
        complement = tuple(
            v for v in range(1, n + 1) if v not in {abs(a) for a in subset}
        )
        word = complement + tuple(sorted(subset))
        exp = (0, 0, inv_B(word), 0, 0, 0, 0)
        terms[exp] = terms.get(exp, 0) + 1
    return LaurentPoly(terms)


def lemma21_closed_form(n: int, r: int) -> LaurentPoly:
    result = qbinom(n, r)
    for x in range(r):
        result = result * (
            LaurentPoly.one() + LaurentPoly.variable("q", n - x)
        )
    return result


def poly_lemma31_sum(n: int, r: int) -> LaurentPoly:
    """Sum of q^{inv_D} over parity-corrected subset juxtapositions."""
    terms: dict[tuple[int, ...], int] = {}
    identity_prefix_len = n - r
    for subset in signed_subsets(n, r):
        complement = tuple(
            v for v in range(1, n + 1) if v not in {abs(a) for a in subset}
        )
        sigma = tuple(range(1, identity_prefix_len + 1))
        word = map_fD(sigma, subset, n)
        exp = (0, 0, inv_D(word), 0, 0, 0, 0)
        terms[exp] = terms.get(exp, 0) + 1
    return LaurentPoly(terms)


def lemma31_closed_form(n: int, r: int) -> LaurentPoly:
    result = qbinom(n, r)
    for j in range(1, r + 1):
        result = result * (
            LaurentPoly.one() + LaurentPoly.variable("q", n - j)
        )
    return result
