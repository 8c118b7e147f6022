"""Recurrences and closed-form rewrites for the refined descent polynomials.

Everything here is built from exact integer Laurent polynomials; no brute-force
enumeration is used, so these routines serve as an independent route to the
same polynomials that :mod:`artifact.enumeration` computes by summing over
group elements.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Callable

from .polynomials import (
    LaurentPoly,
    first_difference,
    monomial_name,
    one_minus,
    poincare,
    qbinom,
    qfact,
    qint,
)

__all__ = [
    "c_coeff",
    "cd_coeff",
    "pd_product",
    "recur_B",
    "recur_D",
    "recurrence_poly",
    "hyatt_plus",
    "classic_plus_B",
    "reiner_poly",
    "reiner_recurrence_rhs",
    "minus_transform",
    "reciprocal_transform",
    "symmetry_check",
]

_S = LaurentPoly.variable("s")
_T = LaurentPoly.variable("t")
_ONE = LaurentPoly.one()


def _qpow(power: int) -> LaurentPoly:
    return LaurentPoly.variable("q", power)


@lru_cache(maxsize=None)
def c_coeff(n: int, j: int) -> LaurentPoly:
    """``qbinom(n, j) * prod_{x=0}^{j-1} (1 + q^{n-x})``.

    Equals the ratio of Poincare polynomials ``B_n(1,q) / (B_{n-j}(1,q) [j]_q!)``.
    """
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got n={n}, j={j}")
    out = qbinom(n, j)
    for x in range(j):
        out = out * (_ONE + _qpow(n - x))
    return out


@lru_cache(maxsize=None)
def cd_coeff(n: int, j: int) -> LaurentPoly:
    """``qbinom(n, j) * prod_{i=n-j}^{n-1} (1 + q^i)``.

    Equals ``D_n(1,q) / (D_{n-j}(1,q) [j]_q!)``.
    """
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got n={n}, j={j}")
    out = qbinom(n, j)
    for i in range(n - j, n):
        out = out * (_ONE + _qpow(i))
    return out


@lru_cache(maxsize=None)
def pd_product(n: int) -> LaurentPoly:
    """``prod_{i=1}^{n-1} (1 + q^i)``, the ratio ``D_n(1,q) / [n]_q!``."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    out = LaurentPoly.one()
    for i in range(1, n):
        out = out * (_ONE + _qpow(i))
    return out


@lru_cache(maxsize=None)
def recur_B(n: int) -> LaurentPoly:
    """Bivariate polynomial for the full hyperoctahedral group via recurrence.

    Variables: s (even-position descents), t (odd-position descents), q
    (inversion number).  The recurrence conditions on the parity of n and
    peels off the maximal increasing suffix of each element.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        return LaurentPoly.one()
    k = n // 2
    oms = one_minus("s")
    omt = one_minus("t")
    if n % 2 == 0:
        total = omt**k * oms**k
        for r in range(k):
            total = total + _T * omt**r * oms**r * c_coeff(n, 2 * r + 1) * recur_B(n - 2 * r - 1)
        for r in range(1, k + 1):
            total = total + _S * omt**r * oms ** (r - 1) * c_coeff(n, 2 * r) * recur_B(n - 2 * r)
    else:
        total = omt**k * oms ** (k + 1)
        for r in range(k + 1):
            total = total + _S * omt**r * oms**r * c_coeff(n, 2 * r + 1) * recur_B(n - 2 * r - 1)
        for r in range(1, k + 1):
            total = total + _T * omt ** (r - 1) * oms**r * c_coeff(n, 2 * r) * recur_B(n - 2 * r)
    return total


@lru_cache(maxsize=None)
def recur_D(n: int) -> LaurentPoly:
    """Bivariate polynomial for the even-signed permutation group via recurrence.

    Valid for all n >= 0 (the groups of rank 0 and 1 are trivial).
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n < 2:
        return LaurentPoly.one()
    k = n // 2
    oms = one_minus("s")
    omt = one_minus("t")
    pd = pd_product(n)
    if n % 2 == 0:
        total = omt ** (k + 1) * oms ** (k - 1)
        total = total + 2 * _T * omt**k * oms ** (k - 1) * pd
        total = total + _T * _T * omt ** (k - 1) * oms ** (k - 1) * qint(n) * pd
        for r in range(k - 1):
            total = total + _T * omt**r * oms**r * cd_coeff(n, 2 * r + 1) * recur_D(n - 2 * r - 1)
        for r in range(1, k):
            total = total + _S * omt**r * oms ** (r - 1) * cd_coeff(n, 2 * r) * recur_D(n - 2 * r)
    else:
        total = omt ** (k + 1) * oms**k
        total = total + 2 * _T * omt**k * oms**k * pd
        total = total + _T * _T * omt ** (k - 1) * oms**k * qint(n) * pd
        for r in range(k):
            total = total + _S * omt**r * oms**r * cd_coeff(n, 2 * r + 1) * recur_D(n - 2 * r - 1)
        for r in range(1, k):
            total = total + _T * omt ** (r - 1) * oms**r * cd_coeff(n, 2 * r) * recur_D(n - 2 * r)
    return total


def recurrence_poly(family: str, n: int) -> LaurentPoly:
    """Dispatch to :func:`recur_B` or :func:`recur_D` by family name."""
    if family == "B":
        return recur_B(n)
    if family == "D":
        return recur_D(n)
    raise ValueError(f"unknown family {family!r}; expected 'B' or 'D'")


def hyatt_plus(family: str, n: int) -> LaurentPoly:
    """Polynomial for elements with positive last entry, via subset expansion.

    Expands the positive-last-entry class in terms of the full-group
    polynomials for smaller ranks, with q-binomial and q-power coefficients.
    """
    base: Callable[[int], LaurentPoly] = recur_B if family == "B" else recur_D
    if family not in ("B", "D"):
        raise ValueError(f"unknown family {family!r}; expected 'B' or 'D'")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    sm1 = _S - _ONE
    tm1 = _T - _ONE
    total = LaurentPoly.zero()
    if n % 2 == 0:
        for r in range(n // 2):
            size = 2 * r + 1
            total = total + (
                _qpow(comb(size, 2)) * qbinom(n, size) * base(n - size) * sm1**r * tm1**r
            )
        for r in range(1, n // 2 + 1):
            size = 2 * r
            total = total + (
                _qpow(comb(size, 2)) * qbinom(n, size) * base(n - size) * sm1 ** (r - 1) * tm1**r
            )
    else:
        for r in range(n // 2 + 1):
            size = 2 * r + 1
            total = total + (
                _qpow(comb(size, 2)) * qbinom(n, size) * base(n - size) * sm1**r * tm1**r
            )
        for r in range(1, n // 2 + 1):
            size = 2 * r
            total = total + (
                _qpow(comb(size, 2)) * qbinom(n, size) * base(n - size) * sm1**r * tm1 ** (r - 1)
            )
    return total


@lru_cache(maxsize=None)
def _classic_B(n: int) -> LaurentPoly:
    """Single-variable descent polynomial of the hyperoctahedral group (q = 1, s = t)."""
    return recur_B(n).subs_values({"q": 1}).rename_variables({"s": "t"})


@lru_cache(maxsize=None)
def classic_plus_B(n: int) -> LaurentPoly:
    """Single-variable positive-last-entry polynomial via the classical identity.

    ``B_n^+(t) = sum_{k=0}^{n-1} binom(n,k) B_k(t) (t-1)^{n-k-1}``, where the
    ``B_k(t)`` inputs come from the bivariate recurrence specialised at
    q = 1, s = t.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    tm1 = _T - _ONE
    total = LaurentPoly.zero()
    for k in range(n):
        total = total + comb(n, k) * _classic_B(k) * tm1 ** (n - k - 1)
    return total


@lru_cache(maxsize=None)
def reiner_poly(n: int) -> LaurentPoly:
    """Two-variable polynomial t^{des} q^{inv} for the hyperoctahedral group.

    Obtained from the bivariate recurrence by merging the even/odd descent
    markers (s = t).
    """
    return recur_B(n).rename_variables({"s": "t"})


def reiner_recurrence_rhs(n: int, polys: Callable[[int], LaurentPoly] = reiner_poly) -> LaurentPoly:
    """Right side of the unrefined descent recurrence, cleared of denominators.

    ``t * sum_{k=0}^{n} B_{n-k}(t,q) (1-t)^k C_k(n) + (1-t)^{n+1}``, which the
    left side ``B_n(t,q)`` satisfies implicitly (the k = 0 term contains it).
    `polys` supplies the two-variable polynomials by rank.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    omt = one_minus("t")
    total = omt ** (n + 1)
    for k in range(n + 1):
        total = total + _T * polys(n - k) * omt**k * c_coeff(n, k)
    return total


def _reciprocal_exponents(family: str, n: int) -> tuple[int, int, int]:
    """(q power, s power, t power) prefactor exponents for the reciprocity laws."""
    k = n // 2
    if family == "B":
        qpow = n * n
        if n % 2 == 0:
            return qpow, k, k
        return qpow, k + 1, k
    if family == "D":
        qpow = n * (n - 1)
        if n % 2 == 0:
            return qpow, k - 1, k + 1
        return qpow, k, k + 1
    raise ValueError(f"unknown family {family!r}; expected 'B' or 'D'")


def _apply_reciprocal(family: str, n: int, poly: LaurentPoly) -> LaurentPoly:
    qpow, spow, tpow = _reciprocal_exponents(family, n)
    flipped = (
        poly.substitute("s", "reciprocal")
        .substitute("t", "reciprocal")
        .substitute("q", "reciprocal")
    )
    prefactor = LaurentPoly.monomial(1, q=qpow, s=spow, t=tpow)
    return prefactor * flipped


def minus_transform(family: str, n: int, plus_poly: LaurentPoly) -> LaurentPoly:
    """Predicted negative-last-entry polynomial from the positive one."""
    return _apply_reciprocal(family, n, plus_poly)


def reciprocal_transform(family: str, n: int, poly: LaurentPoly) -> LaurentPoly:
    """Predicted full-group polynomial from itself under (s,t,q) -> (1/s,1/t,1/q)."""
    return _apply_reciprocal(family, n, poly)


def symmetry_check(family: str, n: int, *, jobs: int = 1) -> dict:
    """Check the minus/plus and self-reciprocity laws for one family and rank.

    Returns a report dict per statement with status and, on failure, the first
    differing monomial in graded-lexicographic order.
    """
    from .enumeration import poly_group

    group = family
    plus = poly_group(f"{group}+", n, "biv", jobs=jobs)
    minus = poly_group(f"{group}-", n, "biv", jobs=jobs)
    full = poly_group(group, n, "biv", jobs=jobs)
    tag = "typeB" if family == "B" else "typeD"
    statements = [
        (f"{tag}-minus-symmetry", minus, minus_transform(family, n, plus)),
        (f"{tag}-reciprocal", full, reciprocal_transform(family, n, full)),
    ]
    checks = []
    for identity_id, lhs, rhs in statements:
        diff = first_difference(lhs, rhs)
        entry: dict = {"identity_id": identity_id, "n": n}
        if diff is None:
            entry["status"] = "pass"
        else:
            exp, lc, rc = diff
            entry["status"] = "fail"
            entry["witness_monomial"] = monomial_name(exp)
            entry["lhs_coef"] = str(lc)
            entry["rhs_coef"] = str(rc)
        checks.append(entry)
    return {
        "family": family,
        "n": n,
        "status": "pass" if all(c["status"] == "pass" for c in checks) else "fail",
        "reports": checks,
    }
