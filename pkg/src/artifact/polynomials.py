"""Exact sparse Laurent polynomials over a fixed seven-variable roster.

Every polynomial in the library lives in Z[s^±1, t^±1, q^±1, s0^±1, s1^±1,
t0^±1, t1^±1], represented sparsely as a map from exponent tuples to
arbitrary-precision integer coefficients.  Values are immutable after
construction and all operations are pure functions.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

VARIABLES: tuple[str, ...] = ("s", "t", "q", "s0", "s1", "t0", "t1")
NVARS = len(VARIABLES)
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}


def _var_index(name: str) -> int:
    try:
        return _VAR_INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; choose from {VARIABLES}") from None
_ZERO_EXP = (0,) * NVARS


def _signpow(exponent: int) -> int:
    """(-1)**exponent for any integer exponent, staying in int arithmetic."""
    return -1 if exponent % 2 else 1


class LaurentPoly:
    """A sparse Laurent polynomial with integer coefficients.

    Exponents are signed integers so reciprocal substitutions stay inside the
    ring.  Instances are treated as immutable; no method mutates ``terms``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, coef in terms.items():
                if coef:
                    clean[tuple(exp)] = coef
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({_ZERO_EXP: 1})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({_ZERO_EXP: int(value)})

    @classmethod
    def variable(cls, name: str, power: int = 1, coef: int = 1) -> "LaurentPoly":
        exp = [0] * NVARS
        exp[_var_index(name)] = power
        return cls({tuple(exp): coef})

    @classmethod
    def monomial(cls, coef: int = 1, **powers: int) -> "LaurentPoly":
        exp = [0] * NVARS
        for name, power in powers.items():
            exp[_var_index(name)] = power
        return cls({tuple(exp): coef})

    # ------------------------------------------------------------------
    # ring structure
    # ------------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # mutable dict inside; equality is structural

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            new = out.get(exp, 0) + coef
            if new:
                out[exp] = new
            else:
                out.pop(exp, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = out
        return result

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = (
                    e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3],
                    e1[4] + e2[4], e1[5] + e2[5], e1[6] + e2[6],
                )
                new = out.get(exp, 0) + c1 * c2
                if new:
                    out[exp] = new
                else:
                    del out[exp]
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = LaurentPoly.one()
        base = self
        n = power
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    # ------------------------------------------------------------------
    # substitutions
    # ------------------------------------------------------------------
    def substitute(self, name: str, mode: str, value: int | None = None) -> "LaurentPoly":
        """Substitute one variable.

        mode 'reciprocal': x -> 1/x (negates that exponent).
        mode 'negation':   x -> -x.
        mode 'value':      x -> value (an integer; |value| must be 1 when the
                           variable occurs with negative exponent).
        """
        idx = _var_index(name)
        out: dict[tuple[int, ...], int] = {}
        if mode == "reciprocal":
            for exp, coef in self.terms.items():
                new = list(exp)
                new[idx] = -new[idx]
                out[tuple(new)] = coef
            return LaurentPoly(out)
        if mode == "negation":
            for exp, coef in self.terms.items():
                out[exp] = out.get(exp, 0) + coef * _signpow(exp[idx])
            return LaurentPoly(out)
        if mode == "value":
            if value is None:
                raise ValueError("mode 'value' requires a value")
            v = int(value)
            for exp, coef in self.terms.items():
                e = exp[idx]
                if e < 0 and abs(v) != 1:
                    raise ValueError(
                        f"cannot substitute {name}={v} into a negative power"
                    )
                if v == 0:
                    if e > 0:
                        continue
                    scaled = coef
                elif abs(v) == 1:
                    scaled = coef * _signpow(e) if v == -1 else coef
                else:
                    scaled = coef * v**e
                new = list(exp)
                new[idx] = 0
                key = tuple(new)
                acc = out.get(key, 0) + scaled
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
            return LaurentPoly(out)
        raise ValueError(f"unknown substitution mode {mode!r}")

    def subs_values(self, assignments: Mapping[str, int]) -> "LaurentPoly":
        poly = self
        for name, value in assignments.items():
            poly = poly.substitute(name, "value", value)
        return poly

    def rename_variables(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        """Send each source variable to a target variable (exponents add).

        All renames happen simultaneously, so swaps are sound.
        """
        src = [(_var_index(a), _var_index(b)) for a, b in mapping.items()]
        out: dict[tuple[int, ...], int] = {}
        for exp, coef in self.terms.items():
            new = list(exp)
            for a, _ in src:
                new[a] = 0
            for a, b in src:
                new[b] += exp[a]
            key = tuple(new)
            acc = out.get(key, 0) + coef
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return LaurentPoly(out)

    def coefficient(self, **powers: int) -> int:
        exp = [0] * NVARS
        for name, power in powers.items():
            exp[_var_index(name)] = power
        return self.terms.get(tuple(exp), 0)

    def variables_used(self) -> tuple[str, ...]:
        used = [False] * NVARS
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(name for i, name in enumerate(VARIABLES) if used[i])

    def integer_value(self) -> int:
        """The value of a constant polynomial (zero polynomial gives 0)."""
        if not self.terms:
            return 0
        if set(self.terms) != {_ZERO_EXP}:
            raise ValueError("polynomial is not constant")
        return self.terms[_ZERO_EXP]

    # ------------------------------------------------------------------
    # canonical presentation
    # ------------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in canonical order: total degree, then lexicographic."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exp, coef in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARIABLES, exp)
                if e
            ]
            mag = abs(coef)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if coef > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    # ------------------------------------------------------------------
    # serialization
    # ------------------------------------------------------------------
    def to_json_dict(self) -> dict:
        return {
            "vars": list(VARIABLES),
            "terms": [
                {"exp": list(exp), "coef": str(coef)}
                for exp, coef in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPoly":
        names = list(data.get("vars", VARIABLES))
        positions = [_var_index(name) for name in names]
        terms: dict[tuple[int, ...], int] = {}
        for item in data["terms"]:
            exp = [0] * NVARS
            for pos, e in zip(positions, item["exp"]):
                exp[pos] = int(e)
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + int(item["coef"])
        return cls(terms)


def first_difference(
    lhs: LaurentPoly, rhs: LaurentPoly
) -> tuple[tuple[int, ...], int, int] | None:
    """First monomial (canonical order) where two polynomials differ."""
    diff = lhs - rhs
    if diff.is_zero:
        return None
    exp = min(diff.terms, key=lambda e: (sum(e), e))
    return exp, lhs.terms.get(exp, 0), rhs.terms.get(exp, 0)


def monomial_name(exp: Iterable[int]) -> str:
    factors = [
        name if e == 1 else f"{name}^{e}" for name, e in zip(VARIABLES, exp) if e
    ]
    return "*".join(factors) if factors else "1"


# ----------------------------------------------------------------------
# q-arithmetic
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("qint requires n >= 0")
    return LaurentPoly({(0, 0, k, 0, 0, 0, 0): 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfact(n: int) -> LaurentPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    if n < 0:
        raise ValueError("qfact requires n >= 0")
    if n == 0:
        return LaurentPoly.one()
    return qfact(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial via the q-Pascal recurrence; zero outside 0<=k<=n."""
    if k < 0 or k > n:
        return LaurentPoly.zero()
    if k == 0 or k == n:
        return LaurentPoly.one()
    return qbinom(n - 1, k - 1) + LaurentPoly.variable("q", k) * qbinom(n - 1, k)


@lru_cache(maxsize=None)
def poincare(family: str, n: int) -> LaurentPoly:
    """Length generating function of the rank-n group, closed product form.

    family 'A': [n]_q! over the symmetric group S_n.
    family 'B': prod_{i=1..n} [2i]_q over signed permutations.
    family 'D': [n]_q * prod_{i=1..n-1} [2i]_q over even-signed permutations
                (the empty cases n=0,1 give 1).
    """
    if n < 0:
        raise ValueError("poincare requires n >= 0")
    if family == "A":
        return qfact(n)
    if family == "B":
        result = LaurentPoly.one()
        for i in range(1, n + 1):
            result = result * qint(2 * i)
        return result
    if family == "D":
        if n == 0:
            return LaurentPoly.one()
        result = qint(n)
        for i in range(1, n):
            result = result * qint(2 * i)
        return result
    raise ValueError(f"unknown family {family!r}")


def one_minus(name: str) -> LaurentPoly:
    """1 - x for a roster variable; the ubiquitous recurrence factor."""
    return LaurentPoly.one() - LaurentPoly.variable(name)
