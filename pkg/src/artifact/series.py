"""Truncated formal power series in u over q-fraction coefficients.

Provides the q-deformed exponential, hyperbolic, and trigonometric families
for the symmetric-group, hyperoctahedral, and even-signed denominators, plus
division-free verification of generating-function identities: every identity
is checked in cross-multiplied, denominator-cleared form, because the scalar
denominators that appear (such as ``(1-s)(1-t)``) are not units in the
polynomial ring.
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .extension import ExtElement, GEN_I, QFraction
from .polynomials import LaurentPoly, poincare, qfact

__all__ = [
    "DEFAULT_ORDER",
    "EXTENDED_ORDER",
    "SERIES_FAMILIES",
    "TruncatedSeries",
    "series_make",
    "series_from_polys",
    "verify_fraction_identity",
]

DEFAULT_ORDER = 6
EXTENDED_ORDER = 8


class TruncatedSeries:
    """Polynomial in u of fixed truncation order with QFraction coefficients.

    Arithmetic never consults coefficients beyond the order; the product of
    two order-N series is again order-N.  There is deliberately no division.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence):
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        coeffs = tuple(QFraction.coerce(c) for c in coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(
                f"expected {order + 1} coefficients for order {order}, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, [QFraction.zero()] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [QFraction.one()] + [QFraction.zero()] * order)

    @classmethod
    def u_power(cls, power: int, order: int) -> "TruncatedSeries":
        """The monomial u**power as an order-`order` series."""
        if not 0 <= power <= order:
            raise ValueError(f"need 0 <= power <= order, got power={power}")
        coeffs = [QFraction.zero()] * (order + 1)
        coeffs[power] = QFraction.one()
        return cls(order, coeffs)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------
    def coefficient(self, n: int) -> QFraction:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside order {self.order}")
        return self.coeffs[n]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def first_nonzero(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if not c.is_zero:
                return n
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __add__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            out = [QFraction.zero()] * (self.order + 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for j in range(self.order + 1 - i):
                    b = other.coeffs[j]
                    if b.is_zero:
                        continue
                    out[i + j] = out[i + j] + a * b
            return TruncatedSeries(self.order, out)
        scalar = QFraction.coerce(other)
        return TruncatedSeries(self.order, [c * scalar for c in self.coeffs])

    def __rmul__(self, other) -> "TruncatedSeries":
        return self.__mul__(other)

    def negate_u(self) -> "TruncatedSeries":
        """Substitute u -> -u: flips the sign of the odd coefficients."""
        return TruncatedSeries(
            self.order,
            [(-c if n % 2 else c) for n, c in enumerate(self.coeffs)],
        )

    def scale_u(self, scalar) -> "TruncatedSeries":
        """Substitute u -> scalar*u: coefficient n picks up scalar**n."""
        factor = QFraction.coerce(scalar)
        coeffs, acc = [], QFraction.coerce(1)
        for c in self.coeffs:
            coeffs.append(c * acc)
            acc = acc * factor
        return TruncatedSeries(self.order, coeffs)

    def divide_by_generator(self, name: str) -> "TruncatedSeries":
        """Exact coefficient-wise division by an extension generator."""
        return TruncatedSeries(
            self.order, [c.divide_by_generator(name) for c in self.coeffs]
        )

    def substitute(self, name: str, mode: str, value: int | None = None) -> "TruncatedSeries":
        return TruncatedSeries(
            self.order, [c.substitute(name, mode, value) for c in self.coeffs]
        )

    # ------------------------------------------------------------------
    # presentation
    # ------------------------------------------------------------------
    def __str__(self) -> str:
        pieces = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            pieces.append(f"({c})*u^{n}" if n else f"({c})")
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, {self})"

    def to_json_list(self) -> list:
        return [c.to_json_dict() for c in self.coeffs]


# family -> (denominator kind, parity, carries the imaginary unit)
SERIES_FAMILIES: dict[str, tuple[str, str, bool]] = {
    "e_q": ("q", "all", False),
    "cosh_q": ("q", "even", False),
    "sinh_q": ("q", "odd", False),
    "cos_q": ("q", "even", True),
    "sin_q": ("q", "odd", True),
    "exp_B": ("B", "all", False),
    "cosh_B": ("B", "even", False),
    "sinh_B": ("B", "odd", False),
    "cos_B": ("B", "even", True),
    "sin_B": ("B", "odd", True),
    "exp_D": ("D", "all", False),
    "cosh_D": ("D", "even", False),
    "sinh_D": ("D", "odd", False),
    "cos_D": ("D", "even", True),
    "sin_D": ("D", "odd", True),
}


def _denominator(kind: str, n: int) -> LaurentPoly:
    if kind == "q":
        return qfact(n)
    return poincare(kind, n)


def _parity_ok(parity: str, n: int) -> bool:
    if parity == "all":
        return True
    if parity == "even":
        return n % 2 == 0
    return n % 2 == 1


def series_make(family: str, scale=1, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Build one of the named series with argument multiplier `scale`.

    The coefficient of u**n is scale**n / denominator(family, n), restricted
    to the family's parity.  The trigonometric families are the hyperbolic
    ones evaluated at i-times the argument: scale**n * i**n is expanded in
    the quadratic extension, so even coefficients are i-free and odd
    coefficients carry a single factor of the imaginary unit (the sine
    families are NOT divided by i).
    """
    try:
        kind, parity, trig = SERIES_FAMILIES[family]
    except KeyError:
        known = ", ".join(sorted(SERIES_FAMILIES))
        raise ValueError(f"unknown series family {family!r}; expected one of {known}")
    mult = ExtElement.coerce(scale)
    if trig:
        mult = mult * GEN_I
    coeffs = []
    power = ExtElement.one()
    for n in range(order + 1):
        if _parity_ok(parity, n):
            coeffs.append(QFraction(power, _denominator(kind, n)))
        else:
            coeffs.append(QFraction.zero())
        if n < order:
            power = power * mult
    return TruncatedSeries(order, coeffs)


def _fetch(source, n: int, what: str):
    if callable(source):
        try:
            value = source(n)
        except KeyError:
            value = None
    elif isinstance(source, Mapping):
        value = source.get(n)
    else:
        raise TypeError(f"{what} source must be a mapping or callable")
    if value is None:
        raise ValueError(f"missing {what} for n={n}")
    return value


def series_from_polys(
    polys: Mapping[int, LaurentPoly] | Callable[[int], LaurentPoly],
    denom: Mapping[int, LaurentPoly] | Callable[[int], LaurentPoly],
    parity: str,
    order: int = DEFAULT_ORDER,
    start: int | None = None,
) -> TruncatedSeries:
    """Series whose u**n coefficient is polys(n)/denom(n) for n of the given parity.

    `start` is the first u-power included (defaults to 0, or 1 for parity
    "odd"); some of the generating functions in play deliberately omit their
    lowest-rank terms.  A needed polynomial or denominator that the sources
    cannot supply raises ValueError.
    """
    if parity not in ("even", "odd", "all"):
        raise ValueError(f"parity must be 'even', 'odd', or 'all', got {parity!r}")
    if start is None:
        start = 1 if parity == "odd" else 0
    coeffs = []
    for n in range(order + 1):
        if n < start or not _parity_ok(parity, n):
            coeffs.append(QFraction.zero())
            continue
        poly = _fetch(polys, n, "polynomial")
        den = _fetch(denom, n, "denominator")
        if isinstance(poly, int):
            poly = LaurentPoly.constant(poly)
        coeffs.append(QFraction(ExtElement.from_poly(poly), den))
    return TruncatedSeries(order, coeffs)


def verify_fraction_identity(
    lhs: TruncatedSeries,
    num: TruncatedSeries,
    den: TruncatedSeries,
    clear: LaurentPoly | int = 1,
) -> dict:
    """Check lhs == num/den in cleared form: clear * (lhs*den - num) == 0.

    `clear` collects any scalar denominators of the identity so the whole
    computation stays in the polynomial ring.  The report names the first
    offending power of u and its residual when the identity fails.
    """
    residual = lhs * den - num
    if not (isinstance(clear, int) and clear == 1):
        residual = residual * QFraction.coerce(clear)
    for n in range(residual.order + 1):
        c = residual.coefficient(n)
        if not c.is_zero:
            return {
                "status": "fail",
                "u_power": n,
                "residual": str(c),
                "order": residual.order,
            }
    return {"status": "pass", "order": residual.order}
