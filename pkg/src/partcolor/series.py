"""Exact truncated power series over Python integers.

Every generating function in this package is a product of factors of the
form 1/(1 - c*x^j) or (1 + c*x^j), truncated at a fixed order N.  A factor
with j > N cannot influence coefficients of degree <= N, so folding the
factors for j = 1..N gives the exact truncation of the infinite product.
All coefficients are Python ints; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

RECIPROCAL = "reciprocal"
BINOMIAL = "binomial"


@dataclass(frozen=True)
class TruncatedSeries:
    """Dense coefficient vector: coeffs[i] is the coefficient of x^i."""

    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{tail}])"


def one(order: int) -> TruncatedSeries:
    """The constant series 1, truncated at the given order."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return TruncatedSeries((1,) + (0,) * order)


def coeff(s: TruncatedSeries, n: int) -> int:
    """Coefficient of x^n; raises IndexError beyond the truncation order."""
    if not 0 <= n <= s.order:
        raise IndexError(f"coefficient index {n} out of range 0..{s.order}")
    return s.coeffs[n]


def apply_geometric_factor(s: TruncatedSeries, c: int, j: int) -> TruncatedSeries:
    """Multiply by 1/(1 - c*x^j), truncated at s.order.

    No division is needed: out[i] = s[i] + c*out[i-j] for ascending i >= j
    is exactly the update that multiplying back by (1 - c*x^j) undoes.
    A factor with j > s.order returns s unchanged.
    """
    if j < 1:
        raise ValueError(f"factor exponent j must be >= 1, got {j}")
    out = list(s.coeffs)
    for i in range(j, len(out)):
        out[i] += c * out[i - j]
    return TruncatedSeries(tuple(out))


def apply_binomial_factor(s: TruncatedSeries, c: int, j: int) -> TruncatedSeries:
    """Multiply by (1 + c*x^j), truncated at s.order."""
    if j < 1:
        raise ValueError(f"factor exponent j must be >= 1, got {j}")
    out = list(s.coeffs)
    for i in range(j, len(out)):
        out[i] += c * s.coeffs[i - j]
    return TruncatedSeries(tuple(out))


_FACTOR_FOLDS = {
    RECIPROCAL: apply_geometric_factor,
    BINOMIAL: apply_binomial_factor,
}


def euler_product(c: int, order: int, kind: str) -> TruncatedSeries:
    """Expand the product over j >= 1 of 1/(1-c*x^j) or (1+c*x^j) to `order`.

    kind is "reciprocal" for the geometric factors, "binomial" for the
    (1 + c*x^j) factors.
    """
    try:
        fold = _FACTOR_FOLDS[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {sorted(_FACTOR_FOLDS)}, got {kind!r}") from None
    s = one(order)
    for j in range(1, order + 1):
        s = fold(s, c, j)
    return s


def linear_combination(terms: list[tuple[int, TruncatedSeries]]) -> TruncatedSeries:
    """Coefficient-wise sum of weight*series.

    All series must share one truncation order; an empty term list gives
    the zero series of order 0.
    """
    if not terms:
        return TruncatedSeries((0,))
    order = terms[0][1].order
    acc = [0] * (order + 1)
    for weight, s in terms:
        if s.order != order:
            raise ValueError(f"series order mismatch: {s.order} != {order}")
        for i, a in enumerate(s.coeffs):
            acc[i] += weight * a
    return TruncatedSeries(tuple(acc))


def scale_exact(
    s: TruncatedSeries, numerator: int, denominator: int, start_index: int = 0
) -> TruncatedSeries:
    """Scale coefficients i >= start_index by numerator/denominator, exactly.

    Raises ValueError naming the first index whose scaled coefficient the
    denominator does not divide: a failure here means a divisibility
    invariant was violated upstream, and rounding would hide it.
    start_index lets callers leave a constant term untouched when a rational
    prefactor is only meaningful from x^1 on.
    """
    if denominator <= 0:
        raise ValueError(f"denominator must be positive, got {denominator}")
    if start_index < 0:
        raise ValueError(f"start_index must be >= 0, got {start_index}")
    out = list(s.coeffs)
    for i in range(start_index, len(out)):
        scaled = numerator * out[i]
        q, r = divmod(scaled, denominator)
        if r:
            raise ValueError(
                f"{denominator} does not divide {numerator}*coeff[{i}] = {scaled}"
            )
        out[i] = q
    return TruncatedSeries(tuple(out))
