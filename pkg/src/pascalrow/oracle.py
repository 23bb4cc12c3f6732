"""Ground-truth binomial coefficients, independent of the power pipeline.

Two derivations that share no code with the power-partition generator:
the multiplicative recurrence C(n, j+1) = C(n, j) * (n-j) / (j+1) with
exact division at every step, and the additive rule that builds each row
from the previous one. They validate each other and the generator.
"""

from __future__ import annotations

from itertools import islice
from typing import Iterator

from .bignat import RADIX, BigNat
from .row import Method, Row

_ONE = BigNat(1)


def binomial(n: int, k: int) -> BigNat:
    """Exact C(n, k) via the multiplicative recurrence."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial needs 0 <= k <= n, got n={n} k={k}")
    if n >= RADIX:
        raise ValueError(f"row index {n} too large for scalar recurrence steps")
    k = min(k, n - k)
    value = _ONE
    for j in range(k):
        value = _exact_step(value, n - j, j + 1)
    return value


def row_multiplicative(n: int) -> Row:
    """Whole row in one left-to-right pass of the multiplicative recurrence."""
    if n < 0:
        raise ValueError(f"row index must be >= 0, got {n}")
    if n >= RADIX:
        raise ValueError(f"row index {n} too large for scalar recurrence steps")
    coefficients = [_ONE]
    value = _ONE
    for j in range(n):
        value = _exact_step(value, n - j, j + 1)
        coefficients.append(value)
    return Row(n=n, coefficients=tuple(coefficients), method=Method.MULTIPLICATIVE)


def iter_recurrence_rows() -> Iterator[Row]:
    """Yield rows 0, 1, 2, ... by summing adjacent elements of the previous row.

    Sweeps over many consecutive rows should consume this iterator rather
    than call row_recurrence per index, which restarts from the apex.
    """
    coefficients = (_ONE,)
    n = 0
    while True:
        yield Row(n=n, coefficients=coefficients, method=Method.RECURRENCE)
        previous = coefficients
        coefficients = (
            (_ONE,)
            + tuple(previous[i] + previous[i + 1] for i in range(len(previous) - 1))
            + (_ONE,)
        )
        n += 1


def row_recurrence(n: int) -> Row:
    """Row n by the additive rule, built from row 0 upward."""
    if n < 0:
        raise ValueError(f"row index must be >= 0, got {n}")
    return next(islice(iter_recurrence_rows(), n, None))


def central_digit_count(n: int) -> int:
    """Decimal digits of the largest coefficient in row n, C(n, n//2)."""
    if n < 0:
        raise ValueError(f"row index must be >= 0, got {n}")
    return binomial(n, n // 2).digit_count()


def _exact_step(value: BigNat, numerator: int, denominator: int) -> BigNat:
    quotient, remainder = value.mul_small(numerator).divmod_small(denominator)
    if remainder:
        raise ArithmeticError(
            f"inexact division by {denominator} in binomial recurrence"
        )
    return quotient
