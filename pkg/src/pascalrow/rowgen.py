"""Row generation by digit-partitioning powers of 10**(theta+1) + 1.

Write w = theta + 1 for the digit count of the central coefficient
C(n, n // 2). The integer (10**w + 1)**n then carries the entire row n in
its decimal digits: the r-th block of w digits from the right is exactly
C(n, r-1), because every coefficient fits in w digits so no block ever
carries into its neighbour. This module computes theta exactly (never via
floating logarithms), raises the base to the n-th power, slices blocks,
and exposes the no-carry bound and the truncated-sum residue identity as
executable checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import oracle
from .bignat import RADIX, RADIX_DIGITS, BigNat, pow10
from .row import Method, Row

_ONE = BigNat(1)


@dataclass(frozen=True)
class ThetaResult:
    """Block geometry for one row index."""

    n: int
    central_digits: int
    theta: int
    block_width: int


class ResidueMismatchError(ArithmeticError):
    """The low digit blocks of the power stopped matching the binomial sum.

    Cannot happen while the block width equals the central coefficient's
    digit count; raised only if a block overflowed into its neighbour.
    """

    def __init__(self, n: int, r: int, expected: str, actual: str):
        self.n = n
        self.r = r
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"residue of {r} block(s) for row {n}: "
            f"expected {expected}, got {actual}"
        )


@lru_cache(maxsize=None)
def theta(n: int) -> ThetaResult:
    """Zeros to insert between the ones of eleven so row n fits its blocks.

    Exactly one less than the digit count of C(n, n // 2), computed from
    the coefficient itself so there is no rounding boundary to guard.
    """
    if n < 0:
        raise ValueError(f"row index must be >= 0, got {n}")
    central_digits = oracle.central_digit_count(n)
    return ThetaResult(
        n=n,
        central_digits=central_digits,
        theta=central_digits - 1,
        block_width=central_digits,
    )


def eleven_variant(geometry: ThetaResult) -> BigNat:
    """The base 10**(theta+1) + 1: a one, theta zeros, a one."""
    return pow10(geometry.block_width) + _ONE


@lru_cache(maxsize=8)
def power_integer(n: int) -> BigNat:
    """(10**(theta+1) + 1)**n, the integer whose digit blocks hold row n."""
    return eleven_variant(theta(n)).pow(n)


def partition_blocks(x: BigNat, width: int, expected: int) -> list[BigNat]:
    """Slice x into `expected` blocks of `width` digits, rightmost first.

    Splits at the middle block boundary and recurses, so the number is
    copied log(expected) times rather than once per block.
    """
    if width < 1:
        raise ValueError(f"block width must be >= 1, got {width}")
    if expected < 1:
        raise ValueError(f"block count must be >= 1, got {expected}")
    digits = x.digit_count()
    if digits > expected * width:
        raise ValueError(
            f"{digits} digits do not fit {expected} blocks of width {width}"
        )
    blocks: list[BigNat] = []
    _split_into_blocks(x, width, expected, blocks)
    return blocks


def _split_into_blocks(x: BigNat, width: int, count: int, out: list[BigNat]) -> None:
    if count == 1:
        out.append(x)
        return
    half = count // 2
    high, low = x.split_pow10(half * width)
    _split_into_blocks(low, width, half, out)
    _split_into_blocks(high, width, count - half, out)


def row_via_power(n: int) -> Row:
    """Row n read off the digit blocks of the power integer."""
    geometry = theta(n)
    blocks = partition_blocks(power_integer(n), geometry.block_width, n + 1)
    return Row(
        n=n, coefficients=tuple(reversed(blocks)), method=Method.POWER_PARTITION
    )


def residue_partial_sum(n: int, r: int) -> BigNat:
    """The r lowest digit blocks of the power, cross-checked both ways.

    Computes the remainder of the power modulo 10**(r * (theta+1)) by digit
    split, and independently the truncated binomial sum
    sum(C(n, i) * 10**(i * (theta+1)) for i < r) from oracle coefficients.
    The two must be identical; a mismatch raises ResidueMismatchError.
    """
    geometry = _validated_geometry(n, r)
    _, remainder = power_integer(n).split_pow10(r * geometry.block_width)
    expected = _truncated_power_sum(n, r)
    if remainder != expected:
        raise ResidueMismatchError(
            n=n, r=r, expected=str(expected), actual=str(remainder)
        )
    return remainder


def leading_block_of_residue(n: int, r: int) -> BigNat:
    """Top block of the r-block residue; equals C(n, r-1) by the no-carry bound."""
    geometry = _validated_geometry(n, r)
    residue = residue_partial_sum(n, r)
    quotient, _ = residue.split_pow10((r - 1) * geometry.block_width)
    return quotient


def lemma1_bound_check(n: int, r: int) -> bool:
    """True when the r lowest binomial terms sum strictly below 10**(r*(theta+1)).

    This is the no-carry condition that keeps the digit blocks disjoint.
    Evaluated on the oracle-built sum, not on the split remainder (which is
    below the modulus by construction), so a broken width actually reports
    false instead of being masked by the splitter.
    """
    geometry = _validated_geometry(n, r)
    bound_digits = r * geometry.block_width
    return _truncated_power_sum(n, r).digit_count() <= bound_digits


def clear_caches() -> None:
    """Drop memoized geometry, powers and oracle rows (used by benchmarks)."""
    theta.cache_clear()
    power_integer.cache_clear()
    _oracle_row.cache_clear()


def _validated_geometry(n: int, r: int) -> ThetaResult:
    geometry = theta(n)
    if not 1 <= r <= n + 1:
        raise ValueError(f"block count r={r} outside 1..{n + 1} for row {n}")
    return geometry


@lru_cache(maxsize=4)
def _oracle_row(n: int) -> Row:
    return oracle.row_multiplicative(n)


def _truncated_power_sum(n: int, r: int) -> BigNat:
    # sum(C(n, i) * 10**(i * width) for i in range(r)), assembled by adding
    # each shifted coefficient into a limb accumulator at its digit offset.
    width = theta(n).block_width
    coefficients = _oracle_row(n).coefficients
    acc = [0] * (r * width // RADIX_DIGITS + 2)
    for i in range(r):
        offset_limbs, offset_digits = divmod(i * width, RADIX_DIGITS)
        term = coefficients[i]
        if offset_digits:
            term = term.mul_small(10**offset_digits)
        j = offset_limbs
        carry = 0
        for limb in term.limbs:
            s = acc[j] + limb + carry
            if s >= RADIX:
                s -= RADIX
                carry = 1
            else:
                carry = 0
            acc[j] = s
            j += 1
        while carry:
            s = acc[j] + 1
            if s >= RADIX:
                s -= RADIX
            else:
                carry = 0
            acc[j] = s
            j += 1
    return BigNat.from_limbs(acc)
