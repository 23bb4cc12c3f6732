"""Arbitrary-precision natural numbers with decimal-friendly limbs.

Values are immutable tuples of base-10**7 limbs, least significant limb
first, with no leading zero limbs (zero is the empty tuple). Keeping the
radix a power of ten makes splitting at a power of ten a digit slice
instead of a division loop, which is the hot operation downstream.

Multiplication has two paths that must agree bit-exactly:

* a plain schoolbook loop in Python (the quadratic path), used below the
  Karatsuba threshold;
* Karatsuba recursion over numpy int64 arrays whose base case is a single
  integer convolution (the subquadratic path).

The radix is chosen so that convolution column sums stay far below the
int64 limit: a base case of ``min(len(a), len(b)) <= 2048`` limbs peaks at
``2048 * (10**7 - 1)**2 < 2.1e17``, more than 40x inside ``2**63``.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

RADIX = 10**7
RADIX_DIGITS = 7

#: Operand size (in limbs of the smaller factor) at which ``*`` switches
#: from the schoolbook path to the Karatsuba path.
DEFAULT_KARATSUBA_THRESHOLD = 32

# Base case size for the Karatsuba recursion, in limbs. Must stay small
# enough that a convolution column sum min(la, lb) * (RADIX-1)^2 fits int64.
_CONV_BASE_LIMBS = 512

_karatsuba_threshold = DEFAULT_KARATSUBA_THRESHOLD

# Instrumentation for the benchmark harness: counts every multiplication
# performed through the public entry points (full products and scalar
# products alike). Not meant for concurrent use.
_mul_ops = 0


def set_karatsuba_threshold(limbs: int) -> None:
    """Set the operand size at which multiplication goes subquadratic."""
    if not isinstance(limbs, int) or limbs < 2:
        raise ValueError(f"karatsuba threshold must be an integer >= 2, got {limbs!r}")
    global _karatsuba_threshold
    _karatsuba_threshold = limbs


def karatsuba_threshold() -> int:
    return _karatsuba_threshold


def reset_mul_counter() -> None:
    global _mul_ops
    _mul_ops = 0


def mul_counter() -> int:
    """Number of multiplications since the last reset."""
    return _mul_ops


class BigNat:
    """An unsigned integer of any size, stored as base-10**7 limbs."""

    __slots__ = ("_limbs",)

    def __init__(self, value: int = 0):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"BigNat takes an int, got {type(value).__name__}")
        if value < 0:
            raise ValueError(f"BigNat is unsigned, got {value}")
        limbs = []
        while value:
            value, low = divmod(value, RADIX)
            limbs.append(low)
        self._limbs = tuple(limbs)

    @classmethod
    def _raw(cls, limbs: tuple) -> "BigNat":
        # Internal constructor; caller guarantees canonical limbs.
        out = object.__new__(cls)
        out._limbs = limbs
        return out

    @classmethod
    def from_limbs(cls, limbs: Iterable[int]) -> "BigNat":
        """Build from little-endian limbs; normalizes leading zeros."""
        limbs = list(limbs)
        for limb in limbs:
            if not 0 <= limb < RADIX:
                raise ValueError(f"limb {limb} out of range for radix {RADIX}")
        return cls._raw(_trimmed(limbs))

    @classmethod
    def from_decimal(cls, text: str) -> "BigNat":
        """Parse an ASCII digit string; leading zeros are accepted."""
        if not text:
            raise ValueError("empty digit string")
        if not (text.isascii() and text.isdigit()):
            for pos, ch in enumerate(text):
                if not "0" <= ch <= "9":
                    raise ValueError(f"invalid decimal digit {ch!r} at position {pos}")
        stripped = text.lstrip("0")
        if not stripped:
            return _ZERO
        limbs = tuple(
            int(stripped[max(0, stop - RADIX_DIGITS) : stop])
            for stop in range(len(stripped), 0, -RADIX_DIGITS)
        )
        return cls._raw(limbs)

    @property
    def limbs(self) -> tuple:
        """Little-endian limbs; empty for zero."""
        return self._limbs

    def to_decimal(self) -> str:
        """Decimal rendering with no leading zeros ("0" for zero)."""
        if not self._limbs:
            return "0"
        parts = [str(self._limbs[-1])]
        parts += ["%07d" % limb for limb in reversed(self._limbs[:-1])]
        return "".join(parts)

    def to_int(self) -> int:
        value = 0
        for limb in reversed(self._limbs):
            value = value * RADIX + limb
        return value

    def digit_count(self) -> int:
        """Length of the decimal rendering; 1 for zero. No floating point."""
        if not self._limbs:
            return 1
        return RADIX_DIGITS * (len(self._limbs) - 1) + len(str(self._limbs[-1]))

    def compare(self, other: "BigNat") -> int:
        """-1, 0 or 1 as self is less than, equal to or greater than other."""
        a, b = self._limbs, other._limbs
        if len(a) != len(b):
            return -1 if len(a) < len(b) else 1
        for x, y in zip(reversed(a), reversed(b)):
            if x != y:
                return -1 if x < y else 1
        return 0

    def __str__(self) -> str:
        return self.to_decimal()

    def __repr__(self) -> str:
        text = self.to_decimal()
        if len(text) > 40:
            text = f"{text[:18]}..{text[-18:]}<{len(text)} digits>"
        return f"BigNat({text})"

    def __int__(self) -> int:
        return self.to_int()

    def __bool__(self) -> bool:
        return bool(self._limbs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigNat):
            return NotImplemented
        return self._limbs == other._limbs

    def __hash__(self) -> int:
        return hash(self._limbs)

    def __lt__(self, other: "BigNat") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "BigNat") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "BigNat") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "BigNat") -> bool:
        return self.compare(other) >= 0

    def __add__(self, other: "BigNat") -> "BigNat":
        if not isinstance(other, BigNat):
            return NotImplemented
        a, b = self._limbs, other._limbs
        if len(a) < len(b):
            a, b = b, a
        out = []
        append = out.append
        carry = 0
        for i, y in enumerate(b):
            s = a[i] + y + carry
            if s >= RADIX:
                s -= RADIX
                carry = 1
            else:
                carry = 0
            append(s)
        i = len(b)
        n = len(a)
        while carry and i < n:
            s = a[i] + 1
            if s >= RADIX:
                s -= RADIX
            else:
                carry = 0
            append(s)
            i += 1
        if i < n:
            out.extend(a[i:])
        elif carry:
            append(1)
        return BigNat._raw(tuple(out))

    def __mul__(self, other: "BigNat") -> "BigNat":
        if not isinstance(other, BigNat):
            return NotImplemented
        global _mul_ops
        _mul_ops += 1
        a, b = self._limbs, other._limbs
        if not a or not b:
            return _ZERO
        if min(len(a), len(b)) < _karatsuba_threshold:
            return BigNat._raw(_mul_quadratic_limbs(a, b))
        return BigNat._raw(_mul_subquadratic_limbs(a, b))

    def mul_small(self, factor: int) -> "BigNat":
        """Product with a single-limb scalar (0 <= factor < RADIX)."""
        if not 0 <= factor < RADIX:
            raise ValueError(f"scalar factor {factor} out of range [0, {RADIX})")
        global _mul_ops
        _mul_ops += 1
        if factor == 0 or not self._limbs:
            return _ZERO
        out = []
        carry = 0
        for limb in self._limbs:
            carry, low = divmod(limb * factor + carry, RADIX)
            out.append(low)
        if carry:
            out.append(carry)
        return BigNat._raw(tuple(out))

    def divmod_small(self, divisor: int) -> tuple["BigNat", int]:
        """Quotient and remainder for a single-limb divisor (short division)."""
        if not 1 <= divisor < RADIX:
            raise ValueError(f"divisor {divisor} out of range [1, {RADIX})")
        rem = 0
        out = [0] * len(self._limbs)
        for i in range(len(self._limbs) - 1, -1, -1):
            out[i], rem = divmod(rem * RADIX + self._limbs[i], divisor)
        return BigNat._raw(_trimmed(out)), rem

    def pow(self, exponent: int) -> "BigNat":
        """Exact power by repeated squaring; 0**0 is defined as 1."""
        if exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {exponent}")
        if exponent == 0:
            return _ONE
        result = None
        base = self
        e = exponent
        while True:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if not e:
                return result
            base = base * base

    def __pow__(self, exponent: int) -> "BigNat":
        return self.pow(exponent)

    def split_pow10(self, k: int) -> tuple["BigNat", "BigNat"]:
        """Split at 10**k: returns (self // 10**k, self % 10**k).

        With power-of-ten limbs this is a slice plus at most one sub-limb
        digit shift, never a division loop.
        """
        if k < 0:
            raise ValueError(f"split point must be >= 0, got {k}")
        if k == 0:
            return self, _ZERO
        limbs = self._limbs
        whole, part = divmod(k, RADIX_DIGITS)
        if whole >= len(limbs):
            return _ZERO, self
        if part == 0:
            return (
                BigNat._raw(limbs[whole:]),
                BigNat._raw(_trimmed(limbs[:whole])),
            )
        pivot = 10**part
        shift = RADIX // pivot
        pivot_hi, pivot_lo = divmod(limbs[whole], pivot)
        low = list(limbs[:whole])
        low.append(pivot_lo)
        high = []
        for i in range(whole, len(limbs)):
            carry_in = limbs[i + 1] % pivot if i + 1 < len(limbs) else 0
            high.append((limbs[i] // pivot) + carry_in * shift)
        return BigNat._raw(_trimmed(high)), BigNat._raw(_trimmed(low))


def pow10(k: int) -> BigNat:
    """The power of ten with k zeros."""
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    whole, part = divmod(k, RADIX_DIGITS)
    return BigNat._raw((0,) * whole + (10**part,))


def mul_quadratic(a: BigNat, b: BigNat) -> BigNat:
    """Force the schoolbook path regardless of the threshold."""
    global _mul_ops
    _mul_ops += 1
    if not a._limbs or not b._limbs:
        return _ZERO
    return BigNat._raw(_mul_quadratic_limbs(a._limbs, b._limbs))


def mul_subquadratic(a: BigNat, b: BigNat) -> BigNat:
    """Force the Karatsuba path regardless of the threshold."""
    global _mul_ops
    _mul_ops += 1
    if not a._limbs or not b._limbs:
        return _ZERO
    return BigNat._raw(_mul_subquadratic_limbs(a._limbs, b._limbs))


def _trimmed(limbs) -> tuple:
    n = len(limbs)
    while n and limbs[n - 1] == 0:
        n -= 1
    return tuple(limbs[:n])


def _mul_quadratic_limbs(a: tuple, b: tuple) -> tuple:
    # Schoolbook with whole-column accumulation and a single carry pass;
    # Python ints absorb the oversized column sums.
    acc = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                acc[i + j] += x * y
    out = []
    carry = 0
    for column in acc:
        carry, low = divmod(column + carry, RADIX)
        out.append(low)
    while carry:
        carry, low = divmod(carry, RADIX)
        out.append(low)
    return tuple(out)


def _mul_subquadratic_limbs(a: tuple, b: tuple) -> tuple:
    arr = _kara(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
    return tuple(arr.tolist())


def _kara(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    la, lb = a.shape[0], b.shape[0]
    if la == 0 or lb == 0:
        return np.zeros(0, dtype=np.int64)
    if min(la, lb) <= _CONV_BASE_LIMBS:
        return _trim(_carry_sweep(np.convolve(a, b)))
    half = min(la, lb) >> 1
    a0, a1 = _trim(a[:half]), a[half:]
    b0, b1 = _trim(b[:half]), b[half:]
    z0 = _kara(a0, b0)
    z2 = _kara(a1, b1)
    z1 = _vec_sub(_kara(_vec_add(a0, a1), _vec_add(b0, b1)), _vec_add(z0, z2))
    out = np.zeros(la + lb, dtype=np.int64)
    out[: z0.shape[0]] = z0
    out[half : half + z1.shape[0]] += z1
    out[2 * half : 2 * half + z2.shape[0]] += z2
    return _trim(_carry_sweep(out))


def _trim(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    while n and not a[n - 1]:
        n -= 1
    return a[:n]


def _carry_sweep(acc: np.ndarray) -> np.ndarray:
    # Reduce oversized column sums to limb range; convolution output needs
    # one or two passes, pathological ripple just loops a little longer.
    while True:
        carry = acc // RADIX
        if not carry.any():
            return acc
        acc = np.concatenate([acc - carry * RADIX, np.zeros(1, dtype=np.int64)])
        acc[1:] += carry


def _vec_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[0] < b.shape[0]:
        a, b = b, a
    out = np.concatenate([a, np.zeros(1, dtype=np.int64)])
    out[: b.shape[0]] += b
    return _trim(_carry_sweep(out))


def _vec_sub(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # Requires a >= b, which Karatsuba guarantees for its middle term.
    out = a.copy()
    out[: b.shape[0]] -= b
    while True:
        negative = out < 0
        if not negative.any():
            return _trim(out)
        out[negative] += RADIX
        out[np.nonzero(negative)[0] + 1] -= 1


_ZERO = BigNat(0)
_ONE = BigNat(1)
