"""Exact and modular Fibonacci numbers.

Indices follow F(0) = 0, F(1) = 1, F(2) = 1, F(3) = 2.  Exact values are
plain Python ints; residues are taken modulo a :data:`MAX_MODULUS`-bounded
modulus so that the sum of two residues fits a signed 64-bit integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

MAX_MODULUS = 10**12
MAX_BASE = 36
ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"

# Digits peeled per division when extracting digits; keeps the divisor
# within one or two machine words.
_CHUNK_WIDTH = {b: int(60 / math.log2(b)) for b in range(2, MAX_BASE + 1)}


def check_modulus(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"modulus must be an int, got {type(m).__name__}")
    if not 2 <= m <= MAX_MODULUS:
        raise ValueError(f"modulus {m} outside [2, {MAX_MODULUS}]")
    return m


def check_base(base: int) -> int:
    if isinstance(base, bool) or not isinstance(base, int):
        raise TypeError(f"base must be an int, got {type(base).__name__}")
    if not 2 <= base <= MAX_BASE:
        raise ValueError(f"base {base} outside [2, {MAX_BASE}]")
    return base


def _check_index(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"negative Fibonacci index {n}")
    return n


def fib_iter_exact(n: int) -> int:
    """F(n) by repeated addition.  Slow; kept as an oracle for :func:`fib_exact`."""
    _check_index(n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _doubling(n: int, m: int | None) -> tuple[int, int]:
    # Walks the bits of n from the top, holding (F(k), F(k+1)).
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if m is not None:
            c %= m
            d %= m
        if bit == "1":
            a, b = d, c + d
            if m is not None:
                b %= m
        else:
            a, b = c, d
    return a, b


def fib_exact(n: int) -> int:
    """Return F(n) exactly using fast doubling.

    >>> fib_exact(21)
    10946
    """
    return _doubling(_check_index(n), None)[0]


def fib_pair_mod(n: int, m: int) -> tuple[int, int]:
    """Return ``(F(n) mod m, F(n+1) mod m)``."""
    return _doubling(_check_index(n), check_modulus(m))


def fib_mod(n: int, m: int) -> int:
    """Return F(n) mod m in O(log n) multiplications."""
    return fib_pair_mod(n, m)[0]


@dataclass(frozen=True)
class ResiduePair:
    """Consecutive residues ``a = F(index) mod m`` and ``b = F(index+1) mod m``."""

    index: int
    a: int
    b: int
    m: int

    def __post_init__(self):
        if not (0 <= self.a < self.m and 0 <= self.b < self.m):
            raise ValueError(f"residues ({self.a}, {self.b}) not reduced mod {self.m}")

    def step(self) -> ResiduePair:
        s = self.a + self.b
        if s >= self.m:
            s -= self.m
        return ResiduePair(self.index + 1, self.b, s, self.m)


def residue_stream(m: int, start: int = 0) -> Iterator[ResiduePair]:
    """Yield residue pairs from index ``start`` onward, forever.

    The first pair is seeded with fast doubling, later pairs by stepping
    the recurrence.  The caller decides when to stop.
    """
    a, b = fib_pair_mod(start, m)
    k = start
    while True:
        yield ResiduePair(k, a, b, m)
        s = a + b
        a, b = b, s - m if s >= m else s
        k += 1


def fib_stream() -> Iterator[tuple[int, int]]:
    """Yield ``(n, F(n))`` for n = 0, 1, 2, ... with exact values."""
    a, b = 0, 1
    n = 0
    while True:
        yield n, a
        a, b = b, a + b
        n += 1


def iter_low_digits(x: int, base: int = 10) -> Iterator[int]:
    """Yield the base-``base`` digits of ``x`` from least significant up.

    Digits are peeled in machine-word sized chunks so a caller that stops
    early (for example after finding a wanted digit) pays only for the
    chunks it touched.  Zero yields a single ``0``.
    """
    check_base(base)
    if x < 0:
        raise ValueError("negative values have no digit expansion here")
    if x < base:
        yield x
        return
    width = _CHUNK_WIDTH[base]
    chunk = base**width
    while x:
        x, low = divmod(x, chunk)
        if x:
            for _ in range(width):
                low, d = divmod(low, base)
                yield d
        else:
            while low:
                low, d = divmod(low, base)
                yield d


def digits_of(x: int, base: int = 10) -> list[int]:
    """Digits of ``x`` in ``base``, least significant first.

    >>> digits_of(10946)
    [6, 4, 9, 0, 1]
    """
    return list(iter_low_digits(x, base))


def from_digits(digits: list[int], base: int = 10) -> int:
    """Inverse of :func:`digits_of`."""
    x = 0
    for d in reversed(digits):
        x = x * base + d
    return x


def to_numeral(x: int, base: int = 10) -> str:
    """Render ``x`` as a numeral string, most significant digit first."""
    return "".join(ALPHABET[d] for d in reversed(digits_of(x, base)))


def digit_count(x: int, base: int = 10) -> int:
    """Number of base-``base`` digits of ``x`` (1 for zero)."""
    check_base(base)
    if x < base:
        return 1
    # bit-length estimate, then correct by at most one in either direction
    k = max(1, int((x.bit_length() - 1) / math.log2(base)))
    p = base**k
    while p > x:
        p //= base
        k -= 1
    while p * base <= x:
        p *= base
        k += 1
    return k + 1
