"""Pisano periods and the residues the Fibonacci sequence reaches mod m."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from ._lanes import first_index, walk
from .fibcore import check_modulus

MAX_RESIDUE_SET_MODULUS = 10**8
# Moduli up to this size are stepped in a plain loop; larger ones use lanes.
_LOOP_MODULUS = 1 << 14
_FIRST_BLOCK = 1 << 16


@dataclass(frozen=True)
class PisanoResult:
    m: int
    period: int


class PigeonholeViolation(RuntimeError):
    """The scan ran past m*m + 1 steps without the seed pair recurring.

    Pigeonhole rules this out, so seeing it means the stepping code is broken.
    """


def _is_seed(a, b):
    return (a == 0) & (b == 1)


@lru_cache(maxsize=256)
def _period(m: int) -> int:
    cap = m * m + 1
    if m <= _LOOP_MODULUS:
        a, b = 0, 1
        for k in range(1, cap + 1):
            a, b = b, a + b
            if b >= m:
                b -= m
            if a == 0 and b == 1:
                return k
    else:
        lo, block = 1, _FIRST_BLOCK
        while lo <= cap:
            hi = min(cap, lo + block - 1)
            k = first_index(lo, hi, m, _is_seed)
            if k is not None:
                return k
            lo, block = hi + 1, block * 4
    raise PigeonholeViolation(f"no period found for m={m} within {cap} steps")


def pisano_period(m: int) -> PisanoResult:
    """Minimal period of F(n) mod m.

    Steps the recurrence from (F(0), F(1)) = (0, 1) until that pair comes
    back, so the result is the least period, not just some multiple of it.

    >>> pisano_period(10).period
    60
    """
    return PisanoResult(check_modulus(m), _period(m))


def pisano_table(ms: Iterable[int]) -> list[PisanoResult]:
    out = []
    for m in ms:
        try:
            out.append(pisano_period(m))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"modulus {m!r}: {exc}") from exc
    return out


def pisano_csv(results: Iterable[PisanoResult]) -> str:
    """Render a period table as CSV with a ``modulus,period`` header."""
    lines = ["modulus,period"]
    lines.extend(f"{r.m},{r.period}" for r in results)
    return "\n".join(lines) + "\n"


class ResidueSet:
    """Residues r in [0, m) with F(n) = r (mod m) for some n.

    Membership is stored as a bitmap, one bit per residue class.
    """

    def __init__(self, m: int, bits: bytes):
        self.m = m
        self._bits = bytes(bits)

    def __contains__(self, r: int) -> bool:
        if not 0 <= r < self.m:
            return False
        return bool(self._bits[r >> 3] & (1 << (r & 7)))

    def members(self) -> list[int]:
        return [r for r in range(self.m) if r in self]

    def __len__(self) -> int:
        return sum(bin(byte).count("1") for byte in self._bits)

    def __eq__(self, other):
        if isinstance(other, ResidueSet):
            return self.m == other.m and self._bits == other._bits
        return NotImplemented

    def __repr__(self):
        return f"ResidueSet(m={self.m}, size={len(self)})"


def residue_set(m: int) -> ResidueSet:
    """Scan one full Pisano period of F(n) mod m and record every residue seen."""
    check_modulus(m)
    if m > MAX_RESIDUE_SET_MODULUS:
        raise ValueError(f"modulus {m} above residue-set ceiling {MAX_RESIDUE_SET_MODULUS}")
    seen = np.zeros(m, dtype=bool)

    def mark(a):
        seen[a] = True

    walk(0, _period(m), m, mark)
    return ResidueSet(m, np.packbits(seen, bitorder="little").tobytes())
