"""Vectorised residue walking shared by the period search and the digit scan.

An index range is split into equal contiguous lanes.  Each lane holds the
pair (F(k) mod m, F(k+1) mod m) for its current index, and one numpy
operation advances every lane by one step.  Residues stay below 10**12, so
a sum of two fits in int64.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .fibcore import fib_pair_mod

MAX_LANES = 1 << 16
STEPS_PER_LANE = 256


def lane_seeds(lo: int, count: int, m: int):
    """Split ``count`` indices starting at ``lo`` into contiguous lanes.

    Returns (lane length, lane start indices, F(start) mod m, F(start+1) mod m).
    Seeds come from one fast-doubling call plus the addition law
    F(s+L) = F(s+1) F(L) + F(s) (F(L+1) - F(L)).
    """
    lanes = max(1, min(MAX_LANES, count // STEPS_PER_LANE))
    length = -(-count // lanes)
    lanes = -(-count // length)
    fl, fl1 = fib_pair_mod(length, m)
    a, b = fib_pair_mod(lo, m)
    seed_a = np.empty(lanes, dtype=np.int64)
    seed_b = np.empty(lanes, dtype=np.int64)
    for j in range(lanes):
        seed_a[j], seed_b[j] = a, b
        a, b = (b * fl + a * (fl1 - fl)) % m, (b * fl1 + a * fl) % m
    starts = lo + length * np.arange(lanes, dtype=np.int64)
    return length, starts, seed_a, seed_b


def step(a: np.ndarray, b: np.ndarray, m: int):
    c = a + b
    np.subtract(c, m, out=c, where=c >= m)
    return b, c


def first_index(lo: int, hi: int, m: int, found: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> int | None:
    """Smallest k in [lo, hi] with ``found(F(k) mod m, F(k+1) mod m)`` true.

    ``found`` maps the lane arrays to a boolean array.  Once some lane
    matches, every lane above it is dropped, since those only hold larger
    indices.
    """
    count = hi - lo + 1
    if count <= 0:
        return None
    length, starts, a, b = lane_seeds(lo, count, m)
    lanes = len(starts)
    last_len = count - (lanes - 1) * length
    active = lanes
    best = None
    for t in range(length):
        if t == last_len and active == lanes:
            # the final lane is shorter; retire it once it runs past hi
            active -= 1
            if active == 0:
                break
            a, b = a[:active], b[:active]
        hit = found(a, b)
        if hit.any():
            j = int(np.argmax(hit))
            best = int(starts[j]) + t
            active = j
            if active == 0:
                break
            a, b = a[:active], b[:active]
        a, b = step(a, b, m)
    return best


def walk(lo: int, count: int, m: int, visit: Callable[[np.ndarray], None]) -> None:
    """Call ``visit`` on F(k) mod m for every k in [lo, lo+count), lane-wise.

    Lanes overrun the range by less than one lane length; the overrun
    indices are masked out before ``visit`` sees them.
    """
    if count <= 0:
        return
    length, starts, a, b = lane_seeds(lo, count, m)
    last_len = count - (len(starts) - 1) * length
    for t in range(length):
        visit(a if t < last_len else a[:-1])
        a, b = step(a, b, m)
