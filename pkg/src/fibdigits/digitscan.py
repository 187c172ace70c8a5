"""Digit-coverage verification over one period of the last n digits.

Every Fibonacci number F(k) with at least n digits shares its last n digits
with F(k mod P), where P is the period of F mod B**n.  So if every tail in
one period contains a digit of S, every large Fibonacci number does too,
and only the handful of small values (fewer than n digits) need a separate
look.  Those small values whose own digits miss S are the *exceptions*.

The scan is vectorised: the index range is cut into contiguous lanes, each
seeded at its start, and all lanes advance one step per numpy operation.
Tail membership is decided with lookup tables over groups of digits.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .fibcore import (
    ALPHABET,
    MAX_MODULUS,
    check_base,
    digit_count,
    fib_pair_mod,
    fib_stream,
    iter_low_digits,
)
from ._lanes import first_index, lane_seeds, step
from .pisano import pisano_period

_TABLE_LIMIT = 1 << 16


@dataclass(frozen=True)
class DigitSet:
    """A non-empty set of digits in a given base."""

    base: int
    members: frozenset[int]

    def __post_init__(self):
        check_base(self.base)
        if not self.members:
            raise ValueError("digit set is empty")
        bad = [d for d in self.members if not 0 <= d < self.base]
        if bad:
            raise ValueError(f"digits {sorted(bad)} not valid in base {self.base}")

    @classmethod
    def of(cls, digits: Iterable[int], base: int = 10) -> DigitSet:
        return cls(base, frozenset(digits))

    @classmethod
    def omit(cls, digits: Iterable[int], base: int = 10) -> DigitSet:
        """The complement of ``digits`` in {0, ..., base-1}."""
        digits = set(digits)
        bad = [d for d in digits if not 0 <= d < base]
        if bad:
            raise ValueError(f"digits {sorted(bad)} not valid in base {base}")
        return cls(base, frozenset(range(base)) - digits)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def omitted(self) -> list[int]:
        return [d for d in range(self.base) if d not in self.members]

    def label(self) -> str:
        """Compact label; complements are written as ``{0,...,9}\\{2,4}``."""
        missing = self.omitted()
        if missing and len(missing) < len(self.members):
            top = ALPHABET[self.base - 1]
            return "{0,...,%s}\\{%s}" % (top, ",".join(ALPHABET[d] for d in missing))
        return "{%s}" % ",".join(ALPHABET[d] for d in self.sorted())

    def occurs_in(self, x: int) -> bool:
        """True if some digit of ``x`` (unpadded) belongs to the set."""
        return any(d in self.members for d in iter_low_digits(x, self.base))


def required_scan_bound(n_digits: int, base: int = 10) -> int:
    """Number of terms after which the last ``n_digits`` digits repeat.

    Base 10 with at least three digits uses the closed form 15 * 10**(n-1);
    everything else is computed as the Pisano period of base**n_digits.
    """
    check_base(base)
    if n_digits < 1:
        raise ValueError(f"n_digits must be positive, got {n_digits}")
    m = base**n_digits
    if m > MAX_MODULUS:
        raise ValueError(f"{base}**{n_digits} exceeds modulus ceiling {MAX_MODULUS}")
    if base == 10 and n_digits >= 3:
        return 15 * 10 ** (n_digits - 1)
    return pisano_period(m).period


@dataclass(frozen=True)
class ScanConfig:
    digit_set: DigitSet
    n_digits: int
    scan_length: int

    def __post_init__(self):
        if self.n_digits < 1:
            raise ValueError(f"n_digits must be positive, got {self.n_digits}")
        if self.modulus > MAX_MODULUS:
            raise ValueError(f"modulus {self.modulus} exceeds ceiling {MAX_MODULUS}")
        if self.scan_length < 1:
            raise ValueError(f"scan_length must be positive, got {self.scan_length}")

    @classmethod
    def build(cls, digit_set: DigitSet, n_digits: int, scan_length: int | None = None) -> ScanConfig:
        if scan_length is None:
            scan_length = required_scan_bound(n_digits, digit_set.base)
        return cls(digit_set, n_digits, scan_length)

    @property
    def base(self) -> int:
        return self.digit_set.base

    @property
    def modulus(self) -> int:
        return self.digit_set.base**self.n_digits


@dataclass(frozen=True)
class Witness:
    """An index whose last n digits (``tail``, most significant first) avoid S."""

    index: int
    tail: str


@dataclass(frozen=True)
class ScanVerdict:
    """Outcome of :func:`scan_digit_set`.

    ``witness is None`` means covered: every Fibonacci number contains a
    digit of S except the listed ``exceptions``.  A witness means the
    method is inconclusive at this n, which is weaker than a refutation.
    ``exceptions`` lists (index, value) for small F(k) < B**n whose digits
    avoid S while their padded tail does not; it is filled in either way.
    """

    config: ScanConfig
    exceptions: tuple[tuple[int, int], ...]
    witness: Witness | None
    elapsed_seconds: float = field(default=0.0, compare=False)

    @property
    def covered(self) -> bool:
        return self.witness is None

    @property
    def verdict(self) -> str:
        return "covered" if self.covered else "inconclusive"

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "set": cfg.digit_set.sorted(),
            "base": cfg.base,
            "n_digits": cfg.n_digits,
            "modulus": cfg.modulus,
            "scan_length": cfg.scan_length,
            "verdict": self.verdict,
            "exceptions": [{"index": k, "value": str(v)} for k, v in self.exceptions],
            "witness": None if self.witness is None else {"index": self.witness.index, "tail": self.witness.tail},
            "elapsed_seconds": self.elapsed_seconds,
        }


class _TailTester:
    """Vectorised test: does the zero-padded n-digit tail contain a digit of S?"""

    def __init__(self, digit_set: DigitSet, n_digits: int):
        base = digit_set.base
        mask = np.zeros(base, dtype=bool)
        mask[list(digit_set.members)] = True
        width = 1
        while width < n_digits and base ** (width + 1) <= _TABLE_LIMIT:
            width += 1
        self.groups = []  # (group modulus, lookup table)
        left = n_digits
        while left:
            w = min(width, left)
            size = base**w
            vals = np.arange(size, dtype=np.int64)
            table = np.zeros(size, dtype=bool)
            for _ in range(w):
                table |= mask[vals % base]
                vals //= base
            self.groups.append((size, table))
            left -= w

    def hits(self, x: np.ndarray) -> np.ndarray:
        size, table = self.groups[0]
        if len(self.groups) == 1:
            return table[x]
        out = table[x % size]
        rest = x // size
        for size, table in self.groups[1:-1]:
            out |= table[rest % size]
            rest //= size
        size, table = self.groups[-1]
        out |= table[rest]
        return out


def _first_miss(lo: int, hi: int, m: int, tester: _TailTester) -> int | None:
    """Smallest k in [lo, hi] whose tail avoids S, or None."""
    return first_index(lo, hi, m, lambda a, b: ~tester.hits(a))


def tail_hits(config: ScanConfig, start: int, stop: int) -> np.ndarray:
    """Per-index tail verdicts for k in [start, stop), via the scan engine."""
    count = stop - start
    if count <= 0:
        return np.zeros(0, dtype=bool)
    tester = _TailTester(config.digit_set, config.n_digits)
    m = config.modulus
    length, starts, a, b = lane_seeds(start, count, m)
    rows = np.empty((length, len(starts)), dtype=bool)
    for t in range(length):
        rows[t] = tester.hits(a)
        a, b = step(a, b, m)
    return rows.T.reshape(-1)[:count]


def tail_string(k: int, n_digits: int, base: int = 10) -> str:
    """Last ``n_digits`` base-``base`` digits of F(k), zero padded."""
    r = fib_pair_mod(k, base**n_digits)[0]
    out = []
    for _ in range(n_digits):
        r, d = divmod(r, base)
        out.append(ALPHABET[d])
    return "".join(reversed(out))


def _small_exceptions(config: ScanConfig) -> list[tuple[int, int]]:
    S = config.digit_set
    m = config.modulus
    found = []
    for k, f in fib_stream():
        if k == 0:
            continue
        if f >= m or k > config.scan_length:
            break
        if S.occurs_in(f):
            continue
        # the padded tail differs from f only by leading zeros
        if digit_count(f, S.base) < config.n_digits and 0 in S.members:
            found.append((k, f))
    return found


def _chunk_bounds(total: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, total))
    edges = [1 + (total * i) // chunks for i in range(chunks + 1)]
    return [(edges[i], edges[i + 1] - 1) for i in range(chunks)]


def scan_digit_set(config: ScanConfig, chunks: int = 1, workers: int | None = None) -> ScanVerdict:
    """Check that every tail F(k) mod B**n, k = 1..scan_length, contains a digit of S.

    The range is cut into ``chunks`` contiguous pieces, each seeded
    independently.  With ``workers`` > 1 the pieces run on a thread pool;
    otherwise they run in order and stop at the first piece with a miss.
    The result does not depend on either setting: the witness is always
    the smallest failing index.

    Raises ValueError if ``scan_length`` is not a period of F mod B**n.
    """
    t0 = time.perf_counter()
    m = config.modulus
    if fib_pair_mod(config.scan_length, m) != (0, 1):
        raise ValueError(f"scan_length {config.scan_length} is not a period of F mod {m}")
    tester = _TailTester(config.digit_set, config.n_digits)
    bounds = _chunk_bounds(config.scan_length, chunks)

    if workers and workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            misses = list(pool.map(lambda lh: _first_miss(lh[0], lh[1], m, tester), bounds))
    else:
        misses = []
        for lo, hi in bounds:
            misses.append(_first_miss(lo, hi, m, tester))
            if misses[-1] is not None:
                break
    found = [k for k in misses if k is not None]
    witness = None
    if found:
        k = min(found)
        witness = Witness(k, tail_string(k, config.n_digits, config.base))
    return ScanVerdict(
        config,
        tuple(_small_exceptions(config)),
        witness,
        elapsed_seconds=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class DepthRecord:
    """1-based position from the right of the first digit of F(index) in S."""

    index: int
    depth: int | None


@dataclass(frozen=True)
class DepthSurvey:
    records: list[DepthRecord]
    no_hit: list[int]

    @property
    def max_depth(self) -> int | None:
        return self.records[-1].depth if self.records else None


def rightmost_hit_depth(x: int, digit_set: DigitSet) -> int | None:
    for pos, d in enumerate(iter_low_digits(x, digit_set.base), start=1):
        if d in digit_set.members:
            return pos
    return None


def max_depth_survey(N: int, digit_set: DigitSet) -> DepthSurvey:
    """Indices in 1..N where the deepest first-hit position so far grows.

    Indices whose value has no digit of S at all are listed in ``no_hit``
    and do not take part in the running maximum.
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    records, no_hit = [], []
    best = 0
    for k, f in fib_stream():
        if k == 0:
            continue
        if k > N:
            break
        depth = rightmost_hit_depth(f, digit_set)
        if depth is None:
            no_hit.append(k)
        elif depth > best:
            best = depth
            records.append(DepthRecord(k, depth))
    return DepthSurvey(records, no_hit)


@dataclass(frozen=True)
class Table1Row:
    """One row of the published table: the omitted digits and what was reported."""

    omit: tuple[int, ...]
    published_n: int
    published_covered: bool
    published_disregarded: tuple[tuple[int, int], ...]

    @property
    def digit_set(self) -> DigitSet:
        return DigitSet.omit(self.omit)


TABLE1_ROWS = (
    Table1Row((1,), 8, False, ((1, 1), (2, 1))),
    Table1Row((2,), 3, True, ((3, 2),)),
    Table1Row((3,), 8, False, ((4, 3),)),
    Table1Row((4,), 3, True, ()),
    Table1Row((5,), 8, False, ((5, 5), (10, 55))),
    Table1Row((6,), 5, True, ()),
    Table1Row((7,), 10, False, ()),
    Table1Row((8,), 8, False, ((6, 8),)),
    Table1Row((2, 4), 10, False, ((3, 2),)),
    Table1Row((2, 6), 10, False, ((3, 2),)),
    Table1Row((4, 6), 10, False, ()),
)


def run_table1(max_n: int = 5, chunks: int = 1) -> list[tuple[Table1Row, ScanVerdict]]:
    """Scan every table row at ``min(row.published_n, max_n)`` digits."""
    out = []
    for row in TABLE1_ROWS:
        n = min(row.published_n, max_n)
        out.append((row, scan_digit_set(ScanConfig.build(row.digit_set, n), chunks=chunks)))
    return out
