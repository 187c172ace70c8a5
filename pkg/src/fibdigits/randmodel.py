"""Digit frequencies in Fibonacci numbers versus a random-digit null model.

The null model draws a D-digit decimal string with a leading digit uniform
on 1..9 and the other D-1 digits uniform on 0..9.  Under that model the
chance that a digit d never appears has a closed form, and summing it over
the lengths of F(1), ..., F(N) gives a Borel-Cantelli style expectation for
how many terms avoid d.  That sum is a heuristic and nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fibcore import digit_count, fib_exact, fib_stream, iter_low_digits

MAX_INDEX = 10**5
_BATCH = 1 << 18


def _check_digit(d: int) -> None:
    if not 0 <= d <= 9:
        raise ValueError(f"decimal digit expected, got {d}")


def _check_index(n: int) -> None:
    if not 1 <= n <= MAX_INDEX:
        raise ValueError(f"index {n} outside [1, {MAX_INDEX}]")


def fib_digit_length(n: int) -> int:
    """Number of decimal digits of F(n)."""
    _check_index(n)
    return digit_count(fib_exact(n))


def model_avoidance_probability(d: int, length: int) -> float:
    """Chance a random ``length``-digit numeral has no digit ``d``."""
    _check_digit(d)
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    rest = 0.9 ** (length - 1)
    return rest if d == 0 else (8 / 9) * rest


@dataclass
class FrequencyReport:
    digit: int
    N: int
    contain_count: int
    # length -> [terms of that length, terms of that length avoiding the digit]
    by_length: dict[int, list[int]] = field(default_factory=dict)
    heuristic_expected_avoiders: float = 0.0

    @property
    def contain_fraction(self) -> float:
        return self.contain_count / self.N

    def to_dict(self) -> dict:
        return {
            "digit": self.digit,
            "N": self.N,
            "contain_count": self.contain_count,
            "contain_fraction": self.contain_fraction,
            "avoid_count": self.N - self.contain_count,
            "heuristic_expected_avoiders": self.heuristic_expected_avoiders,
            "by_length": [
                {
                    "length": L,
                    "terms": terms,
                    "avoiding": avoid,
                    "model_avoidance_probability": model_avoidance_probability(self.digit, L),
                }
                for L, (terms, avoid) in sorted(self.by_length.items())
            ],
        }


def empirical_digit_frequency(N: int, d: int) -> FrequencyReport:
    """Count how many of F(1), ..., F(N) contain the decimal digit ``d``."""
    _check_index(N)
    _check_digit(d)
    report = FrequencyReport(d, N, 0)
    length, bound = 1, 10
    for k, f in fib_stream():
        if k == 0:
            continue
        if k > N:
            break
        while f >= bound:
            length += 1
            bound *= 10
        has = any(x == d for x in iter_low_digits(f))
        report.contain_count += has
        row = report.by_length.setdefault(length, [0, 0])
        row[0] += 1
        row[1] += not has
        report.heuristic_expected_avoiders += model_avoidance_probability(d, length)
    return report


@dataclass(frozen=True)
class ModelConfig:
    digit: int
    lengths: tuple[int, ...]
    trials: int
    seed: int
    workers: int = 1

    def __post_init__(self):
        _check_digit(self.digit)
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if not self.lengths or min(self.lengths) < 1:
            raise ValueError("lengths must be non-empty and positive")


def _count_avoiders(rng: np.random.Generator, d: int, length: int, trials: int) -> int:
    avoid = 0
    left = trials
    while left:
        n = min(left, _BATCH)
        ok = rng.integers(1, 10, size=n) != d
        for _ in range(length - 1):
            ok &= rng.integers(0, 10, size=n) != d
        avoid += int(ok.sum())
        left -= n
    return avoid


def simulate_avoidance(config: ModelConfig) -> dict[int, float]:
    """Monte Carlo avoidance fraction for each configured length.

    Trials are split evenly across ``config.workers`` streams.  Stream i
    for a given length uses the i-th child of ``SeedSequence([seed, length])``,
    so each result depends on the seed, the length and the worker count only.
    """
    w = config.workers
    shares = [config.trials // w + (i < config.trials % w) for i in range(w)]
    out = {}
    for length in config.lengths:
        children = np.random.SeedSequence([config.seed, length]).spawn(w)
        avoid = sum(
            _count_avoiders(np.random.default_rng(c), config.digit, length, n)
            for c, n in zip(children, shares)
            if n
        )
        out[length] = avoid / config.trials
    return out


def model_report(config: ModelConfig) -> dict:
    observed = simulate_avoidance(config)
    rows = []
    for length in config.lengths:
        p = model_avoidance_probability(config.digit, length)
        rows.append(
            {
                "length": length,
                "observed": observed[length],
                "model_probability": p,
                "sigma": (p * (1 - p) / config.trials) ** 0.5,
            }
        )
    return {
        "digit": config.digit,
        "lengths": list(config.lengths),
        "trials": config.trials,
        "seed": config.seed,
        "workers": config.workers,
        "results": rows,
    }
