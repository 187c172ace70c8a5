"""Residue-exclusion proofs that a digit's repdigits are not Fibonacci numbers.

For a prime p dividing the base B, B**k is 0 mod p**k, so every repdigit
d d ... d with at least k digits leaves the same residue r modulo p**k.  If
the Fibonacci sequence never reaches r mod p**k, no long repdigit of d is
a Fibonacci number, and only the k-1 short ones remain to be checked.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .fibcore import check_base
from .pisano import MAX_RESIDUE_SET_MODULUS, pisano_period, residue_set

MAX_SEARCH_POWER = 20


def repdigit_value(d: int, length: int, base: int = 10) -> int:
    """The numeral made of ``length`` copies of digit ``d``.

    >>> repdigit_value(6, 5)
    66666
    """
    check_base(base)
    if not 1 <= d < base:
        raise ValueError(f"repdigit digit must be in 1..{base - 1}, got {d}")
    if length < 1:
        raise ValueError(f"repdigit length must be positive, got {length}")
    return d * (base**length - 1) // (base - 1)


def is_fibonacci(x: int) -> tuple[bool, int | None]:
    """Return ``(True, n)`` if x == F(n), else ``(False, None)``.

    Works by generating the sequence until it reaches x.  For x == 1 the
    index reported is 1 (F(1) = F(2) = 1).
    """
    if x < 0:
        return False, None
    a, b, n = 0, 1, 0
    while a < x:
        a, b = b, a + b
        n += 1
    return (True, n) if a == x else (False, None)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ShortCase:
    length: int
    value: int
    is_fibonacci: bool
    index: int | None


@dataclass(frozen=True)
class RepdigitProof:
    digit: int
    base: int
    prime: int
    power: int
    modulus: int
    period: int
    excluded_residue: int
    long_case_excluded: bool
    short_cases: tuple[ShortCase, ...]

    @property
    def conclusive(self) -> bool:
        return self.long_case_excluded

    @property
    def fibonacci_repdigits(self) -> list[int]:
        """Fibonacci repdigits of the digit; complete only when conclusive."""
        return [c.value for c in self.short_cases if c.is_fibonacci]

    def to_dict(self) -> dict:
        out = asdict(self)
        out["short_cases"] = [
            {"length": c.length, "value": str(c.value), "is_fibonacci": c.is_fibonacci, "index": c.index}
            for c in self.short_cases
        ]
        out["conclusive"] = self.conclusive
        out["fibonacci_repdigits"] = [str(v) for v in self.fibonacci_repdigits]
        return out

    def transcript(self) -> str:
        d, m, r, k = self.digit, self.modulus, self.excluded_residue, self.power
        base_note = "" if self.base == 10 else f" in base {self.base}"
        lines = [
            f"Modulus {self.prime}^{k} = {m}; Fibonacci numbers mod {m} repeat with period {self.period}.",
            f"Any repdigit of {d}{base_note} with {k} or more digits is {r} mod {m}.",
        ]
        if not self.long_case_excluded:
            lines.append(f"Residue {r} is attained by F(n) mod {m}, so this modulus proves nothing.")
            return "\n".join(lines)
        lines.append(f"No Fibonacci number is {r} mod {m} across a full period, so none of those is Fibonacci.")
        if self.short_cases:
            cand = ", ".join(str(c.value) for c in self.short_cases)
            lines.append(f"Shorter candidates: {cand}.")
            for c in self.short_cases:
                if c.is_fibonacci:
                    lines.append(f"  {c.value} = F({c.index})")
        hits = self.fibonacci_repdigits
        if hits:
            lines.append(f"Fibonacci repdigits of {d}: {', '.join(map(str, hits))}; there are no others.")
        else:
            lines.append(f"None of them is Fibonacci: no Fibonacci number uses only the digit {d}.")
        return "\n".join(lines)


def prove_repdigit_impossible(d: int, p: int, k: int, base: int = 10) -> RepdigitProof:
    """Attempt the residue-exclusion argument for digit ``d`` modulo ``p**k``.

    Bad inputs raise ValueError.  A modulus that simply fails to exclude the
    residue is not an error; the returned proof has ``conclusive`` False.
    """
    check_base(base)
    if not 1 <= d < base:
        raise ValueError(f"digit must be in 1..{base - 1}, got {d}")
    if not _is_prime(p) or base % p:
        raise ValueError(f"{p} is not a prime dividing base {base}")
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    m = p**k
    if m < 2 or m > MAX_RESIDUE_SET_MODULUS:
        raise ValueError(f"modulus {p}^{k} outside residue-set range")
    r = repdigit_value(d, k, base) % m
    excluded = r not in residue_set(m)
    short = []
    for length in range(1, k):
        v = repdigit_value(d, length, base)
        ok, idx = is_fibonacci(v)
        short.append(ShortCase(length, v, ok, idx))
    return RepdigitProof(
        digit=d,
        base=base,
        prime=p,
        power=k,
        modulus=m,
        period=pisano_period(m).period,
        excluded_residue=r,
        long_case_excluded=excluded,
        short_cases=tuple(short),
    )


def find_repdigit_proof(d: int, base: int = 10, max_power: int = MAX_SEARCH_POWER) -> RepdigitProof | None:
    """Search prime powers p**k (p | base, k ascending) for a conclusive proof.

    For each k the primes of the base are tried smallest first.  Returns
    None when nothing up to ``max_power`` works.
    """
    primes = prime_factors(check_base(base))
    for k in range(1, max_power + 1):
        for p in primes:
            if p**k > MAX_RESIDUE_SET_MODULUS:
                continue
            proof = prove_repdigit_impossible(d, p, k, base)
            if proof.conclusive:
                return proof
    return None
