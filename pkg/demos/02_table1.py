"""
Which digit sets does every Fibonacci number meet?
==================================================

If every tail F(k) mod 10**n over one period contains a digit of S, then
every Fibonacci number with at least n digits contains one too, and only the
few shorter values need checking by hand.
"""

import time

from fibdigits import DigitSet, ScanConfig, scan_digit_set
from fibdigits.digitscan import run_table1

# Leaving out 6: certified with the last five digits.
print(scan_digit_set(ScanConfig.build(DigitSet.omit([6]), 5)).to_dict())

# Leaving out 2: certified with three digits, except F(3) = 2 itself.
v = scan_digit_set(ScanConfig.build(DigitSet.omit([2]), 3))
print(v.verdict, v.exceptions)

# Leaving out 7: F(314) ends in 777, so three digits do not settle it.  No
# Fibonacci number is shown to avoid the set; the method just needs more
# digits, or cannot decide this set at all.
v = scan_digit_set(ScanConfig.build(DigitSet.omit([7]), 3))
print(v.verdict, v.witness)

# All eleven rows, each capped at five digits.
for row, verdict in run_table1(max_n=5):
    extra = verdict.witness.tail if verdict.witness else ""
    print(f"{row.digit_set.label():18} n={verdict.config.n_digits} {verdict.verdict:12} "
          f"{verdict.exceptions} {extra}")

# Deeper scans are cheap: the last eight digits take a few seconds.
t0 = time.perf_counter()
v = scan_digit_set(ScanConfig.build(DigitSet.omit([1]), 8), chunks=8)
print(v.verdict, v.witness, f"{time.perf_counter() - t0:.1f}s")
