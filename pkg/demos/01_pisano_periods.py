"""
Pisano periods
==============

Fibonacci numbers reduced modulo m repeat.  Pigeonhole caps the period at
m*m + 1, but in practice it is far smaller.
"""

from fibdigits import pisano_period, pisano_table, residue_set
from fibdigits.pisano import pisano_csv

# The last digit repeats every 60 terms, the last two every 300.
print(pisano_period(10), pisano_period(100))

# Powers of 2 and of 3: 3, 6, 12 and 8, 24, 72 -- does the pattern continue?
for prime in (2, 3, 5, 7):
    periods = [r.period for r in pisano_table([prime**k for k in range(1, 7)])]
    print(prime, periods, [b // a for a, b in zip(periods, periods[1:])])

# The last n >= 3 digits repeat every 15 * 10**(n-1) terms.
for n in range(1, 6):
    print(n, pisano_period(10**n).period)

# Not every residue is reached.  Mod 32, these never occur:
rs = residue_set(32)
print("never hit mod 32:", [r for r in range(32) if r not in rs])

# Spreadsheet-friendly export.
print(pisano_csv(pisano_table(range(2, 13))))
