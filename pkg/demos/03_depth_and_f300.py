"""
How far from the right does {1, 2, 3, 5, 8} first show up?
==========================================================

Small Fibonacci numbers meet the set within the last three digits, until
F(21) = 10946 pushes that to five.  F(300) needs twenty.
"""

from fibdigits import DigitSet, fib_exact, max_depth_survey, rightmost_hit_depth

S = DigitSet.of([1, 2, 3, 5, 8])

print(fib_exact(21), rightmost_hit_depth(fib_exact(21), S))
f300 = str(fib_exact(300))
print(f300[:-19], f300[-19:], rightmost_hit_depth(fib_exact(300), S))

survey = max_depth_survey(20_000, S)
for record in survey.records:
    print(f"F({record.index}) first meets the set {record.depth} digits from the right")
print("indices with no digit of the set at all:", survey.no_hit)
