"""
Fibonacci digits against random digits
======================================

Treat F(n) as a random numeral of the same length.  The chance it misses a
digit d falls geometrically with length, so the expected number of misses
over all n is finite.  That is a heuristic, not a proof.
"""

from fibdigits import ModelConfig, empirical_digit_frequency, model_avoidance_probability, simulate_avoidance

for d in range(10):
    report = empirical_digit_frequency(5000, d)
    print(d, report.N - report.contain_count, round(report.heuristic_expected_avoiders, 2))

# Terms without a 6 among the first 5000, as length -> [terms, avoiders].
report = empirical_digit_frequency(5000, 6)
print({L: c for L, c in sorted(report.by_length.items()) if c[1]})

config = ModelConfig(6, (1, 5, 19), trials=200_000, seed=7)
for length, observed in simulate_avoidance(config).items():
    print(length, observed, model_avoidance_probability(6, length))
