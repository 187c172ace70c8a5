"""
No Fibonacci number is 666...6
==============================

Every repdigit of 6 with five or more digits is 10 mod 32, and no Fibonacci
number is 10 mod 32.  The same trick, with other prime powers, settles some
other digits too.
"""

from fibdigits import find_repdigit_proof, prove_repdigit_impossible

print(prove_repdigit_impossible(6, 2, 5).transcript())
print()

# Smallest prime power that works for each digit, if any (p in {2, 5}, k <= 20).
for d in range(1, 10):
    proof = find_repdigit_proof(d, max_power=12)
    if proof is None:
        print(d, "no residue-exclusion proof found up to the cap")
    else:
        print(d, f"mod {proof.prime}^{proof.power}", "Fibonacci repdigits:", proof.fibonacci_repdigits)
