"""
The minimum entry of a random matrix
====================================

Draw a matrix uniformly from those counted by M(n, l).  Subtracting k
from every off-diagonal entry biject matrices with minimum entry >= k
onto those with row sums l - (n-1)k, so

    Prob(min >= k) = M(n, l - (n-1)k) / M(n, l),

an exact rational number.  For large n the law approaches e^(-a/2) with
a = k n^3 / l.
"""

from symcount import Instance, min_entry_prob_asymptotic, min_entry_prob_exact

############################################################################
# Exact tail probabilities for (n, l) = (5, 8): monotone in k, hitting
# exactly zero once the subtracted matrix would need negative row sums.

inst = Instance(5, 8)
print("(n, l) = (5, 8)")
for k in range(4):
    p = min_entry_prob_exact(inst, k)
    print(f"  Prob(min >= {k}) = {p}")

############################################################################
# Exact versus asymptotic in a small-a regime: n = 6, l = 2160 gives
# a = k n^3 / l = 0.1 at k = 1.  The counts come from the degree-9
# branch polynomial, so no search is involved.

inst = Instance(6, 2160)
exact = min_entry_prob_exact(inst, 1)
asym = min_entry_prob_asymptotic(inst, 1)
rel = abs(float(exact) - asym) / float(exact)
print(f"(n, l) = (6, 2160), k = 1:")
print(f"  exact      = {float(exact):.6f}")
print(f"  e^(-a/2)   = {asym:.6f}")
print(f"  rel. error = {rel:.2%}")
assert rel < 0.2
