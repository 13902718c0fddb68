"""
Inside the modular counting pipeline
====================================

The big-integer count is assembled from residues modulo small primes.
This script shows the moving parts for M(6, 4): the (q, p, alpha, beta)
plans, the per-prime residues, and the CRT reconstruction.
"""

from symcount import Instance, count_backtracking, plan_primes
from symcount.modular import apriori_bound_bits, count_mod_p, crt_combine

inst = Instance(6, 4)

############################################################################
# The count is the coefficient of x_1^l ... x_n^l y^(n l/2) in
# prod_{j<k} f(x_j x_k y), f(z) = 1 + z + ... + z^l.  Modulo a prime p
# containing an (l+1)-th root of unity alpha and a q-th root beta, that
# coefficient is an average over root powers.  q must exceed
# max(n l/2, n^2(n-1)/2 - n l/2) so the y-average isolates one term, and
# p = 1 (mod lcm(l+1, q)) so both roots exist.

bits = apriori_bound_bits(inst.n, inst.l)
plans = plan_primes(inst)
print(f"a-priori bound: count < 2^{bits}")
for plan in plans:
    print(f"  plan: q={plan.q}  p={plan.p}  alpha={plan.alpha}  beta={plan.beta}")

############################################################################
# Each prime yields one residue.  Chunked composition streaming makes the
# residue independent of the execution schedule, so runs are reproducible
# to the bit.

residues = [count_mod_p(inst, plan) for plan in plans]
for plan, r in zip(plans, residues):
    print(f"  M(6,4) = {r} (mod {plan.p})")

############################################################################
# The prime product exceeds the bound, so the CRT representative is the
# exact integer, confirmed against plain backtracking.

value = crt_combine(residues, [plan.p for plan in plans])
exact = count_backtracking(inst).value
print(f"CRT reconstruction: {value}")
print(f"backtracking:       {exact}")
assert value == exact
print("reconstruction verified")
