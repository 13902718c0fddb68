"""
Three independent exact methods, one answer
===========================================

M(n, l) counts n x n symmetric non-negative integer matrices with zero
diagonal and all row sums l.  This script computes M(5, 6) three ways
and checks the answers agree.
"""

from fractions import Fraction

from symcount import (
    Instance,
    count_backtracking,
    count_crt,
    evaluate,
    interpolate_quasipolynomial,
)

inst = Instance(5, 6)

############################################################################
# Method 1: depth-first search over the upper triangle, pruning on the
# residual row sums.

bt = count_backtracking(inst)
print(f"backtracking:    M(5,6) = {bt.value}")

############################################################################
# Method 2: roots-of-unity coefficient extraction modulo several primes,
# recombined by the Chinese remainder theorem.  No floating point anywhere;
# the prime product exceeds an a-priori bound, so the answer is exact.

crt = count_crt(inst)
print(f"modular + CRT:   M(5,6) = {crt.value}")

############################################################################
# Method 3: M(5, l) is a degree-5 polynomial in l for even l (and zero for
# odd l, since 5*l must be even).  Fit the polynomial from small exact
# values, then evaluate it at l = 6.  The extra points are held out and
# checked against the fit, so a wrong polynomial cannot slip through.

values = {l: count_backtracking(Instance(5, l)).value for l in range(17)}
qp = interpolate_quasipolynomial(5, values)
ev = evaluate(qp, 6)
print(f"quasipolynomial: M(5,6) = {ev.value}")
coeffs = ", ".join(str(Fraction(c)) for c in qp.even)
print(f"  even-branch coefficients (ascending): {coeffs}")

############################################################################
# All three agree.

assert bt.value == crt.value == ev.value == 654
print("all three methods agree")
