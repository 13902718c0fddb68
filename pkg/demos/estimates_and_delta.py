"""
Closed-form estimates against exact counts
==========================================

Two asymptotically equivalent closed forms estimate M(n, l): a
saddle-point form and a binomial form.  The binomial form is the naive
independence-model value times sqrt(2) e^(3/4) ~= 2.9939.  The refined
statistic Delta(n, l), conjectured to stay in (-1, 1) for n >= 5, l >= 1,
measures what is left after the next correction term.
"""

import mpmath

from symcount import (
    Instance,
    conjecture_delta,
    count_backtracking,
    estimate_binomial_form,
    estimate_naive,
    estimate_saddle_form,
)

mpmath.mp.dps = 30

############################################################################
# The constant relating the naive model to the truth.

print("sqrt(2) e^(3/4) =", mpmath.nstr(mpmath.sqrt(2) * mpmath.exp(mpmath.mpf(3) / 4), 8))

############################################################################
# Exact versus estimated, across a sweep of instances.  The ratio
# exact/binomial-estimate hovers near 1 and the log-gap between the two
# displayed forms shrinks as n grows.

print(f"{'n':>3} {'l':>4} {'exact':>14} {'exact/binomial':>15} {'Delta':>10}")
for n, l in [(5, 4), (5, 8), (6, 4), (6, 6), (7, 2), (7, 4), (8, 2), (8, 3)]:
    inst = Instance(n, l)
    exact = count_backtracking(inst)
    est = estimate_binomial_form(inst)
    ratio = mpmath.mpf(exact.value) / mpmath.exp(est.log_value)
    delta = conjecture_delta(inst, exact).delta
    print(
        f"{n:>3} {l:>4} {exact.value:>14} "
        f"{mpmath.nstr(ratio, 6):>15} {mpmath.nstr(delta, 6):>10}"
    )

############################################################################
# The naive estimate differs from the binomial form by exactly
# (1/2) ln 2 + 3/4 in log, by construction.

inst = Instance(9, 20)
gap = estimate_binomial_form(inst).log_value - estimate_naive(inst).log_value
print("binomial - naive log gap:", mpmath.nstr(gap, 12))
print("(1/2) ln 2 + 3/4       =", mpmath.nstr(mpmath.log(2) / 2 + mpmath.mpf(3) / 4, 12))

############################################################################
# The two displayed forms converge to each other as n grows at fixed
# density lambda = 2.

for n in (50, 100, 200):
    inst = Instance(n, 2 * (n - 1))
    d = abs(estimate_saddle_form(inst).log_value - estimate_binomial_form(inst).log_value)
    print(f"|saddle - binomial| at n={n}, lambda=2: {mpmath.nstr(d, 4)}")
