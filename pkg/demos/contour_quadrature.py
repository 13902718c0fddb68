"""
Counting by contour integral
============================

M(n, l) is a Cauchy coefficient integral of prod_{j<k} (1 - x_j x_k)^(-1)
over n circles of radius r = sqrt(lam/(1+lam)).  On a uniform grid the
trapezoidal rule is a discrete roots-of-unity filter, so its error is a
geometric tail controlled by r^N.  At n <= 4 the full grid sum is cheap
and reproduces the exact integers.
"""

import numpy as np

from symcount import (
    Instance,
    IntegrandParams,
    aliasing_bound,
    count_by_quadrature,
    count_cached,
    integrand_F,
    integrand_magnitude,
)

############################################################################
# Quadrature versus exact for every feasible instance with n in {3, 4}
# and l <= 4.

print(f"{'n':>3} {'l':>3} {'N':>4} {'quadrature':>22} {'bound':>10} {'exact':>6}")
for n in (3, 4):
    for l in range(1, 5):
        if (n * l) % 2:
            continue
        params = IntegrandParams(n, l)
        value = count_by_quadrature(params, tolerance=1e-4)
        exact = count_cached(Instance(n, l)).value
        bound = aliasing_bound(params, max(64, 8 * (l + 1)))
        print(f"{n:>3} {l:>3} {64:>4} {value:>22.15f} {bound:>10.2e} {exact:>6}")
        assert round(value) == exact

############################################################################
# The integrand magnitude factorizes over pairs:
# |F(theta)| = prod_{j<k} (1 + 4 A2 (1 - cos(theta_j + theta_k)))^(-1/2),
# with A2 = lam(1+lam)/2.  Spot-check at random points.

rng = np.random.default_rng(0)
params = IntegrandParams(4, 3)
worst = 0.0
for _ in range(200):
    theta = rng.uniform(-np.pi, np.pi, 4)
    direct = abs(integrand_F(params, theta))
    factored = integrand_magnitude(params, theta)
    worst = max(worst, abs(direct - factored) / factored)
print(f"worst relative factorization error over 200 points: {worst:.2e}")
assert worst < 1e-12
