"""Contour-integral representation of the count, checked by quadrature.

The generating function prod_{j<k} (1 - x_j x_k)^(-1) has M(n,l) as its
coefficient of x_1^l ... x_n^l.  Extracting that coefficient by Cauchy's
formula on circles x_j = r e^(i theta_j) of radius r = sqrt(lam/(1+lam))
gives

  M(n,l) = (2 pi)^(-n) (lam^(-lam) (1+lam)^(1+lam))^C(n,2) * I,
  I      = int_{[-pi,pi]^n} F(theta) d theta,
  F      = prod_{j<k} (1 - lam(e^(i(theta_j+theta_k)) - 1))^(-1)
           * e^(-i l sum_j theta_j).

Each factor satisfies |1 - lam(e^(iz)-1)|^2 = 1 + 4 A2 (1 - cos z) with
A2 = lam(1+lam)/2, so the integrand magnitude factorizes as
|F| = prod_{j<k} f(theta_j + theta_k), f(z) = (1 + 4 A2 (1-cos z))^(-1/2).

On the uniform N^n grid the equal-weight (trapezoidal) rule is exact for
every Fourier mode except those aliased to zero, so the quadrature value
equals sum over all symmetric matrices whose row sums are congruent to l
mod N, weighted r^(total excess).  With N > l every spurious matrix has
row sums s_j = l + N m_j, m_j >= 0 not all zero, and the error is at most

  sum_{m != 0, feasible} prod_j C(s_j + n - 2, n - 2) * r^(N sum_j m_j),

where feasible requires sum_j s_j even and max_j s_j <= sum of the
others (no symmetric matrix exists otherwise).  The binomial counts the
relaxation to independent rows.  This geometric tail in r^N is the
reported aliasing bound.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GridTooCoarse, PoleProximity

_POLE_EPS = 1e-12


@dataclass(frozen=True)
class IntegrandParams:
    n: int
    l: int
    lam: float = field(init=False)
    r: float = field(init=False)
    A2: float = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("integrand needs n >= 2")
        if self.l < 1:
            raise DomainError("integrand needs l >= 1 (l = 0 is degenerate)")
        lam = self.l / (self.n - 1)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "r", math.sqrt(lam / (1 + lam)))
        object.__setattr__(self, "A2", lam * (1 + lam) / 2)


def integrand_F(params, theta):
    """F(theta) as a complex number; theta is a length-n real vector."""
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (params.n,):
        raise DomainError(f"theta must have length n = {params.n}")
    lam = params.lam
    value = complex(np.exp(-1j * params.l * theta.sum()))
    for j in range(params.n):
        for k in range(j + 1, params.n):
            den = 1 - lam * (np.exp(1j * (theta[j] + theta[k])) - 1)
            if abs(den) < _POLE_EPS:
                raise PoleProximity(
                    f"denominator modulus {abs(den)} at pair ({j},{k})"
                )
            value /= den
    return value


def magnitude_factor(params, z):
    """f(z) = (1 + 4 A2 (1 - cos z))^(-1/2), one pair's magnitude."""
    return (1 + 4 * params.A2 * (1 - math.cos(z))) ** -0.5


def integrand_magnitude(params, theta):
    """|F(theta)| via the pairwise factorization."""
    theta = np.asarray(theta, dtype=float)
    out = 1.0
    for j in range(params.n):
        for k in range(j + 1, params.n):
            out *= magnitude_factor(params, theta[j] + theta[k])
    return out


def default_grid(params):
    return max(64, 8 * (params.l + 1))


def aliasing_bound(params, grid_points_per_dim):
    """Upper bound on |quadrature - M(n,l)| from aliased coefficients."""
    n, l, r = params.n, params.l, params.r
    N = grid_points_per_dim
    if N <= l:
        raise GridTooCoarse(f"grid N={N} must exceed l={l}")
    log_r = math.log(r)

    def product_bound(ms):
        s = [l + N * m for m in ms]
        if sum(s) % 2:
            return 0.0
        if 2 * max(s) > sum(s):
            return 0.0
        log_term = N * sum(ms) * log_r
        for sj in s:
            log_term += math.log(math.comb(sj + n - 2, n - 2))
        return math.exp(log_term)

    total = 0.0
    t = 1
    while True:
        shell = sum(
            product_bound(ms)
            for ms in itertools.product(range(t + 1), repeat=n)
            if sum(ms) == t
        )
        # crude ceiling for the same shell, used as the stopping ratio
        crude = (
            math.comb(t + n - 1, n - 1)
            * math.exp(
                n * math.log(math.comb(l + N * t + n - 2, n - 2))
                + N * t * log_r
            )
        )
        total += shell
        if crude < 1e-12 * max(total, 1e-300) or crude < 1e-300:
            break
        t += 1
        if t > 64:
            raise GridTooCoarse(
                f"aliasing tail does not collapse for N={N}; increase the grid"
            )
    return total


def _pair_matrix(params, N):
    """G[a,b] = one pair factor at theta_a + theta_b, plus phases w."""
    theta = -np.pi + 2 * np.pi * np.arange(N) / N
    lam = params.lam
    G = 1.0 / (1 - lam * (np.exp(1j * np.add.outer(theta, theta)) - 1))
    w = np.exp(-1j * params.l * theta)
    return G, w


def count_by_quadrature(params, grid_points_per_dim=None, tolerance=1e-6):
    """Trapezoidal value of the contour integral; approximates M(n,l).

    The n-fold grid sum is accumulated one outer-coordinate slice at a
    time, in index order, so the result is reproducible.  Raises
    GridTooCoarse when the aliasing bound exceeds `tolerance`.
    """
    if params.n not in (3, 4):
        raise DomainError("full quadrature is supported for n in {3, 4}")
    N = default_grid(params) if grid_points_per_dim is None else grid_points_per_dim
    if N < 4 * (params.l + 1):
        raise DomainError(f"grid N={N} below the minimum 4(l+1) = {4*(params.l+1)}")
    if N % 2:
        raise DomainError("grid size must be even")
    bound = aliasing_bound(params, N)
    if bound > tolerance:
        raise GridTooCoarse(
            f"aliasing bound {bound:.3e} exceeds tolerance {tolerance:.1e} "
            f"at N={N}"
        )
    G, w = _pair_matrix(params, N)
    if params.n == 3:
        P2 = G * np.multiply.outer(w, w)
        S = 0j
        for a in range(N):
            v = G[a]
            S += w[a] * (v @ P2 @ v)
    else:
        P3 = (
            np.einsum("bc,bd,cd->bcd", G, G, G)
            * np.multiply.outer(np.multiply.outer(w, w), w)
        )
        S = 0j
        for a in range(N):
            v = G[a]
            t1 = np.tensordot(v, P3, axes=(0, 0))
            S += w[a] * (v @ t1 @ v)
    lam = params.lam
    prefactor = (lam**-lam * (1 + lam) ** (1 + lam)) ** math.comb(params.n, 2)
    value = prefactor * S / N**params.n
    if abs(value.imag) > 1e-8 * (1 + abs(value.real)):
        raise GridTooCoarse(
            f"imaginary residue {value.imag:.3e} in the quadrature sum"
        )
    return float(value.real)
