"""Exact counts by modular coefficient extraction and CRT reconstruction.

The count for (n, l) is the coefficient of x_1^l ... x_n^l y^(n*l/2) in
prod_{j<k} f(x_j x_k y) with f(z) = 1 + z + ... + z^l.  Working mod a prime
p with both an (l+1)-th root of unity alpha and a q-th root beta, the
coefficient is picked out by averaging over root powers.  Grouping the
n-fold alpha average by the histogram r = (r_0..r_l) of chosen powers
(a composition of n into l+1 parts) gives, mod p,

    n!/(q (l+1)^n) * sum_r prod_i alpha^(i r_i)/r_i!
        * sum_{k<q} beta^(-k n l/2)
            * prod_i f(alpha^(2i) beta^k)^C(r_i,2)
            * prod_{i<j} f(alpha^(i+j) beta^k)^(r_i r_j)

valid whenever q exceeds max(n*l/2, n^2(n-1)/2 - n*l/2), which makes the
y-average isolate the single surviving total.  Independent residues mod
several primes are combined by CRT once their product clears an a-priori
bound on the count.

The composition stream is enumerated in colexicographic order by an
in-place successor, split into chunks whose boundaries are found by
combinatorial unranking; each chunk accumulates a partial sum mod p, so
any execution schedule reproduces the identical residue.  The hot loop is
JIT-compiled when numba is available; a pure-python twin of the kernel is
kept for small runs and cross-checks.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoPrimeFound, NonInvertibleDenominator
from .instance import CountValue, trivial_count

try:
    import numba
    from numba import njit, prange

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_MAX_PRIME_MULTIPLIER = 10**7
_MAX_Q_BUMPS = 64
_MAX_TABLE_BYTES = 1 << 31


# ---------------------------------------------------------------------------
# primality and multiplicative structure

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(x):
    """Deterministic Miller-Rabin for x below 3.3e24."""
    if x < 2:
        return False
    for sp in _MR_BASES:
        if x % sp == 0:
            return x == sp
    d = x - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        v = pow(a, d, x)
        if v in (1, x - 1):
            continue
        for _ in range(s - 1):
            v = v * v % x
            if v == x - 1:
                break
        else:
            return False
    return True


def _prime_factors(x):
    out = set()
    d = 2
    while d * d <= x:
        while x % d == 0:
            out.add(d)
            x //= d
        d += 1 if d == 2 else 2
    if x > 1:
        out.add(x)
    return out


def _find_generator(p):
    factors = _prime_factors(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
        g += 1


def _order_is(x, m, p):
    """Check that x has multiplicative order exactly m mod p."""
    if pow(x, m, p) != 1:
        return False
    return all(pow(x, m // f, p) != 1 for f in _prime_factors(m))


# ---------------------------------------------------------------------------
# plans

@dataclass(frozen=True)
class ModularPlan:
    n: int
    l: int
    q: int
    p: int
    alpha: int  # primitive (l+1)-th root of unity mod p
    beta: int   # primitive q-th root of unity mod p


def q_threshold(n, l):
    """The y-average modulus must exceed this for unique extraction."""
    half = n * l // 2
    return max(half, n * n * (n - 1) // 2 - half)


def apriori_bound_bits(n, l):
    """Bits of a crude count bound (independent row choices), plus guard."""
    return (math.comb(n + l - 2, l) ** n).bit_length() + 8


def plan_primes(inst, upper_bound_bits=None, force_q=None):
    """Choose q and the smallest admissible primes for CRT reconstruction.

    Returns a list of ModularPlan whose prime product exceeds
    2**upper_bound_bits.  Each prime satisfies p = 1 (mod lcm(l+1, q)) so
    that both roots of unity exist; alpha and beta are generator powers
    with their orders verified.  If some lcm admits no prime below the
    search ceiling the next q is tried (unless q was forced).
    """
    n, l = inst.n, inst.l
    if n < 3 or l < 1 or (n * l) % 2 == 1:
        raise DomainError("modular plans need n >= 3, l >= 1 and n*l even")
    if upper_bound_bits is None:
        upper_bound_bits = apriori_bound_bits(n, l)
    base_q = q_threshold(n, l) + 1
    if force_q is not None:
        if force_q < base_q:
            raise DomainError(f"forced q={force_q} below admissible minimum {base_q}")
        q_candidates = [force_q]
    else:
        q_candidates = range(base_q, base_q + _MAX_Q_BUMPS)

    for q in q_candidates:
        modulus = math.lcm(l + 1, q)
        plans = []
        product = 1
        for mult in range(1, _MAX_PRIME_MULTIPLIER):
            p = mult * modulus + 1
            if p <= n or not is_prime(p):
                continue
            g = _find_generator(p)
            alpha = pow(g, (p - 1) // (l + 1), p)
            beta = pow(g, (p - 1) // q, p)
            if not (_order_is(alpha, l + 1, p) and _order_is(beta, q, p)):
                raise NonInvertibleDenominator(f"root construction failed for p={p}")
            plans.append(ModularPlan(n, l, q, p, alpha, beta))
            product *= p
            if product.bit_length() > upper_bound_bits:
                return plans
        # fell through: no prime small enough for this q
        if force_q is not None:
            raise NoPrimeFound(f"no prime p = 1 mod {modulus} below ceiling")
    raise NoPrimeFound(f"no admissible (q, p) found for n={n}, l={l}")


# ---------------------------------------------------------------------------
# composition stream: colex successor, unranking, chunk boundaries

def composition_count(n, parts):
    return math.comb(n + parts - 1, parts - 1)


def composition_stream(n, parts):
    """Yield all compositions of n into `parts` parts, colex on the tail."""
    r = [n] + [0] * (parts - 1)
    while True:
        yield tuple(r)
        i = 0
        while r[i] == 0:
            i += 1
        if i == parts - 1:
            return
        v = r[i]
        r[i] = 0
        r[i + 1] += 1
        r[0] = v - 1


def unrank_composition(n, parts, rank):
    """The rank-th composition (0-based) in composition_stream order."""
    if not 0 <= rank < composition_count(n, parts):
        raise DomainError("composition rank out of range")
    tail = [0] * (parts - 1)
    remaining = rank
    fixed = 0  # sum of tail coordinates already chosen (to the right)
    for j in range(parts - 1, 0, -1):
        v = 0
        while True:
            free = n - fixed - v
            block = math.comb(free + j - 1, j - 1) if free >= 0 else 0
            if remaining < block:
                break
            remaining -= block
            v += 1
        tail[j - 1] = v
        fixed += v
    return [n - fixed] + tail


def _chunk_boundaries(total, chunks):
    chunks = max(1, min(chunks, total))
    base, extra = divmod(total, chunks)
    sizes = [base + (1 if i < extra else 0) for i in range(chunks)]
    offsets = [0]
    for s in sizes[:-1]:
        offsets.append(offsets[-1] + s)
    return offsets, sizes


# ---------------------------------------------------------------------------
# kernels: given precomputed tables, accumulate the composition sum mod p

def _python_kernel(starts, counts, P, BNEG, alpha_pow, inv_fact, n, m, q, p):
    """Reference implementation of the chunked composition sum."""
    partials = []
    E = [0] * m
    for t in range(len(counts)):
        r = list(starts[t])
        acc = 0
        for _ in range(counts[t]):
            supp = [i for i in range(m) if r[i] > 0]
            sig = 0
            c = 1
            for i in supp:
                sig += i * r[i]
                c = c * inv_fact[r[i]] % p
            c = c * alpha_pow[sig % m] % p
            for a in range(m):
                E[a] = 0
            for x, i in enumerate(supp):
                ri = r[i]
                E[(2 * i) % m] += ri * (ri - 1) // 2
                for j in supp[x + 1:]:
                    E[(i + j) % m] += ri * r[j]
            w = list(BNEG)
            for a in range(m):
                e = E[a]
                if e > 0:
                    row = P[a][e]
                    for k in range(q):
                        w[k] = w[k] * row[k] % p
            acc = (acc + c * (sum(w) % p)) % p
            # colex successor
            i = 0
            while r[i] == 0:
                i += 1
            if i == m - 1:
                break
            v = r[i]
            r[i] = 0
            r[i + 1] += 1
            r[0] = v - 1
        partials.append(acc)
    return partials


if HAVE_NUMBA:

    @njit(cache=True, parallel=True)
    def _numba_kernel(starts, counts, P, BNEG, alpha_pow, inv_fact, n, m, q, p):
        T = counts.shape[0]
        partials = np.zeros(T, dtype=np.int64)
        for t in prange(T):
            r = starts[t].copy()
            E = np.zeros(m, dtype=np.int64)
            supp = np.zeros(m, dtype=np.int64)
            w = np.zeros(q, dtype=np.int64)
            acc = np.int64(0)
            for _step in range(counts[t]):
                ns = 0
                sig = np.int64(0)
                c = np.int64(1)
                for i in range(m):
                    if r[i] > 0:
                        supp[ns] = i
                        ns += 1
                        sig += i * r[i]
                        c = c * inv_fact[r[i]] % p
                c = c * alpha_pow[sig % m] % p
                for a in range(m):
                    E[a] = 0
                for x in range(ns):
                    i = supp[x]
                    ri = r[i]
                    E[(2 * i) % m] += ri * (ri - 1) // 2
                    for y in range(x + 1, ns):
                        j = supp[y]
                        E[(i + j) % m] += ri * r[j]
                # sweep the k-axis once per active exponent; contiguous reads
                for k in range(q):
                    w[k] = BNEG[k]
                for a in range(m):
                    e = E[a]
                    if e > 0:
                        row = P[a, e]
                        for k in range(q):
                            w[k] = w[k] * row[k] % p
                tsum = np.int64(0)
                for k in range(q):
                    tsum += w[k]  # q*p stays far below 2^63
                acc = (acc + c * (tsum % p)) % p
                i = 0
                while r[i] == 0:
                    i += 1
                if i == m - 1:
                    break
                v = r[i]
                r[i] = 0
                r[i + 1] += 1
                r[0] = v - 1
            partials[t] = acc
        return partials


def _build_tables(plan):
    """Power tables for the kernel: f-values and their small powers."""
    n, l, q, p = plan.n, plan.l, plan.q, plan.p
    m = l + 1
    alpha_pow = [1] * m
    for j in range(1, m):
        alpha_pow[j] = alpha_pow[j - 1] * plan.alpha % p
    beta_pow = [1] * q
    for j in range(1, q):
        beta_pow[j] = beta_pow[j - 1] * plan.beta % p

    # F[a][k] = f(alpha^a beta^k) where f(z) = (z^(l+1) - 1)/(z - 1), with
    # z^(l+1) = beta^(k(l+1)) because alpha^(l+1) = 1.
    F = np.zeros((m, q), dtype=np.int64)
    for a in range(m):
        za = alpha_pow[a]
        for k in range(q):
            z = za * beta_pow[k] % p
            if z == 1:
                F[a, k] = m % p
            else:
                top = (beta_pow[k * m % q] - 1) % p
                F[a, k] = top * pow(z - 1, p - 2, p) % p

    emax = n * (n - 1) // 2
    if (m * (emax + 1) * q) * 8 > _MAX_TABLE_BYTES:
        raise DomainError("power table would exceed the memory ceiling")
    P = np.ones((m, emax + 1, q), dtype=np.int64)
    for e in range(1, emax + 1):
        P[:, e, :] = P[:, e - 1, :] * F % p

    half = n * l // 2
    BNEG = np.array(
        [beta_pow[(-k * half) % q] for k in range(q)], dtype=np.int64
    )
    inv_fact = [1] * (n + 1)
    fact = 1
    for v in range(1, n + 1):
        fact = fact * v % p
    fact_inv = pow(fact, p - 2, p)
    acc = fact_inv
    for v in range(n, 0, -1):
        inv_fact[v] = acc
        acc = acc * v % p
    # acc is now 1/0! = 1
    alpha_pow = np.array(alpha_pow, dtype=np.int64)
    inv_fact = np.array(inv_fact, dtype=np.int64)
    return P, BNEG, alpha_pow, inv_fact


def count_mod_p(inst, plan, threads=1, force_python=False):
    """Residue of the count mod plan.p by the composition/root-power sum.

    `threads` fixes the number of stream chunks (and caps the JIT thread
    pool); the result is bit-for-bit independent of it because chunk
    partials are exact values mod p.
    """
    n, l = inst.n, inst.l
    if (plan.n, plan.l) != (n, l):
        raise DomainError("plan built for a different instance")
    p, q = plan.p, plan.q
    m = l + 1
    if p <= n or math.gcd(p, q * m) != 1:
        raise NonInvertibleDenominator(
            f"p={p} cannot invert n!, q or (l+1)^n"
        )
    P, BNEG, alpha_pow, inv_fact = _build_tables(plan)

    total = composition_count(n, m)
    offsets, sizes = _chunk_boundaries(total, threads)
    starts = np.array(
        [unrank_composition(n, m, off) for off in offsets], dtype=np.int64
    )
    counts = np.array(sizes, dtype=np.int64)

    use_jit = HAVE_NUMBA and not force_python and p < (1 << 31)
    if use_jit:
        numba.set_num_threads(
            max(1, min(threads, numba.config.NUMBA_NUM_THREADS))
        )
        partials = _numba_kernel(
            starts, counts, P, BNEG, alpha_pow, inv_fact, n, m, q, p
        )
    else:
        partials = _python_kernel(
            starts.tolist(), counts.tolist(), P.tolist(), BNEG.tolist(),
            alpha_pow.tolist(), inv_fact.tolist(), n, m, q, p,
        )
    sigma = sum(int(x) for x in partials) % p

    const = math.factorial(n) % p
    const = const * pow(q, p - 2, p) % p
    const = const * pow(pow(m, n, p), p - 2, p) % p
    return sigma * const % p


def crt_combine(residues, moduli):
    """Single integer in [0, prod moduli) matching every residue."""
    value, modulus = 0, 1
    for r, p in zip(residues, moduli):
        # value + t*modulus = r (mod p)
        t = (r - value) * pow(modulus % p, p - 2, p) % p
        value += t * modulus
        modulus *= p
    return value % modulus


def count_crt(inst, threads=1, force_q=None, plans=None, force_python=False):
    """Exact count: residues mod each planned prime, CRT-combined.

    The prime product exceeds an a-priori bound on the count, so the CRT
    representative below the product is the exact integer.
    """
    known = trivial_count(inst)
    if known is not None:
        return CountValue(inst.n, inst.l, known, "modular_crt")
    if plans is None:
        plans = plan_primes(inst, force_q=force_q)
    residues = [
        count_mod_p(inst, plan, threads=threads, force_python=force_python)
        for plan in plans
    ]
    value = crt_combine(residues, [plan.p for plan in plans])
    return CountValue(inst.n, inst.l, value, "modular_crt")
