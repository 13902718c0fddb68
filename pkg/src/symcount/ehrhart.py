"""Quasipolynomial structure of the counting function in l.

For fixed n >= 3 the counts agree with one polynomial of degree
d = n(n-3)/2 in l for even l and another for odd l (identically zero for
odd n, where odd l makes the total degree odd).  The generating function
sum_l M(n,l) z^l is rational with denominator (1-z^2)^(d+1) and a
numerator with non-negative integer coefficients.  Expanding the
denominator binomially turns each parity class into the basis form

    M(n, 2s + c) = sum_{i=0}^{d} h_i * C(s - i + d, d),   c in {0, 1},

where the h_i are exactly the parity-c numerator coefficients; at the
consecutive points s = 0..d the system is lower-triangular with unit
diagonal, so the h_i are integers whenever the counts are, and their
non-negativity is a structural property that the code asserts.

The counts are dilation counts of the polytope of symmetric non-negative
matrices with zero diagonal and unit row sums.  Its vertices are the
half-integral matrices assembled from a spanning family of disjoint
single edges (entry 1) and odd cycles (entries 1/2); the affine span of
the vertex set has dimension d, which `vertex_affine_rank` verifies.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    InsufficientPoints,
    NegativeEntry,
    NonIntegerValue,
    NonPolynomialData,
    TrailingNonzero,
)
from .instance import CountValue


def branch_degree(n):
    """Degree d = n(n-3)/2 of each parity branch (n >= 3)."""
    if n < 3:
        raise DomainError("branch structure needs n >= 3")
    return n * (n - 3) // 2


@dataclass(frozen=True)
class Quasipolynomial2:
    """Period-2 quasipolynomial: one coefficient vector per parity.

    Coefficients are ascending (index = power of l), exact Fractions,
    length d+1.  The odd branch is all zeros when n is odd.
    """

    n: int
    even: tuple
    odd: tuple


@dataclass(frozen=True)
class EhrhartSeries:
    """Numerator of sum_l M(n,l) z^l over (1-z^2)^denominator_power."""

    n: int
    numerator: tuple
    denominator_power: int


@dataclass(frozen=True)
class HVector:
    n: int
    parity: str  # "even" or "odd"
    entries: tuple

    def predict(self, l):
        """Count reproduced from the binomial basis at row-sum l."""
        c = 0 if self.parity == "even" else 1
        if l % 2 != c:
            raise DomainError(f"l={l} has the wrong parity for this vector")
        s = (l - c) // 2
        d = len(self.entries) - 1
        return sum(
            h * _comb0(s - i + d, d) for i, h in enumerate(self.entries)
        )


def _comb0(a, b):
    """Binomial with the combinatorial convention: zero for a < b."""
    return math.comb(a, b) if a >= b else 0


# ---------------------------------------------------------------------------
# interpolation

def _newton_monomial(points):
    """Exact interpolating polynomial through (x, y) points, ascending."""
    xs = [Fraction(x) for x, _ in points]
    dd = [Fraction(y) for _, y in points]
    for j in range(1, len(xs)):
        for i in range(len(xs) - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * len(xs)
    basis = [Fraction(1)]  # prod_{t<j} (x - x_t), ascending coefficients
    for j, c in enumerate(dd):
        for t, a in enumerate(basis):
            poly[t] += c * a
        if j + 1 < len(xs):
            nxt = [Fraction(0)] * (len(basis) + 1)
            for t, a in enumerate(basis):
                nxt[t + 1] += a
                nxt[t] -= xs[j] * a
            basis = nxt
    return poly


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def interpolate_quasipolynomial(n, values):
    """Fit both parity branches from exact counts {l: M(n, l)}.

    Each branch needs at least d+1 points of its parity; a branch with
    more points uses the extras as held-out checks and raises
    NonPolynomialData when any disagrees with the fit.  For odd n the odd
    branch is identically zero and any supplied odd-l values must be 0.
    """
    d = branch_degree(n)
    branches = {}
    for parity in (0, 1):
        pts = sorted((l, v) for l, v in values.items() if l % 2 == parity)
        if n % 2 == 1 and parity == 1:
            for l, v in pts:
                if v != 0:
                    raise NonPolynomialData(
                        f"odd n={n} forces M(n,{l}) = 0, got {v}"
                    )
            branches[parity] = tuple([Fraction(0)] * (d + 1))
            continue
        if len(pts) < d + 1:
            raise InsufficientPoints(
                f"branch parity {parity} of n={n} needs {d + 1} points, "
                f"got {len(pts)}"
            )
        fit_pts, held_out = pts[: d + 1], pts[d + 1:]
        poly = _newton_monomial(fit_pts)
        for l, v in held_out:
            if _poly_eval(poly, l) != v:
                raise NonPolynomialData(
                    f"held-out point l={l} disagrees with the fitted "
                    f"parity-{parity} branch of n={n}"
                )
        branches[parity] = tuple(poly)
    return Quasipolynomial2(n, branches[0], branches[1])


def evaluate(qp, l):
    """Exact count from the fitted branches; must come out a non-negative
    integer or the data was not polynomial to begin with."""
    if l < 0:
        raise DomainError("l must be non-negative")
    coeffs = qp.even if l % 2 == 0 else qp.odd
    val = _poly_eval(coeffs, l)
    if val.denominator != 1 or val < 0:
        raise NonIntegerValue(f"branch value {val} at l={l} is not a count")
    return CountValue(qp.n, l, int(val), "quasipolynomial")


# ---------------------------------------------------------------------------
# series numerator and h-vectors

def series_numerator(n, values):
    """Numerator of the generating function over (1-z^2)^(d+1).

    `values` must cover l = 0..L consecutively with L >= 2(d+1).  The
    product (sum values[l] z^l) * (1-z^2)^(d+1) is computed through degree
    L; coefficients beyond 2(d+1) must vanish (TrailingNonzero otherwise)
    and the retained ones must be non-negative (NegativeEntry otherwise).
    """
    d = branch_degree(n)
    top = 2 * (d + 1)
    L = max(values) if values else -1
    if L < top or any(l not in values for l in range(L + 1)):
        raise InsufficientPoints(
            f"series numerator for n={n} needs consecutive values "
            f"l = 0..{top} at least"
        )
    coeffs = [0] * (L + 1)
    for mdeg in range(L + 1):
        acc = 0
        for j in range(0, min(d + 1, mdeg // 2) + 1):
            acc += (-1) ** j * math.comb(d + 1, j) * values[mdeg - 2 * j]
        coeffs[mdeg] = acc
    for mdeg in range(top + 1, L + 1):
        if coeffs[mdeg] != 0:
            raise TrailingNonzero(
                f"degree-{mdeg} numerator coefficient {coeffs[mdeg]} "
                f"should vanish for n={n}"
            )
    numerator = coeffs[: top + 1]
    for mdeg, c in enumerate(numerator):
        if c < 0:
            raise NegativeEntry(
                f"numerator coefficient {c} at degree {mdeg} for n={n}"
            )
    return EhrhartSeries(n, tuple(numerator), d + 1)


def h_vector(n, parity, values):
    """Binomial-basis coefficients of one parity branch.

    `values` must hold the counts at l = c, c+2, ..., c+2d (c = 0 for
    "even", 1 for "odd").  At those points the basis matrix
    C(s - i + d, d), s = 0..d, is lower-triangular with unit diagonal and
    is solved by forward substitution.  Entries must be non-negative.
    """
    d = branch_degree(n)
    c = {"even": 0, "odd": 1}.get(parity)
    if c is None:
        raise DomainError("parity must be 'even' or 'odd'")
    needed = [c + 2 * s for s in range(d + 1)]
    if any(l not in values for l in needed):
        raise InsufficientPoints(
            f"h-vector for n={n} ({parity}) needs counts at l in {needed}"
        )
    h = []
    for s in range(d + 1):
        acc = values[needed[s]]
        for i in range(s):
            acc -= h[i] * _comb0(s - i + d, d)
        if acc < 0:
            raise NegativeEntry(f"h_{s} = {acc} for n={n} ({parity})")
        h.append(acc)
    return HVector(n, parity, tuple(h))


# ---------------------------------------------------------------------------
# integer polynomial helpers (used for printed-form conversions and tests)

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_pow(base, e):
    out = [1]
    for _ in range(e):
        out = poly_mul(out, base)
    return out


def series_coefficients(series, count):
    """First `count` coefficients of numerator/(1-z^2)^denominator_power."""
    out = []
    num = series.numerator
    dp = series.denominator_power
    for l in range(count):
        acc = 0
        for j in range(0, l // 2 + 1):
            deg = l - 2 * j
            if deg < len(num):
                acc += num[deg] * math.comb(j + dp - 1, dp - 1)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# polytope vertices

def _cycles_of(block):
    """Distinct cyclic orders of a vertex block, up to rotation/reflection."""
    first, rest = block[0], block[1:]
    for perm in itertools.permutations(rest):
        if perm[0] < perm[-1]:
            yield (first,) + perm


def _typed_partitions(verts):
    """Partitions of `verts` into pair blocks and odd blocks (size >= 3)."""
    if not verts:
        yield ()
        return
    v0, others = verts[0], verts[1:]
    for i, u in enumerate(others):
        rest = others[:i] + others[i + 1:]
        for tail in _typed_partitions(rest):
            yield (("edge", (v0, u)),) + tail
    for size in range(3, len(verts) + 1, 2):
        for members in itertools.combinations(others, size - 1):
            chosen = set(members)
            rest = tuple(x for x in others if x not in chosen)
            for tail in _typed_partitions(rest):
                yield (("cycle", (v0,) + members),) + tail


def polytope_vertices(n):
    """All vertices of the unit-row-sum polytope, 3 <= n <= 8.

    Each vertex is an n x n tuple-of-tuples of Fractions: entry 1 on a
    matched edge, 1/2 along each odd cycle, zero elsewhere; every vertex
    of the full graph is covered by exactly one block.
    """
    if not 3 <= n <= 8:
        raise DomainError("vertex enumeration supported for 3 <= n <= 8")
    half = Fraction(1, 2)
    out = []
    for blocks in _typed_partitions(tuple(range(n))):
        cycle_blocks = [b for kind, b in blocks if kind == "cycle"]
        edge_blocks = [b for kind, b in blocks if kind == "edge"]
        for orders in itertools.product(*(_cycles_of(b) for b in cycle_blocks)):
            mat = [[Fraction(0)] * n for _ in range(n)]
            for u, v in edge_blocks:
                mat[u][v] = mat[v][u] = Fraction(1)
            for cyc in orders:
                for idx, u in enumerate(cyc):
                    v = cyc[(idx + 1) % len(cyc)]
                    mat[u][v] += half
                    mat[v][u] += half
            out.append(tuple(tuple(row) for row in mat))
    return out


def vertex_affine_rank(vertices):
    """Exact dimension of the affine span of the vertex matrices."""
    if len(vertices) < 2:
        return 0
    n = len(vertices[0])
    flat = [
        [m[j][k] for j in range(n) for k in range(j + 1, n)]
        for m in vertices
    ]
    base = flat[0]
    rows = [
        [x - y for x, y in zip(v, base)] for v in flat[1:]
    ]
    rank = 0
    ncols = len(base)
    pivot_col = 0
    while rows and pivot_col < ncols:
        pivot_row = next(
            (i for i, row in enumerate(rows) if row[pivot_col] != 0), None
        )
        if pivot_row is None:
            pivot_col += 1
            continue
        rows[0], rows[pivot_row] = rows[pivot_row], rows[0]
        piv = rows[0]
        inv = Fraction(1) / piv[pivot_col]
        reduced = []
        for row in rows[1:]:
            factor = row[pivot_col] * inv
            if factor:
                row = [x - factor * y for x, y in zip(row, piv)]
            reduced.append(row)
        rows = reduced
        rank += 1
        pivot_col += 1
    return rank


def collect_values(n, l_values, store=None):
    """Exact counts {l: M(n, l)} fetched through the cached pipeline."""
    from .instance import Instance
    from .store import count_cached

    return {
        l: count_cached(Instance(n, l), store).value for l in l_values
    }
