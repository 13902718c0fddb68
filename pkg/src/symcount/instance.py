"""Problem instances and counted values.

An instance is a pair (n, l): count n x n symmetric matrices over the
non-negative integers with zero diagonal and every row summing to l.
Equivalently, loop-free multigraphs on n labelled vertices in which every
vertex has degree l.  The total degree n*l must be even for any such
matrix to exist.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class Instance:
    n: int
    l: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.l, int)):
            raise DomainError("n and l must be integers")
        if self.n < 1 or self.l < 0:
            raise DomainError(f"need n >= 1 and l >= 0, got n={self.n}, l={self.l}")

    @property
    def lam(self):
        """Density l/(n-1), the expected value of a single entry."""
        if self.n < 2:
            raise DomainError("lambda undefined for n < 2")
        return Fraction(self.l, self.n - 1)

    @property
    def parity_obstructed(self):
        """True when n*l is odd, which forces the count to zero."""
        return (self.n * self.l) % 2 == 1


@dataclass(frozen=True)
class CountValue:
    n: int
    l: int
    value: int
    method: str

    def __post_init__(self):
        if self.value < 0:
            raise DomainError("counts are non-negative")


def trivial_count(inst):
    """Closed-form count for degenerate instances, or None.

    Covers: odd total degree (0), l = 0 (only the zero matrix), n = 1
    (no off-diagonal slots) and n = 2 (the single entry is forced to l).
    """
    if inst.parity_obstructed:
        return 0
    if inst.l == 0:
        return 1
    if inst.n == 1:
        return 0
    if inst.n == 2:
        return 1
    return None
