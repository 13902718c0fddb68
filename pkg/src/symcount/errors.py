"""Exception types shared across the package."""


class SymcountError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SymcountError):
    """Inputs outside an operation's domain (bad n, l, k, grid size, ...)."""


class BudgetExceeded(SymcountError):
    """Backtracking search ran past its node budget."""

    def __init__(self, nodes, budget):
        super().__init__(f"search visited {nodes} nodes, budget {budget}")
        self.nodes = nodes
        self.budget = budget


class NoPrimeFound(SymcountError):
    """Prime search hit its ceiling without finding enough admissible primes."""


class NonInvertibleDenominator(SymcountError):
    """A modular plan's constant divisors are not invertible mod p."""


class InsufficientPoints(SymcountError):
    """Too few exact values supplied to determine a polynomial branch."""


class NonPolynomialData(SymcountError):
    """Held-out exact values disagree with the interpolated branch."""


class NonIntegerValue(SymcountError):
    """A quasipolynomial evaluated to a non-integer (or negative) count."""


class TrailingNonzero(SymcountError):
    """Series numerator has nonzero coefficients beyond its allowed degree."""


class NegativeEntry(SymcountError):
    """A vector that must be non-negative (h-vector, numerator) is not."""


class PoleProximity(SymcountError):
    """Integrand denominator within 1e-12 of zero."""


class GridTooCoarse(SymcountError):
    """Quadrature aliasing bound exceeds the requested tolerance."""


class StoreCorrupt(SymcountError):
    """Results store contains an unparseable or malformed line."""


class MethodConflict(SymcountError):
    """Two methods (or store records) disagree on an exact value."""
