"""Counting symmetric non-negative integer matrices with zero diagonal
and constant row sums.

M(n, l) is the number of n x n symmetric matrices over the non-negative
integers with zero diagonal whose rows each sum to l; equivalently, the
number of loop-free l-regular multigraphs on n labelled vertices.  The
package computes M(n, l) exactly by three independent routes
(backtracking over the upper triangle, roots-of-unity coefficient
extraction modulo many primes combined by CRT, and evaluation of the
interpolated period-2 quasipolynomial in l) and estimates it by four
closed forms (saddle-point, binomial, naive independence model, and the
large-density form), cross-validating everything against recorded
reference data, a contour-integral quadrature, and conjectured bounds on
the refined constant.
"""

from .asymptotics import (
    DeltaValue,
    LogEstimate,
    conjecture_delta,
    estimate_big_lambda,
    estimate_binomial_form,
    estimate_naive,
    estimate_saddle_form,
    min_entry_prob_asymptotic,
    min_entry_prob_exact,
)
from .backtrack import DEFAULT_NODE_BUDGET, count_backtracking
from .ehrhart import (
    EhrhartSeries,
    HVector,
    Quasipolynomial2,
    branch_degree,
    collect_values,
    evaluate,
    h_vector,
    interpolate_quasipolynomial,
    polytope_vertices,
    series_numerator,
    vertex_affine_rank,
)
from .errors import (
    BudgetExceeded,
    DomainError,
    GridTooCoarse,
    InsufficientPoints,
    MethodConflict,
    NegativeEntry,
    NoPrimeFound,
    NonIntegerValue,
    NonInvertibleDenominator,
    NonPolynomialData,
    PoleProximity,
    StoreCorrupt,
    SymcountError,
    TrailingNonzero,
)
from .instance import CountValue, Instance, trivial_count
from .integral import (
    IntegrandParams,
    aliasing_bound,
    count_by_quadrature,
    integrand_F,
    integrand_magnitude,
    magnitude_factor,
)
from .modular import ModularPlan, count_crt, count_mod_p, plan_primes
from .store import ResultsStore, count_cached

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CountValue",
    "DEFAULT_NODE_BUDGET",
    "DeltaValue",
    "DomainError",
    "EhrhartSeries",
    "GridTooCoarse",
    "HVector",
    "Instance",
    "InsufficientPoints",
    "IntegrandParams",
    "LogEstimate",
    "MethodConflict",
    "ModularPlan",
    "NegativeEntry",
    "NoPrimeFound",
    "NonIntegerValue",
    "NonInvertibleDenominator",
    "NonPolynomialData",
    "PoleProximity",
    "Quasipolynomial2",
    "ResultsStore",
    "StoreCorrupt",
    "SymcountError",
    "TrailingNonzero",
    "aliasing_bound",
    "branch_degree",
    "collect_values",
    "conjecture_delta",
    "count_backtracking",
    "count_by_quadrature",
    "count_cached",
    "count_crt",
    "count_mod_p",
    "estimate_big_lambda",
    "estimate_binomial_form",
    "estimate_naive",
    "estimate_saddle_form",
    "evaluate",
    "h_vector",
    "integrand_F",
    "integrand_magnitude",
    "interpolate_quasipolynomial",
    "magnitude_factor",
    "min_entry_prob_asymptotic",
    "min_entry_prob_exact",
    "plan_primes",
    "polytope_vertices",
    "series_numerator",
    "trivial_count",
    "vertex_affine_rank",
    "__version__",
]
