"""Internal consistency of the recorded reference tables.

The branch polynomials, printed series numerators, and standalone counts
are transcribed independently of each other, so mutual agreement is a
meaningful check on all of them: the series expansion must reproduce the
polynomial values, the numerators must be palindromic, and the recorded
standalone counts must match both.
"""

from fractions import Fraction

import pytest

from symcount.backtrack import count_backtracking
from symcount.ehrhart import branch_degree, series_coefficients
from symcount.instance import Instance
from symcount.reference_values import (
    KNOWN_COUNTS,
    REFERENCE_QP,
    SERIES_PRINTED,
    canonical_series,
    reference_count,
)


def test_series_expansion_matches_branch_polynomials():
    for n in range(3, 10):
        top = 2 * (branch_degree(n) + 1)
        coeffs = series_coefficients(canonical_series(n), top + 8)
        assert coeffs == [reference_count(n, l) for l in range(top + 8)], n


def test_reference_polynomial_reproduces_recorded_count():
    assert reference_count(9, 20) == KNOWN_COUNTS[(9, 20)]
    assert KNOWN_COUNTS[(9, 20)] == 1955487489759152410696


def test_printed_numerators_palindromic():
    for n, ps in SERIES_PRINTED.items():
        coeffs = list(ps.numerator)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        assert coeffs == coeffs[::-1], n


def test_canonical_numerators_non_negative():
    for n in range(3, 10):
        series = canonical_series(n)
        assert series.denominator_power == branch_degree(n) + 1
        assert len(series.numerator) == 2 * series.denominator_power + 1
        assert min(series.numerator) >= 0


def test_branch_constant_terms():
    # M(n, 0) = 1 pins the even constant; odd n has no odd branch
    for n, qp in REFERENCE_QP.items():
        assert qp.even[0] == 1
        if n % 2 == 1:
            assert set(qp.odd) == {Fraction(0)}


def test_reference_counts_match_backtracking():
    grid = [(3, 8), (4, 6), (5, 8), (6, 4), (7, 4), (8, 2)]
    for n, l_max in grid:
        for l in range(l_max + 1):
            assert (
                reference_count(n, l)
                == count_backtracking(Instance(n, l)).value
            ), (n, l)


def test_reference_count_domain():
    with pytest.raises(KeyError):
        reference_count(10, 2)
    with pytest.raises(KeyError):
        reference_count(2, 2)
