"""Log-scale estimates, the refined-constant statistic, min-entry law.

Four estimate forms share the same leading behaviour: an entropy core
C(n,2)(lam ln lam - (1+lam) ln(1+lam)) + n ln C(n+l-2, l) plus, except
for the naive independence model, the universal constant ln(sqrt(2)
e^(3/4)).  The saddle form rewrites the core without binomials; the
big-lambda form replaces it by (n(n-3)/2) ln(lam + 1/2) + C(n,2) + 7/6
up to O(1/lam^2) at fixed n.  Delta(n,l) rescales the remaining error by
n(n-1); its conjectured range is (-1, 1).
"""

import math
import random
from fractions import Fraction

import mpmath
import pytest

from symcount.asymptotics import (
    FORMULAS,
    WORKING_DPS,
    conjecture_delta,
    estimate_big_lambda,
    estimate_binomial_form,
    estimate_naive,
    estimate_saddle_form,
    min_entry_prob_asymptotic,
    min_entry_prob_exact,
)
from symcount.errors import DomainError
from symcount.instance import CountValue, Instance
from symcount.reference_values import KNOWN_COUNTS, reference_count
from symcount.store import ResultsStore


def test_formula_tags():
    inst = Instance(9, 20)
    tags = {
        estimate_saddle_form(inst).formula,
        estimate_binomial_form(inst).formula,
        estimate_big_lambda(inst).formula,
        estimate_naive(inst).formula,
    }
    assert tags == set(FORMULAS)
    assert estimate_naive(inst).instance == inst


def test_domain_guards():
    for fn in (
        estimate_saddle_form,
        estimate_binomial_form,
        estimate_big_lambda,
        estimate_naive,
    ):
        with pytest.raises(DomainError):
            fn(Instance(5, 0))
    with pytest.raises(DomainError):
        estimate_binomial_form(Instance(2, 4))
    # the naive model is defined from n = 2 on
    assert estimate_naive(Instance(2, 4)).formula == "naive"


def test_binomial_minus_naive_is_constant():
    rng = random.Random(271828)
    with mpmath.workdps(WORKING_DPS):
        const = mpmath.log(2) / 2 + mpmath.mpf(3) / 4
        for _ in range(10):
            inst = Instance(rng.randint(3, 30), rng.randint(1, 50))
            diff = (
                estimate_binomial_form(inst).log_value
                - estimate_naive(inst).log_value
            )
            assert abs(diff - const) < mpmath.mpf(10) ** -45
        # the constant exponentiates to sqrt(2) e^(3/4)
        target = mpmath.sqrt(2) * mpmath.exp(mpmath.mpf(3) / 4)
        assert abs(mpmath.exp(const) - target) < mpmath.mpf(10) ** -50


def test_known_delta_values():
    cases = {
        (9, 20): "0.55461327",
        (19, 10): "0.62140648",
    }
    for (n, l), expected in cases.items():
        cv = CountValue(n, l, KNOWN_COUNTS[(n, l)], "reference")
        dv = conjecture_delta(Instance(n, l), cv)
        assert mpmath.nstr(dv.delta, 8) == expected
    cv = CountValue(5, 2, 22, "reference")
    dv = conjecture_delta(Instance(5, 2), cv)
    assert mpmath.nstr(dv.delta, 8) == "-0.87321488"
    assert abs(dv.delta) < 1


def test_delta_validation():
    inst = Instance(5, 2)
    with pytest.raises(TypeError):
        conjecture_delta(inst, 22)
    with pytest.raises(DomainError):
        conjecture_delta(inst, CountValue(5, 4, 158, "reference"))
    with pytest.raises(DomainError):
        conjecture_delta(Instance(5, 3), CountValue(5, 3, 0, "reference"))


def test_two_forms_converge_in_n():
    # at fixed lam = 2 the saddle and binomial forms drift apart only
    # through Stirling error, which decays like 1/n
    gaps = []
    for n in (50, 100, 200):
        inst = Instance(n, 2 * (n - 1))
        with mpmath.workdps(WORKING_DPS):
            gap = abs(
                estimate_saddle_form(inst).log_value
                - estimate_binomial_form(inst).log_value
            )
        gaps.append(float(gap))
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-3


def test_big_lambda_approaches_saddle_quadratically():
    # doubling lam at fixed n shrinks the gap by about 4; a factor of 10
    # shrinks it by about 100
    def gap(l):
        inst = Instance(10, l)
        with mpmath.workdps(WORKING_DPS):
            return float(
                abs(
                    estimate_big_lambda(inst).log_value
                    - estimate_saddle_form(inst).log_value
                )
            )

    ratio = gap(900) / gap(9000)
    assert 50 < ratio < 200


def test_min_entry_exact_small(tmp_path):
    store = ResultsStore(path=str(tmp_path / "counts.jsonl"))
    assert min_entry_prob_exact(Instance(4, 3), 1, store) == Fraction(1, 10)
    assert min_entry_prob_exact(Instance(4, 3), 0, store) == Fraction(1)
    table = [min_entry_prob_exact(Instance(5, 8), k, store) for k in range(4)]
    assert table == [
        Fraction(1),
        Fraction(79, 990),
        Fraction(1, 1980),
        Fraction(0),
    ]
    with pytest.raises(DomainError):
        min_entry_prob_exact(Instance(4, 3), -1, store)
    with pytest.raises(DomainError):
        min_entry_prob_exact(Instance(5, 3), 1, store)  # no matrices at all


def test_min_entry_exact_large_l_uses_reference_branches(tmp_path):
    store = ResultsStore(path=str(tmp_path / "counts.jsonl"))
    prob = min_entry_prob_exact(Instance(6, 2160), 1, store)
    assert prob == Fraction(
        reference_count(6, 2155), reference_count(6, 2160)
    )


def test_min_entry_asymptotic():
    inst = Instance(6, 2160)
    # a = k n^3 / l = 0.1, so the law gives e^(-0.05)
    assert min_entry_prob_asymptotic(inst, 1) == pytest.approx(
        math.exp(-0.05), rel=1e-12
    )
    assert min_entry_prob_asymptotic(inst, 0) == 1.0
    with pytest.raises(DomainError):
        min_entry_prob_asymptotic(inst, -1)
    with pytest.raises(DomainError):
        min_entry_prob_asymptotic(Instance(6, 0), 1)
