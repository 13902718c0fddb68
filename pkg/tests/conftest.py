"""Shared fixtures: one session store and the exact value tables.

M(n, l) counts n x n symmetric non-negative integer matrices with zero
diagonal and every row summing to l.  The tables below are computed once
per session by the two exact engines (backtracking search for small
instances, modular CRT extraction beyond that), recorded into a private
session store, and shared by the interpolation, series, and audit tests.
The n = 7 table is the expensive one (even row sums up to 30); everything
downstream reuses it instead of recounting.
"""

import time

import pytest

from symcount.backtrack import count_backtracking
from symcount.instance import Instance, trivial_count
from symcount.modular import count_crt
from symcount.store import ResultsStore


@pytest.fixture(scope="session")
def session_store(tmp_path_factory):
    path = tmp_path_factory.mktemp("store") / "counts.jsonl"
    return ResultsStore(path=str(path))


@pytest.fixture(scope="session")
def timings():
    """Wall-clock seconds spent building each value table."""
    return {}


def _table(store, n, l_max, crt_from):
    """Counts for l = 0..l_max: backtracking below crt_from, CRT at and
    above it, closed forms where they apply.  Computed values are recorded."""
    out = {}
    for l in range(l_max + 1):
        inst = Instance(n, l)
        value = trivial_count(inst)
        if value is None:
            cv = count_backtracking(inst) if l < crt_from else count_crt(inst)
            store.record(cv)
            value = cv.value
        out[l] = value
    return out


@pytest.fixture(scope="session")
def values_n5(session_store, timings):
    t0 = time.monotonic()
    out = _table(session_store, 5, 16, crt_from=17)
    timings["n5"] = time.monotonic() - t0
    return out


@pytest.fixture(scope="session")
def values_n6(session_store, timings):
    t0 = time.monotonic()
    out = _table(session_store, 6, 22, crt_from=5)
    timings["n6"] = time.monotonic() - t0
    return out


@pytest.fixture(scope="session")
def values_n7(session_store, timings):
    t0 = time.monotonic()
    out = _table(session_store, 7, 30, crt_from=5)
    timings["n7"] = time.monotonic() - t0
    return out
