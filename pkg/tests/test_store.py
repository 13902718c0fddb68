"""Results store round-trips and the cached counting front end."""

import json

import pytest

import symcount.store as store_mod
from symcount.errors import MethodConflict, StoreCorrupt
from symcount.instance import CountValue, Instance
from symcount.store import (
    DEFAULT_PATH,
    ENV_VAR,
    ResultsStore,
    count_cached,
    default_store_path,
)


def make_store(tmp_path, name="counts.jsonl"):
    return ResultsStore(path=str(tmp_path / name))


def test_round_trip(tmp_path):
    store = make_store(tmp_path)
    assert store.get(5, 4) is None
    store.record(CountValue(5, 4, 158, "backtracking"))
    assert store.get(5, 4) == 158
    # a fresh handle on the same file sees the record
    again = make_store(tmp_path)
    assert again.get(5, 4) == 158
    assert again.items() == {(5, 4): (158, "backtracking")}


def test_record_idempotent_and_conflicting(tmp_path):
    store = make_store(tmp_path)
    store.record(CountValue(4, 2, 6, "backtracking"))
    store.record(CountValue(4, 2, 6, "modular_crt"))  # same value is fine
    assert store.get(4, 2) == 6
    with pytest.raises(MethodConflict):
        store.record(CountValue(4, 2, 7, "backtracking"))


def test_corrupt_line(tmp_path):
    path = tmp_path / "counts.jsonl"
    path.write_text("not json at all\n")
    with pytest.raises(StoreCorrupt):
        ResultsStore(path=str(path)).get(4, 2)
    path.write_text(json.dumps({"n": 4, "l": 2, "value": "6"}) + "\n")
    with pytest.raises(StoreCorrupt):  # missing method/timestamp fields
        ResultsStore(path=str(path)).get(4, 2)


def test_conflicting_lines_on_disk(tmp_path):
    path = tmp_path / "counts.jsonl"
    rows = [
        {"n": 4, "l": 2, "value": "6", "method": "a", "timestamp": "t"},
        {"n": 4, "l": 2, "value": "7", "method": "b", "timestamp": "t"},
    ]
    path.write_text("".join(json.dumps(r) + "\n" for r in rows))
    with pytest.raises(MethodConflict):
        ResultsStore(path=str(path)).get(4, 2)


def test_env_var_controls_default_path(monkeypatch, tmp_path):
    monkeypatch.delenv(ENV_VAR, raising=False)
    assert default_store_path() == DEFAULT_PATH
    target = str(tmp_path / "elsewhere.jsonl")
    monkeypatch.setenv(ENV_VAR, target)
    assert default_store_path() == target
    assert ResultsStore().path == target


def test_count_cached_methods(tmp_path):
    store = make_store(tmp_path)
    # closed forms never touch the store
    assert count_cached(Instance(5, 3), store).method == "closed_form"
    assert count_cached(Instance(9, 0), store).method == "closed_form"
    assert store.items() == {}
    # small instances go through backtracking, then hit the cache
    first = count_cached(Instance(4, 2), store)
    assert (first.value, first.method) == (6, "backtracking")
    second = count_cached(Instance(4, 2), store)
    assert (second.value, second.method) == (6, "cached")
    # instances past the search heuristic use the modular pipeline
    big = count_cached(Instance(6, 6), store)
    assert (big.value, big.method) == (36935, "modular_crt")


def test_count_cached_probe_falls_through(tmp_path, monkeypatch):
    # when the bounded search probe gives up, the modular path answers
    monkeypatch.setattr(store_mod, "_PROBE_BUDGET", 10)
    store = make_store(tmp_path)
    cv = count_cached(Instance(5, 2), store)
    assert (cv.value, cv.method) == (22, "modular_crt")


def test_count_cached_shares_the_file(tmp_path):
    store = make_store(tmp_path)
    count_cached(Instance(5, 4), store)
    other = make_store(tmp_path)
    assert count_cached(Instance(5, 4), other).method == "cached"
