"""Command-line interface: outputs, store wiring, exit codes.

Exit status contract: 0 success, 1 domain/usage errors, 2 internal
inconsistencies (method disagreement, store corruption).  Every command
runs in-process through main(argv) with the store redirected into a
temporary directory via SYMCOUNT_STORE.
"""

import json

import pytest

from symcount.cli import main
from symcount.reference_values import REFERENCE_QP


@pytest.fixture
def cli(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv("SYMCOUNT_STORE", str(tmp_path / "store.jsonl"))

    def run(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    return run


def test_exact_text(cli):
    code, out, _ = cli("exact", "--n", "4", "--l", "1")
    assert code == 0
    assert out.strip() == "3"


def test_exact_json_and_cache(cli):
    code, out, _ = cli("exact", "--n", "5", "--l", "4", "--format", "json")
    assert code == 0
    first = json.loads(out)
    assert (first["value"], first["method"]) == ("158", "backtracking")
    code, out, _ = cli("exact", "--n", "5", "--l", "4", "--format", "json")
    assert code == 0
    second = json.loads(out)
    assert (second["value"], second["method"]) == ("158", "cached")


def test_exact_degenerate(cli):
    code, out, _ = cli("exact", "--n", "5", "--l", "3")
    assert code == 0
    assert out.strip() == "0"


def test_exact_domain_error(cli):
    code, _, err = cli("exact", "--n", "4", "--l", "-1")
    assert code == 1
    assert "error" in err


def test_usage_error_exits_1(cli):
    with pytest.raises(SystemExit) as exc:
        cli("exact", "--n", "4")
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        cli("no-such-command")
    assert exc.value.code == 1


def test_modular_with_plans(cli):
    code, out, _ = cli("modular", "--n", "5", "--l", "2", "--emit-plans")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "22"
    assert any(line.startswith("plan:") and "q=" in line for line in lines)
    # the modular result is recorded, so the cached pipeline reuses it
    code, out, _ = cli("exact", "--n", "5", "--l", "2", "--format", "json")
    assert json.loads(out)["method"] == "cached"


def test_modular_json(cli):
    code, out, _ = cli(
        "modular", "--n", "4", "--l", "2", "--format", "json", "--threads", "2"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "6"
    assert payload["plans"][0]["q"] == 21
    assert payload["plans"][0]["p"] == 43


def test_estimate_forms(cli):
    logs = {}
    for form in ("saddle", "binomial", "biglambda", "naive"):
        code, out, _ = cli(
            "estimate", "--n", "19", "--l", "10", "--form", form,
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        logs[form] = float(payload["log_value"])
    # binomial = naive + ln(sqrt(2) e^(3/4))
    assert logs["binomial"] - logs["naive"] == pytest.approx(1.09657359, abs=1e-6)
    assert logs["saddle"] == pytest.approx(logs["binomial"], abs=0.5)


def test_estimate_domain_error(cli):
    code, _, err = cli("estimate", "--n", "19", "--l", "0", "--form", "naive")
    assert code == 1
    assert "error" in err


def test_ehrhart_json(cli):
    code, out, _ = cli("ehrhart", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == 2
    ref = REFERENCE_QP[4]
    from fractions import Fraction

    assert [Fraction(c) for c in payload["branches"]["even"]] == list(ref.even)
    assert [Fraction(c) for c in payload["branches"]["odd"]] == list(ref.odd)
    assert payload["series_numerator"] == ["1", "3", "3", "1", "0", "0", "0"]
    assert payload["denominator_power"] == 3
    assert payload["h_vectors"]["even"] == ["1", "3", "0"]
    assert payload["h_vectors"]["odd"] == ["3", "1", "0"]


def test_series_text(cli):
    code, out, _ = cli("series", "--n", "4")
    assert code == 0
    assert "1 3 3 1 0 0 0" in out
    code, _, err = cli("series", "--n", "4", "--max-l", "3")
    assert code == 1  # below the needed degree window


def test_delta_json(cli):
    code, out, _ = cli("delta", "--n", "5", "--l", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "22"
    assert payload["within_conjecture"] is True
    assert float(payload["delta"]) == pytest.approx(-0.8732149, abs=1e-6)


def test_minentry(cli):
    code, out, _ = cli(
        "minentry", "--n", "4", "--l", "3", "--k", "1", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["exact"] == "1/10"
    code, out, _ = cli(
        "minentry", "--n", "6", "--l", "2160", "--k", "1",
        "--asymptotic", "--format", "json",
    )
    assert code == 0
    assert float(json.loads(out)["asymptotic"]) == pytest.approx(
        0.951229424, abs=1e-8
    )


def test_verify_integral_ok(cli):
    code, out, _ = cli("verify-integral", "--n", "3", "--l", "2")
    assert code == 0
    assert "nearest integer = 1" in out


def test_verify_integral_detects_poisoned_store(cli, tmp_path):
    # seed the store with a wrong count; the quadrature must disagree
    store_path = tmp_path / "store.jsonl"
    store_path.write_text(
        json.dumps(
            {"n": 3, "l": 2, "value": "2", "method": "x", "timestamp": "t"}
        )
        + "\n"
    )
    code, _, err = cli("verify-integral", "--n", "3", "--l", "2")
    assert code == 2
    assert "inconsistency" in err


def test_audit_clean(cli):
    code, out, _ = cli("audit", "--max-n", "4", "--max-l", "3")
    assert code == 0
    assert "0 failure(s)" in out


def test_audit_detects_poisoned_store(cli, tmp_path):
    store_path = tmp_path / "store.jsonl"
    store_path.write_text(
        json.dumps(
            {"n": 4, "l": 2, "value": "7", "method": "x", "timestamp": "t"}
        )
        + "\n"
    )
    code, out, err = cli("audit", "--max-n", "4", "--max-l", "2")
    assert code == 2
    assert "inconsistency" in err


def test_out_file(cli, tmp_path):
    out_path = tmp_path / "result.json"
    code, _, _ = cli(
        "exact", "--n", "4", "--l", "2", "--out", str(out_path)
    )
    assert code == 0
    assert json.loads(out_path.read_text())["value"] == "6"
