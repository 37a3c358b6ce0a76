import csv
import io
import json
import subprocess
import sys

import pytest

from leoquat.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def usage_error(*argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv), out=io.StringIO())
    return exc.value.code


def test_seq_table():
    code, text = run("seq", "--family", "lucas-leonardo", "-p", "1", "-n", "0..4")
    assert code == 0
    assert [line.split()[1] for line in text.splitlines()] == ["3", "1", "5", "7", "13"]


def test_seq_singleton_and_formats():
    code, text = run("seq", "--family", "fibonacci", "-p", "1", "-n", "0..0", "--format", "json")
    assert json.loads(text) == {"family": "fibonacci", "p": 1, "terms": [{"n": 0, "value": 0}]}
    code, text = run("seq", "--family", "fibonacci", "-n", "300", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows == [{"n": "300", "value": "222232244629420445529739893461909967206666939096499764990979600"}]


def test_seq_usage_errors():
    assert usage_error("seq", "--family", "francois", "-p", "2", "-n", "0..3") == 2
    assert usage_error("seq", "--family", "fibonacci", "-n", "5..3") == 2
    assert usage_error("seq", "--family", "nope", "-n", "1") == 2
    assert usage_error("seq", "--family", "fibonacci") == 2


def test_quat_exact():
    code, text = run("quat", "--family", "lucas-leonardo", "-p", "1", "-n", "0", "--exact", "--format", "json")
    d = json.loads(text)
    assert d["coefficients"] == [3, 1, 5, 7] and d["norm"] == 84
    assert "zero_divisor" not in d


def test_quat_zero_divisor():
    code, text = run("quat", "--family", "lucas-leonardo", "-p", "1", "-n", "0", "--mod", "3", "--format", "json")
    d = json.loads(text)
    assert d["norm"] == 0 and d["zero_divisor"] is True and d["witness"] == "0 + 2 i + 1 j + 2 k"
    code, text = run("quat", "--family", "lucas-leonardo", "-n", "0", "--mod", "3")
    assert "zero divisor" in text and "witness" in text


def test_quat_invertible():
    code, text = run("quat", "--family", "francois", "-n", "1", "--mod", "5", "--format", "json")
    d = json.loads(text)
    assert d["invertible"] is True and d["zero_divisor"] is False and d["inverse"]
    code, text = run("quat", "--family", "francois", "-n", "1", "--mod", "5")
    assert "invertible" in text and "inverse" in text


def test_quat_usage_errors():
    assert usage_error("quat", "--family", "lucas", "-n", "0", "--mod", "4") == 2
    assert usage_error("quat", "--family", "lucas", "-n", "0", "--mod", "2") == 2
    assert usage_error("quat", "--family", "lucas", "-n", "0", "--mod", "3", "--exact") == 2
    assert usage_error("quat", "--family", "lucas", "-n", "-1") == 2


def test_classify():
    code, text = run("classify", "--family", "lucas-leonardo", "-p", "1", "-q", "7", "--format", "json")
    d = json.loads(text)
    assert code == 0
    assert d["modulus"] == 16 and d["zero_divisor_residues"] == [0, 6, 7, 9] and d["all_invertible"] is False
    for key in ("family", "p", "q", "modulus", "zero_divisor_residues", "all_invertible"):
        assert key in d

    code, text = run("classify", "--family", "lucas-leonardo", "-p", "1", "-q", "5")
    assert "all invertible" in text
    code, text = run("classify", "--family", "francois", "-q", "7", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(text)))
    assert row["zero_divisor_residues"] == "2" and row["modulus"] == "16"
    assert usage_error("classify", "--family", "francois", "-q", "15") == 2


@pytest.mark.parametrize("m, length", [(3, 8), (5, 20), (7, 16)])
def test_pisano(m, length):
    code, text = run("pisano", str(m))
    assert text.splitlines()[0] == str(length)
    code, text = run("pisano", str(m), "--format", "json")
    assert json.loads(text)["length"] == length


def test_pisano_usage_error():
    assert usage_error("pisano", "1") == 2


def test_verify_full_json():
    code, text = run("verify", "--format", "json")
    assert code == 0
    d = json.loads(text)
    assert d["passed"] is True and len(d["reports"]) >= 24
    ledger = {e["as_printed"]: e for e in d["discrepancy_ledger"]}
    assert set(ledger) == {"prop22-iii-as-printed", "prop22-iv-as-printed"}
    assert all(e["fails"] and e["corrected_holds"] for e in ledger.values())
    assert "elapsed" not in text


def test_verify_filter():
    code, text = run("verify", "--id", "prop22-iii-as-printed", "--format", "json")
    d = json.loads(text)
    ce = d["reports"][0]["first_counterexample"]
    assert (ce["p"], ce["n"]) == (1, 2)
    code, text = run("verify", "--id", "prop22-iii-as-printed")
    assert "p=1 n=2" in text


def test_verify_small_grid_and_csv():
    code, text = run("verify", "--p-max", "1", "--n-max", "10", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) >= 24 and {"id", "holds", "expectation"} <= set(rows[0])


def test_verify_usage_errors():
    assert usage_error("verify", "--id", "nope") == 2
    assert usage_error("verify", "--p-max", "6", "--n-max", "5") == 2


def test_output_is_deterministic():
    argv = ("verify", "--p-max", "2", "--n-max", "30", "--format", "json")
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "leoquat", "pisano", "7"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.split("\n")[1] == "0 1 1 2 3 5 1 6 0 6 6 5 4 2 6 1"
