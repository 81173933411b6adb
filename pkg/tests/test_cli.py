import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from sylownum import cli
from sylownum.catalog import default_catalog_text

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "golden, argv, code",
    [
        ("classify_13.txt", ["classify", "13"], 0),
        ("classify_5.txt", ["classify", "5"], 0),
        ("decompose_144_13.txt", ["decompose", "144", "13"], 0),
        ("decompose_21_5.txt", ["decompose", "21", "5"], 1),
        ("decompose_16_5.txt", ["decompose", "16", "5"], 0),
        ("census_13.json", ["census", "--max", "13", "--format", "json"], 0),
        ("census_13.csv", ["census", "--max", "13", "--format", "csv"], 0),
        ("census_13.md", ["census", "--max", "13", "--format", "markdown"], 0),
        ("audit_2_2.txt", ["audit", "--qmax", "2", "--emax", "2"], 0),
        ("verify_default.txt", ["verify"], 0),
    ],
)
def test_golden_output(capsys, golden, argv, code):
    got_code, out, _ = run(capsys, *argv)
    assert got_code == code
    assert out == (GOLDEN / golden).read_text()


def test_classify_row_format(capsys):
    _, out, _ = run(capsys, "classify", "13")
    assert "144  r=11  simple: PSL3(3)" in out.splitlines()


def test_classify_5_rows(capsys):
    _, out, _ = run(capsys, "classify", "5")
    values = [int(line.split()[0]) for line in out.splitlines()[1:]]
    assert values == [1, 6, 11, 16]


@pytest.mark.parametrize(
    "argv",
    [["classify", "4"], ["decompose", "22", "3"], ["decompose", "23", "3"], ["census", "--max", "1"],
     ["audit", "--qmax", "1", "--emax", "2"]],
)
def test_domain_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("argv", [["classify"], ["bogus"], ["census", "--max", "5", "--format", "xml"], []])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_census_json_schema(capsys):
    _, out, _ = run(capsys, "census", "--max", "13", "--format", "json")
    data = json.loads(out)
    assert list(data) == ["primes"]
    assert [row["p"] for row in data["primes"]] == [2, 3, 5, 7, 11, 13]
    for row in data["primes"]:
        assert list(row) == ["p", "values"]
        for v in row["values"]:
            assert list(v) == ["n", "r", "witnesses"] and v["witnesses"]
    row13 = data["primes"][-1]
    assert {"kind": "simple", "case": "PSL3_3", "family": "PSL3(3)"} in next(
        v["witnesses"] for v in row13["values"] if v["n"] == 144
    )


def test_census_csv_columns(capsys):
    _, out, _ = run(capsys, "census", "--max", "7", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["p", "n", "r", "witness_kind", "witness_params"]
    assert ["5", "16", "3", "prime_power", "2^4 Frob(5,2,4)"] in rows


def test_census_single_row(capsys):
    _, out, _ = run(capsys, "census", "--max", "2")
    assert len(json.loads(out)["primes"]) == 1


def test_census_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "census", "--max", "60", "--out", str(a))[0] == 0
    assert run(capsys, "census", "--max", "60", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_census_unwritable_path_exits_3(capsys, tmp_path):
    code, _, err = run(capsys, "census", "--max", "5", "--out", str(tmp_path / "missing" / "x.json"))
    assert code == 3 and "I/O error" in err


def test_audit_lists_chains_with_tags(capsys):
    _, out, _ = run(capsys, "audit", "--qmax", "4", "--emax", "4")
    chain_lines = [line for line in out.splitlines() if line.startswith("[")]
    assert len(chain_lines) == 43
    assert any(line.startswith("[E8] ") for line in chain_lines)
    assert out.splitlines()[-1].startswith("chains: 43")


def test_verify_tampered_catalog_exits_1_with_diff(capsys, tmp_path):
    data = json.loads(default_catalog_text())
    a5 = next(e for e in data["entries"] if e["name"] == "A5")
    next(s for s in a5["expected_sylow"] if s["p"] == 5)["n_p"] = 7
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--catalog", str(path))
    assert code == 1
    assert "FAIL    A5" in out
    assert "  - expected n_5 = 7" in out and "  + computed n_5 = 6" in out


def test_verify_missing_catalog_exits_3(capsys, tmp_path):
    assert run(capsys, "verify", "--catalog", str(tmp_path / "nope.json"))[0] == 3


@pytest.mark.parametrize("text", ["{not json", '{"entries": [{"name": "x"}]}', '{"entries": 3}',
                                  '{"entries": [{"name": "x", "constructor": "magic", "expected_order": 1, "expected_sylow": []}]}'])
def test_verify_malformed_catalog_exits_2(capsys, tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    assert run(capsys, "verify", "--catalog", str(path))[0] == 2


def test_verify_cap_marks_entries_skipped(capsys, monkeypatch):
    monkeypatch.setenv("SYLOW_CENSUS_CAP", "500")
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "SKIPPED PSL3(3)" in out and "PASS    A5" in out
    code, out, _ = run(capsys, "verify", "--deep")
    assert code == 1 and "FAIL    PSL3(3)" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sylownum", "decompose", "21", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 1
    assert "kind: NotASylowNumber" in proc.stdout
