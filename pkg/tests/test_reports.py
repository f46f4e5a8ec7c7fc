import json

import pandas as pd
import pytest

from models.errors import UsageError
from models.report import FAIL, PASS, SKIPPED, CheckRecord, VerificationReport
from parsers.suite_config_parser import SuiteConfigParser
from tools.constants import LATEST_JSON, RECORD_COLUMNS, SWEEP_COLUMNS
from tools.report_writer import load_latest, markdown_summary, write_report


def _report():
    report = VerificationReport("spectral", {"primes": [3]})
    report.add(CheckRecord("jtilde/p=3/inert/cpi=2/comega=2", "J~ closed form", PASS,
                           {"p": 3}, 0.125 + 0j, 0.125, 0.0, "vol(o^x) = 1", 12))
    report.add(CheckRecord("coset-reps/p=5", "complete set", SKIPPED, reason="CapacityError: too many"))
    report.add(CheckRecord("x-shift/p=3", "shift", FAIL, computed=complex(0.5, 0.25), expected=1.0,
                           residual=float("inf"), reason="boom"))
    report.rows.append({
        "p": 3, "case": "inert", "c_pi": 2, "c_omega": 2, "omega_index": 0, "computed": 0.125,
        "computed_imag": 0.0, "expected": 0.125, "expected_exact": "1/8", "residual": 0.0,
        "measure": "vol(o^x) = 1",
    })
    return report


def test_summary_counts():
    """One record per status."""
    summary = _report().summary()
    assert summary == {PASS: 1, FAIL: 1, SKIPPED: 1, "total": 3}
    assert _report().failed


def test_unknown_status():
    """Records only carry pass, fail or skipped."""
    with pytest.raises(ValueError):
        CheckRecord("x", "y", "maybe")


def test_json_plain_values(tmp_path):
    """Complex values become {re, im} and infinities become strings; latest.json is refreshed."""
    path = write_report(_report(), "json", str(tmp_path / "run.json"))
    data = json.loads(path.read_text())
    assert data["schema"] == 1
    assert data["records"][2]["computed"] == {"re": 0.5, "im": 0.25}
    assert data["records"][2]["residual"] == "inf"
    assert data["records"][0]["computed"] == 0.125
    assert load_latest(tmp_path) == data
    assert (tmp_path / LATEST_JSON).exists()


def test_csv_sweep_matches_json(tmp_path):
    """The CSV holds the sweep rows in the fixed column order, the same data as the JSON."""
    report = _report()
    csv_path = write_report(report, "csv", str(tmp_path / "run.csv"))
    json_path = write_report(report, "json", str(tmp_path / "run.json"))
    frame = pd.read_csv(csv_path)
    assert list(frame.columns) == SWEEP_COLUMNS
    assert "measure" in frame.columns
    rows = json.loads(json_path.read_text())["rows"]
    assert frame.to_dict(orient="records")[0]["expected_exact"] == rows[0]["expected_exact"] == "1/8"
    assert frame["computed"].tolist() == [row["computed"] for row in rows]


def test_csv_records(tmp_path):
    """Without sweep rows the CSV holds one line per check."""
    report = _report()
    report.rows.clear()
    frame = pd.read_csv(write_report(report, "csv", str(tmp_path / "records.csv")))
    assert list(frame.columns) == RECORD_COLUMNS
    assert len(frame) == 3


def test_markdown_lists_failures(tmp_path):
    """The summary names failing checks."""
    text = markdown_summary(_report())
    assert "x-shift/p=3" in text
    assert "| 1 | 1 | 1 | 3 |" in text
    path = write_report(_report(), "md", str(tmp_path / "run.md"))
    assert "Verification Summary: spectral" in path.read_text(encoding="utf-8")


def test_unknown_format(tmp_path):
    """Only json, csv and md are written."""
    with pytest.raises(UsageError):
        write_report(_report(), "xml", str(tmp_path / "run.xml"))


def test_config_file(tmp_path):
    """Flag spellings map to fields, lists split on commas and overrides win."""
    path = tmp_path / "run.cfg"
    path.write_text("# sweep\nsuite = spectral\np = 3, 5\ncase = inert\ncpi = 2\ntol = 1e-8\nseed = 7\n")
    parser = SuiteConfigParser(str(path))
    assert parser.get_values()["primes"] == [3, 5]
    cfg = parser.to_config({"seed": 11, "fmt": None})
    assert cfg.suite == "spectral"
    assert cfg.primes == [3, 5]
    assert cfg.cases == ["inert"]
    assert cfg.c_pi == [2]
    assert cfg.tolerance == 1e-8
    assert cfg.seed == 11
    assert cfg.fmt == "json"


@pytest.mark.parametrize("text", ["p = three\n", "just words\n", "colour = red\n", "p = 4\n"])
def test_bad_config_file(tmp_path, text):
    """Malformed lines, unknown keys and bad primes are usage errors."""
    path = tmp_path / "bad.cfg"
    path.write_text(text)
    with pytest.raises(UsageError):
        SuiteConfigParser(str(path)).to_config()


def test_missing_config_file(tmp_path):
    """A missing file is a usage error."""
    with pytest.raises(UsageError):
        SuiteConfigParser(str(tmp_path / "absent.cfg"))
