import json
import subprocess
import sys

import pytest

from otau import cli
from otau.suites import CaseResult


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", [
    ["nosuch"],
    ["crossed", "--tau0", "1/2"],
    ["crossed", "--tau0", "1/2", "--tau1", "1/3", "--symbolic-z"],
    ["crossed", "--tau0", "1/2", "--tau1", "-1/2"],
    ["crossed", "--tau0", "abc", "--tau1", "1"],
    ["index-sets", "--kmax", "0"],
    ["index-sets", "--kmax", "1000"],
    ["crossed", "--format", "yaml"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 2
    assert out == ""


def test_json_report_shape(capsys):
    code, out, _ = run(["index-sets", "--kmax", "4"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["summary"] == {"pass": 4}
    case = report["cases"][0]
    assert set(case) == {"suite", "case-id", "parameters", "status", "witness", "wall-time"}
    assert case["case-id"].startswith("index-sets/")


def test_leading_verify_word_is_accepted(capsys):
    code, out, _ = run(["verify", "index-sets", "--kmax", "2"], capsys)
    assert code == 0 and json.loads(out)["summary"] == {"pass": 2}


def test_numeric_tau_is_recorded(capsys):
    code, out, _ = run(["index-sets", "--kmax", "1", "--tau0", "2/7", "--tau1", "3/11"], capsys)
    cfg = json.loads(out)["config"]
    assert code == 0 and cfg["mode"] == "numeric"


def test_markdown_and_out_file(tmp_path, capsys):
    target = tmp_path / "report.md"
    code, out, _ = run(["index-sets", "--kmax", "3", "--format", "markdown", "--out", str(target)],
                       capsys)
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("# otau ")
    assert "| index-sets | 3 | 0 | 0 | 0 |" in text


def strip_timing(report):
    return [{k: v for k, v in c.items() if k != "wall-time"} for c in report["cases"]]


def test_same_seed_gives_identical_records(capsys):
    argv = ["crossed", "--seed", "11"]
    first = json.loads(run(argv, capsys)[1])
    second = json.loads(run(argv, capsys)[1])
    a = json.dumps(strip_timing(first), sort_keys=True)
    b = json.dumps(strip_timing(second), sort_keys=True)
    assert a == b


def test_different_seed_changes_random_cases(capsys):
    a = strip_timing(json.loads(run(["crossed", "--seed", "1"], capsys)[1]))
    b = strip_timing(json.loads(run(["crossed", "--seed", "2"], capsys)[1]))
    assert a != b


def record(suite, status):
    return CaseResult(suite, f"{suite}/x", {}, status)


def test_exit_code_rules():
    assert cli.exit_code([record("gwa", "pass"), record("gwa", "skipped")]) == 0
    assert cli.exit_code([record("gwa", "pass"), record("gwa", "fail")]) == 1
    assert cli.exit_code([record("endo-crosscheck", "discrepancy")]) == 0
    assert cli.exit_code([record("gwa", "discrepancy")]) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "otau", "index-sets", "--kmax", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"] == {"pass": 2}
