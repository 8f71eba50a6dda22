import json
import subprocess
import sys

import pytest

from w2blocks.cli import main

ANCHOR_CSV = """"","4","3,1","2,2","2,1,1","1,1,1,1"
"4",1,0,0,0,0
"3,1",1,1,0,0,0
"2,2",0,1,1,0,0
"2,1,1",1,1,1,1,0
"1,1,1,1",1,0,0,1,1
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_partition_core(capsys):
    assert run(capsys, "partition", "core", "--e", "2", "2,2") == (0, '{"core":[],"weight":2}\n', "")
    assert run(capsys, "partition", "core", "--e", "2", "2,2", "--format", "text")[1] == "[] weight 2\n"


def test_partition_label(capsys):
    code, out, _ = run(capsys, "partition", "label", "--e", "2", "--core", "", "3,1")
    assert json.loads(out) == {"a": 1, "b": 1, "partial": 1, "eps": 1}
    code, out, _ = run(capsys, "partition", "label", "--e", "2", "4")
    assert json.loads(out)["colour"] == "black"


@pytest.mark.parametrize("argv, expected", [
    (("partition", "conjugate", "3,1"), [2, 1, 1]),
    (("partition", "weight", "--e", "3", "3,3"), 2),
    (("partition", "sign", "--e", "2", "1,1"), -1),
    (("partition", "mullineux", "--e", "3", "6"), [3, 3]),
])
def test_partition_verbs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out) == expected


def test_dmatrix_csv(capsys):
    assert run(capsys, "block", "dmatrix", "--e", "2", "--core", "", "--format", "csv")[1] == ANCHOR_CSV


def test_ac_rows(capsys):
    doc = json.loads(run(capsys, "block", "ac", "--e", "2", "--core", "")[1])
    assert doc["entries"][0] == [1, 0, 0, 1, 1]
    assert doc["rows_block"] == {"e": 2, "core": [], "weight": 2}


def test_quiver_dot(capsys):
    out = run(capsys, "block", "ext-quiver", "--e", "2", "--core", "", "--format", "dot")[1]
    assert out.startswith("graph ext_quiver {\n") and out.endswith("}\n")
    assert out.count("--") == 5


@pytest.mark.parametrize("verb", ["enumerate", "dmatrix-v", "inverse", "cartan", "layers",
                                  "pairs", "chain"])
def test_block_verbs_emit_json(capsys, verb):
    code, out, _ = run(capsys, "block", verb, "--e", "3", "--core", "1")
    assert code == 0
    json.loads(out)


def test_text_format(capsys):
    out = run(capsys, "block", "dmatrix-v", "--e", "2", "--core", "", "--format", "text")[1]
    assert "v^2" in out


def test_output_is_deterministic(capsys):
    a = run(capsys, "block", "pairs", "--e", "4", "--core", "2,1", "--all-frames")
    b = run(capsys, "block", "pairs", "--e", "4", "--core", "2,1", "--all-frames")
    assert a == b


def test_out_file(capsys, tmp_path):
    path = tmp_path / "d.csv"
    assert run(capsys, "block", "dmatrix", "--e", "2", "--core", "", "--format", "csv",
               "--out", str(path))[1] == ""
    assert path.read_text() == ANCHOR_CSV


@pytest.mark.parametrize("argv", [
    ("partition", "core", "2,2"),
    ("partition", "mullineux", "--e", "2", "2,2"),
    ("block", "dmatrix", "--e", "2", "--core", "1,1"),
    ("block", "dmatrix", "--e", "2", "--core", "", "--p", "2"),
    ("block", "dmatrix", "--e", "2", "--core", "", "--format", "dot"),
    ("block", "frobnicate", "--e", "2"),
    ("verify", "--p-values", "0,2"),
    ("verify", "--checks", "nonsense"),
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_verify_subset(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--checks", "ac-closed-form", "--e-range", "2,3",
                       "--max-core", "3", "--format", "text")
    assert code == 0
    assert out.splitlines()[0].startswith("PASS ac-closed-form")


def test_verify_failure_exit_code(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"e_range": [3], "max_core_size": 1,
                               "checks": ["weyl-structure-literal"],
                               "output_dir": str(tmp_path / "out")}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg))
    assert code == 1
    doc = json.loads(out)
    assert doc["ok"] is False
    assert json.loads((tmp_path / "out" / "report.json").read_text()) == doc


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "w2blocks.cli", "partition", "conjugate", "3,1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "[2,1,1]\n"
