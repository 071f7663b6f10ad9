import json
import subprocess
import sys

import pytest

from mixedcage.cli import main
from mixedcage.export import from_json


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "mixedcage", *args], capture_output=True, text=True, timeout=300
    )


def test_field_command(capsys):
    assert main(["field", "--q", "8"]) == 0
    out = capsys.readouterr().out
    assert "modulus: x^3 + x + 1" in out
    assert "xi: x" in out


def test_field_tables(capsys):
    assert main(["field", "--q", "7", "--show-tables"]) == 0
    out = capsys.readouterr().out
    assert "xi: 3" in out and "  1: 3" in out


def test_invalid_q_exit_code(capsys):
    assert main(["verify", "--q", "12"]) == 3
    assert capsys.readouterr().err.strip() == "error: 12 is not a prime power"
    assert main(["construct", "--q", "5"]) == 3
    assert main(["field", "--q", "1"]) == 3


def test_usage_exit_code(capsys):
    assert main([]) == 2
    assert main(["verify"]) == 2
    assert main(["table", "--q-list", "a,b"]) == 2
    assert main(["--help"]) == 0


def test_verify_pass_and_fail(capsys):
    assert main(["verify", "--q", "7"]) == 0
    assert "claims: PASS" in capsys.readouterr().out
    assert main(["verify", "--q", "8", "--rules", "literal"]) == 1
    capsys.readouterr()
    assert main(["verify", "--q", "4", "--force", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["order"] == 60


def test_verify_json(capsys):
    assert main(["verify", "--q", "8", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["claims_pass"] is True
    assert doc["order"] == 252 and doc["mixed_girth"] == 6 and doc["z"] == 2


def test_construct_json_schema(capsys):
    assert main(["construct", "--q", "7"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"q", "construction", "params", "vertices", "edges", "arcs"}
    assert doc["q"] == 7 and len(doc["vertices"]) == 192
    assert len(doc["edges"]) == 192 * 7 // 2
    assert len(doc["arcs"]) == 192
    assert doc["vertices"][0] == "P(1,0)"
    G = from_json(json.dumps(doc))
    assert G.order == 192


def test_export_formats(tmp_path):
    dot = tmp_path / "h.dot"
    assert main(["export", "--q", "7", "--format", "dot", "--out", str(dot)]) == 0
    text = dot.read_text()
    assert text.startswith('digraph "H_7_2" {')
    assert text.count("[dir=none]") == 672
    out = tmp_path / "h.csv"
    assert main(["export", "--q", "7", "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "source,target,type"
    assert sum(ln.endswith(",arc") for ln in lines) == 192


def test_export_requires_out(capsys):
    assert main(["export", "--q", "7"]) == 2


def test_table_command(capsys):
    assert main(["table", "--q-list", "7,8,9"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "q,z,r,girth,order,verified,source"
    assert out[1] == '7,1,7,6,192,,"H_{q,p}"'
    assert main(["table", "--q-list", "7,12"]) == 1


def test_oracle_check_small(capsys):
    assert main(["oracle-check", "--max-q", "9", "--random", "5"]) == 0
    assert capsys.readouterr().out.strip().endswith("all agree")


def test_construct_is_deterministic():
    a, b = run("construct", "--q", "9"), run("construct", "--q", "9")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout


@pytest.mark.parametrize("args", [["field", "--q", "9"], ["table", "--q-list", "7"]])
def test_console_entry(args):
    assert run(*args).returncode == 0
