import io
import json
import subprocess
import sys

import pytest

from schreier_counts.cli import main
from schreier_counts.render import load_table_json, render_table
from schreier_counts.sequences import compute_sequence
from schreier_counts.sets import SchreierError
from schreier_counts.tables import build_r_table


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_table_csv_k1(golden):
    code, text = run("table", "--k", "1", "--rows", "8", "--format", "csv")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 9
    assert lines[1].startswith("1,1,")
    assert text == (golden / "r_table_k1_n8.csv").read_text()


def test_table_json_k2():
    code, text = run("table", "--k", "2", "--rows", "3", "--format", "json")
    assert code == 0
    assert json.loads(text)["rows"] == [[0], [0, 1], [1, 0, 1]]
    assert text.endswith("\n") and not text.endswith("\n\n")


def test_table_pretty_single_cell():
    code, text = run("table", "--k", "1", "--rows", "1", "--format", "pretty")
    assert code == 0
    assert text.splitlines()[-1].split("|")[1].strip() == "1"


def test_table_json_round_trip():
    table = build_r_table(3, 12)
    assert load_table_json(render_table(table, "json")) == table
    with pytest.raises(SchreierError):
        load_table_json('{"k": 1, "rows": [[1], [0]]}')


@pytest.mark.parametrize("argv", [
    ("table", "--k", "0"),
    ("table", "--k", "1", "--rows", "-3"),
    ("seq", "--k", "x"),
    ("member", "--k", "1", "--set", "3,2"),
    ("member", "--k", "1", "--set", "0,2"),
    ("member", "--k", "1", "--set", "a"),
    ("verify", "--max-n", "5"),
    ("verify", "--k", "1", "--checks", "nonsense"),
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2


def test_seq_examples():
    assert run("seq", "--k", "1", "--which", "s", "--count", "8", "--engine", "dp") == (0, "1 1 2 3 5 8 13 21\n")
    assert run("seq", "--k", "2", "--which", "r0", "--count", "8", "--engine", "brute") == (0, "0 0 1 1 2 3 6 11\n")
    assert run("seq", "--k", "2", "--which", "t", "--count", "4") == (0, "0 0 1 2\n")


def test_seq_bfile_and_csv():
    code, text = run("seq", "--k", "1", "--count", "4", "--format", "bfile")
    assert text == "1 1\n2 1\n3 2\n4 3\n"
    code, text = run("seq", "--k", "2", "--which", "t", "--count", "3", "--format", "csv")
    assert text == "n,t\n1,0\n2,0\n3,1\n"
    code, text = run("seq", "--k", "2", "--count", "3", "--format", "json")
    assert json.loads(text) == {"k": 2, "which": "s", "engine": "dp", "values": [1, 2, 4]}


def test_seq_brute_over_limit_exits_3(capsys):
    code, _ = run("seq", "--k", "1", "--count", "25", "--engine", "brute")
    assert code == 3
    assert "enumeration bound exceeded" in capsys.readouterr().err


@pytest.mark.parametrize("which", ["s", "r0", "t"])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_engines_agree(k, which):
    outputs = {run("seq", "--k", str(k), "--which", which, "--count", "16", "--engine", e)[1]
               for e in ("dp", "brute", "recurrence")}
    assert len(outputs) == 1


def test_recurrence_engine_beyond_brute_reach():
    assert compute_sequence(5, "s", 80, "recurrence") == compute_sequence(5, "s", 80, "dp")
    assert compute_sequence(4, "t", 3, "recurrence").values == (0, 0, 0)


def test_poly_examples():
    assert run("poly", "--k", "2") == (0, "x^4 - 2x^3 + x - 1\n")
    assert run("poly", "--k", "0") == (0, "x - 1\n")
    code, text = run("poly", "--k", "3", "--format", "json")
    assert json.loads(text) == [-1, -1, 1, 2, -5, 2, 4, -4, 1]


def test_member_examples():
    code, text = run("member", "--k", "2", "--set", "2,3,4,5")
    assert code == 0
    assert "member: yes" in text and "blocks: [2,3][4,5]" in text and "d: 2" in text
    code, text = run("member", "--k", "1", "--set", "2,3,4,5")
    assert "member: no" in text and "d:" not in text
    code, text = run("member", "--k", "1", "--set", "3")
    assert "member: yes" in text and "d: 2" in text
    code, text = run("member", "--k", "2", "--set", "1", "--format", "json")
    assert json.loads(text)["d"] == "INFINITY"


def test_verify_all_pass():
    code, text = run("verify", "--k", "2", "--max-n", "18", "--checks", "all")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 10
    assert all(line.startswith("PASS") for line in lines)


def test_verify_single_check():
    code, text = run("verify", "--k", "1", "--max-n", "40", "--checks", "recurrence-s")
    assert code == 0
    assert text.startswith("PASS recurrence-s")


def test_verify_skips_when_too_short():
    code, text = run("verify", "--k", "3", "--max-n", "6", "--checks", "recurrence-s,initial-sums")
    assert code == 0
    assert all(line.startswith("SKIP") for line in text.splitlines())


def test_verify_corrupted_table_file(tmp_path):
    table = build_r_table(2, 12).with_cell(9, 4, build_r_table(2, 12).cell(9, 4) + 1)
    path = tmp_path / "bad.json"
    path.write_text(render_table(table, "json"))
    code, text = run("verify", "--table-file", str(path))
    assert code == 1
    assert "FAIL oracle: cell n=9, d=4" in text


def test_verify_table_file_mismatch(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(render_table(build_r_table(2, 6), "json"))
    assert run("verify", "--table-file", str(path), "--k", "3")[0] == 2
    assert run("verify", "--table-file", str(path), "--max-n", "9")[0] == 2
    assert run("verify", "--table-file", str(path))[0] == 0


def test_output_is_deterministic():
    for argv in (("table", "--k", "3", "--rows", "20", "--format", "csv"),
                 ("seq", "--k", "2", "--count", "20", "--engine", "brute", "--format", "json")):
        assert run(*argv) == run(*argv)


def test_no_trailing_whitespace():
    for argv in (("table", "--k", "2", "--rows", "10"),
                 ("table", "--k", "2", "--rows", "10", "--format", "json"),
                 ("seq", "--k", "2", "--format", "json")):
        text = run(*argv)[1]
        assert text.endswith("\n")
        assert all(line == line.rstrip() for line in text.splitlines())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schreier_counts", "poly", "--k", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "x^2 - x - 1\n"
