import json
from fractions import Fraction

import pytest

from rrtri.cli import main
from rrtri.triangle import ratio


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def jsonl(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_solve_26(capsys):
    code, out, _ = run(capsys, "solve", 26, "--format", "jsonl")
    assert code == 0
    recs = [r for r in jsonl(out) if not r.get("summary")]
    assert ["11", "39", "49"] in [r["sides"] for r in recs]
    for r in recs:
        assert r["schema_version"] == "1" and r["command"] == "solve"
        assert r["component"] == "EGG"
        assert r["residue_mod_8"] == 2
        sides = [int(x) for x in r["sides"]]
        assert ratio(*sides) == Fraction(r["ratio"]) == 26


def test_solve_3_empty(capsys):
    code, out, _ = run(capsys, "solve", 3, "--denominator-bound", 50)
    assert code == 1
    assert "no triangles up to bound 50" in out


@pytest.mark.parametrize("n", [2, 1, 0])
def test_solve_domain_errors(capsys, n):
    code, _, err = run(capsys, "solve", n)
    assert code == 2
    if n == 2:
        assert "singular" in err and "equilateral" in err


def test_bad_flags(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "solve", 26, "--denominator-bound", 0)
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve", "26", "--format", "csv"])
    assert exc.value.code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", 11, 39, 49)
    assert code == 0 and "R/r = 26" in out and "valid triangle: yes" in out
    code, out, _ = run(capsys, "verify", -13, 63, 80)
    assert code == 1 and "R/r = 7" in out and "valid triangle: no" in out
    code, _, err = run(capsys, "verify", 1, 2, 3)
    assert code == 2 and "degenerate" in err
    code, out, _ = run(capsys, "verify", 3, 4, 6)
    assert code == 1


def test_verify_jsonl(capsys):
    code, out, _ = run(capsys, "verify", 2, 3, 3, "--format", "jsonl")
    (rep,) = jsonl(out)
    assert code == 0
    assert rep["ratio"] == "9/4" and rep["ratio_kind"] == "M" and rep["target"] == "4"
    assert rep["euler_d2_sign"] == "positive"
    code, out, _ = run(capsys, "verify", 1, 1, 1, "--format", "jsonl")
    assert jsonl(out)[0]["euler_d2_sign"] == "zero"


def test_table1_builtin(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == 0
    assert "16/16 rows pass" in out
    assert "WARNING" not in out


def test_table1_csv(capsys, tmp_path):
    dest = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table1", "--format", "csv", "--out", dest)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "N,f,g,h,pass" and len(lines) == 17
    assert "866,3025,5629,8649,true" in lines
    assert dest.read_text() == out


def test_table1_file(capsys, tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("# N f g h\n586 3809 18411 22201\n")
    assert run(capsys, "table1", good)[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("26 11 39 49\n74 259 475 730\n")
    code, out, _ = run(capsys, "table1", bad)
    assert code == 1 and "FAIL" in out
    assert run(capsys, "table1", tmp_path / "missing.txt")[0] == 2


def test_torsion(capsys):
    code, out, _ = run(capsys, "torsion", "--n", 7)
    assert code == 0 and "Z/6" in out and "(29, 406)" in out and "WARNING" not in out
    code, out, _ = run(capsys, "torsion", "--m", 4, "--format", "jsonl")
    (rep,) = jsonl(out)
    assert sum(1 for p in rep["points"] if p["order"] == 2) == 3
    assert rep["warnings"]
    assert run(capsys, "torsion", "--n", 2)[0] == 2


@pytest.mark.parametrize("m, sides", [(4, ["2", "3", "3"]), (12, ["4", "5", "5"])])
def test_near_eq_isosceles(capsys, m, sides):
    code, out, _ = run(capsys, "near-eq", m, "--format", "jsonl")
    recs = [r for r in jsonl(out) if not r.get("summary")]
    assert code == 0
    assert sides in [r["sides"] for r in recs]
    assert all(r["ratio"] == f"{2 * m + 1}/{m}" for r in recs)
    assert all(len(r["angles"]) == 3 for r in recs)


def test_near_eq_search(capsys):
    code, out, _ = run(capsys, "near-eq", 5, "--denominator-bound", 30, "--egg-bound", 3)
    assert code == 0 and "8,9,11" in out


def test_near_eq_89_verify(capsys):
    code, out, _ = run(capsys, "near-eq", 89, "--sides",
                       10188073747943, 10937217961673, 11065215566304)
    assert code == 0
    assert "179/89" in out and "55.16, 61.78, 63.06" in out
    code, _, _ = run(capsys, "near-eq", 88, "--sides",
                     10188073747943, 10937217961673, 11065215566304)
    assert code == 1


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", 20, 30, "--denominator-bound", 40, "--format", "jsonl")
    rows = jsonl(out)
    assert code == 0
    assert rows[-1]["summary"] and rows[-1]["triangle_ns"] == [26]
    assert rows[-1]["residue_histogram"] == {"2": 1}
    assert run(capsys, "scan", 3, 3)[0] == 0
    assert run(capsys, "scan", 100, 3)[0] == 2


def test_jsonl_roundtrip(capsys):
    _, out, _ = run(capsys, "solve", 74, "--format", "jsonl", "--multiple-bound", 1)
    for line in out.splitlines():
        assert json.dumps(json.loads(line), separators=(",", ":")) == line


def test_python_m_entry():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "rrtri", "verify", "11", "39", "49"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "R/r = 26" in res.stdout
