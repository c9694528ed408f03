import json
import subprocess
import sys
from fractions import Fraction

import pytest

from dp7 import classify, cli
from dp7.chow import ChowClass, curve
from dp7.render import Table, parse_records, render


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(list(argv))
    capsys.readouterr()
    return exc.value.code


# -- cohom --------------------------------------------------------------------

def test_cohom_dual_plane(capsys):
    code, out, _ = run(capsys, "--format", "csv", "cohom", "-2", "2")
    assert code == 0
    assert out.splitlines()[1] == "-2,2,0,3,0,0,-3"


def test_cohom_negative_after_guard(capsys):
    _, a, _ = run(capsys, "cohom", "-2", "2")
    _, b, _ = run(capsys, "cohom", "--", "-2", "2")
    assert a == b


@pytest.mark.parametrize("l1,l2,row", [("0", "0", "0,0,1,0,0,0,1"), ("1", "1", "1,1,9,0,0,0,9")])
def test_cohom_examples(capsys, l1, l2, row):
    code, out, _ = run(capsys, "cohom", l1, l2, "--format", "csv")
    assert code == 0 and out.splitlines()[1] == row


def test_cohom_bad_integer_is_usage_error(capsys):
    assert usage_error(capsys, "cohom", "x", "2") == 2
    assert usage_error(capsys, "cohom", "1.5", "2") == 2


# -- classify -----------------------------------------------------------------

def test_classify_a_rows(capsys):
    code, out, _ = run(capsys, "classify", "A", "--format", "csv")
    assert code == 0
    assert len(out.strip().splitlines()) == 14


def test_classify_b_rows(capsys):
    code, out, _ = run(capsys, "classify", "B")
    assert code == 0
    assert "(beta,2(1-beta))" in out
    assert sum(line.startswith("| A") for line in out.splitlines()) == 10


@pytest.mark.parametrize("table", ["A", "B"])
def test_classify_verify_ok(capsys, table):
    code, _, err = run(capsys, "classify", table, "--verify")
    assert code == 0 and err == ""


def test_classify_verify_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(classify, "compare_with_golden", lambda table: ["row 3: changed"])
    code, _, err = run(capsys, "classify", "B", "--verify")
    assert code == 1
    assert "MISMATCH row 3: changed" in err


def test_classify_unknown_table(capsys):
    assert usage_error(capsys, "classify", "C") == 2


def test_classify_records_round_trip(capsys):
    _, out, _ = run(capsys, "classify", "B", "--format", "records")
    rows = [classify.ClassificationRow.from_record(r) for r in parse_records(out)]
    assert rows == classify.table_b()


# -- other subcommands --------------------------------------------------------

def test_divisors(capsys):
    _, out, _ = run(capsys, "divisors", "--format", "csv")
    assert [tuple(map(int, line.split(",")[:2])) for line in out.splitlines()[1:]] == \
        classify.divisor_candidates()


def test_acm_lines(capsys):
    _, out, _ = run(capsys, "acm-lines", "--format", "csv")
    assert out.splitlines()[1:] == [
        "0,0,O_F,1", "0,1,O_F(f),3", "0,2,O_F(2f),6", "1,-1,O_F(xi-f),1", "1,0,O_F(xi),4",
    ]


def test_acm_lines_small_box(capsys):
    assert usage_error(capsys, "acm-lines", "--box", "3") == 2


def test_ulrich_records(capsys):
    _, out, _ = run(capsys, "ulrich", "--format", "records")
    recs = parse_records(out)
    assert [r["c2"] for r in recs] == [curve(3, 3), curve(4, 1)]
    assert [r["beta"] for r in recs] == [[3, 3], [4, 1]]
    assert all(r["chi"] == 14 and r["h*c2"] == 9 and r["c1*c2"] == 18 for r in recs)


def test_chi(capsys):
    code, out, _ = run(capsys, "chi", "--c1=2,2", "--c2=3,3", "--format", "records")
    rec = parse_records(out)[0]
    assert code == 0 and rec["chi_rr"] == rec["chi_hrr"] == 14


def test_chi_rational_and_negative(capsys):
    code, out, _ = run(capsys, "chi", "--rank=1", "--c1=-1,2", "--c2=1/2,0", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].startswith("1,")


def test_chi_bad_pair(capsys):
    assert usage_error(capsys, "chi", "--c1=1") == 2
    assert usage_error(capsys, "chi", "--rank=0") == 2


def test_lines(capsys):
    _, out, _ = run(capsys, "lines", "--format", "csv")
    assert out.splitlines()[1:] == ["f^2,1,1,0,1", "xi^2-f^2,1,0,1,-1"]


def test_missing_command(capsys):
    assert usage_error(capsys) == 2


# -- report -------------------------------------------------------------------

def test_report(tmp_path, capsys):
    path = tmp_path / "report.md"
    code, _, _ = run(capsys, "report", str(path))
    assert code == 0
    text = path.read_text()
    assert "5 initialized aCM line bundles" in text
    assert "| (3,3) |" in text and "| (4,1) |" in text
    assert "h^1(End) = 5" in text
    assert "h^1(B (x) A^dual) = 4" in text


def test_report_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "report", str(tmp_path / "missing" / "report.md"))
    assert code == 3
    assert "cannot write report" in err


# -- determinism and formats --------------------------------------------------

@pytest.mark.parametrize("argv", [["classify", "A"], ["ulrich"], ["lines"], ["acm-lines"]])
@pytest.mark.parametrize("fmt", ["md", "csv", "records"])
def test_deterministic(capsys, argv, fmt):
    _, a, _ = run(capsys, "--format", fmt, *argv)
    _, b, _ = run(capsys, *argv, "--format", fmt)
    assert a == b


def test_report_deterministic(tmp_path, capsys):
    p, q = tmp_path / "a.md", tmp_path / "b.md"
    run(capsys, "report", str(p))
    run(capsys, "report", str(q))
    assert p.read_bytes() == q.read_bytes()


def test_records_schema_round_trip():
    t = Table("t", ["x", "c"], [[Fraction(-7, 3), curve(1, -2)], [Fraction(4, 2), ChowClass(pt=5)]])
    recs = parse_records(render(t, "records"))
    assert recs == [{"x": Fraction(-7, 3), "c": curve(1, -2)}, {"x": 2, "c": ChowClass(pt=5)}]
    json.loads(render(t, "records"))


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        render(Table("t", ["x"], [[1]]), "xml")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "dp7", "cohom", "0", "0", "--format", "csv"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.splitlines()[1] == "0,0,1,0,0,0,1"
