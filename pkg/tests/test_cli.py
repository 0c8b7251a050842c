import io
import json
from pathlib import Path

import jsonschema
import pytest

from rtgraph.cli import main

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report.schema.json").read_text())


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def gen(capsys, monkeypatch, *args):
    code, out, _ = run(capsys, monkeypatch, ["gen", *args])
    assert code == 0
    return out


def test_gen_complete(capsys, monkeypatch):
    assert gen(capsys, monkeypatch, "complete", "3") == "3 3\n1 2\n1 3\n2 3\n"


def test_gen_cycle(capsys, monkeypatch):
    assert gen(capsys, monkeypatch, "cycle", "4").splitlines()[0] == "4 4"


@pytest.mark.parametrize("argv", [["gen", "complete", "1"], ["gen", "nope"], ["gen", "cycle", "x"]])
def test_gen_usage_errors(capsys, monkeypatch, argv):
    assert run(capsys, monkeypatch, argv)[0] == 2


def test_argparse_usage_error(capsys, monkeypatch):
    with pytest.raises(SystemExit) as exc:
        main(["kirchhoff", "--method", "bogus"])
    assert exc.value.code == 2


def test_derive(capsys, monkeypatch):
    k2 = gen(capsys, monkeypatch, "complete", "2")
    code, out, _ = run(capsys, monkeypatch, ["derive", "rt"], k2)
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines[0] == "7 9"
    assert "# partition I=1-1 V=2-3 W1=4-5 W2=6-7" in out
    code, out, _ = run(capsys, monkeypatch, ["derive", "r"], k2)
    assert out.endswith("3 3\n1 2\n1 3\n2 3\n")
    c5 = gen(capsys, monkeypatch, "cycle", "5")
    code, out, _ = run(capsys, monkeypatch, ["derive", "line"], c5)
    assert [l for l in out.splitlines() if not l.startswith("#")][0] == "5 5"


def test_derive_parse_error(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["derive", "rt"], "3 1\n1 1\n")[0] == 2
    assert run(capsys, monkeypatch, ["derive", "rt"], "garbage\n")[0] == 2


def test_kirchhoff_methods(capsys, monkeypatch):
    rt_k2 = run(capsys, monkeypatch, ["derive", "rt", "--family", "complete", "2"])[1]
    assert run(capsys, monkeypatch, ["kirchhoff", "--method", "resistance"], rt_k2)[1] == "74/3\n"
    assert run(capsys, monkeypatch, ["kirchhoff", "--method", "closed-form-rt", "--family", "cycle", "3"])[1] == "455/6\n"
    star = gen(capsys, monkeypatch, "star", "3")
    values = {run(capsys, monkeypatch, ["kirchhoff", "--method", m], star)[1] for m in ("coefficients", "resistance")}
    assert values == {"9\n"}
    spec = run(capsys, monkeypatch, ["kirchhoff", "--method", "spectrum"], star)[1]
    assert float(spec) == pytest.approx(9, rel=1e-12)


def test_kirchhoff_float(capsys, monkeypatch):
    out = run(capsys, monkeypatch, ["kirchhoff", "--float", "--method", "coefficients", "--family", "cycle", "3"])[1]
    assert out == "2 2\n"
    out = run(capsys, monkeypatch, ["kirchhoff", "--float", "--method", "closed-form-rt", "--family", "complete", "2"])[1]
    assert out == "74/3 24.6666666666667\n"


def test_kirchhoff_exit_codes(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["kirchhoff"], "4 2\n1 2\n3 4\n")[0] == 3
    assert run(capsys, monkeypatch, ["kirchhoff", "--method", "closed-form-rt", "--family", "star", "3"])[0] == 4
    assert run(capsys, monkeypatch, ["kirchhoff", "--method", "spectrum", "--tol", "1e-6"], "4 2\n1 2\n3 4\n")[0] == 3


def test_kirchhoff_from_file(capsys, monkeypatch, tmp_path):
    f = tmp_path / "c4.txt"
    f.write_text("# square\n4 4\n1 2\n2 3\n3 4\n1 4\n")
    assert run(capsys, monkeypatch, ["kirchhoff", str(f)])[1] == "5\n"
    assert run(capsys, monkeypatch, ["kirchhoff", str(tmp_path / "missing.txt")])[0] == 2


def test_verify_all_k2(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["verify", "--suite", "all", "--family", "complete", "2"])
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert report["passed"] and report["schema"] == 1
    assert {c["status"] for c in report["checks"]} <= {"pass", "skipped"}
    assert "complete 2: PASS" in err


def test_verify_cor46_petersen(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify", "--suite", "cor46", "--family", "petersen"])
    assert code == 0
    checks = {c["name"]: c for c in json.loads(out)["checks"]}
    assert checks["cor46.bound_le_value"]["note"] == "strict inequality"


def test_verify_not_regular(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["verify", "--suite", "thm44", "--family", "star", "3"])[0] == 4


def test_verify_disconnected(capsys, monkeypatch):
    two_triangles = "6 6\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n"
    assert run(capsys, monkeypatch, ["verify"], two_triangles)[0] == 3


def test_verify_batch_parallel(capsys, monkeypatch):
    argv = ["verify", "--jobs", "2", "--suite", "thm44",
            "--family", "cycle", "5", "--family", "hypercube", "3", "--family", "complete", "4"]
    code, out, _ = run(capsys, monkeypatch, argv)
    assert code == 0
    reports = json.loads(out)
    jsonschema.validate(reports, SCHEMA)
    assert [r["graph_id"] for r in reports] == ["cycle 5", "hypercube 3", "complete 4"]
    numeric = [c for r in reports for c in r["checks"] if c["kind"] == "numeric"]
    assert numeric and all(c["residual"] is not None for c in numeric)


@pytest.mark.parametrize("family", [["complete", "4"], ["cycle", "6"], ["complete_bipartite", "2", "2"], ["petersen"], ["hypercube", "3"]])
def test_round_trip_pipeline(capsys, monkeypatch, family):
    base = gen(capsys, monkeypatch, *family)
    rt = run(capsys, monkeypatch, ["derive", "rt"], base)[1]
    via_resistance = run(capsys, monkeypatch, ["kirchhoff", "--method", "resistance"], rt)[1]
    via_formula = run(capsys, monkeypatch, ["kirchhoff", "--method", "closed-form-rt"], base)[1]
    assert via_resistance == via_formula
