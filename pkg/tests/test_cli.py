import csv
import io
import json
import math

import pytest

from sombor import inequalities as ineq
from sombor.cli import main
from sombor.report import CHECK_COLUMNS, dumps, format_float


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_sombor(capsys):
    code, out, _ = run(capsys, "compute", "--index", "SO", "--g6", "Bw", "--no-timestamp")
    assert code == 0
    (row,) = json.loads(out)["rows"]
    assert math.isclose(row["value"], 6 * math.sqrt(2), rel_tol=1e-15)
    assert "8.48528137423857" in out


def test_compute_beta_zero_counts_edges(capsys):
    code, out, _ = run(capsys, "compute", "--index", "KA", "--alpha", "2", "--beta", "0", "--g6", "Bw", "--g6", "CF", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [float(r["value"]) for r in rows] == [3.0, 3.0]


def test_compute_domain_error(capsys):
    code, _, err = run(capsys, "compute", "--index", "KAred", "--alpha", "-1", "--beta", "-1", "--g6", "A_")
    assert code == 3 and "pendant" in err and "A_" in err


def test_compute_parse_error(capsys):
    code, _, err = run(capsys, "compute", "--g6", "C!")
    assert code == 2 and "position 1" in err


def test_compute_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "compute", "--input", str(tmp_path / "nope.g6"))
    assert code == 2


def test_usage_error(capsys):
    assert main(["compute", "--index", "Nope", "--g6", "Bw"]) == 2
    assert main([]) == 2


def test_compute_edge_list_file(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("3\n0 1\n1 2\n")
    code, out, _ = run(capsys, "compute", "--index", "M1", "--input", str(p), "--format", "text")
    assert code == 0 and "6.0" in out


def test_check_single_point(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "T1_chain", "--g6", "Bw", "--alpha", "2", "--beta", "1", "--lambda", "0.5", "--no-timestamp")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["case"] for r in rows] == [1, 2]
    assert rows[1]["verdict"] == "tight"


def test_suite_isolated_vertex_corpus(capsys, tmp_path):
    p = tmp_path / "corpus.g6"
    p.write_text("A?\nBw\n")
    code, out, _ = run(capsys, "suite", "--corpus", str(p), "--no-timestamp")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert all(r["verdict"] == "hypothesis_unmet" for r in rows if r["graph6"] == "A?")
    assert any(r["graph6"] == "Bw" and r["verdict"] == "tight" for r in rows)


def test_suite_corrupted_checker_exits_1(capsys, tmp_path, monkeypatch):
    def flipped(g):
        rows = ineq.check_ISI(g)
        return [ineq.bound("T_ISI", r.case, r.params, r.rhs, r.lhs, strict=r.strict) for r in rows]

    monkeypatch.setattr(ineq, "CATALOG", (ineq.Theorem("T_ISI", (), flipped, True),))
    p = tmp_path / "corpus.g6"
    p.write_text("BW\n")
    code, _, _ = run(capsys, "suite", "--corpus", str(p))
    assert code == 1


def test_suite_default_corpus_reports_reduced_chain_violations(capsys):
    # graphs whose edges all touch a pendant vertex break one strict line of
    # the reduced chain; the harness must surface that as exit 1
    code, out, _ = run(capsys, "suite", "--max-n", "4", "--no-timestamp")
    report = json.loads(out)
    assert code == 1
    bad = [r for r in report["rows"] if r["verdict"] == "violated"]
    assert bad and {r["theorem"] for r in bad} == {"T2_chain_red"}
    assert report["summary"]["tightness_mismatches"] == 0


def test_suite_grid_file(capsys, tmp_path):
    grid = tmp_path / "grid.txt"
    grid.write_text("alpha: 2\nbeta: 1\nlambda: 1/2\nmu: 1/2\np: 2\n")
    corpus = tmp_path / "c.g6"
    corpus.write_text("Bw\n")
    code, out, _ = run(capsys, "suite", "--corpus", str(corpus), "--grid", str(grid), "--no-timestamp")
    assert code == 0
    assert json.loads(out)["summary"]["grid"]["lambda"] == [0.5]


def test_suite_bad_grid(capsys, tmp_path):
    grid = tmp_path / "grid.txt"
    grid.write_text("gamma: 2\n")
    assert main(["suite", "--grid", str(grid)]) == 2


def test_suite_csv_columns(capsys, tmp_path):
    corpus = tmp_path / "c.g6"
    corpus.write_text("Bw\nCh\n")
    code, out, _ = run(capsys, "suite", "--corpus", str(corpus), "--format", "csv")
    assert code == 0
    header = out.splitlines()[0].split(",")
    assert tuple(header) == CHECK_COLUMNS


def test_suite_byte_identical(tmp_path, capsys, monkeypatch):
    corpus = tmp_path / "c.g6"
    corpus.write_text("Bw\nCh\nCl\nC~\nDhC\n")
    out = tmp_path / "r.json"
    argv = ["suite", "--corpus", str(corpus), "--no-timestamp", "-o", str(out)]
    snapshots = []
    for threads in ("1", "1", "4"):
        monkeypatch.setenv("SOMBOR_THREADS", threads)
        assert main(argv) == 0
        snapshots.append(out.read_bytes())
    assert snapshots[0] == snapshots[1] == snapshots[2]


def test_suite_output_unwritable(tmp_path):
    corpus = tmp_path / "c.g6"
    corpus.write_text("Bw\n")
    assert main(["suite", "--corpus", str(corpus), "-o", str(tmp_path / "missing" / "x.json")]) == 2


def test_bad_thread_env(monkeypatch, tmp_path):
    corpus = tmp_path / "c.g6"
    corpus.write_text("Bw\n")
    monkeypatch.setenv("SOMBOR_THREADS", "many")
    assert main(["suite", "--corpus", str(corpus)]) == 2


def test_extremal_matching(capsys):
    code, out, _ = run(capsys, "extremal", "--n", "6", "--class", "all", "--index", "KA", "--alpha", "2", "--beta", "0.5", "--min", "--assert-theorem", "--no-timestamp")
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["optimizers"] == ["E@Q?"] and report["summary"]["matches_theorem"] is True


def test_extremal_default_max(capsys):
    code, out, _ = run(capsys, "extremal", "--n", "5", "--class", "connected", "--max")
    assert code == 0 and json.loads(out)["summary"]["optimizers"] == ["D~{"]


def test_extremal_cap(capsys):
    assert main(["extremal", "--n", "8"]) == 2


def test_extremal_domain(capsys):
    assert main(["extremal", "--n", "5", "--index", "KAred", "--alpha", "-1", "--beta", "-1", "--min"]) == 3


def test_extremal_claims(capsys):
    code, out, _ = run(capsys, "extremal", "--n", "5", "--claims", "--alpha", "-1", "--beta", "-1", "--assert-theorem")
    assert code == 0
    rows = {r["claim"]: r["status"] for r in json.loads(out)["rows"]}
    assert rows["2b"] == "confirmed" and rows["1d"] == "not_applicable"


def test_format_float():
    assert format_float(1.0) == "1.0"
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(float("nan")) == "null"
    assert dumps({"b": 1, "a": [True, None, 2.5]}) == '{\n  "b": 1,\n  "a": [\n    true,\n    null,\n    2.5\n  ]\n}'
