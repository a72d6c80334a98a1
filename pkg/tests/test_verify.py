import json

import pytest

from hecke_skein import __version__
from hecke_skein import verify as V
from hecke_skein.cli import main, parse_braid
from hecke_skein.scalars import delta, v, z


def test_braidsum_reports():
    first, second = V.check_braidsum(2)
    assert first.passed and first.lhs == first.rhs == "1*h1"
    assert second.passed and second.lhs == second.rhs
    assert second.params == {"m": 2}
    assert second.version == __version__


def test_murphy_degenerate_parameters_are_skipped():
    for n, m in [(0, 2), (2, 0)]:
        report = V.murphy_case(n, m)
        assert report.status == V.SKIP
        assert "degenerate" in report.note


def test_murphy_small_case():
    report = V.murphy_case(1, 1)
    assert report.passed
    lhs, rhs, gap = V.murphy_sides(1, 1)
    assert lhs.coefficient((1,)) == z * v ** -1
    assert gap.is_zero()


def test_affine_relation_reports_scalars():
    for n in range(1, 4):
        assert V.affine_relation(n).passed
    report = V.affine_relation(3)
    assert report.note == f"a = {z * v ** -1}; b = {delta()}"


def test_adiff_and_endpoint_cases():
    report = V.adiff_case(1, 1)
    assert report.passed
    assert report.lhs == report.rhs
    assert V.endpoint_case(4).passed


def test_ah_case_small():
    assert V.ah_case(1, 2).passed


def test_failing_comparison_keeps_both_sides():
    report = V._compare("demo", {}, delta(), v, V._Timer())
    assert report.status == V.FAIL
    assert report.lhs == str(delta()) and report.rhs == str(v)
    assert "FAILED demo" in V.summary_table([report])


def test_structure_suite_is_seeded():
    a = V.structure_case("trace-symmetry", 3, 10)
    b = V.structure_case("trace-symmetry", 3, 10)
    assert a.passed and b.passed
    assert (a.params, a.note) == (b.params, b.note)


def test_report_lines_are_json(tmp_path):
    path = tmp_path / "report.jsonl"
    code = main(["verify", "braidsum", "--m-max", "3", "--report", str(path)])
    assert code == 0
    records = [json.loads(line) for line in path.read_text().splitlines()]
    assert [r["params"]["m"] for r in records] == [1, 2, 3]
    assert set(records[0]) == {"check", "params", "status", "elapsed", "lhs", "rhs", "note", "version"}
    assert all(r["status"] == "pass" for r in records)


def test_reruns_differ_only_in_timing(tmp_path):
    paths = [tmp_path / "a.jsonl", tmp_path / "b.jsonl"]
    for p in paths:
        main(["verify", "derived", "--alpha-max", "2", "--pm-max", "2", "--report", str(p)])
    runs = []
    for p in paths:
        records = [json.loads(line) for line in p.read_text().splitlines()]
        for r in records:
            r.pop("elapsed")
        runs.append(records)
    assert runs[0] == runs[1]


def test_exit_code_reflects_failures(monkeypatch, capsys):
    def failing_plan(*args):
        return [(V.VerificationReport, ("fake", {}, V.FAIL))]

    monkeypatch.setattr(V, "plan_braidsum", failing_plan)
    assert main(["verify", "braidsum"]) == 1
    assert "1 failed" in capsys.readouterr().out


def test_parallel_jobs_match_serial():
    serial = V.run_cases(V.plan_braidsum(3), jobs=1)
    parallel = V.run_cases(V.plan_braidsum(3), jobs=2)
    assert [(r.params, r.status, r.lhs) for r in serial] == [(r.params, r.status, r.lhs) for r in parallel]


@pytest.mark.parametrize("argv", [
    ["verify", "mirror", "--degree", "4"],
    ["verify", "adiff", "--degree", "4"],
    ["verify", "murphy", "--bound", "3"],
    ["verify", "ah", "--bound", "3"],
    ["verify", "centrality", "--bound", "3"],
    ["verify", "affine", "--n-max", "2"],
    ["verify", "structure", "--trials", "3", "--seed", "5"],
])
def test_verify_subcommands(argv, capsys):
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out


def test_compute_pm(capsys):
    assert main(["compute", "pm", "--m", "2"]) == 0
    out = capsys.readouterr().out
    assert "P_2 = 2*h2 - 1*h1^2" in out
    assert "True" in out
    assert main(["compute", "pm", "--m", "0"]) == 2


def test_compute_trace(capsys):
    assert main(["compute", "trace", "--braid", "1", "--strands", "2"]) == 0
    out = capsys.readouterr().out
    assert f"framed:   {v ** -1 * delta()}" in out
    assert f"unframed: {delta()}" in out


def test_compute_thread(capsys):
    assert main(["compute", "thread", "--braid", "", "--strands", "1", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == f"({z * v ** -1 + delta()}) * [1]"
    assert main(["compute", "thread", "--braid", "1,-2,1", "--n", "2"]) == 0


def test_bad_braids():
    assert parse_braid("1, -2,3") == [1, -2, 3]
    with pytest.raises(SystemExit):
        main(["compute", "trace", "--braid", "1,0"])
    with pytest.raises(SystemExit):
        main(["compute", "trace", "--braid", "a"])
    assert main(["compute", "trace", "--braid", "3", "--strands", "2"]) == 2
