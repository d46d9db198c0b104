import json

import pytest

from main import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.splitlines()


def test_psl2_then_stats(tmp_path, capsys):
    graph_path = tmp_path / "psl2_11.json"
    dot_path = tmp_path / "psl2_11.dot"
    code, _ = _run(capsys, "psl2", "--q", "11", "--out", str(graph_path), "--dot", str(dot_path))
    assert code == EXIT_OK
    assert dot_path.read_text().startswith("graph Delta {")

    code, lines = _run(capsys, "stats", str(graph_path))
    assert code == EXIT_OK
    assert lines[0] == "instance=psl2_11"
    assert lines[1] == "vertices=[2,3,5,11]"
    assert lines[2] == "edges=[[2,3],[2,5]]"
    assert lines[3].startswith("omega=2 ")
    assert lines[4].startswith("chi=2 ")
    assert lines[5] == "alpha=3 independent_set=[3,5,11]"
    assert lines[6].startswith("chi_complement=3 ")
    assert lines[7] == "perfect=yes"


def test_psl2_prints_graph_without_out(capsys):
    code, lines = _run(capsys, "psl2", "--q", "11")
    assert code == EXIT_OK
    assert lines == ['{"vertices":[2,3,5,11],"edges":[[2,3],[2,5]]}']


def test_psl2_invalid_q(capsys):
    code, _ = _run(capsys, "psl2", "--q", "6")
    assert code == EXIT_USAGE


def test_check_negative_control_fails(capsys, samples_dir):
    code, lines = _run(capsys, "check", str(samples_dir / "c5_control.json"), "--theorem-a")
    assert code == EXIT_CHECK_FAILED
    assert lines[0].startswith("check=theorem-a status=fail")
    assert '"kind":"hole"' in lines[0]
    assert lines[-1] == "summary=fail"


def test_check_all_on_s5(tmp_path, capsys, samples_dir):
    report_path = tmp_path / "report.json"
    code, lines = _run(capsys, "check", str(samples_dir / "S5.json"), "--report", str(report_path))
    assert code == EXIT_OK
    assert lines[-1] == "summary=pass"
    payload = json.loads(report_path.read_text())
    assert payload[0]["instance_name"] == "S5"


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == EXIT_USAGE


def test_unknown_flag_is_usage_error(samples_dir):
    with pytest.raises(SystemExit) as excinfo:
        main(["check", str(samples_dir / "S5.json"), "--theorem-z"])
    assert excinfo.value.code == EXIT_USAGE


def test_missing_file_is_usage_error(tmp_path, capsys):
    code, _ = _run(capsys, "stats", str(tmp_path / "nope.json"))
    assert code == EXIT_USAGE


def test_sweep_psl2_summary(capsys):
    code, lines = _run(capsys, "sweep", "--family", "psl2", "--q-max", "100")
    assert code == EXIT_OK
    assert lines[0].startswith("instance=PSL2(4) family=psl2 summary=pass")
    assert lines[-1] == "instances=33, failures=0"


def test_sweep_ingested_controls(capsys, samples_dir):
    code, lines = _run(capsys, "sweep", "--family", "ingested", "--dir", str(samples_dir))
    assert code == EXIT_OK
    assert lines[-1] == "instances=4, failures=2"
    assert any(line.startswith("  check=theorem-a status=fail") for line in lines)

    code, _ = _run(capsys, "sweep", "--family", "ingested", "--dir", str(samples_dir), "--strict")
    assert code == EXIT_CHECK_FAILED


def test_sweep_products(capsys):
    code, lines = _run(capsys, "sweep", "--family", "products", "--pairs", "20")
    assert code == EXIT_OK
    assert "pairs=21 failed=0" in lines[0]


def test_sweep_missing_range_is_usage_error(capsys):
    code, _ = _run(capsys, "sweep", "--family", "psl2")
    assert code == EXIT_USAGE


def test_product_of_psl2_5(capsys, samples_dir):
    path = str(samples_dir / "psl2_5.json")
    code, lines = _run(capsys, "product", path, path)
    assert code == EXIT_OK
    assert lines[0] == "product=PSL2(5)xPSL2(5) degrees=[1,3,4,5,9,12,15,16,20,25]"
    assert lines[1] == "join_formula=equal"
    assert json.loads(lines[2])["vertices"] == [2, 3, 5]


def test_sn_prints_degrees_and_graph(capsys):
    code, lines = _run(capsys, "sn", "--n", "5")
    assert code == EXIT_OK
    assert lines[0] == '{"name":"S5","degrees":[1,4,5,6],"annotations":{"group_realizable":true,"solvable":false}}'
    assert json.loads(lines[1])["vertices"] == [2, 3, 5]


def test_certify_cycle_search(tmp_path, capsys):
    graph_path = tmp_path / "psl2_16.json"
    _run(capsys, "psl2", "--q", "16", "--out", str(graph_path))
    code, lines = _run(capsys, "certify-cycle", str(graph_path), "--pi", "2,3,17")
    assert code == EXIT_OK
    assert lines == ["pi=[2,3,17] u=2 alpha=4 variant=PSL2 ordering=[3,17] valid=true"]


def test_certify_cycle_given_parameters(tmp_path, capsys):
    graph_path = tmp_path / "psl2_16.json"
    _run(capsys, "psl2", "--q", "16", "--out", str(graph_path))
    code, lines = _run(capsys, "certify-cycle", str(graph_path), "--pi", "2,3,17", "--u", "3", "--alpha", "1")
    assert code == EXIT_CHECK_FAILED
    assert lines[0].endswith("valid=false")

    code, lines = _run(capsys, "certify-cycle", str(graph_path), "--pi", "3,5,17")
    assert code == EXIT_CHECK_FAILED
    assert lines == ["certificate=none"]


def test_certify_cycle_requires_u_and_alpha_together(samples_dir):
    with pytest.raises(SystemExit) as excinfo:
        main(["certify-cycle", str(samples_dir / "S5.json"), "--pi", "2,3,5", "--u", "2"])
    assert excinfo.value.code == EXIT_USAGE


def test_build_dot_highlight(tmp_path, capsys, samples_dir):
    dot_path = tmp_path / "c5.dot"
    code, lines = _run(capsys, "build", "--degrees", str(samples_dir / "c5_control.json"),
                       "--dot", str(dot_path), "--highlight")
    assert code == EXIT_OK
    assert lines == []
    assert dot_path.read_text().count("color=red") == 10


def test_repeated_runs_identical(tmp_path, capsys, samples_dir):
    graph_path = str(tmp_path / "psl2_16.json")
    _run(capsys, "psl2", "--q", "16", "--out", graph_path)
    psl2_5 = str(samples_dir / "psl2_5.json")
    commands = [
        ("stats", str(samples_dir / "c5_control.json")),
        ("psl2", "--q", "11"),
        ("sn", "--n", "7"),
        ("check", str(samples_dir / "empty4_control.json")),
        ("product", psl2_5, psl2_5),
        ("certify-cycle", graph_path, "--pi", "2,3,17"),
        ("sweep", "--family", "products", "--pairs", "10"),
    ]
    for argv in commands:
        first = _run(capsys, *argv)
        second = _run(capsys, *argv)
        assert first == second, argv
        assert first[1], argv
