import json

import pytest

from decat.cli.config import RunConfig
from decat.cli.main import build_parser, main
from decat.fieldmath import backend_manager


@pytest.fixture(autouse=True)
def restore_backend():
    # main() sets the active backend; put the previous one back afterwards.
    with backend_manager.using_backend("evaluation"):
        yield


def _graph(tmp_path, name, vertices, edges, **extra):
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps({"vertices": vertices, "edges": edges, **extra}))
    return str(path)


@pytest.fixture
def a2(tmp_path):
    return _graph(tmp_path, "a2", ["1", "2"], [["1", "2"]])


@pytest.fixture
def sl2(tmp_path):
    return _graph(tmp_path, "sl2", ["1"], [], w={"1": 2})


def test_cartan_info(sl2, capsys):
    assert main(["cartan", "info", "--graph", sl2, "--output", "-"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["cartan_matrix"] == [[2]]
    assert report["finite_type"] is True
    assert report["w"] == [2]
    assert [row["dim"] for row in report["rows"]] == [0, 2, 0]
    assert report["config"]["command"] == "cartan info"


def test_cartan_info_table(a2, capsys):
    assert main(["cartan", "info", "--graph", a2, "--w", "1,0"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "v\tpairings\tdim\tcanonical"


def test_invalid_graphs_exit_with_status_2(tmp_path, capsys):
    empty = _graph(tmp_path, "empty", [], [])
    assert main(["cartan", "info", "--graph", empty, "--w", ""]) == 2
    assert capsys.readouterr().err.startswith("decat: error:")
    assert main(["cartan", "info", "--graph", str(tmp_path / "missing.json"), "--w", "1"]) == 2


def test_missing_framing(a2, capsys):
    assert main(["rep", "build", "--graph", a2]) == 2
    assert "--w" in capsys.readouterr().err


def test_unknown_subcommands_are_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["rep", "destroy"])
    assert info.value.code == 2


def test_rep_verify(a2, capsys):
    assert main(["rep", "verify", "--graph", a2, "--w", "1,1"]) == 0
    out = capsys.readouterr().out
    assert "all checks passed" in out
    assert "FAIL" not in out


def test_rep_build_writes_a_module_file(a2, tmp_path, capsys):
    module = tmp_path / "v10.json"
    assert main(["rep", "build", "--graph", a2, "--w", "1,0", "--output", str(module)]) == 0
    assert "dimension 3" in capsys.readouterr().out
    assert json.loads(module.read_text())["w"] == [1, 0]
    assert main(["rep", "verify", "--module", str(module), "--checks", "commutator"]) == 0


def test_rep_build_truncated_modules(tmp_path, capsys):
    triangle = _graph(tmp_path, "triangle", ["1", "2", "3"], [["1", "2"], ["2", "3"], ["3", "1"]])
    module = tmp_path / "m.json"
    argv = ["rep", "build", "--graph", triangle, "--w", "1,0,0", "--depth", "2"]
    with pytest.warns(UserWarning, match="truncated"):
        assert main(argv + ["--output", str(module)]) == 0
    assert "truncated at depth 2" in capsys.readouterr().out
    assert json.loads(module.read_text())["w"] == [1, 0, 0]

    with pytest.warns(UserWarning, match="truncated"):
        assert main(argv + ["--output", "-"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["truncated"] is True
    assert "character" not in report
    assert report["support"]["w=1,0,0;v=0,0,0"] == 1
    assert report["support"]["w=1,0,0;v=1,0,0"] == 1
    assert all(sum(map(int, key.split("v=")[1].split(","))) <= 2 for key in report["support"])


def test_corrupted_modules_fail_with_status_1(a2, tmp_path, capsys):
    module = tmp_path / "v11.json"
    assert main(["rep", "build", "--graph", a2, "--w", "1,1", "--output", str(module)]) == 0
    data = json.loads(module.read_text())
    generator = next(
        g for g in data["generators"] if g["direction"] == "F" and g["source"] == "w=1,1;v=0,0"
    )
    generator["matrix"][0][0] = "7"
    module.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["rep", "verify", "--module", str(module)]) == 1
    assert "verification FAILED" in capsys.readouterr().out


def test_braid_eval(a2, capsys):
    argv = ["braid", "eval", "--graph", a2, "--w", "1,0", "--word", "T1 T2 T1"]
    assert main(argv + ["--minus", "T2 T1 T2"]) == 0
    assert "difference is zero: True" in capsys.readouterr().out
    assert main(argv + ["--minus", "T1 T2"]) == 2
    capsys.readouterr()

    squared = ["braid", "eval", "--graph", a2, "--w", "1,0", "--word", "T1 T1"]
    assert main(squared + ["--minus", "1", "--output", "-"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["difference_is_zero"] is False
    assert report["word"] == "T1 T1"


def test_theta_needs_the_geometric_model(a2, capsys):
    argv = ["braid", "eval", "--graph", a2, "--w", "1,0", "--word", "Th1"]
    assert main(argv) == 2
    assert "decat: error:" in capsys.readouterr().err


def test_geometric_braid_eval(capsys):
    argv = ["braid", "eval", "--geometric", "--N", "2", "--k", "1", "--word", "T1 T1^-1"]
    assert main(argv + ["--minus", "", "--output", "-"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["source_k"] == report["target_k"] == 1
    assert report["difference_is_zero"] is True
    assert main(["braid", "eval", "--geometric", "--word", "T1"]) == 2


def test_braid_verify(a2, capsys):
    assert main(["braid", "verify", "--graph", a2, "--w", "1,1"]) == 0
    assert "all checks passed" in capsys.readouterr().out


def test_ktheory_verify(capsys):
    assert main(["ktheory", "verify", "--N", "4", "--checks", "lemma73-2"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS lemma73-2") == 5
    assert main(["ktheory", "verify", "--N", "2", "--checks", "jacobi"]) == 2


def test_reports_are_byte_identical_for_a_seed(tmp_path):
    paths = [tmp_path / "first.json", tmp_path / "second.json"]
    for path in paths:
        argv = ["ktheory", "verify", "--N", "2", "--checks", "commutator,affine"]
        assert main(argv + ["--seed", "5", "--output", str(path), "--quiet"]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    report = json.loads(paths[0].read_text())
    assert report["backend"]["seed"] == 5
    assert report["config"]["checks"] == ["commutator", "affine"]


def test_run_config(monkeypatch):
    monkeypatch.delenv("DECAT_SEED", raising=False)
    monkeypatch.delenv("DECAT_JOBS", raising=False)
    args = build_parser().parse_args(["ktheory", "verify", "--N", "3", "--jobs", "2"])
    args.command = "ktheory verify"
    config = RunConfig.from_args(args)
    assert (config.N, config.jobs, config.seed) == (3, 2, 0)
    assert config.to_json() == {"command": "ktheory verify", "seed": 0, "N": 3}
