import json
from fractions import Fraction

import pytest

from cli import (
    RunConfig,
    complex_hash,
    dumps_complex,
    loads_complex,
    main,
    render,
    run_suite,
    suite_names,
    vector_to_dict,
)
from complexes import hypercube, simplex_skeleton
from database import DatabaseManager
from expansion import Cochain
from utils.errors import InvalidInput


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_build_hypercube(capsys):
    code, out = _run(capsys, "build", "--shape", "hypercube", "--d", "3")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "hdx/1"
    assert data["f_vector"] == [8, 12, 6, 1]
    assert data["reduced"] is True


def test_built_file_feeds_compute(capsys, tmp_path):
    path = tmp_path / "q3.json"
    assert main(["build", "--shape", "hypercube", "--d", "3", "--output", str(path)]) == 0
    code, out = _run(capsys, "compute", "cheeger", "--input", str(path), "--k", "1")
    assert code == 0
    record = json.loads(out)
    assert record["value"] == {"num": 1, "den": 1}
    assert record["complex_hash"] == complex_hash(hypercube(3))
    assert "wall_time" not in record


def test_compute_homological_mode(capsys):
    code, out = _run(capsys, "compute", "cheeger", "--shape", "hypercube", "--d", "3", "--k", "1",
                     "--mode", "ho", "--timing")
    assert code == 0
    record = json.loads(out)
    assert record["value"] == {"num": 2, "den": 3}
    assert record["wall_time"] >= 0


def test_missing_k_is_invalid_input(capsys):
    code, out = _run(capsys, "compute", "cheeger", "--shape", "hypercube", "--d", "2")
    assert code == 2
    assert json.loads(out)["error"] == "InvalidInput"


def test_budget_exceeded_exit_code(capsys):
    code, out = _run(capsys, "compute", "cheeger", "--shape", "simplex", "--n", "8", "--dim", "1",
                     "--k", "0", "--budget", "2")
    assert code == 3
    record = json.loads(out)
    assert record["error"] == "BudgetExceeded"
    assert record["budget"] == 2
    assert record["needed"] > 2


def test_degenerate_space_exit_code(capsys):
    code, out = _run(capsys, "compute", "cheeger", "--shape", "simplex", "--n", "4", "--k", "3")
    assert code == 4
    assert json.loads(out)["exit_code"] == 4


@pytest.mark.parametrize("argv", [
    ["compute", "bogus"],
    ["verify", "no-such-suite"],
    ["build", "--shape", "hypercube"],
    ["compute", "cheeger", "--shape", "hypercube", "--d", "2", "--k", "0", "--budget", "0"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2
    capsys.readouterr()


def test_cosystole_from_cochain_file(capsys, tmp_path):
    x = simplex_skeleton(4, 2)
    phi = Cochain.from_labels(x, 1, [(0, 1), (0, 2), (1, 2)])
    path = tmp_path / "phi.json"
    path.write_text(json.dumps(vector_to_dict(phi)), encoding="utf-8")
    code, out = _run(capsys, "compute", "cosystole", "--shape", "simplex", "--n", "4", "--dim", "2",
                     "--cochain", str(path))
    assert code == 0
    record = json.loads(out)
    assert record["norm"] == 3
    assert record["value"] == 2


def test_cochain_for_another_complex_is_rejected(capsys, tmp_path):
    phi = Cochain.from_labels(simplex_skeleton(4, 2), 1, [(0, 1)])
    path = tmp_path / "phi.json"
    path.write_text(json.dumps(vector_to_dict(phi)), encoding="utf-8")
    code, _ = _run(capsys, "compute", "cosystole", "--shape", "simplex", "--n", "5", "--dim", "2",
                   "--cochain", str(path))
    assert code == 2


def test_flip_graph_text_output(capsys):
    code, out = _run(capsys, "compute", "flip-graph", "--shape", "simplex", "--n", "3", "--dim", "1",
                     "--format", "text")
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_paley_csv_output(capsys):
    code, out = _run(capsys, "compute", "paley", "--p", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,k,norm,exact_csy,bound,ratio"
    assert lines[1].startswith("5,1,4,")


def test_verify_cycle_detection(capsys):
    code, out = _run(capsys, "verify", "cycle-detection")
    assert code == 0
    record = json.loads(out)
    assert record["passed"] is True
    assert record["failed"] == 0
    assert record["criteria"][0]["suite"] == "cycle-detection"


def test_suite_names_include_all():
    names = suite_names()
    assert names[-1] == "all"
    assert {"hypercube", "duality", "paley", "bw1"} <= set(names)


def test_compute_records_into_ledger(capsys, db_path):
    code, _ = _run(capsys, "compute", "cheeger", "--shape", "hypercube", "--d", "2", "--k", "0",
                   "--db", db_path)
    assert code == 0
    runs = DatabaseManager(db_path).get_latest_runs()
    assert len(runs) == 1
    assert runs[0]["command"] == "cheeger"
    assert runs[0]["mode"] == "co"
    assert runs[0]["value"] == Fraction(1)
    assert runs[0]["complex_hash"] == complex_hash(hypercube(2))


def test_verify_and_runs_history(capsys, db_path):
    assert main(["verify", "cycle-detection", "--db", db_path]) == 0
    capsys.readouterr()
    code, out = _run(capsys, "runs", "--db", db_path, "--suite", "cycle-detection")
    assert code == 0
    assert "cycle-detection" in out
    code, out = _run(capsys, "runs", "--db", db_path, "--stats")
    assert code == 0
    assert "Нет данных" in out


def test_malformed_complex_text():
    with pytest.raises(InvalidInput):
        loads_complex("not json")
    with pytest.raises(InvalidInput):
        loads_complex(json.dumps({"schema": "other"}))


def test_loaded_complex_keeps_its_hash():
    x = hypercube(2)
    assert complex_hash(loads_complex(dumps_complex(x))) == complex_hash(x)


def test_render_formats():
    record = {"value": Fraction(1, 2), "k": 1}
    assert render(record, "json") == '{"k":1,"value":{"den":2,"num":1}}\n'
    assert render(record, "csv").splitlines() == ["value,k", "1/2,1"]
    assert render(record, "text") == "k: 1\nvalue: 1/2\n"


def test_run_config_validation():
    with pytest.raises(InvalidInput):
        RunConfig("compute", budget=0)
    with pytest.raises(InvalidInput):
        RunConfig("compute", mode="both")
    cfg = RunConfig("compute", options={"n": None})
    assert cfg.option("n", 7) == 7


QUICK_SUITES = {"cycle-detection", "lattice"}


@pytest.mark.parametrize("name", [
    pytest.param(name, marks=() if name in QUICK_SUITES else pytest.mark.slow)
    for name in suite_names() if name != "all"
])
def test_every_suite_passes(name):
    criteria = run_suite(name, RunConfig("verify", target=name))
    assert criteria
    assert [c["criterion"] for c in criteria if not c["passed"]] == []
