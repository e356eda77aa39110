"""Command-line surface: outputs, exit codes, determinism, serialization."""

import json

import pytest

from spiralshift.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_apply_worked_example(capsys):
    code, out, _ = run(capsys, ["apply", "--d", "5", "--j", "3", "--x", "0,2,1,0,1"])
    assert code == 0
    assert out.strip() == "0,2,2,0,1"


def test_decompose_origin(capsys):
    code, out, _ = run(capsys, ["decompose", "--d", "2", "--x", "0,0"])
    assert code == 0
    assert out.strip() == "0,0"


def test_stats_worked_example(capsys):
    code, out, _ = run(capsys, ["stats", "--d", "5", "--x", "0,2,1,0,1"])
    assert code == 0
    assert out.strip() == "n=4 W=6"


def test_series_width_one(capsys):
    code, out, _ = run(capsys, ["series", "--d", "1", "--tcut", "3"])
    assert code == 0
    assert out.splitlines() == ["(0,0): 1", "(1,0): 1", "(2,0): 1", "(3,0): 1"]


def test_series_methods_agree_byte_for_byte(capsys):
    outputs = set()
    for method in ("product", "configs", "recurrence"):
        _, out, _ = run(
            capsys, ["series", "--d", "3", "--tcut", "6", "--method", method]
        )
        outputs.add(out)
    assert len(outputs) == 1


def test_series_is_deterministic(capsys):
    _, first, _ = run(capsys, ["series", "--d", "2", "--tcut", "2"])
    _, second, _ = run(capsys, ["series", "--d", "2", "--tcut", "2"])
    assert first == second


def test_json_record_round_trips(capsys):
    code, out, _ = run(
        capsys, ["stats", "--d", "5", "--x", "0,2,1,0,1", "--json"]
    )
    assert code == 0
    record = json.loads(out)
    assert record["schema"] == "spiralshift.output/1"
    assert record["command"] == "stats"
    assert record["inputs"] == {"d": 5, "x": [0, 2, 1, 0, 1]}
    assert record["result"] == {"size": 4, "weight": 6}
    assert record["elapsed_s"] >= 0
    assert json.loads(json.dumps(record)) == record


def test_json_matches_table_data(capsys):
    _, table, _ = run(capsys, ["series", "--d", "2", "--tcut", "2"])
    _, machine, _ = run(capsys, ["series", "--d", "2", "--tcut", "2", "--json"])
    record = json.loads(machine)
    rebuilt = [f"({n},{w}): {c}" for n, w, c in record["result"]["coeffs"]]
    assert rebuilt == table.splitlines()


def test_json_deterministic_modulo_timing(capsys):
    _, first, _ = run(capsys, ["count", "--q", "2", "--d", "2", "--N", "2", "--json"])
    _, second, _ = run(capsys, ["count", "--q", "2", "--d", "2", "--N", "2", "--json"])
    a, b = json.loads(first), json.loads(second)
    a.pop("elapsed_s")
    b.pop("elapsed_s")
    assert a == b


def test_orbit_brute_force(capsys):
    code, out, _ = run(
        capsys, ["orbit", "--d", "2", "--x0", "0,0", "--gens", "1,0", "--tcut", "3"]
    )
    assert code == 0
    assert out.splitlines() == ["(0,0): 1", "(1,0): 1", "(2,0): 1", "(3,0): 1"]


def test_orbit_closed_form(capsys):
    code, out, _ = run(
        capsys,
        ["orbit", "--d", "2", "--x0", "0,0", "--gens", "1,1", "--tcut", "6", "--closed-form"],
    )
    assert code == 0
    assert out.splitlines() == ["(0,0): 1", "(2,1): 1", "(4,2): 1", "(6,3): 1"]


def test_orbit_closed_form_rejects_dependent_generators(capsys):
    code, _, err = run(
        capsys,
        ["orbit", "--d", "2", "--x0", "0,0", "--gens", "1,0", "2,0", "--closed-form"],
    )
    assert code == 3
    assert "error" in err


def test_count_table(capsys):
    code, out, _ = run(capsys, ["count", "--q", "2", "--d", "2", "--N", "3"])
    assert code == 0
    assert out.splitlines() == [
        "n=0 observed=1 predicted=1",
        "n=1 observed=3 predicted=3",
        "n=2 observed=7 predicted=7",
        "n=3 observed=15 predicted=15",
    ]


def test_strata_table(capsys):
    code, out, _ = run(capsys, ["strata", "--q", "2", "--d", "2", "--n", "2"])
    assert code == 0
    assert out.splitlines() == [
        "x=(0,2) W=2 predicted=4 observed=4",
        "x=(1,1) W=0 predicted=1 observed=1",
        "x=(2,0) W=1 predicted=2 observed=2",
    ]


def test_cap_exceeded_exits_4(capsys):
    code, _, err = run(
        capsys, ["count", "--q", "2", "--d", "3", "--N", "3", "--cap", "256"]
    )
    assert code == 4
    assert "cap" in err


def test_malformed_tuple_exits_2(capsys):
    code, _, err = run(capsys, ["stats", "--d", "2", "--x", "0,oops"])
    assert code == 2
    assert "error" in err


def test_rank_out_of_range_exits_2(capsys):
    code, _, _ = run(capsys, ["apply", "--d", "2", "--j", "5", "--x", "0,0"])
    assert code == 2


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["series", "--d", "2", "--tcut", "2", "--method", "magic"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "result.txt"
    code, out, _ = run(
        capsys, ["apply", "--d", "5", "--j", "3", "--x", "0,2,1,0,1", "--out", str(target)]
    )
    assert code == 0
    assert out == ""
    assert target.read_text().strip() == "0,2,2,0,1"


def test_verify_quick_profile(capsys):
    code, out, _ = run(capsys, ["verify", "--profile", "quick"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) >= 11
    assert all(line.startswith("PASS") for line in lines)
