import json

from friezes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--field", "2", "--width", "3")
    assert code == 0
    assert "count: 11" in out
    assert out.count("size") == 4


def test_enumerate_json(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "enumerate", "--field", "2^2", "--width", "2"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 17
    assert sorted(o["size"] for o in doc["orbits"]) == [1, 1, 5, 10]


def test_enumerate_naive_strategy(capsys):
    code, base, _ = run(
        capsys, "--format", "json", "enumerate", "--field", "3", "--width", "2"
    )
    code, out, _ = run(
        capsys,
        "--format", "json",
        "enumerate", "--field", "3", "--width", "2", "--strategy", "naive",
    )
    assert code == 0 and out == base


def test_enumerate_bad_descriptor(capsys):
    code, _, err = run(capsys, "enumerate", "--field", "4", "--width", "2")
    assert code == 1
    assert "prime" in err


def test_enumerate_budget_exceeded(capsys):
    code, _, err = run(
        capsys, "--budget", "100", "enumerate", "--field", "3", "--width", "6"
    )
    assert code == 2
    assert "budget" in err.lower()


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("FRIEZES_BUDGET", "100")
    code, _, err = run(capsys, "enumerate", "--field", "3", "--width", "6")
    assert code == 2


def test_count_friezes_table(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "count", "--field", "3", "--max-width", "7"
    )
    assert code == 0
    doc = json.loads(out)
    assert [r["count"] for r in doc["friezes"]] == [2, 10, 35, 91, 260, 820, 2501]


def test_count_moduli_table(capsys):
    code, out, _ = run(
        capsys,
        "--format", "json", "count", "--field", "2", "--kind", "moduli", "--max-n", "6",
    )
    assert code == 0
    doc = json.loads(out)
    by_n = {r["n"]: r for r in doc["moduli"]}
    assert by_n[6]["configurations"] == 66
    assert by_n[6]["moduli"] == 11
    assert by_n[6]["moduli_plus"] == 11
    assert "plus" not in by_n[5]


def test_verify_all_ok(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--field", "3", "--which", "all", "--max-width", "3", "--max-n", "5",
    )
    assert code == 0
    assert "MISMATCH" not in out


def test_verify_friezes_only(capsys):
    code, out, _ = run(
        capsys, "verify", "--field", "3", "--which", "friezes", "--max-width", "4"
    )
    assert code == 0
    assert "configurations" not in out


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    # force a wrong closed form to exercise the mismatch path
    monkeypatch.setattr(
        "friezes.search.count_friezes", lambda q, char2, w: 999
    )
    code, out, _ = run(
        capsys, "verify", "--field", "2", "--which", "friezes", "--max-width", "2"
    )
    assert code == 3
    assert "MISMATCH" in out


def test_map_row_to_config(capsys):
    code, out, _ = run(
        capsys, "map", "--field", "2", "--to", "config", "--row", "1,1,1,0,0"
    )
    assert code == 0
    assert "round trip: ok" in out


def test_map_points_to_frieze(capsys):
    code, out, _ = run(
        capsys, "map", "--field", "3", "--to", "frieze", "--points", "0,1,inf"
    )
    assert code == 0
    assert "row: (" in out and "round trip: ok" in out


def test_map_minus_class_fails_cleanly(capsys):
    code, _, err = run(
        capsys, "map", "--field", "3", "--to", "frieze", "--points", "0,1,0,1"
    )
    assert code == 1
    assert "plus class" in err


def test_print_triangle(capsys):
    code, out, _ = run(capsys, "print", "--field", "2", "--row", "1,1,1,0,0")
    assert code == 0
    assert out == "1 1 1 1\n 1 1 1\n  0 0\n   1\n"


def test_print_rejects_non_frieze(capsys):
    code, _, err = run(capsys, "print", "--field", "3", "--row", "1,1,1,1")
    assert code == 1
    assert "not a frieze" in err


def test_partitions_triangle(capsys):
    code, out, _ = run(capsys, "--format", "json", "partitions", "--max-n", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["triangle"][-1] == {"n": 6, "counts": [1, 10, 20, 9, 1]}


def test_worker_flag_changes_nothing(capsys):
    _, base, _ = run(
        capsys, "--format", "json", "enumerate", "--field", "3", "--width", "3"
    )
    for workers in ("2", "4"):
        _, out, _ = run(
            capsys,
            "--workers", workers,
            "--format", "json", "enumerate", "--field", "3", "--width", "3",
        )
        assert out == base


def test_json_outputs_are_valid_json(capsys):
    for argv in (
        ["--format", "json", "count", "--field", "5", "--max-width", "4"],
        ["--format", "json", "verify", "--field", "2", "--which", "partitions", "--max-n", "6"],
        ["--format", "json", "map", "--field", "2", "--to", "config", "--row", "1,1,1,0,0"],
        ["--format", "json", "partitions", "--max-n", "5"],
    ):
        code = main(argv)
        out = capsys.readouterr().out
        assert code == 0
        json.loads(out)
