"""Command-line interface: parsing, commands, formats, exit codes."""

import json

import pytest

import engineers_case as case
from fnnmadm import rank
from fnnmadm.cli import (
    EXIT_DATA,
    EXIT_OK,
    EXIT_USAGE,
    main,
    parse_problem,
)

E5_FIRST = "E5 >= E2 >= E4 >= E3 >= E1"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# problem parsing


def test_parse_problem_engineers(engineers_csv_path):
    dm = parse_problem(engineers_csv_path)
    assert dm.alternatives == case.ALTERNATIVES
    assert dm.attributes == case.ATTRIBUTES
    assert dm.weights == pytest.approx(case.WEIGHTS)
    assert dm.n_alternatives == 5 and dm.n_attributes == 4
    cell = dm.cells[0][0]
    assert (cell.eta, cell.xi, cell.t, cell.i, cell.f) == (0.85, 0.5, 0.88, 0.8, 0.8)


def test_parse_problem_json_roundtrip(engineers_csv_path, tmp_path):
    dm = parse_problem(engineers_csv_path)
    doc = {
        "alternatives": list(dm.alternatives),
        "attributes": list(dm.attributes),
        "weights": list(dm.weights),
        "cells": [
            {"eta": c.eta, "xi": c.xi, "t": c.t, "i": c.i, "f": c.f}
            for row in dm.cells
            for c in row
        ],
    }
    path = tmp_path / "problem.json"
    path.write_text(json.dumps(doc))
    dm2 = parse_problem(str(path))
    assert dm2 == dm


def test_parse_problem_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.csv"
    path.write_text("")
    code, _, err = run_cli(capsys, "rank", str(path))
    assert code == EXIT_DATA
    assert "empty" in err


def test_parse_problem_bad_cell_arity(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("alt,x\nE1,0.5;0.5;0.5\nweights,1\n")
    code, _, err = run_cli(capsys, "rank", str(path))
    assert code == EXIT_DATA
    assert "5" in err


def test_parse_problem_cubic_sum_violation(tmp_path, capsys):
    path = tmp_path / "cubic.csv"
    path.write_text("alt,x\nE1,0.5;0.5;0.95;0.95;0.95\nweights,1\n")
    code, _, err = run_cli(capsys, "rank", str(path))
    assert code == EXIT_DATA
    assert "exceeds" in err


def test_missing_file(capsys):
    code, _, err = run_cli(capsys, "rank", "/nonexistent/problem.csv")
    assert code == EXIT_DATA


# ---------------------------------------------------------------------------
# rank


def test_rank_table_output(engineers_csv_path, capsys):
    code, out, _ = run_cli(capsys, "rank", engineers_csv_path,
                           "--operator", "fnnwa", "--metric", "hamming",
                           "--lambda", "1")
    assert code == EXIT_OK
    assert f"Ranking: {E5_FIRST}" in out
    for value in ("0.4704", "0.5260", "0.5180", "0.5224", "0.5651"):
        assert value in out


def test_rank_json_roundtrip(engineers_csv_path, capsys):
    code, out, _ = run_cli(capsys, "rank", engineers_csv_path, "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["ordering_labels"] == ["E5", "E2", "E4", "E3", "E1"]
    # re-ranking the emitted full-precision closeness reproduces the ordering
    assert rank(report["closeness"]) == report["ordering"]
    assert report["closeness"] == pytest.approx(case.CLOSENESS, abs=1e-3)


def test_rank_gfnnwa_reduces_to_fnnwa(engineers_csv_path, capsys):
    _, out_a, _ = run_cli(capsys, "rank", engineers_csv_path,
                          "--operator", "fnnwa", "--format", "json")
    _, out_g, _ = run_cli(capsys, "rank", engineers_csv_path,
                          "--operator", "gfnnwa", "--lambda", "1",
                          "--format", "json")
    rep_a, rep_g = json.loads(out_a), json.loads(out_g)
    assert rep_g["ordering"] == rep_a["ordering"]
    assert rep_g["closeness"] == pytest.approx(rep_a["closeness"], abs=1e-12)


def test_rank_weights_flag_overrides(engineers_csv_path, capsys):
    code, out, _ = run_cli(capsys, "rank", engineers_csv_path,
                           "--weights", "0.35,0.27,0.23,0.15", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["weights"] == pytest.approx(case.WEIGHTS)


def test_rank_weights_arity_is_usage_error(engineers_csv_path, capsys):
    code, _, err = run_cli(capsys, "rank", engineers_csv_path,
                           "--weights", "0.5,0.5,0.5")
    assert code == EXIT_USAGE
    assert "expected 4" in err


def test_rank_weights_renormalize(engineers_csv_path, capsys):
    code, out, _ = run_cli(capsys, "rank", engineers_csv_path,
                           "--weights", "35,27,23,15", "--renormalize-weights",
                           "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["weights"] == pytest.approx(case.WEIGHTS)
    assert report["ordering_labels"][0] == "E5"


def test_rank_bad_operator_is_usage_error(engineers_csv_path, capsys):
    code, _, _ = run_cli(capsys, "rank", engineers_csv_path, "--operator", "wavg")
    assert code == EXIT_USAGE


def test_rank_lambda_below_one_is_usage_error(engineers_csv_path, capsys):
    code, _, err = run_cli(capsys, "rank", engineers_csv_path, "--lambda", "0.5")
    assert code == EXIT_USAGE


def test_rank_precision_env(engineers_csv_path, capsys, monkeypatch):
    from fnnmadm import run_pipeline

    monkeypatch.setenv("FNN_MADM_PRECISION", "6")
    code, out, _ = run_cli(capsys, "rank", engineers_csv_path)
    assert code == EXIT_OK
    first_closeness = run_pipeline(parse_problem(engineers_csv_path)).closeness[0]
    assert f"{first_closeness:.6f}" in out
    assert f"{first_closeness:.4f}" not in out.replace(f"{first_closeness:.6f}", "")
    monkeypatch.setenv("FNN_MADM_PRECISION", "not-a-number")
    code, _, err = run_cli(capsys, "rank", engineers_csv_path)
    assert code == EXIT_USAGE


def test_rank_deterministic_output(engineers_csv_path, capsys):
    _, out1, _ = run_cli(capsys, "rank", engineers_csv_path, "--format", "json")
    _, out2, _ = run_cli(capsys, "rank", engineers_csv_path, "--format", "json")
    assert out1 == out2


# ---------------------------------------------------------------------------
# sweep


def test_sweep_full_range_row_count_and_lam13(engineers_csv_path, capsys):
    code, out, _ = run_cli(capsys, "sweep", engineers_csv_path,
                           "--lambda-range", "1..34", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert len(doc["rows"]) == 34
    row13 = next(r for r in doc["rows"] if r["lambda"] == 13)
    assert row13["ordering_labels"] == ["E5", "E4", "E3", "E2", "E1"]


def test_sweep_single_lambda_equals_rank(engineers_csv_path, capsys):
    _, out_s, _ = run_cli(capsys, "sweep", engineers_csv_path,
                          "--lambda-range", "5..5", "--format", "json")
    _, out_r, _ = run_cli(capsys, "rank", engineers_csv_path,
                          "--lambda", "5", "--format", "json")
    sweep_doc, rank_doc = json.loads(out_s), json.loads(out_r)
    assert len(sweep_doc["rows"]) == 1
    assert sweep_doc["rows"][0]["closeness"] == rank_doc["closeness"]
    assert sweep_doc["rows"][0]["ordering"] == rank_doc["ordering"]


def test_sweep_requires_lambda_grid(engineers_csv_path, capsys):
    code, _, err = run_cli(capsys, "sweep", engineers_csv_path)
    assert code == EXIT_USAGE
    code, _, _ = run_cli(capsys, "sweep", engineers_csv_path,
                         "--lambda-range", "0.5..3")
    assert code == EXIT_USAGE
    code, _, _ = run_cli(capsys, "sweep", engineers_csv_path,
                         "--lambda-range", "7..3")
    assert code == EXIT_USAGE


def test_sweep_plot_csv_recomputation(engineers_csv_path, capsys, tmp_path):
    plot = tmp_path / "plot.csv"
    code, _, _ = run_cli(capsys, "sweep", engineers_csv_path,
                         "--lambda-range", "2..34", "--plot-out", str(plot))
    assert code == EXIT_OK
    lines = plot.read_text().strip().splitlines()
    assert lines[0] == "lambda,D1,D2,D3,D4,D5"
    assert len(lines) == 34  # header + 33 grid rows
    orderings, lams = [], []
    for line in lines[1:]:
        fields = [float(v) for v in line.split(",")]
        lams.append(fields[0])
        orderings.append(tuple(rank(fields[1:])))
    transitions = [
        lams[k + 1] for k in range(len(orderings) - 1) if orderings[k + 1] != orderings[k]
    ]
    assert transitions == [12.0, 34.0]


def test_sweep_explicit_lambdas_spot_grid(engineers_csv_path, capsys, tmp_path):
    plot = tmp_path / "spot.csv"
    code, out, _ = run_cli(capsys, "sweep", engineers_csv_path,
                           "--lambdas", "2,10,13,34", "--format", "json",
                           "--plot-out", str(plot))
    assert code == EXIT_OK
    doc = json.loads(out)
    assert [t["lambda"] for t in doc["transitions"]] == [13.0, 34.0]
    lines = plot.read_text().strip().splitlines()
    assert len(lines) == 5


def test_sweep_csv_format(engineers_csv_path, capsys):
    code, out, _ = run_cli(capsys, "sweep", engineers_csv_path,
                           "--lambda-range", "1..3", "--format", "csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "lambda,D1,D2,D3,D4,D5,ordering"
    assert len(lines) == 4
    assert lines[1].endswith(E5_FIRST)


# ---------------------------------------------------------------------------
# validate


def test_validate_engineers(engineers_csv_path, capsys):
    code, out, _ = run_cli(capsys, "validate", engineers_csv_path)
    assert code == EXIT_OK
    assert "20 cells valid" in out


def test_validate_flags_zero_spread(tmp_path, capsys):
    path = tmp_path / "badspread.csv"
    path.write_text(
        "alt,x,y\n"
        "E1,0.5;0.0;0.5;0.5;0.5,0.5;0.5;0.5;0.5;0.5\n"
        "weights,0.5,0.5\n"
    )
    code, out, _ = run_cli(capsys, "validate", str(path))
    assert code == EXIT_DATA
    assert "xi" in out and "(E1, x)" in out
    assert "1 of 2 cells valid" in out


def test_validate_boundary_cubic_sum(tmp_path, capsys):
    path = tmp_path / "boundary.csv"
    path.write_text("alt,x\nE1,1;1;1;1;0\nweights,1\n")
    code, out, _ = run_cli(capsys, "validate", str(path))
    assert code == EXIT_OK
    assert "1 cells valid" in out


def test_validate_flags_bad_embedded_weights(tmp_path, capsys):
    path = tmp_path / "badweights.csv"
    path.write_text("alt,x,y\nE1,1;1;0.5;0.5;0.5,1;1;0.5;0.5;0.5\nweights,0.9,0.7\n")
    code, out, _ = run_cli(capsys, "validate", str(path))
    assert code == EXIT_DATA
    assert "invalid weights" in out
