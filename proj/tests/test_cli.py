"""End-to-end checks of the command-line tool: output shape and exit codes."""

import csv
import io
import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ["DDAECONN_CLI"]
DATA = pathlib.Path(os.environ["DDAECONN_TEST_DATA"])
CHAIN = str(DATA / "example_delay_chain.json")
COUPLED = str(DATA / "example_coupled_delays.json")
H_F3 = str(DATA / "connection_graph_f3.json")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_analyze_reports_exposed_equation_and_graph():
    r = run("analyze", "--input", CHAIN)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert [e["eq"] for e in doc["exposed"]] == [3]
    assert doc["exposed"][0]["reach"] == [1, 2]
    assert doc["exposed"][0]["connection_graph"]["arcs"] == [[2, 1], [3, 1], [3, 2]]


def test_connections_classified():
    r = run("connections", "--input", CHAIN, "--exposed", "3", "--classify")
    assert r.returncode == 0
    got = {json.dumps(c["triples"]): c["class"] for c in json_lines(r.stdout)}
    assert got == {
        json.dumps([[3, [1, 0], 1], [3, [2, 0], 2]]): "implicit",
        json.dumps([[2, [1, 0], 1], [3, [2, 0], 2]]): "explicit",
    }


def test_verbose_adds_one_witness_per_triple():
    r = run("connections", "--input", CHAIN, "--exposed", "3", "--verbose")
    assert r.returncode == 0
    for c in json_lines(r.stdout):
        assert len(c["witnesses"]) == len(c["triples"])


def test_limit_exit_code():
    r = run("connections", "--input", COUPLED, "--exposed", "4", "--limit", "3")
    assert r.returncode == 3
    assert len(json_lines(r.stdout)) == 3
    r = run("connections", "--input", COUPLED, "--exposed", "4", "--limit", "8")
    assert r.returncode == 0
    assert len(json_lines(r.stdout)) == 8


@pytest.mark.parametrize(
    "args",
    [
        ["connections", "--input", COUPLED, "--exposed", "1"],
        ["connections", "--input", COUPLED, "--exposed", "9"],
        ["connections", "--input", "/nonexistent.json", "--exposed", "1"],
        ["bench", "--scenario", "diagonal", "--from", "5", "--to", "6"],
        ["bench", "--scenario", "banded", "--from", "1", "--to", "3"],
        ["no-such-command"],
    ],
)
def test_input_errors_exit_2(args):
    r = run(*args)
    assert r.returncode == 2
    assert r.stderr


def test_malformed_document(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n_equations": 1, "n_variables": 1, "equations": [{"index": 1, "occurrences": '
                   '[{"var": 1, "shift": -2, "deriv": 0}]}]}')
    assert run("analyze", "--input", str(bad)).returncode == 2
    bad.write_text("[")
    assert run("analyze", "--input", str(bad)).returncode == 2


def test_arborescence_tools_agree():
    trees = json_lines(run("arborescences", "--graph", H_F3).stdout)
    assert [t["arcs"] for t in trees] == [[[3, 1], [3, 2]], [[2, 1], [3, 2]]]
    assert run("count", "--graph", H_F3).stdout.strip() == "2"
    oracle = json_lines(run("oracle", "--graph", H_F3).stdout)
    assert sorted(map(json.dumps, oracle)) == sorted(map(json.dumps, trees))


def test_bench_csv(tmp_path):
    out = tmp_path / "bench.csv"
    r = run("bench", "--scenario", "complete", "--from", "5", "--to", "6", "--method", "both", "--csv", str(out))
    assert r.returncode == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert [(row["n"], row["method"], row["count"]) for row in rows] == [
        ("5", "grow", "125"), ("5", "naive", "125"), ("6", "grow", "1296"), ("6", "naive", "1296"),
    ]
    assert all(row["completed"] == "true" for row in rows)
