import json
import subprocess
import sys

import pytest

from nakatau.algebra import named_algebra, parse_list
from nakatau.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mutate_example(capsys):
    code, out, _ = run(capsys, "mutate", "--algebra", "a4.json", "--order", "p:0:0,p:0:3")
    assert code == 0
    assert "TF-1b" in out and "p:0:0, m:0:0:1" in out


def test_verify_transitivity_example(capsys):
    code, out, _ = run(capsys, "verify", "transitivity", "--algebra", "a3.json")
    assert code == 0
    assert "connected: true, nodes: 15" in out


def test_draw_example(capsys, tmp_path):
    target = tmp_path / "out.svg"
    code, _, _ = run(capsys, "draw", "--algebra", "a4.json", "--pair", "m:0:1:2",
                     "--complete", "bongartz", "--format", "svg", "-o", str(target))
    assert code == 0
    assert target.read_text().startswith("<?xml")


def test_global_flags_before_verb(capsys):
    code, out, _ = run(capsys, "--algebra", "a4", "--json", "mutate", "--order", "p:0:0,p:0:3")
    assert code == 0
    assert json.loads(out) == {"position": 1, "case": "TF-1b", "result": ["p:0:0", "m:0:0:1"]}


def test_outputs_round_trip(capsys):
    A = named_algebra("a4")
    _, out, _ = run(capsys, "psi", "--algebra", "a4", "--order", "p:0:0,p:0:3")
    seq = out.strip()
    assert seq == "m:0:0:1, p:0:3"
    _, back, _ = run(capsys, "psi-inv", "--algebra", "a4", "--sequence", seq)
    assert parse_list(A, back.strip()) == parse_list(A, "p:0:0,p:0:3")


def test_complete_and_reduce(capsys):
    _, out, _ = run(capsys, "--json", "complete", "bongartz", "--algebra", "a4", "--pair", "m:0:1:2")
    assert json.loads(out)["pair"] == ["m:0:0:1", "m:0:1:2", "p:0:1", "p:0:2"]
    _, out, _ = run(capsys, "--json", "reduce", "--algebra", "e5", "--pair", "m:0:3:2")
    data = json.loads(out)
    assert len(data["gamma"]["components"]) == 4
    assert sorted(data["rel_projectives"]) == sorted(["p:0:0", "m:0:2:1", "p:0:3", "m:0:4:1"])


def test_orbit_listing(capsys):
    code, out, _ = run(capsys, "orbit", "--algebra", "d3", "--order", "p:0:2,p:0:0")
    assert code == 0
    assert [line.split(":")[0] for line in out.splitlines()[:4]] == ["TF-1b", "TF-2b", "TF-1b", "TF-2b"]
    assert out.strip().endswith("length: 4")


def test_graph_exports_are_stable(capsys):
    _, first, _ = run(capsys, "graph", "--algebra", "a3", "--format", "json")
    _, second, _ = run(capsys, "graph", "--algebra", "a3", "--format", "json")
    assert first == second
    data = json.loads(first)
    assert len(data["nodes"]) == 14 and set(data["edges"][0]) == {"from", "to", "exchanged"}
    _, dot, _ = run(capsys, "graph", "--algebra", "a3", "--kind", "tf")
    assert dot.startswith("digraph tf {") and dot.count("->") == 30


def test_algebra_verbs(capsys):
    code, out, _ = run(capsys, "algebra", "list")
    assert code == 0 and "a4:" in out
    code, out, _ = run(capsys, "algebra", "validate", "--algebra", '{"components":[{"kind":"cyclic","kupisch":[3,3,3,3]}]}')
    assert code == 0 and "modules: 12" in out


def test_domain_errors_exit_one(capsys):
    code, _, err = run(capsys, "algebra", "validate", "--algebra", '[{"kind":"cyclic","kupisch":[3,1,3]}]')
    assert code == 1 and "KupischViolation" in err
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 1 and "UnknownSuite" in err


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "mutate", "--order", "p:0:0")
    assert code == 2 and "--algebra" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nakatau.cli", "mutate", "--algebra", "a4", "--order", "p:0:0,p:0:3"],
                          capture_output=True, text=True, check=True)
    assert "case: TF-1b" in proc.stdout
