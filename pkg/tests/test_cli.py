import itertools
import json

import pytest

from ztsim.cli import EXIT_BUDGET, EXIT_OK, EXIT_VALIDATION, main
from ztsim.games import BayesianGameSpec
from ztsim.gamespec import serialize_game


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_run_twice_byte_identical(scenarios_dir, tmp_path, capsys):
    scenario = str(scenarios_dir / "apt_stealth.yaml")
    outs = []
    for name in ("a.jsonl", "b.jsonl"):
        out = tmp_path / name
        code, _, err = run_cli(["run", "--scenario", scenario, "--out", str(out)], capsys)
        assert code == EXIT_OK, err
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_run_seed_override_changes_trace_not_schema(scenarios_dir, tmp_path, capsys):
    scenario = str(scenarios_dir / "apt_stealth.yaml")
    traces, metrics = {}, {}
    for seed in (1, 2):
        out = tmp_path / f"t{seed}.jsonl"
        met = tmp_path / f"m{seed}.json"
        code, _, err = run_cli(
            ["run", "--scenario", scenario, "--seed", str(seed),
             "--out", str(out), "--metrics", str(met)],
            capsys,
        )
        assert code == EXIT_OK, err
        traces[seed] = out.read_text()
        metrics[seed] = json.loads(met.read_text())
    assert traces[1] != traces[2]
    for doc in metrics.values():
        assert set(doc["entities"]) == {"alice", "bob", "implant-7"}
        for entry in doc["entities"].values():
            assert set(entry) == {"time_to_detection", "false_lockout", "final_score", "trajectory"}


def test_run_seed_sweep_writes_per_seed_files(scenarios_dir, tmp_path, capsys):
    scenario = str(scenarios_dir / "deterministic_attacker.yaml")
    out = tmp_path / "trace.jsonl"
    met = tmp_path / "metrics.json"
    code, _, err = run_cli(
        ["run", "--scenario", scenario, "--seeds", "3..5",
         "--out", str(out), "--metrics", str(met)],
        capsys,
    )
    assert code == EXIT_OK, err
    for seed in (3, 4, 5):
        assert (tmp_path / f"trace.seed{seed}.jsonl").exists()
    doc = json.loads(met.read_text())
    assert set(doc["seeds"]) == {"3", "4", "5"} or set(doc["seeds"]) == {3, 4, 5}


def test_run_trace_to_stdout_is_jsonl(scenarios_dir, capsys):
    scenario = str(scenarios_dir / "deterministic_attacker.yaml")
    code, out, _ = run_cli(["run", "--scenario", scenario], capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 3
    assert json.loads(lines[0])["entity"] == "mallory"


def test_run_missing_file_exit_one_names_path(tmp_path, capsys):
    missing = tmp_path / "ghost.yaml"
    code, _, err = run_cli(["run", "--scenario", str(missing)], capsys)
    assert code == EXIT_VALIDATION
    assert str(missing) in err


def test_run_invalid_document_exit_one(tmp_path, capsys):
    bad = tmp_path / "bad.yaml"
    bad.write_text("schema_version: 1\ntype_space: {types: [], trusted: []}\n")
    code, _, err = run_cli(["run", "--scenario", str(bad)], capsys)
    assert code == EXIT_VALIDATION
    assert "type_space" in err


def test_solve_zero_sum(game_specs_dir, capsys):
    code, out, _ = run_cli(
        ["solve", "--game", str(game_specs_dir / "rock_paper_scissors.yaml")], capsys
    )
    assert code == EXIT_OK
    rec = json.loads(out.splitlines()[0])
    assert rec["kind"] == "zero_sum"
    assert rec["value"] == pytest.approx(0.0, abs=1e-9)
    assert all(w == pytest.approx(1 / 3, abs=1e-9) for w in rec["row_strategy"].values())


def test_solve_stackelberg_modes(game_specs_dir, capsys):
    path = str(game_specs_dir / "commitment_demo.yaml")
    code, out, _ = run_cli(["solve", "--game", path, "--mode", "mixed"], capsys)
    assert code == EXIT_OK
    rec = json.loads(out.splitlines()[0])
    assert rec["kind"] == "stackelberg"
    assert rec["leader_value"] == pytest.approx(3.5, abs=1e-9)
    code, out, _ = run_cli(["solve", "--game", path, "--mode", "pure"], capsys)
    assert json.loads(out.splitlines()[0])["leader_value"] == pytest.approx(3.0)


def test_solve_bne(game_specs_dir, capsys):
    code, out, _ = run_cli(
        ["solve", "--game", str(game_specs_dir / "insider_matching.yaml")], capsys
    )
    assert code == EXIT_OK
    lines = [json.loads(l) for l in out.splitlines()]
    assert lines[0] == {"schema_version": 1, "kind": "bne_summary", "count": 2}
    assert all(rec["kind"] == "bne" for rec in lines[1:])


def test_solve_pbe_off_path_rule(game_specs_dir, capsys):
    code, out, _ = run_cli(
        ["solve", "--game", str(game_specs_dir / "honeypot_signaling.yaml"),
         "--off-path", "prior"],
        capsys,
    )
    assert code == EXIT_OK
    lines = [json.loads(l) for l in out.splitlines()]
    summary = lines[0]
    assert summary["kind"] == "pbe_summary"
    assert summary["count"] == 2
    assert summary["classifications"] == ["pooling"]
    assert summary["off_path_rule"] == "prior"


def test_solve_budget_exceeded_exit_three(tmp_path, capsys):
    # two players, five types, eight actions each: 8^5 squared pure strategy
    # profiles, far past the default enumeration budget
    players = ("p1", "p2")
    types = {p: tuple(f"t{i}" for i in range(5)) for p in players}
    actions = {p: tuple(f"a{i}" for i in range(8)) for p in players}
    prior = {
        tp: 1 / 25 for tp in itertools.product(types["p1"], types["p2"])
    }
    utilities = {
        p: {
            (ap, tp): 0.0
            for ap in itertools.product(actions["p1"], actions["p2"])
            for tp in itertools.product(types["p1"], types["p2"])
        }
        for p in players
    }
    spec = BayesianGameSpec(players, types, actions, prior, utilities)
    path = tmp_path / "huge.yaml"
    path.write_text(serialize_game(spec))
    code, _, err = run_cli(["solve", "--game", str(path)], capsys)
    assert code == EXIT_BUDGET
    assert "budget" in err.lower()


def test_solve_output_file(game_specs_dir, tmp_path, capsys):
    out = tmp_path / "sol.jsonl"
    code, stdout, _ = run_cli(
        ["solve", "--game", str(game_specs_dir / "rock_paper_scissors.yaml"),
         "--out", str(out)],
        capsys,
    )
    assert code == EXIT_OK
    assert stdout == ""
    assert json.loads(out.read_text().splitlines()[0])["kind"] == "zero_sum"
