from __future__ import annotations

import json
import subprocess
import sys

import pytest

from arborswap.cli import main
from arborswap.fileio import InstanceFile, SequenceFile


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def generated_file(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("ARBOR_SEED", raising=False)
    path = tmp_path / "inst.json"
    code, _, _ = run(capsys, "gen", "--n", 5, "--k", 2, "--seed", 11, "--extra", 3, "-o", path)
    assert code == 0
    return path


def test_gen_then_check(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("ARBOR_SEED", raising=False)
    path = tmp_path / "g.json"
    assert run(capsys, "gen", "--n", 3, "--k", 1, "--seed", 7, "--extra", 2, "-o", path)[0] == 0
    code, out, _ = run(capsys, "check", path)
    assert code == 0
    assert json.loads(out) == {"S": {"feasible": True}, "T": {"feasible": True}}


def test_gen_deterministic_and_env_seed(capsys, monkeypatch):
    monkeypatch.delenv("ARBOR_SEED", raising=False)
    _, a, _ = run(capsys, "gen", "--n", 4, "--k", 2, "--seed", 5)
    _, b, _ = run(capsys, "gen", "--n", 4, "--k", 2, "--seed", 5)
    assert a == b
    monkeypatch.setenv("ARBOR_SEED", "5")
    _, c, _ = run(capsys, "gen", "--n", 4, "--k", 2, "--seed", 99)
    assert c == a
    monkeypatch.setenv("ARBOR_SEED", "five")
    assert run(capsys, "gen", "--n", 4, "--k", 2)[0] == 2


def test_check_infeasible(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps({"n": 3, "root": 0, "k": 1, "arcs": [[0, 1], [1, 2], [2, 1]], "S": [1, 2]})
    )
    code, out, _ = run(capsys, "check", path)
    assert code == 1
    cert = json.loads(out)["S"]["certificate"]
    assert cert["type"] == "cut" and cert["vertices"] == [1, 2] and cert["entering_arcs"] == []


def test_reconfigure_then_verify(generated_file, tmp_path, capsys):
    seq_path = tmp_path / "seq.json"
    dots = tmp_path / "dots"
    code, _, err = run(
        capsys, "reconfigure", generated_file, "--trace", "--emit-dot", dots, "-o", seq_path
    )
    assert code == 0
    sf = SequenceFile.loads(seq_path.read_text())
    rows = [json.loads(line) for line in err.splitlines()]
    assert len(rows) == sf.length
    assert all({"tight_sets", "aux_arcs", "dicycle"} <= set(r) for r in rows)
    assert sorted(p.name for p in dots.iterdir()) == sorted(
        f"state_{i}.dot" for i in range(sf.length + 1)
    )
    code, out, _ = run(capsys, "verify", generated_file, seq_path)
    assert code == 0 and json.loads(out)["valid"]


def test_verify_detects_tampering(generated_file, tmp_path, capsys):
    seq_path = tmp_path / "seq.json"
    run(capsys, "reconfigure", generated_file, "-o", seq_path)
    data = json.loads(seq_path.read_text())
    if not data["steps"]:
        pytest.skip("generated pair is identical")
    data["steps"] = data["steps"][:-1]
    data["length"] -= 1
    seq_path.write_text(json.dumps(data))
    assert run(capsys, "verify", generated_file, seq_path)[0] == 1
    data = json.loads(seq_path.read_text())
    data["instance_digest"] = "0" * 64
    seq_path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", generated_file, seq_path)
    assert code == 1 and "instance digest mismatch" in json.loads(out)["problems"]


def test_multiroot_flow(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("ARBOR_SEED", raising=False)
    inst = tmp_path / "m.json"
    seq = tmp_path / "ms.json"
    run(capsys, "gen", "--n", 4, "--k", 2, "--seed", 3, "--multiroot", "-o", inst)
    assert InstanceFile.load(inst).root is None
    assert run(capsys, "reconfigure", inst, "--multiroot", "-o", seq)[0] == 0
    assert run(capsys, "verify", inst, seq)[0] == 0
    code, out, _ = run(capsys, "decompose", inst)
    assert code == 0 and len(json.loads(out)["arborescences"]) == 2


def test_multiroot_flag_conflict(generated_file, capsys):
    code, _, err = run(capsys, "reconfigure", generated_file, "--multiroot")
    assert code == 2 and "--multiroot" in err


def test_usage_errors(tmp_path, capsys):
    assert run(capsys, "check", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert run(capsys, "check", bad)[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
    capsys.readouterr()


def test_reconfigure_needs_pair(tmp_path, capsys):
    path = tmp_path / "i.json"
    path.write_text(json.dumps({"n": 2, "root": 0, "k": 1, "arcs": [[0, 1]]}))
    assert run(capsys, "reconfigure", path)[0] == 2
    code, out, _ = run(capsys, "check", path)
    assert code == 0 and json.loads(out) == {"arcs": {"feasible": True}}


def test_reconfigure_infeasible_input(tmp_path, capsys):
    path = tmp_path / "i.json"
    path.write_text(
        json.dumps({"n": 2, "root": 0, "k": 1, "arcs": [[0, 1], [1, 0]], "S": [0], "T": [1]})
    )
    assert run(capsys, "reconfigure", path)[0] == 1


def test_decompose(generated_file, capsys):
    code, out, _ = run(capsys, "decompose", generated_file, "--set", "T")
    data = json.loads(out)
    assert code == 0 and data["set"] == "T" and len(data["arborescences"]) == 2


def test_oracle_distance(tmp_path, capsys):
    path = tmp_path / "sq.json"
    path.write_text(
        json.dumps(
            {
                "n": 3,
                "root": 0,
                "k": 1,
                "arcs": [[0, 1], [0, 2], [1, 2], [2, 1]],
                "S": [0, 2],
                "T": [1, 3],
            }
        )
    )
    code, out, _ = run(capsys, "oracle", path, "--distance", "--connectivity")
    assert code == 0
    assert json.loads(out) == {
        "feasible_sets": 3,
        "components": 1,
        "connected": True,
        "distance": 2,
        "difference": 2,
    }


def test_oracle_find_hard(capsys):
    code, out, _ = run(capsys, "oracle", "--find-hard", "--budget", 5000, "--seed", 0)
    data = json.loads(out)
    assert code == 0 and data["found"] and data["distance"] == 3 and data["difference"] == 2
    InstanceFile.from_json(data["instance"])


def test_oracle_needs_instance(capsys):
    assert run(capsys, "oracle")[0] == 2


def test_matroid_demo(capsys):
    code, out, _ = run(capsys, "matroid-demo")
    assert code == 0
    assert "12 common bases, exchange graph connected" in out
    assert "4 common bases, exchange graph 2 components" in out


def test_console_module():
    proc = subprocess.run(
        [sys.executable, "-m", "arborswap", "matroid-demo"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and "verdict: reproduced" in proc.stdout
