import csv
import json
import subprocess
import sys

from kshell_attack.cli import main
from kshell_attack.datasets import dataset_path

KARATE = str(dataset_path("karate"))


def test_decompose(capsys):
    assert main(["decompose", KARATE]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "node_label,shell"
    rows = dict(line.split(",") for line in out[1:35])
    assert len(rows) == 34 and rows["1"] == "4"
    assert any(line.startswith("# nodes=34 edges=78 max_shell=4") for line in out)


def test_attack_then_evaluate(tmp_path, capsys):
    out = tmp_path / "run"
    assert main(["attack", KARATE, "--method", "sa", "--rounds", "3", "--seed", "2", "--out", str(out)]) == 0
    summary = capsys.readouterr().out
    assert summary.startswith("SA: rounds=3")
    for name in ["adversarial.txt", "editlog.json", "trajectory.csv", "case-study.json"]:
        assert (out / name).exists()
    with open(out / "trajectory.csv") as f:
        traj = list(csv.DictReader(f))
    assert len(traj) == 3

    assert main(["evaluate", KARATE, str(out / "adversarial.txt")]) == 0
    header, row = capsys.readouterr().out.splitlines()
    assert header == "asr,lcr,lpn,changed_nodes,changed_links"
    assert row.split(",")[:2] == [traj[-1]["asr"], traj[-1]["lcr"]]

    log = json.loads((out / "editlog.json").read_text())
    assert len(log["removed"]) == int(traj[-1]["changed_links"])


def test_evaluate_identity(capsys):
    assert main(["evaluate", KARATE, KARATE]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "0.0,0.0,nan,0,0"


def test_sweep(tmp_path, capsys):
    cfg = tmp_path / "sweep.yaml"
    cfg.write_text("dataset: karate\nstrategies: [ra, ha]\nround_schedule: [1, 2]\nseeds: [0, 1]\n")
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path / "out")]) == 0
    assert "8 records (0 failed), 4 medians" in capsys.readouterr().out
    assert (tmp_path / "out" / "medians.csv").exists()


def test_bad_input_reports_error(tmp_path, capsys):
    bad = tmp_path / "loop.txt"
    bad.write_text("a b\nc c\n")
    assert main(["decompose", str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_datasets_listing(capsys):
    assert main(["datasets"]) == 0
    assert "karate: 34 nodes, 78 edges, max shell 4 [ok]" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kshell_attack", "decompose", KARATE],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.startswith("node_label,shell")
