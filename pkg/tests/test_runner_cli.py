import csv
import filecmp
from pathlib import Path

import pytest

from dualinherit.cli import main
from dualinherit.config import Config
from dualinherit.metrics import CSV_COLUMNS
from dualinherit.runner import aggregate_series, emit_csv, run_batch, run_simulation

SMALL = dict(n_sites=10, radius=0.5, G=30, T=5, N0=20)


def rows(path):
    with open(path) as fh:
        return list(csv.reader(fh))


def test_zero_days_single_row():
    r = run_simulation(Config(**SMALL, max_days=0), 1)
    assert len(r.series) == 1 and r.series[0].day == 0
    assert r.collapse_day is None


def test_empty_population_collapses_at_zero():
    r = run_simulation(Config(**{**SMALL, "N0": 0}, max_days=50), 1)
    assert r.collapse_day == 0 and len(r.series) == 1


def test_lone_agent_never_breeds():
    cfg = Config(**{**SMALL, "N0": 1}, max_days=60)
    r = run_simulation(cfg, 3)
    assert max(m.population for m in r.series) == 1


def test_row_count_matches_horizon():
    cfg = Config(**SMALL, max_days=40)
    for seed in range(3):
        r = run_simulation(cfg, seed)
        end = cfg.max_days if r.collapse_day is None else min(r.collapse_day, cfg.max_days)
        assert len(r.series) == end + 1
        assert [m.day for m in r.series] == list(range(end + 1))


def test_single_run_collapse_fraction_binary():
    b = run_batch(Config(**SMALL, max_days=20, runs=1))
    assert b.collapse_fraction in (0.0, 1.0)


def test_batch_seeds_are_offsets():
    b = run_batch(Config(**SMALL, max_days=10, runs=3, base_seed=40))
    assert [r.seed for r in b.runs] == [40, 41, 42]
    solo = run_simulation(Config(**SMALL, max_days=10), 41)
    assert [m.row() for m in solo.series] == [m.row() for m in b.runs[1].series]


def test_parallel_matches_serial():
    cfg = Config(**SMALL, max_days=15, runs=3)
    a, b = run_batch(cfg), run_batch(cfg, workers=2)
    assert [[m.row() for m in r.series] for r in a.runs] == [[m.row() for m in r.series] for r in b.runs]


def test_aggregate_counts_living_runs():
    cfg = Config(**SMALL, max_days=5)
    live = run_simulation(cfg, 0)
    dead = run_simulation(cfg.replace(N0=0), 0)
    agg = aggregate_series([live, dead])
    assert agg[0][1] == 1
    assert agg[0][2] == live.series[0].population


def test_emit_layout_and_determinism(tmp_path):
    cfg = Config(**SMALL, max_days=12, runs=2)
    b = run_batch(cfg)
    emit_csv(b, tmp_path / "a")
    emit_csv(run_batch(cfg), tmp_path / "b")
    names = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert names == ["batch.csv", "run_0.csv", "run_1.csv", "summary.txt"]
    cmp = filecmp.dircmp(tmp_path / "a", tmp_path / "b")
    assert not cmp.diff_files and not cmp.left_only and not cmp.right_only
    for i in range(2):
        data = rows(tmp_path / "a" / f"run_{i}.csv")
        assert tuple(data[0]) == CSV_COLUMNS
        assert len(data) - 1 == len(b.runs[i].series)
    assert rows(tmp_path / "a" / "batch.csv")[0][:2] == ["day", "n_runs"]
    summary = (tmp_path / "a" / "summary.txt").read_text().splitlines()
    assert summary[0].startswith("collapse_fraction=") and summary[1] == "runs=2"


def test_emit_single_run(tmp_path):
    emit_csv(run_simulation(Config(**SMALL, max_days=3), 0), tmp_path)
    assert (tmp_path / "run_0.csv").exists() and (tmp_path / "batch.csv").exists()


def test_emit_into_file_path_fails(tmp_path):
    blocker = tmp_path / "f"
    blocker.write_text("x")
    with pytest.raises(OSError, match="cannot create"):
        emit_csv(run_simulation(Config(**SMALL, max_days=1), 0), blocker)


def write_cfg(tmp_path, text):
    p = tmp_path / "run.cfg"
    p.write_text(text)
    return str(p)


def small_cfg(tmp_path, extra=""):
    body = "\n".join(f"{k} = {v}" for k, v in SMALL.items())
    return write_cfg(tmp_path, body + "\n" + extra)


def test_cli_success(tmp_path, capsys):
    out = tmp_path / "out"
    code = main(["--config", small_cfg(tmp_path), "--seed", "5", "--runs", "2", "--days", "8",
                 "--out", str(out), "--dump-network", "--snapshot-every", "4"])
    assert code == 0
    assert "collapse_fraction=" in capsys.readouterr().out
    assert (out / "network_1.txt").exists()
    snap = rows(out / "snapshot_0.csv")
    assert snap[0] == ["day", "id", "age", "energy", "site", "archive_size", "best_fitness"]
    assert {r[0] for r in snap[1:]} <= {"0", "4", "8"}
    assert "seed=6" in (out / "summary.txt").read_text()


def test_cli_flag_beats_file(tmp_path):
    out = tmp_path / "o"
    assert main(["--config", small_cfg(tmp_path, "mode = breeders\nmax_days = 3"),
                 "--mode", "lamarck", "--out", str(out)]) == 0
    text = (out / "summary.txt").read_text()
    assert "mode=lamarck" in text
    assert len(rows(out / "run_0.csv")) <= 5


def test_cli_bad_config(tmp_path, capsys):
    assert main(["--config", write_cfg(tmp_path, "tau = 0.9"), "--out", str(tmp_path / "o")]) == 2
    err = capsys.readouterr().err
    assert err.startswith("simulate: error:") and "tau" in err
    assert not (tmp_path / "o").exists()


def test_cli_missing_config(tmp_path, capsys):
    assert main(["--config", str(tmp_path / "nope.cfg")]) == 2
    assert "cannot read config" in capsys.readouterr().err


def test_cli_unbuildable_network(tmp_path, capsys):
    cfg = write_cfg(tmp_path, "n_sites = 40\nradius = 0.01\nN0 = 5")
    assert main(["--config", cfg, "--out", str(tmp_path / "o")]) == 2
    assert "after 100 attempts" in capsys.readouterr().err


def test_cli_unwritable_out(tmp_path, capsys):
    blocker = tmp_path / "f"
    blocker.write_text("x")
    assert main(["--config", small_cfg(tmp_path), "--days", "1", "--out", str(blocker)]) == 2
    assert str(blocker) in capsys.readouterr().err


def test_cli_rejects_unknown_mode(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["--mode", "hermits"])
    assert exc.value.code == 2


def test_network_dump_format(tmp_path):
    main(["--config", small_cfg(tmp_path), "--days", "0", "--out", str(tmp_path / "o"), "--dump-network"])
    lines = (tmp_path / "o" / "network_0.txt").read_text().splitlines()
    sites = [l for l in lines if not l.startswith("edge")]
    edges = [l for l in lines if l.startswith("edge")]
    assert len(sites) == SMALL["n_sites"]
    for i, l in enumerate(sites):
        idx, x, y, cap = l.split(",")
        assert int(idx) == i and 0 <= float(x) <= 1 and 0 <= float(y) <= 1 and float(cap) > 0
    for l in edges:
        _, a, b = l.split(",")
        assert int(a) < int(b)
