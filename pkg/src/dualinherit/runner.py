"""Single runs, seeded batches and CSV emission."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional

from .config import Config
from .engine import World, init_world, step_day
from .metrics import CSV_COLUMNS, DayMetrics, RunResult, collapse_check, day_metrics
from .network import dump_network

log = logging.getLogger(__name__)

SNAPSHOT_COLUMNS = ("day", "id", "age", "energy", "site", "archive_size", "best_fitness")


@dataclass
class RunArtifacts:
    network: Optional[str] = None
    snapshots: Optional[list[tuple]] = None


@dataclass
class BatchResult:
    runs: list[RunResult]
    collapse_fraction: float
    aggregate: list[tuple]  # (day, n_runs, mean of every CSV column after "day")
    artifacts: Optional[list[RunArtifacts]] = None


def _snapshot_rows(w: World) -> list[tuple]:
    return [
        (w.day, a.id, a.age, a.energy, a.site, len(a.memome), a.memome.best_fitness())
        for a in w.agents
    ]


def run_simulation(
    cfg: Config,
    seed: int,
    snapshot_every: int = 0,
    artifacts: Optional[RunArtifacts] = None,
) -> RunResult:
    """Run one world from ``seed`` until ``max_days`` or collapse.

    When ``artifacts`` is given it receives the network dump and, with
    ``snapshot_every``, per-agent rows every N days (day 0 included).
    """
    w = init_world(cfg, seed)
    if artifacts is not None:
        artifacts.network = dump_network(w.net)
        if snapshot_every:
            artifacts.snapshots = _snapshot_rows(w)
    series = [day_metrics(w)]
    collapsed = collapse_check(w)
    while collapsed is None and w.day < cfg.max_days:
        step_day(w)
        series.append(day_metrics(w))
        collapsed = collapse_check(w)
        if artifacts is not None and snapshot_every and w.day % snapshot_every == 0:
            artifacts.snapshots.extend(_snapshot_rows(w))
    return RunResult(series=series, collapse_day=collapsed, seed=seed, mode=cfg.mode)


def _run_one(job: tuple[Config, int, int, bool]) -> tuple[RunResult, Optional[RunArtifacts]]:
    cfg, seed, snapshot_every, keep = job
    art = RunArtifacts() if keep else None
    res = run_simulation(cfg, seed, snapshot_every, art)
    log.info("run seed=%d mode=%s days=%d collapse=%s", seed, cfg.mode,
             res.series[-1].day, res.collapse_day)
    return res, art


def aggregate_series(runs: list[RunResult]) -> list[tuple]:
    """Per-day means across runs with living agents on that day."""
    by_day: dict[int, list[DayMetrics]] = {}
    for r in runs:
        for m in r.series:
            if m.population > 0:
                by_day.setdefault(m.day, []).append(m)
    out = []
    for day in sorted(by_day):
        ms = by_day[day]
        row = [day, len(ms)]
        for name in CSV_COLUMNS[1:]:
            vals = [getattr(m, name) for m in ms if getattr(m, name) is not None]
            row.append(sum(vals) / len(vals) if vals else None)
        out.append(tuple(row))
    return out


def run_batch(
    cfg: Config,
    workers: int = 1,
    snapshot_every: int = 0,
    dump_network: bool = False,
) -> BatchResult:
    """Runs ``cfg.runs`` seeds ``base_seed + i``; results stay in run order."""
    keep = dump_network or snapshot_every > 0
    jobs = [(cfg, cfg.base_seed + i, snapshot_every, keep) for i in range(cfg.runs)]
    if workers > 1 and cfg.runs > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = list(pool.map(_run_one, jobs))
    else:
        done = [_run_one(j) for j in jobs]
    results = [r for r, _ in done]
    arts = None
    if keep:
        arts = [a for _, a in done]
        if not dump_network:
            for a in arts:
                a.network = None
    collapsed = sum(r.collapse_day is not None for r in results)
    return BatchResult(results, collapsed / len(results), aggregate_series(results), arts)


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, int):
        return str(v)
    return f"{v:.6f}"


def _write(path: Path, header: tuple, rows) -> None:
    try:
        with open(path, "w", newline="") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _write_text(path: Path, text: str) -> None:
    try:
        path.write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def emit_csv(result: BatchResult | RunResult, out_dir: str | Path) -> None:
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {out}: {exc.strerror or exc}") from exc
    if isinstance(result, RunResult):
        result = BatchResult([result], float(result.collapse_day is not None),
                             aggregate_series([result]))
    for i, run in enumerate(result.runs):
        _write(out / f"run_{i}.csv", CSV_COLUMNS, (m.row() for m in run.series))
    _write(out / "batch.csv", ("day", "n_runs") + CSV_COLUMNS[1:], result.aggregate)
    lines = [f"collapse_fraction={result.collapse_fraction:.6f}", f"runs={len(result.runs)}"]
    for i, run in enumerate(result.runs):
        cd = "" if run.collapse_day is None else str(run.collapse_day)
        lines.append(f"run_{i} seed={run.seed} mode={run.mode} collapse_day={cd}")
    _write_text(out / "summary.txt", "\n".join(lines) + "\n")
    for i, art in enumerate(result.artifacts or []):
        if art.network is not None:
            _write_text(out / f"network_{i}.txt", art.network)
        if art.snapshots is not None:
            _write(out / f"snapshot_{i}.csv", SNAPSHOT_COLUMNS, art.snapshots)
