"""Per-day population measurements."""
from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Optional

from .engine import World

CSV_COLUMNS = (
    "day", "population", "mean_energy", "genetic_opt", "memetic_opt",
    "breed_time", "learn_time", "social_time",
    "genome_breed", "genome_learn", "genome_social",
    "young_activity", "old_activity",
)


@dataclass(frozen=True)
class DayMetrics:
    day: int
    population: int
    mean_energy: Optional[float] = None
    genetic_opt: Optional[float] = None
    memetic_opt: Optional[float] = None
    breed_time: Optional[float] = None
    learn_time: Optional[float] = None
    social_time: Optional[float] = None
    genome_breed: Optional[float] = None
    genome_learn: Optional[float] = None
    genome_social: Optional[float] = None
    young_activity: Optional[float] = None
    old_activity: Optional[float] = None

    def row(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))


@dataclass
class RunResult:
    series: list[DayMetrics]
    collapse_day: Optional[int]
    seed: int
    mode: str


def _mean(xs: list[float]) -> Optional[float]:
    return sum(xs) / len(xs) if xs else None


def genetic_optimization(w: World) -> Optional[float]:
    """Mean over agents of the mean archive fitness their genome develops into.

    The developed value is fixed at birth (genomes are inert), so it is read
    from the cached ``genetic_value``.
    """
    return _mean([a.genetic_value for a in w.agents])


def memetic_optimization(w: World) -> Optional[float]:
    return _mean([a.memome.mean_fitness() for a in w.agents])


def time_allocation(w: World) -> tuple[Optional[float], Optional[float], Optional[float]]:
    """Fraction of executed (agent, step) slots carrying each flag."""
    done = [a.executed for a in w.agents if a.executed is not None]
    if not done:
        return (None, None, None)
    slots = sum(len(m.genes) for m in done)
    counts = [0, 0, 0]
    for m in done:
        b, l, s = m.flag_counts()
        counts[0] += b
        counts[1] += l
        counts[2] += s
    return tuple(c / slots for c in counts)


def age_stratified_allocation(w: World, age_split: int) -> tuple[Optional[float], Optional[float]]:
    young, old = [], []
    for a in w.agents:
        m = a.executed
        if m is None:
            continue
        activity = sum(m.flag_counts()) / (3 * len(m.genes))
        (young if a.age < age_split else old).append(activity)
    return _mean(young), _mean(old)


def genome_allocation(w: World) -> tuple[Optional[float], Optional[float], Optional[float]]:
    if not w.agents:
        return (None, None, None)
    per = [a.genome_flags for a in w.agents]
    n = len(per)
    return tuple(sum(p[i] for p in per) / n for i in range(3))


def collapse_check(w: World, recorded: Optional[int] = None) -> Optional[int]:
    if recorded is not None:
        return recorded
    return w.day if not w.agents else None


def day_metrics(w: World) -> DayMetrics:
    bt, lt, st = time_allocation(w)
    gb, gl, gs = genome_allocation(w)
    young, old = age_stratified_allocation(w, w.cfg.age_split)
    return DayMetrics(
        day=w.day,
        population=len(w.agents),
        mean_energy=_mean([a.energy for a in w.agents]),
        genetic_opt=genetic_optimization(w),
        memetic_opt=memetic_optimization(w),
        breed_time=bt, learn_time=lt, social_time=st,
        genome_breed=gb, genome_learn=gl, genome_social=gs,
        young_activity=young, old_activity=old,
    )
