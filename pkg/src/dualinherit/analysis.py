"""Run-level summaries used by the acceptance checks and experiment scripts."""
from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .metrics import DayMetrics, RunResult


def window_mean(series: Sequence[DayMetrics], name: str, lo: int, hi: int) -> Optional[float]:
    """Mean of a column over days ``lo..hi`` inclusive, skipping empty fields."""
    vals = [getattr(m, name) for m in series if lo <= m.day <= hi and getattr(m, name) is not None]
    return sum(vals) / len(vals) if vals else None


def rise_day(
    series: Sequence[DayMetrics],
    name: str,
    fraction: float = 0.9,
    smooth: int = 1,
    tail: int = 1,
) -> Optional[int]:
    """First day the column covers ``fraction`` of its rise from day 0.

    The final level is the mean of the last ``tail`` recorded values and the
    trajectory is a trailing mean over ``smooth`` days.  Returns None if the
    column is empty or its final level equals the start.
    """
    pts = [(m.day, getattr(m, name)) for m in series if getattr(m, name) is not None]
    if len(pts) < 2:
        return None
    v0 = pts[0][1]
    last = [v for _, v in pts[-tail:]]
    span = sum(last) / len(last) - v0
    if span == 0:
        return None
    target = v0 + fraction * span
    window: deque = deque(maxlen=smooth)
    for day, v in pts:
        window.append(v)
        if (sum(window) / len(window) - target) * span >= 0:
            return day
    return pts[-1][0]


def survived_past(run: RunResult, day: int) -> bool:
    return run.collapse_day is None and run.series[-1].day >= day or (
        run.collapse_day is not None and run.collapse_day > day
    )
