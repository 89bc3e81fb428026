"""Seeded agent-based simulator of gene-culture co-evolution."""
from .config import Config, ConfigError, parse_config
from .engine import World, init_world, step_day
from .metrics import DayMetrics, RunResult
from .runner import BatchResult, emit_csv, run_batch, run_simulation

__all__ = [
    "BatchResult", "Config", "ConfigError", "DayMetrics", "RunResult", "World",
    "emit_csv", "init_world", "parse_config", "run_batch", "run_simulation", "step_day",
]
