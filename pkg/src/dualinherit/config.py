"""Run configuration and the ``key = value`` config file format."""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, fields

from .economy import EconomyParams

MODES = ("basic", "breeders", "lamarck", "socializers")


class ConfigError(ValueError):
    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key


@dataclass(frozen=True)
class Config:
    # network
    n_sites: int = 20
    radius: float = 0.35
    capacity_min: float = 120.0
    capacity_max: float = 360.0
    regrow_rate: float = 360.0
    # genetics
    G: int = 200
    T: int = 20
    point_rate: float = 0.02
    path_rate: float = 0.02
    # economy
    tau: float = 1.0 / 3.0
    harvest_rate: float = 0.01
    c_move: float = 0.5
    metabolic: float = 16.0
    breed_threshold: float = 100.0
    child_endowment: float = 50.0
    initial_energy: float = 50.0
    # run
    N0: int = 50
    max_days: int = 5000
    age_split: int = 50
    mode: str = "socializers"
    runs: int = 1
    base_seed: int = 0

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        def need(ok: bool, key: str, why: str):
            if not ok:
                raise ConfigError(f"{key}={getattr(self, key)!r}: {why}", key)

        need(self.n_sites >= 1, "n_sites", "must be >= 1")
        need(0 < self.radius <= math.sqrt(2), "radius", "must be in (0, sqrt(2)]")
        need(self.capacity_min >= 0, "capacity_min", "must be >= 0")
        need(self.capacity_max >= self.capacity_min, "capacity_max", "must be >= capacity_min")
        need(self.regrow_rate >= 0, "regrow_rate", "must be >= 0")
        need(self.T >= 1, "T", "must be >= 1")
        need(self.G >= self.T, "G", "must be >= T")
        need(0 <= self.point_rate <= 1, "point_rate", "must be in [0, 1]")
        need(0 <= self.path_rate <= 1, "path_rate", "must be in [0, 1]")
        for key in ("tau", "harvest_rate", "c_move", "metabolic", "breed_threshold",
                    "child_endowment", "initial_energy"):
            need(getattr(self, key) > 0, key, "must be > 0")
        need(3 * self.tau <= 1 + 1e-12, "tau", "3 * tau must not exceed 1")
        need(self.child_endowment <= 2 * self.breed_threshold, "child_endowment",
             "must be <= 2 * breed_threshold")
        need(self.N0 >= 0, "N0", "must be >= 0")
        need(self.max_days >= 0, "max_days", "must be >= 0")
        need(self.age_split >= 0, "age_split", "must be >= 0")
        need(self.mode in MODES, "mode", f"must be one of {', '.join(MODES)}")
        need(self.runs >= 1, "runs", "must be >= 1")

    @property
    def econ(self) -> EconomyParams:
        return EconomyParams(
            harvest_rate=self.harvest_rate,
            tau=self.tau,
            c_move=self.c_move,
            metabolic=self.metabolic,
            breed_threshold=self.breed_threshold,
            child_endowment=self.child_endowment,
            initial_energy=self.initial_energy,
        )

    def replace(self, **changes) -> Config:
        return dataclasses.replace(self, **changes)


_FIELD_TYPES = {f.name: f.type for f in fields(Config)}


def _convert(key: str, raw: str):
    kind = _FIELD_TYPES[key]
    if kind == "int":
        return int(raw)
    if kind == "float":
        return float(raw)
    return raw


def parse_config(text: str, base: Config | None = None) -> Config:
    """Parse ``key = value`` lines over ``base`` (defaults when omitted)."""
    values: dict[str, object] = {}
    lines: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not key:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        if key not in _FIELD_TYPES:
            raise ConfigError(f"line {lineno}: unknown key {key!r}", key)
        try:
            values[key] = _convert(key, raw)
        except ValueError:
            raise ConfigError(f"line {lineno}: malformed value {raw!r} for key {key!r}", key) from None
        lines[key] = lineno
    try:
        return dataclasses.replace(base or Config(), **values)
    except ConfigError as exc:
        where = f"line {lines[exc.key]}" if exc.key in lines else "config"
        raise ConfigError(f"{where}: {exc}", exc.key) from None


def format_config(cfg: Config) -> str:
    return "".join(f"{f.name} = {getattr(cfg, f.name)!r}\n".replace("'", "") for f in fields(cfg))
