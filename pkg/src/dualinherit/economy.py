"""Energy economy constants shared by evaluation and the world loop."""
from __future__ import annotations

from dataclasses import dataclass

CONSERVATIVE, STANDARD, INTENSIVE = 0, 1, 2
STRATEGY_NAMES = ("conservative", "standard", "intensive")

# (yield multiplier, energy cost per step of foraging)
DEFAULT_STRATEGIES: tuple[tuple[float, float], ...] = ((0.5, 0.2), (1.0, 0.5), (1.5, 1.0))


@dataclass(frozen=True)
class EconomyParams:
    harvest_rate: float = 0.1
    tau: float = 1.0 / 3.0
    c_move: float = 1.0
    metabolic: float = 2.0
    breed_threshold: float = 100.0
    child_endowment: float = 50.0
    initial_energy: float = 50.0
    strategies: tuple[tuple[float, float], ...] = DEFAULT_STRATEGIES

    def __post_init__(self):
        for name in ("harvest_rate", "tau", "c_move", "metabolic", "breed_threshold",
                     "child_endowment", "initial_energy"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")
        if 3 * self.tau > 1 + 1e-12:
            raise ValueError(f"tau={self.tau} leaves negative forage time with three flags")
        if self.child_endowment > 2 * self.breed_threshold:
            raise ValueError("child_endowment exceeds 2 * breed_threshold")
        if not self.strategies or any(m <= 0 or c <= 0 for m, c in self.strategies):
            raise ValueError("strategy multipliers and costs must be strictly positive")

    def forage_time(self, n_flags: int) -> float:
        return max(0.0, 1.0 - self.tau * n_flags)
