"""Memeplexes, the per-site elite memome, and behaviour selection."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .economy import STANDARD, EconomyParams
from .network import SiteNetwork
from .paths import Gene, is_valid_path, mutate_path, random_walk


def gene_values(genes: Sequence[Gene], capacities: Sequence[float], econ: EconomyParams) -> list[float]:
    """Expected net forage energy of each step against nominal (full) stocks."""
    hr = econ.harvest_rate
    tau = econ.tau
    strategies = econ.strategies
    out = []
    for g in genes:
        ft = 1.0 - tau * (g.breed + g.learn + g.social)
        if ft <= 0.0:
            out.append(0.0)
            continue
        mult, cost = strategies[g.strategy]
        out.append(ft * capacities[g.site] * mult * hr - cost * ft)
    return out


def move_flags(genes: Sequence[Gene]) -> list[int]:
    """1 where step i changes site relative to step i-1 (step 0 never moves)."""
    return [0] + [int(genes[i].site != genes[i - 1].site) for i in range(1, len(genes))]


def evaluate(genes: Sequence[Gene], net: SiteNetwork, econ: EconomyParams, check: bool = True) -> float:
    if check and not is_valid_path(genes, net):
        raise ValueError("memeplex is not a valid path through the network")
    vals = gene_values(genes, net.capacities, econ)
    return sum(vals) - econ.c_move * sum(move_flags(genes)) - econ.metabolic


@dataclass(frozen=True, slots=True)
class Memeplex:
    genes: tuple[Gene, ...]
    start_site: int
    fitness: float
    flags: tuple[int, int, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        b = l = s = 0
        for g in self.genes:
            b += g.breed
            l += g.learn
            s += g.social
        object.__setattr__(self, "flags", (b, l, s))

    @classmethod
    def from_genes(cls, genes: Sequence[Gene], net: SiteNetwork, econ: EconomyParams) -> Memeplex:
        genes = tuple(genes)
        return cls(genes, genes[0].site, evaluate(genes, net, econ))

    def __len__(self) -> int:
        return len(self.genes)

    def flag_counts(self) -> tuple[int, int, int]:
        return self.flags


@dataclass
class Memome:
    """Elite archive: one best memeplex per start site."""

    archive: dict[int, Memeplex] = field(default_factory=dict)
    _mean: float | None = field(default=None, init=False, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.archive)

    def __iter__(self) -> Iterator[Memeplex]:
        return iter(self.archive.values())

    def get(self, site: int) -> Memeplex | None:
        return self.archive.get(site)

    def offer(self, m: Memeplex) -> bool:
        """Archive ``m`` if its site is empty or it strictly beats the incumbent."""
        cur = self.archive.get(m.start_site)
        if cur is None or m.fitness > cur.fitness:
            self.archive[m.start_site] = m
            self._mean = None
            return True
        return False

    def mean_fitness(self) -> float:
        if self._mean is None:
            self._mean = sum(m.fitness for m in self.archive.values()) / len(self.archive)
        return self._mean

    def best_fitness(self) -> float:
        return max(m.fitness for m in self.archive.values())

    def copy(self) -> Memome:
        return Memome(dict(self.archive))


def insert(memome: Memome, m: Memeplex) -> Memome:
    memome.offer(m)
    return memome


def check_memeplex(m: Memeplex, net: SiteNetwork, econ: EconomyParams, day_length: int) -> None:
    if len(m.genes) != day_length:
        raise ValueError(f"memeplex length {len(m.genes)} != day length {day_length}")
    if m.genes[0].site != m.start_site:
        raise ValueError("start_site disagrees with first gene")
    if evaluate(m.genes, net, econ) != m.fitness:
        raise ValueError("cached fitness is stale")


def fallback_memeplex(
    s: int, net: SiteNetwork, econ: EconomyParams, day_length: int, rng: random.Random
) -> Memeplex:
    """Random walk from ``s``: standard strategy, no flags."""
    walk = random_walk(net, s, day_length, rng, len(econ.strategies))
    genes = [Gene(g.site, STANDARD) for g in walk]
    return Memeplex.from_genes(genes, net, econ)


def select_behavior(
    memome: Memome,
    s: int,
    net: SiteNetwork,
    econ: EconomyParams,
    day_length: int,
    rng: random.Random,
) -> Memeplex:
    if not 0 <= s < len(net.sites):
        raise IndexError(f"site {s} out of range")
    m = memome.archive.get(s)
    if m is not None:
        return m
    return fallback_memeplex(s, net, econ, day_length, rng)


def mutate_memeplex(
    m: Memeplex,
    net: SiteNetwork,
    econ: EconomyParams,
    point_rate: float,
    path_rate: float,
    rng: random.Random,
) -> Memeplex:
    genes = mutate_path(m.genes, net, point_rate, path_rate, rng, fix_start=True,
                        n_strategies=len(econ.strategies))
    genes = tuple(genes)
    if genes == m.genes:
        return m
    return Memeplex(genes, m.start_site, evaluate(genes, net, econ, check=False))
