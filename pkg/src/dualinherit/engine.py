"""The day-cycle world loop.

Each day every agent runs its chosen memeplex for ``T`` steps: it moves,
forages against the live site stock, and may breed or exchange memeplexes
with co-located agents.  At day end learners mutate their day's memeplex
into their memome, food becomes energy, the starved die, newborns join,
sites regrow and each survivor picks tomorrow's memeplex.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .config import Config
from .economy import EconomyParams
from .genetics import Genome, develop, genome_time_allocation, lamarck_genome, mutate_genome, random_genome, recombine
from .memetics import Memeplex, Memome, mutate_memeplex, select_behavior
from .network import SiteNetwork, generate_network, regrow

LEARNING_MODES = frozenset({"breeders", "lamarck", "socializers"})
SOCIAL_MODES = frozenset({"socializers"})


@dataclass(eq=False, slots=True)
class Agent:
    id: int
    genome: Genome
    memome: Memome
    site: int
    energy: float
    genetic_value: float
    genome_flags: tuple[float, float, float]
    today: Memeplex | None = None
    executed: Memeplex | None = None
    age: int = 0
    born_day: int = 0
    food_today: float = 0.0
    alive: bool = True
    learn_pending: bool = False
    # per-day ledger, reset at day start
    move_cost: float = 0.0
    strategy_cost: float = 0.0
    breed_paid: float = 0.0


@dataclass(eq=False)
class World:
    cfg: Config
    net: SiteNetwork
    rng: random.Random
    econ: EconomyParams
    agents: list[Agent] = field(default_factory=list)
    nursery: list[Agent] = field(default_factory=list)
    day: int = 0
    next_id: int = 0
    births: int = 0
    deaths: int = 0
    on_birth: Callable[[World, Agent], None] | None = None
    on_learn: Callable[[World, Agent], None] | None = None
    on_social: Callable[[World, Agent, Agent], None] | None = None

    @property
    def mode(self) -> str:
        return self.cfg.mode

    @property
    def population(self) -> int:
        return len(self.agents)


def make_agent(w: World, genome: Genome, site: int, energy: float, memome: Memome | None = None) -> Agent:
    if memome is None:
        memome = develop(genome, w.cfg.T, w.net, w.econ)
    agent = Agent(
        id=w.next_id,
        genome=genome,
        memome=memome,
        site=site,
        energy=energy,
        genetic_value=memome.mean_fitness(),
        genome_flags=genome_time_allocation(genome),
        born_day=w.day,
    )
    w.next_id += 1
    agent.today = select_behavior(memome, site, w.net, w.econ, w.cfg.T, w.rng)
    return agent


def init_world(cfg: Config, seed: int) -> World:
    rng = random.Random(seed)
    net = generate_network(cfg.n_sites, cfg.radius, (cfg.capacity_min, cfg.capacity_max), rng)
    econ = cfg.econ
    w = World(cfg=cfg, net=net, rng=rng, econ=econ)
    n_strat = len(econ.strategies)
    for _ in range(cfg.N0):
        genome = random_genome(net, cfg.G, rng, n_strat)
        site = rng.randrange(len(net.sites))
        w.agents.append(make_agent(w, genome, site, econ.initial_energy))
    return w


def match_pairs(candidates: list, rng: random.Random) -> list[tuple]:
    """Uniform random maximal matching: shuffle, then pair neighbours."""
    pool = list(candidates)
    rng.shuffle(pool)
    return [(pool[i], pool[i + 1]) for i in range(0, len(pool) - 1, 2)]


def breed_pair(a: Agent, b: Agent, w: World) -> Agent:
    econ = w.econ
    if not (a.alive and b.alive):
        raise ValueError("both parents must be alive")
    if a.site != b.site:
        raise ValueError("parents must be co-located")
    if a.energy < econ.breed_threshold or b.energy < econ.breed_threshold:
        raise ValueError("parent below breed threshold")
    cfg = w.cfg
    n_strat = len(econ.strategies)
    if w.mode == "lamarck":
        base = lamarck_genome(a.memome, b.memome, cfg.G, w.net, w.rng, n_strat)
    else:
        base = recombine(a.genome, b.genome, w.rng)
    genome = mutate_genome(base, w.net, cfg.point_rate, cfg.path_rate, w.rng, n_strat)
    half = econ.child_endowment / 2
    for parent in (a, b):
        parent.energy -= half
        parent.breed_paid += half
    child = make_agent(w, genome, a.site, econ.child_endowment)
    w.births += 1
    if w.on_birth is not None:
        w.on_birth(w, child)
    return child


def individual_learning(agent: Agent, w: World) -> None:
    if not agent.learn_pending:
        return
    agent.learn_pending = False
    cfg = w.cfg
    agent.memome.offer(mutate_memeplex(agent.today, w.net, w.econ, cfg.point_rate, cfg.path_rate, w.rng))
    if w.on_learn is not None:
        w.on_learn(w, agent)


def social_exchange(a: Agent, b: Agent, w: World) -> None:
    cfg, net, econ, rng = w.cfg, w.net, w.econ, w.rng
    from_b = mutate_memeplex(b.today, net, econ, cfg.point_rate, cfg.path_rate, rng)
    from_a = mutate_memeplex(a.today, net, econ, cfg.point_rate, cfg.path_rate, rng)
    a.memome.offer(from_b)
    b.memome.offer(from_a)
    if w.on_social is not None:
        w.on_social(w, a, b)


def execute_timestep(w: World, t: int) -> None:
    econ = w.econ
    sites = w.net.sites
    hr = econ.harvest_rate
    tau = econ.tau
    c_move = econ.c_move
    strategies = econ.strategies
    learning = w.mode in LEARNING_MODES
    social = w.mode in SOCIAL_MODES
    threshold = econ.breed_threshold

    foragers: dict[int, list[tuple[Agent, float, float, float]]] = {}
    breeders: dict[int, list[Agent]] = {}
    talkers: dict[int, list[Agent]] = {}
    for agent in w.agents:
        g = agent.today.genes[t]
        if g.site != agent.site:
            agent.energy -= c_move
            agent.move_cost += c_move
            agent.site = g.site
        ft = 1.0 - tau * (g.breed + g.learn + g.social)
        if ft > 0.0:
            mult, cost = strategies[g.strategy]
            foragers.setdefault(g.site, []).append((agent, ft, mult, cost))
        if g.breed:
            breeders.setdefault(g.site, []).append(agent)
        if g.social and social:
            talkers.setdefault(g.site, []).append(agent)
        if g.learn and learning:
            agent.learn_pending = True

    for s, group in foragers.items():
        site = sites[s]
        stock = site.stock
        asks = [hr * stock * mult * ft for _, ft, mult, _ in group]
        total = sum(asks)
        scale = stock / total if total > stock else 1.0
        taken = 0.0
        for (agent, ft, _, cost), ask in zip(group, asks):
            got = ask * scale
            agent.food_today += got
            taken += got
            spent = cost * ft
            agent.energy -= spent
            agent.strategy_cost += spent
        site.stock = max(0.0, stock - taken)

    for s, group in breeders.items():
        ready = [a for a in group if a.energy >= threshold]
        if len(ready) < 2:
            continue
        for a, b in match_pairs(ready, w.rng):
            w.nursery.append(breed_pair(a, b, w))

    for s, group in talkers.items():
        if len(group) < 2:
            continue
        for a, b in match_pairs(group, w.rng):
            social_exchange(a, b, w)


def settle_energy(w: World) -> None:
    """Learning, food-to-energy conversion, metabolism and death."""
    metabolic = w.econ.metabolic
    survivors = []
    for agent in w.agents:
        individual_learning(agent, w)
        agent.energy += agent.food_today
        agent.energy -= metabolic
        agent.food_today = 0.0
        if agent.energy <= 0:
            agent.alive = False
            w.deaths += 1
        else:
            survivors.append(agent)
    w.agents = survivors


def step_day(w: World) -> World:
    cfg = w.cfg
    for agent in w.agents:
        agent.move_cost = agent.strategy_cost = agent.breed_paid = 0.0
        agent.learn_pending = False
    for t in range(cfg.T):
        execute_timestep(w, t)
    settle_energy(w)
    for agent in w.agents:
        agent.age += 1
        agent.executed = agent.today
    w.agents.extend(w.nursery)
    w.nursery = []
    regrow(w.net, cfg.regrow_rate)
    for agent in w.agents:
        agent.today = select_behavior(agent.memome, agent.site, w.net, w.econ, cfg.T, w.rng)
    w.day += 1
    return w
