"""Genomes: creation, recombination, mutation and development into a memome."""
from __future__ import annotations

import random
from typing import Sequence

from .economy import STANDARD, EconomyParams
from .memetics import Memeplex, Memome, gene_values, move_flags
from .network import SiteNetwork
from .paths import Gene, mutate_path, random_walk

Genome = tuple[Gene, ...]


def random_genome(net: SiteNetwork, length: int, rng: random.Random, n_strategies: int = 3) -> Genome:
    if length < 1:
        raise ValueError("genome length must be >= 1")
    start = rng.randrange(len(net.sites))
    return tuple(random_walk(net, start, length, rng, n_strategies))


def recombine(a: Sequence[Gene], b: Sequence[Gene], rng: random.Random) -> Genome:
    """Single-point crossover at an index where both parents occupy the same site."""
    if len(a) != len(b):
        raise ValueError(f"parent genomes differ in length ({len(a)} vs {len(b)})")
    common = [k for k in range(len(a)) if a[k].site == b[k].site]
    if not common:
        return tuple(a)
    k = common[rng.randrange(len(common))]
    return tuple(a[:k]) + tuple(b[k:])


def mutate_genome(
    g: Sequence[Gene],
    net: SiteNetwork,
    point_rate: float,
    path_rate: float,
    rng: random.Random,
    n_strategies: int = 3,
) -> Genome:
    return tuple(mutate_path(g, net, point_rate, path_rate, rng, n_strategies=n_strategies))


def develop(g: Sequence[Gene], day_length: int, net: SiteNetwork, econ: EconomyParams) -> Memome:
    """Copy every day-length window of the genome into a fresh elite archive.

    Window fitness is computed exactly as ``memetics.evaluate`` would (same
    summation order), so archived fitnesses are bit-identical to a re-evaluation.
    """
    G = len(g)
    if G < day_length:
        raise ValueError(f"genome length {G} shorter than day length {day_length}")
    vals = gene_values(g, net.capacities, econ)
    moves = move_flags(g)
    c_move = econ.c_move
    metabolic = econ.metabolic
    memome = Memome()
    genes = tuple(g)
    for i in range(G - day_length + 1):
        # first step of a window never counts as a move
        fit = sum(vals[i:i + day_length]) - c_move * sum(moves[i + 1:i + day_length]) - metabolic
        cur = memome.archive.get(genes[i].site)
        if cur is None or fit > cur.fitness:
            memome.archive[genes[i].site] = Memeplex(genes[i:i + day_length], genes[i].site, fit)
    return memome


def genome_time_allocation(g: Sequence[Gene]) -> tuple[float, float, float]:
    n = len(g)
    if n < 1:
        raise ValueError("empty genome")
    return (
        sum(x.breed for x in g) / n,
        sum(x.learn for x in g) / n,
        sum(x.social for x in g) / n,
    )


def lamarck_genome(
    a: Memome,
    b: Memome,
    length: int,
    net: SiteNetwork,
    rng: random.Random,
    n_strategies: int = 3,
) -> Genome:
    """Genome assembled from both parents' archived memeplexes.

    Memeplexes are taken best-first, alternating between parents, and joined
    by flagless standard-strategy connector genes along shortest paths.  The
    result is cut to ``length`` or padded with a random walk.
    """
    def ranked(m: Memome) -> list[Memeplex]:
        return sorted(m.archive.values(), key=lambda x: (-x.fitness, x.start_site))

    ra, rb = ranked(a), ranked(b)
    order: list[Memeplex] = []
    for i in range(max(len(ra), len(rb))):
        if i < len(ra):
            order.append(ra[i])
        if i < len(rb):
            order.append(rb[i])

    genes: list[Gene] = []
    for m in order:
        if len(genes) >= length:
            break
        if genes:
            last = genes[-1].site
            first = m.genes[0].site
            if last != first and first not in net.adjacency[last]:
                genes.extend(Gene(s, STANDARD) for s in net.shortest_path(last, first)[1:-1])
        genes.extend(m.genes)
    if not genes:
        return random_genome(net, length, rng, n_strategies)
    if len(genes) < length:
        pad = random_walk(net, genes[-1].site, length - len(genes) + 1, rng, n_strategies)
        genes.extend(pad[1:])
    return tuple(genes[:length])
