"""Genes and gene paths through a site network.

A gene path is valid when every consecutive pair of genes sits on the same
site or on adjacent sites.  Genomes and memeplexes are both gene paths.
"""
from __future__ import annotations

import random
from typing import NamedTuple, Sequence

from .network import SiteNetwork

FLAG_PROB = 0.25


class Gene(NamedTuple):
    site: int
    strategy: int
    breed: bool = False
    learn: bool = False
    social: bool = False

    @property
    def n_flags(self) -> int:
        return self.breed + self.learn + self.social


def is_valid_path(genes: Sequence[Gene], net: SiteNetwork) -> bool:
    n = len(net.sites)
    for i, g in enumerate(genes):
        if not 0 <= g.site < n:
            return False
        if i and g.site != genes[i - 1].site and g.site not in net.adjacency[genes[i - 1].site]:
            return False
    return True


def random_gene(site: int, n_strategies: int, rng: random.Random) -> Gene:
    return Gene(
        site,
        rng.randrange(n_strategies),
        rng.random() < FLAG_PROB,
        rng.random() < FLAG_PROB,
        rng.random() < FLAG_PROB,
    )


def random_walk(
    net: SiteNetwork, start: int, length: int, rng: random.Random, n_strategies: int = 3
) -> list[Gene]:
    """Random walk with self-loops; each step picks uniformly from {stay} + neighbours."""
    genes = []
    site = start
    adjacency = net.adjacency
    for i in range(length):
        if i:
            nbs = adjacency[site]
            k = rng.randrange(len(nbs) + 1)
            if k < len(nbs):
                site = nbs[k]
        genes.append(random_gene(site, n_strategies, rng))
    return genes


def mutate_path(
    genes: Sequence[Gene],
    net: SiteNetwork,
    point_rate: float,
    path_rate: float,
    rng: random.Random,
    fix_start: bool = False,
    n_strategies: int = 3,
) -> list[Gene]:
    """Point mutations per gene, then at most one suffix regeneration.

    With ``fix_start`` the suffix never begins at index 0, so the start site
    is preserved.
    """
    if not (0 <= point_rate <= 1 and 0 <= path_rate <= 1):
        raise ValueError("mutation rates must lie in [0, 1]")
    out = list(genes)
    if point_rate > 0:
        rand = rng.random
        for i, g in enumerate(out):
            if rand() < point_rate:
                out[i] = Gene(
                    g.site,
                    rng.randrange(n_strategies),
                    g.breed ^ (rand() < 0.5),
                    g.learn ^ (rand() < 0.5),
                    g.social ^ (rand() < 0.5),
                )
    if path_rate > 0 and rng.random() < path_rate:
        lo = 1 if fix_start else 0
        if len(out) > lo:
            i = rng.randrange(lo, len(out))
            if i == 0:
                out = random_walk(net, rng.randrange(len(net.sites)), len(out), rng, n_strategies)
            else:
                start = out[i - 1].site
                walk = random_walk(net, start, len(out) - i + 1, rng, n_strategies)
                out[i:] = walk[1:]
    return out
