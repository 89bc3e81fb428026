"""Random geometric network of food sites."""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

MAX_CONNECT_RETRIES = 100


class NetworkGenerationError(RuntimeError):
    pass


@dataclass(slots=True)
class Site:
    x: float
    y: float
    capacity: float
    stock: float


@dataclass
class SiteNetwork:
    sites: list[Site]
    radius: float
    adjacency: list[tuple[int, ...]]
    _paths: dict[int, list[int]] = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.sites)

    @property
    def capacities(self) -> list[float]:
        return [s.capacity for s in self.sites]

    def n_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def is_adjacent(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def is_connected(self) -> bool:
        return len(_reachable(self.adjacency, 0)) == len(self.sites) if self.sites else True

    def shortest_path(self, a: int, b: int) -> list[int]:
        """Site sequence from ``a`` to ``b`` inclusive (BFS, lowest-id tie break)."""
        parent = self._paths.get(a)
        if parent is None:
            parent = _bfs_parents(self.adjacency, a)
            self._paths[a] = parent
        if parent[b] < 0 and b != a:
            raise ValueError(f"site {b} unreachable from {a}")
        path = [b]
        while path[-1] != a:
            path.append(parent[path[-1]])
        path.reverse()
        return path


def _reachable(adjacency: Sequence[Sequence[int]], start: int) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        for nb in adjacency[todo.pop()]:
            if nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return seen


def _bfs_parents(adjacency: Sequence[Sequence[int]], start: int) -> list[int]:
    parent = [-1] * len(adjacency)
    parent[start] = start
    q = deque([start])
    while q:
        u = q.popleft()
        for v in adjacency[u]:
            if parent[v] < 0:
                parent[v] = u
                q.append(v)
    return parent


def build_network(
    positions: Sequence[tuple[float, float]],
    radius: float,
    capacities: Sequence[float],
) -> SiteNetwork:
    """Assemble a network from explicit positions; no connectivity requirement."""
    if len(positions) != len(capacities):
        raise ValueError("positions and capacities differ in length")
    n = len(positions)
    adj: list[list[int]] = [[] for _ in range(n)]
    r2 = radius * radius
    for a in range(n):
        xa, ya = positions[a]
        for b in range(a + 1, n):
            dx = positions[b][0] - xa
            dy = positions[b][1] - ya
            if dx * dx + dy * dy <= r2:
                adj[a].append(b)
                adj[b].append(a)
    sites = [Site(float(x), float(y), float(c), float(c)) for (x, y), c in zip(positions, capacities)]
    return SiteNetwork(sites, radius, [tuple(sorted(a)) for a in adj])


def generate_network(
    n_sites: int,
    radius: float,
    capacity_range: tuple[float, float],
    rng: random.Random,
) -> SiteNetwork:
    if n_sites < 1:
        raise ValueError(f"n_sites must be >= 1, got {n_sites}")
    if not 0 < radius <= math.sqrt(2):
        raise ValueError(f"radius must be in (0, sqrt(2)], got {radius}")
    lo, hi = capacity_range
    if lo < 0 or hi < lo:
        raise ValueError(f"bad capacity range {capacity_range}")
    for _ in range(MAX_CONNECT_RETRIES):
        positions = [(rng.random(), rng.random()) for _ in range(n_sites)]
        capacities = [rng.uniform(lo, hi) for _ in range(n_sites)]
        net = build_network(positions, radius, capacities)
        if net.is_connected():
            return net
    raise NetworkGenerationError(
        f"no connected network with n_sites={n_sites}, radius={radius} "
        f"after {MAX_CONNECT_RETRIES} attempts"
    )


def neighbors(net: SiteNetwork, s: int) -> list[int]:
    if not 0 <= s < len(net.sites):
        raise IndexError(f"site {s} out of range for network of {len(net.sites)} sites")
    return list(net.adjacency[s])


def regrow(net: SiteNetwork, rate: float) -> SiteNetwork:
    """Restore up to ``rate`` food units per site, capped at capacity. Mutates in place."""
    if rate < 0:
        raise ValueError("regrow rate must be non-negative")
    for site in net.sites:
        site.stock = min(site.capacity, site.stock + rate)
    return net


def dump_network(net: SiteNetwork) -> str:
    lines = [f"{i},{s.x:.6f},{s.y:.6f},{s.capacity:.6f}" for i, s in enumerate(net.sites)]
    for a, nbs in enumerate(net.adjacency):
        lines.extend(f"edge,{a},{b}" for b in nbs if b > a)
    return "\n".join(lines) + "\n"
