import math
import os
import random

import pytest
from hypothesis import settings

from dualinherit.network import build_network, generate_network

settings.register_profile("default", deadline=None, max_examples=100)
settings.register_profile("thorough", deadline=None, max_examples=1000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def adjacency_oracle(net):
    """Brute-force pairwise-distance adjacency matrix."""
    pts = [(s.x, s.y) for s in net.sites]
    n = len(pts)
    return [[a != b and math.dist(pts[a], pts[b]) <= net.radius for b in range(n)] for a in range(n)]


def path_ok(genes, adj):
    return all(
        genes[i].site == genes[i - 1].site or adj[genes[i - 1].site][genes[i].site]
        for i in range(1, len(genes))
    )


@pytest.fixture(scope="session")
def net50():
    return generate_network(50, 0.25, (5.0, 15.0), random.Random(7))


@pytest.fixture(scope="session")
def adj50(net50):
    return adjacency_oracle(net50)


@pytest.fixture
def line3():
    """Three sites on a line: 0-1 and 1-2 adjacent, 0-2 not."""
    return build_network([(0.0, 0.0), (0.3, 0.0), (0.6, 0.0)], 0.35, [10.0, 20.0, 30.0])


def hand_world(net, seed=0, **overrides):
    """World on a hand-built network with no agents."""
    from dualinherit.config import Config
    from dualinherit.engine import World

    cfg = Config(**overrides)
    return World(cfg=cfg, net=net, rng=random.Random(seed), econ=cfg.econ)


def place(w, genes_today, energy, genome=None):
    """Add an agent whose memome holds exactly ``genes_today`` and who runs it today."""
    from dualinherit.engine import make_agent
    from dualinherit.memetics import Memeplex, Memome

    m = Memeplex.from_genes(genes_today, w.net, w.econ)
    mem = Memome()
    mem.offer(m)
    if genome is None:
        genome = tuple(genes_today) * (w.cfg.G // len(genes_today) + 1)
        genome = genome[: w.cfg.G]
    agent = make_agent(w, genome, m.start_site, energy, memome=mem)
    agent.today = m
    w.agents.append(agent)
    return agent


VERDICTS: list[str] = []


def verdict(number, title, ok, detail=""):
    """Record one acceptance line; the summary hook prints them all at the end."""
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}" + (f" [{detail}]" if detail else "")
    VERDICTS.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance")
        for line in VERDICTS:
            terminalreporter.write_line(line)
