import random

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from cyclecvx.graph import Graph


def from_nx(H) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(H.nodes()))}
    return Graph(len(mapping), [(mapping[a], mapping[b]) for a, b in H.edges()])


_ATLAS = None


def atlas(max_n: int, connected: bool = False) -> list[Graph]:
    """Every graph up to isomorphism with 1..max_n vertices (max_n <= 7)."""
    global _ATLAS
    if _ATLAS is None:
        _ATLAS = [H for H in graph_atlas_g() if H.number_of_nodes() >= 1]
    out = []
    for H in _ATLAS:
        if H.number_of_nodes() > max_n:
            continue
        if connected and not nx.is_connected(H):
            continue
        out.append(from_nx(H))
    return out


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.15, 0.7)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240613)


def host_corpus(count: int = 30, max_n: int = 8, seed: int = 31) -> list[Graph]:
    """Small named graphs plus seeded random ones, ``count`` in total."""
    from cyclecvx.graph import complete_graph, cycle_graph, path_graph

    fixed = [Graph(0), Graph(1), Graph(3), complete_graph(3), cycle_graph(5), path_graph(4), complete_graph(4)]
    rng = random.Random(seed)
    while len(fixed) < count:
        fixed.append(random_graph(rng, rng.randint(2, max_n)))
    return fixed


def satisfiable_cnfs(count: int = 10, seed: int = 5):
    """Seeded 3-CNFs with at most three clauses and a complementary pair, all satisfiable."""
    from itertools import product

    from cyclecvx.reductions import CnfFormula

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        nv = rng.randint(2, 4)
        clauses = []
        for _ in range(rng.randint(1, 3)):
            vs = rng.sample(range(1, nv + 1), 3) if nv >= 3 else [rng.randint(1, nv) for _ in range(3)]
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
        phi = CnfFormula(nv, tuple(clauses))
        if not phi.opposite_pairs():
            continue
        models = [dict(zip(range(1, nv + 1), bits)) for bits in product([False, True], repeat=nv)]
        models = [m for m in models if phi.evaluate(m)]
        if models:
            out.append((phi, models))
    return out


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
