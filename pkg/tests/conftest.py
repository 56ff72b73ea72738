import random
from itertools import combinations

import networkx as nx
import pytest

from ramseykit.coloring import EdgeColoring


def random_coloring(rng: random.Random, n: int, r: int) -> EdgeColoring:
    return EdgeColoring(n, r, tuple(rng.randint(1, r) for _ in range(n * (n - 1) // 2)))


def brute_clique_number(c: EdgeColoring, color: int) -> int:
    """Largest monochromatic clique by plain subset enumeration (small n only)."""
    best = 1 if c.n else 0
    for k in range(2, c.n + 1):
        if any(all(c.color(a, b) == color for a, b in combinations(s, 2)) for s in combinations(range(c.n), k)):
            best = k
        else:
            break
    return best


def nx_clique_number(c: EdgeColoring, color: int) -> int:
    """Independent oracle for larger colorings: networkx maximal-clique enumeration."""
    g = nx.Graph()
    g.add_nodes_from(range(c.n))
    g.add_edges_from((i, j) for i, j, col in c.edges() if col == color)
    return max(len(q) for q in nx.find_cliques(g))


@pytest.fixture
def rng():
    return random.Random(20261018)
