import itertools
import random

import pytest

from xjoin.graph import Graph, all_graphs, random_graph

ACCEPTANCE_RESULTS = {}


def naive_aut_order(g: Graph) -> int:
    """|Aut(g)| by trying every permutation; only for tiny graphs."""
    edges = set(g.edges())
    count = 0
    for p in itertools.permutations(range(g.n)):
        if all(tuple(sorted((p[u], p[v]))) in edges for u, v in edges):
            count += 1
    return count


def small_graphs(max_n):
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


def sampled_graphs(n, count, seed):
    rng = random.Random(seed)
    return [random_graph(n, rng.random(), rng) for _ in range(count)]


def relabel(g: Graph, perm):
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} - {detail}")
