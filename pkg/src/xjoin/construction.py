"""Building complete-empty X-joins and lexicographic products."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .decomposition import Fiber, FiberKind
from .graph import Graph

_KIND_TOKENS = {"c": FiberKind.CLIQUE, "i": FiberKind.INDEPENDENT}


def parse_fiber_spec(text: str) -> list[Fiber]:
    """Parse tokens like ``"c2 i3 c1"`` (clique of 2, independent of 3, single vertex)."""
    fibers = []
    for tok in text.replace(",", " ").split():
        kind = _KIND_TOKENS.get(tok[:1].lower())
        if kind is None or not tok[1:].isdigit():
            raise ValueError(f"bad fiber token {tok!r}; expected c<k> or i<k>")
        fibers.append(Fiber.make(int(tok[1:]), kind))
    return fibers


def format_fiber_spec(fibers: Sequence[Fiber]) -> str:
    return " ".join(("i" if f.kind is FiberKind.INDEPENDENT else "c") + str(f.size) for f in fibers)


def x_join(x: Graph, fibers: Sequence[Fiber]) -> tuple[Graph, tuple[int, ...]]:
    """Replace each vertex of ``x`` by a complete or empty fiber.

    Fiber vertices are numbered in consecutive blocks following the base
    vertex order.  Returns the joined graph and, for each of its vertices,
    the base vertex it came from.
    """
    if len(fibers) != x.n:
        raise ValueError(f"{len(fibers)} fibers given for a base graph on {x.n} vertices")
    starts = []
    class_map = []
    for b, f in enumerate(fibers):
        if f.size < 1:
            raise ValueError(f"fiber {b} has size {f.size}; fibers must be non-empty")
        if (f.size == 1) != (f.kind is FiberKind.SINGLETON):
            raise ValueError(f"fiber {b}: kind {f.kind.value} does not fit size {f.size}")
        starts.append(len(class_map))
        class_map.extend([b] * f.size)

    def block(b):
        return range(starts[b], starts[b] + fibers[b].size)

    edges = []
    for b, f in enumerate(fibers):
        if f.kind is FiberKind.CLIQUE:
            edges.extend(combinations(block(b), 2))
    for a, b in x.edges():
        edges.extend((u, v) for u in block(a) for v in block(b))
    return Graph.from_edges(len(class_map), edges), tuple(class_map)


def lex_product(x: Graph, y: Graph) -> Graph:
    """Lexicographic product: vertex ``(a, b)`` is numbered ``a * y.n + b``."""
    if x.n == 0 or y.n == 0:
        raise ValueError("lexicographic product needs non-empty factors")
    m = y.n
    edges = []
    for a in range(x.n):
        edges.extend((a * m + u, a * m + v) for u, v in y.edges())
    for a, b in x.edges():
        edges.extend((a * m + u, b * m + v) for u in range(m) for v in range(m))
    return Graph.from_edges(x.n * m, edges)
