"""Finite simple undirected graphs on dense vertex indices, plus text I/O.

Vertices are the integers ``0..n-1``.  A :class:`Graph` is immutable; the
adjacency of each vertex is a strictly increasing tuple of neighbours and a
bitmask mirror of it is kept for fast set arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

GRAPH6_SHORT_MAX = 62
GRAPH6_LONG_MAX = 258047


class GraphFormatError(ValueError):
    """Raised when graph text (edge list or graph6) cannot be decoded."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError(f"adjacency has {len(self.adjacency)} rows, expected {self.n}")
        masks = []
        for v, nbrs in enumerate(self.adjacency):
            if any(b <= a for a, b in zip(nbrs, nbrs[1:])):
                raise ValueError(f"neighbours of {v} are not strictly sorted")
            m = 0
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                m |= 1 << u
            masks.append(m)
        for v, m in enumerate(masks):
            for u in self.adjacency[v]:
                if not masks[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge iterable; duplicates and orientation are ignored."""
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __len__(self):
        return self.n


# -- named graphs --------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng) -> Graph:
    """G(n, p) drawn with ``rng`` (a :class:`random.Random`)."""
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def all_graphs(n: int):
    """Yield every labelled simple graph on ``n`` vertices (2**C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.masks[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


# -- neighbourhoods and set predicates ------------------------------------

def _check_vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")


def _mask(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        _check_vertex(g, v)
        m |= 1 << v
    return m


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def open_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(g, v)
    return g.adjacency[v]


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(g, v)
    return tuple(sorted(g.adjacency[v] + (v,)))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    m = _mask(g, s)
    return all(not m & ~(g.masks[v] | 1 << v) for v in _bits(m))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = _mask(g, s)
    return all(not g.masks[v] & m for v in _bits(m))


def externally_related(g: Graph, s: Iterable[int]) -> bool:
    """True iff every member of ``s`` has the same neighbours outside ``s``."""
    m = _mask(g, s)
    outside = None
    for v in _bits(m):
        here = g.masks[v] & ~m
        if outside is None:
            outside = here
        elif here != outside:
            return False
    return True


def pair_externally_related(g: Graph, x: int, y: int) -> bool:
    """N(x) minus y equals N(y) minus x."""
    _check_vertex(g, x)
    _check_vertex(g, y)
    if x == y:
        raise ValueError("pair_externally_related needs two distinct vertices")
    return g.masks[x] & ~(1 << y) == g.masks[y] & ~(1 << x)


# -- edge list -----------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines; ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphFormatError(f"expected 'n <count>', got {raw.strip()!r}", lineno)
            n = _int_token(tokens[1], lineno)
            if n < 0:
                raise GraphFormatError("vertex count must be non-negative", lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {raw.strip()!r}", lineno)
        u, v = (_int_token(t, lineno) for t in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def _int_token(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"not an integer: {tok!r}", lineno) from None


def emit_edge_list(g: Graph) -> str:
    return "".join([f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


# -- graph6 --------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise GraphFormatError("empty graph6 string")
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} at offset {i} outside graph6 range 63..126")
    values = [ord(ch) - 63 for ch in data]
    if values[0] != 63:
        n, pos = values[0], 1
    elif len(values) >= 2 and values[1] == 63:
        raise GraphFormatError(f"graph6 sizes above {GRAPH6_LONG_MAX} are not supported")
    else:
        if len(values) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = values[1] << 12 | values[2] << 6 | values[3]
        pos = 4
    nbits = n * (n - 1) // 2
    expected = pos + (nbits + 5) // 6
    if len(values) != expected:
        raise GraphFormatError(f"graph6 length {len(values)} does not match n={n} (expected {expected})")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if values[pos + k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= GRAPH6_SHORT_MAX:
        out = [n]
    elif n <= GRAPH6_LONG_MAX:
        out = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        raise ValueError(f"graph6 output supports at most {GRAPH6_LONG_MAX} vertices, got {n}")
    acc = 0
    k = 0
    for j in range(1, n):
        mj = g.masks[j]
        for i in range(j):
            acc = acc << 1 | (mj >> i & 1)
            k += 1
            if k == 6:
                out.append(acc)
                acc = k = 0
    if k:
        out.append(acc << (6 - k))
    return "".join(chr(v + 63) for v in out)


# -- DOT -----------------------------------------------------------------

def emit_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{labels[v]}"];')
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
