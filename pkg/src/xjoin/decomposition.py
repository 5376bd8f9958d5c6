"""Twin partition and characteristic (quotient) graph of a finite graph.

Every finite graph is a reduced complete-empty X-join in exactly one way.
The fibers are the maximal sets of vertices that are pairwise twins: true
twins (equal closed neighbourhoods) give complete fibers, false twins
(equal open neighbourhoods) give empty fibers, and everything else is a
one-vertex fiber.  The base graph X is recovered as the quotient.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from .graph import Graph, _bits, externally_related, is_clique, is_independent, pair_externally_related


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class SizeLimitError(ValueError):
    """Input exceeds the size an exhaustive routine is willing to handle."""


class FiberKind(enum.Enum):
    CLIQUE = "clique"
    INDEPENDENT = "independent"
    SINGLETON = "singleton"

    @property
    def is_complete(self) -> bool:
        return self is not FiberKind.INDEPENDENT

    @property
    def is_empty(self) -> bool:
        return self is not FiberKind.CLIQUE


class Fiber(NamedTuple):
    size: int
    kind: FiberKind

    @classmethod
    def make(cls, size: int, kind: FiberKind) -> Fiber:
        """Validated constructor; a one-vertex fiber is always a singleton."""
        if size < 1:
            raise ValueError(f"fiber size must be positive, got {size}")
        if size == 1:
            return cls(1, FiberKind.SINGLETON)
        if kind is FiberKind.SINGLETON:
            raise ValueError(f"singleton fiber must have size 1, got {size}")
        return cls(size, kind)


class TwinClass(NamedTuple):
    vertices: tuple[int, ...]
    kind: FiberKind


@dataclass(frozen=True)
class TwinPartition:
    host: Graph
    classes: tuple[TwinClass, ...]


@dataclass(frozen=True)
class CharacteristicGraph:
    """The quotient of a host graph by its twin partition.

    ``colors`` groups quotient vertices whose fibers are isomorphic, i.e.
    have the same size and kind.
    """

    host: Graph
    partition: TwinPartition
    quotient: Graph
    fibers: tuple[Fiber, ...]
    class_of: tuple[int, ...]
    colors: tuple[int, ...]

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.vertices for c in self.partition.classes)


def twin_classes(g: Graph) -> TwinPartition:
    n = g.n
    by_closed = {}
    by_open = {}
    for v in range(n):
        by_open.setdefault(g.masks[v], []).append(v)
        by_closed.setdefault(g.masks[v] | 1 << v, []).append(v)

    owner = [None] * n
    classes = []
    for groups, kind in ((by_closed, FiberKind.CLIQUE), (by_open, FiberKind.INDEPENDENT)):
        for members in groups.values():
            if len(members) < 2:
                continue
            for v in members:
                if owner[v] is not None:
                    raise InvariantError(f"vertex {v} has both a true twin and a false twin")
                owner[v] = kind
            classes.append(TwinClass(tuple(members), kind))
    classes.extend(TwinClass((v,), FiberKind.SINGLETON) for v in range(n) if owner[v] is None)
    classes.sort(key=lambda c: c.vertices[0])
    return TwinPartition(g, tuple(classes))


def _color_ids(fibers: Sequence[Fiber]) -> tuple[int, ...]:
    ids = {}
    return tuple(ids.setdefault(f, len(ids)) for f in fibers)


def quotient(g: Graph, p: TwinPartition) -> CharacteristicGraph:
    class_of = [None] * g.n
    for i, cls in enumerate(p.classes):
        for v in cls.vertices:
            if class_of[v] is not None:
                raise InvariantError(f"vertex {v} appears in two classes")
            class_of[v] = i
    if None in class_of:
        raise InvariantError("partition does not cover every vertex")

    class_masks = [sum(1 << v for v in cls.vertices) for cls in p.classes]
    edges = []
    for a, b in combinations(range(len(p.classes)), 2):
        hits = [g.masks[v] & class_masks[b] for v in p.classes[a].vertices]
        if all(h == class_masks[b] for h in hits):
            edges.append((a, b))
        elif any(hits):
            raise InvariantError(f"classes {a} and {b} are joined by some but not all edges")

    fibers = tuple(Fiber(len(c.vertices), c.kind) for c in p.classes)
    return CharacteristicGraph(
        host=g,
        partition=p,
        quotient=Graph.from_edges(len(p.classes), edges),
        fibers=fibers,
        class_of=tuple(class_of),
        colors=_color_ids(fibers),
    )


def is_reduced_join(x: Graph, fibers: Sequence[Fiber]) -> bool:
    """Whether the complete-empty X-join of ``fibers`` over ``x`` is reduced.

    A pair of base vertices with equal punctured neighbourhoods must not
    carry two empty fibers across a non-edge or two complete fibers
    across an edge.
    """
    if len(fibers) != x.n:
        raise ValueError(f"{len(fibers)} fibers for a base graph on {x.n} vertices")
    for a, b in combinations(range(x.n), 2):
        if not pair_externally_related(x, a, b):
            continue
        ka, kb = fibers[a].kind, fibers[b].kind
        if x.has_edge(a, b):
            if ka.is_complete and kb.is_complete:
                return False
        elif ka.is_empty and kb.is_empty:
            return False
    return True


def is_reduced(c: CharacteristicGraph) -> bool:
    return is_reduced_join(c.quotient, c.fibers)


def decompose(g: Graph) -> CharacteristicGraph:
    c = quotient(g, twin_classes(g))
    if not is_reduced(c):
        raise InvariantError("twin quotient is not reduced")
    return c


def check_partition(p: TwinPartition) -> list[str]:
    """Return a list of violated partition invariants (empty when valid)."""
    g = p.host
    problems = []
    seen = []
    for cls in p.classes:
        seen.extend(cls.vertices)
        vs = cls.vertices
        if cls.kind is FiberKind.SINGLETON and len(vs) != 1:
            problems.append(f"singleton class {vs} has size {len(vs)}")
        if cls.kind is FiberKind.CLIQUE and (len(vs) < 2 or not is_clique(g, vs)):
            problems.append(f"clique class {vs} is not a clique of size >= 2")
        if cls.kind is FiberKind.INDEPENDENT and (len(vs) < 2 or not is_independent(g, vs)):
            problems.append(f"independent class {vs} is not independent of size >= 2")
        if not externally_related(g, vs):
            problems.append(f"class {vs} is not externally related")
    if sorted(seen) != list(range(g.n)):
        problems.append("classes are not a partition of the vertex set")
    mins = [c.vertices[0] for c in p.classes]
    if mins != sorted(mins):
        problems.append("classes are not ordered by minimum vertex")
    return problems


# -- brute-force oracle ---------------------------------------------------

CEM_ORACLE_LIMIT = 12


def _in_cem(g: Graph, m: int) -> bool:
    members = list(_bits(m))
    outside = 0
    for v in members:
        outside |= g.masks[v] & ~m
    if not outside:
        return False
    if not (is_clique(g, members) or is_independent(g, members)):
        return False
    return all(pair_externally_related(g, x, y) for x, y in combinations(members, 2))


def cem_oracle(g: Graph, limit: int = CEM_ORACLE_LIMIT) -> list[tuple[int, ...]]:
    """Maximal vertex sets that are complete-or-empty and pairwise twin, by enumeration.

    Only sets with a non-empty outside neighbourhood are considered, so
    isolated vertices of a graph with edges never appear.  Complete and
    edgeless graphs are special-cased to the single whole-vertex-set class.
    """
    n = g.n
    if n > limit:
        raise SizeLimitError(f"cem_oracle enumerates 2**n subsets; n={n} exceeds limit {limit}")
    if n == 0:
        return []
    everything = list(range(n))
    if is_clique(g, everything) or is_independent(g, everything):
        return [tuple(everything)]
    members = [m for m in range(1, 1 << n) if _in_cem(g, m)]
    maximal = [m for m in members if not any(o != m and o & m == m for o in members)]
    return sorted(tuple(_bits(m)) for m in maximal)
