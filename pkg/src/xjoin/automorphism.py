"""Automorphism groups: the semidirect-product construction and a search oracle.

``aut_from_decomposition`` assembles Aut(G) from the characteristic graph:
the symmetric group of every fiber (the kernel, acting inside fibers) and
the color-preserving automorphisms of the quotient lifted block-wise to G
(the complement).  Its order is the product of the fiber factorials and
the order of the colored quotient group.

``brute_force_aut`` ignores all of that and searches the host graph
directly; it is the independent check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import factorial, prod
from typing import Hashable, Iterable, Sequence

from .decomposition import CharacteristicGraph, Fiber, FiberKind, SizeLimitError, is_reduced_join
from .graph import Graph, _bits

BRUTE_FORCE_LIMIT = 12
COLOR_AUT_LIMIT = 12
CLOSURE_CAP = 100_000


class NotReducedError(ValueError):
    """The requested X-join is not reduced."""


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: Permutation) -> Permutation:
        # (p * q)(v) == p(q(v))
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for v in range(len(self.images)):
            if v in seen or self.images[v] == v:
                continue
            cyc = [v]
            seen.add(v)
            w = self.images[v]
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self.images[w]
            out.append(tuple(cyc))
        return out

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"


@dataclass(frozen=True)
class GroupDescription:
    degree: int
    kernel_generators: tuple[Permutation, ...]
    complement_generators: tuple[Permutation, ...]
    order: int
    kernel_order: int
    quotient_group_order: int

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self.kernel_generators + self.complement_generators

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "kernel_order": str(self.kernel_order),
            "quotient_group_order": str(self.quotient_group_order),
            "kernel_generators": [list(p.images) for p in self.kernel_generators],
            "complement_generators": [list(p.images) for p in self.complement_generators],
        }


def verify_automorphism(g: Graph, p: Permutation) -> bool:
    if p.degree != g.n:
        raise ValueError(f"permutation of degree {p.degree} applied to a graph on {g.n} vertices")
    img = p.images
    for v in range(g.n):
        mapped = 0
        for u in g.adjacency[v]:
            mapped |= 1 << img[u]
        if mapped != g.masks[img[v]]:
            return False
    return True


# -- search engine ---------------------------------------------------------

def _refine(masks: Sequence[int], colors: Sequence[Hashable]) -> list[int]:
    """Colour refinement to a stable partition.

    Colour ids depend only on the colour structure, never on vertex names,
    so two graphs refined together (as one disjoint union) get comparable ids.
    """
    ids = {}
    cur = [ids.setdefault(c, len(ids)) for c in colors]
    nbrs = [list(_bits(m)) for m in masks]
    count = len(ids)
    while True:
        keys = [(cur[v], tuple(sorted(cur[u] for u in nbrs[v]))) for v in range(len(masks))]
        table = {k: i for i, k in enumerate(sorted(set(keys)))}
        cur = [table[k] for k in keys]
        if len(table) == count:
            return cur
        count = len(table)


class _Matcher:
    """Backtracking search for colour-preserving isomorphisms ``g -> h``."""

    def __init__(self, gmasks, hmasks, gcolors, hcolors):
        self.g = gmasks
        self.h = hmasks
        self.gc = gcolors
        n = len(gmasks)
        self.n = n
        self.hclass = {}
        for w, c in enumerate(hcolors):
            self.hclass[c] = self.hclass.get(c, 0) | 1 << w
        self.order = self._search_order()

    def _search_order(self):
        n = self.n
        sizes = {}
        for c in self.gc:
            sizes[c] = sizes.get(c, 0) + 1
        placed = 0
        order = []
        for _ in range(n):
            best = min(
                (v for v in range(n) if not placed >> v & 1),
                key=lambda v: (-bin(self.g[v] & placed).count("1"), sizes[self.gc[v]], v),
            )
            order.append(best)
            placed |= 1 << best
        return order

    def extend(self, forced: dict[int, int]) -> list[int] | None:
        """Find an isomorphism agreeing with ``forced``; ``None`` if there is none."""
        g, h, n = self.g, self.h, self.n
        order = [v for v in self.order if v in forced] + [v for v in self.order if v not in forced]
        img = [-1] * n

        def candidates(i):
            u = order[i]
            cand = self.hclass.get(self.gc[u], 0)
            if u in forced:
                cand &= 1 << forced[u]
            for d in order[:i]:
                if g[u] >> d & 1:
                    cand &= h[img[d]]
                else:
                    cand &= ~h[img[d]]
            return cand

        used = 0
        stack = [candidates(0)] if n else []
        i = 0
        while n:
            cand = stack[-1] & ~used
            if not cand:
                stack.pop()
                i -= 1
                if i < 0:
                    return None
                used &= ~(1 << img[order[i]])
                img[order[i]] = -1
                continue
            w = (cand & -cand).bit_length() - 1
            stack[-1] &= ~(1 << w)
            img[order[i]] = w
            used |= 1 << w
            i += 1
            if i == n:
                return img
            stack.append(candidates(i))
        return []


def _orbit(point: int, gens: Sequence[list[int]]) -> set[int]:
    orbit = {point}
    todo = [point]
    while todo:
        v = todo.pop()
        for p in gens:
            w = p[v]
            if w not in orbit:
                orbit.add(w)
                todo.append(w)
    return orbit


def _automorphism_group(g: Graph, colors: Sequence[Hashable]) -> tuple[int, list[Permutation]]:
    """Exact group order and generators of the colour-preserving automorphisms.

    Walks a stabiliser chain along the search order from the bottom up:
    at each base point, every same-coloured vertex outside the orbit known
    so far is tested by an explicit search, so the orbit sizes are exact and
    their product is the order.
    """
    n = g.n
    cols = _refine(g.masks, colors)
    matcher = _Matcher(g.masks, g.masks, cols, cols)
    base = matcher.order
    gens: list[list[int]] = []
    order = 1
    for i in range(n - 1, -1, -1):
        b = base[i]
        forced = {p: p for p in base[:i]}
        orbit = _orbit(b, gens)
        for w in _bits(matcher.hclass[cols[b]]):
            if w in orbit:
                continue
            forced[b] = w
            perm = matcher.extend(forced)
            if perm is not None:
                gens.append(perm)
                orbit = _orbit(b, gens)
        order *= len(orbit)
    return order, [Permutation(tuple(p)) for p in sorted(gens)]


def brute_force_aut(g: Graph, limit: int | None = BRUTE_FORCE_LIMIT) -> tuple[int, list[Permutation]]:
    """|Aut(g)| and a generating set by exhaustive search of the host graph."""
    if limit is not None and g.n > limit:
        raise SizeLimitError(f"brute_force_aut: n={g.n} exceeds limit {limit}")
    return _automorphism_group(g, [0] * g.n)


def color_aut(x: Graph, colors: Sequence[Hashable], limit: int | None = COLOR_AUT_LIMIT) -> tuple[int, list[Permutation]]:
    """Automorphisms of ``x`` that send every vertex to one of the same colour."""
    if len(colors) != x.n:
        raise ValueError(f"{len(colors)} colours for a graph on {x.n} vertices")
    if limit is not None and x.n > limit:
        raise SizeLimitError(f"color_aut: quotient has {x.n} vertices, limit is {limit}")
    return _automorphism_group(x, colors)


def find_isomorphism(g: Graph, h: Graph, g_colors: Sequence[Hashable] | None = None,
                     h_colors: Sequence[Hashable] | None = None) -> list[int] | None:
    """A colour-preserving isomorphism ``g -> h`` as an image list, or ``None``."""
    if g.n != h.n or g.num_edges() != h.num_edges():
        return None
    n = g.n
    g_colors = [0] * n if g_colors is None else list(g_colors)
    h_colors = [0] * n if h_colors is None else list(h_colors)
    union = list(g.masks) + [m << n for m in h.masks]
    cols = _refine(union, g_colors + h_colors)
    gc, hc = cols[:n], cols[n:]
    if sorted(gc) != sorted(hc):
        return None
    return _Matcher(g.masks, h.masks, gc, hc).extend({})


# -- the semidirect-product construction -----------------------------------

def kernel_generators(c: CharacteristicGraph) -> list[Permutation]:
    """Adjacent transpositions inside each fiber; they generate every Sym(fiber)."""
    n = c.host.n
    gens = []
    for block in c.classes:
        for a, b in zip(block, block[1:]):
            images = list(range(n))
            images[a], images[b] = b, a
            gens.append(Permutation(tuple(images)))
    return gens


def lift(c: CharacteristicGraph, f: Permutation) -> Permutation:
    """Lift a quotient automorphism to the host, mapping fibers in ascending order."""
    images = [0] * c.host.n
    classes = c.classes
    for q, block in enumerate(classes):
        target = classes[f(q)]
        if len(target) != len(block):
            raise ValueError(f"quotient map sends fiber {q} to a fiber of different size")
        for v, w in zip(block, target):
            images[v] = w
    return Permutation(tuple(images))


def aut_from_decomposition(c: CharacteristicGraph, limit: int | None = COLOR_AUT_LIMIT) -> GroupDescription:
    quotient_order, quotient_gens = color_aut(c.quotient, c.colors, limit=limit)
    kernel_order = prod(factorial(f.size) for f in c.fibers)
    return GroupDescription(
        degree=c.host.n,
        kernel_generators=tuple(kernel_generators(c)),
        complement_generators=tuple(lift(c, f) for f in quotient_gens),
        order=kernel_order * quotient_order,
        kernel_order=kernel_order,
        quotient_group_order=quotient_order,
    )


def wreath_order(x: Graph, fiber_size: int, fiber_kind: FiberKind, limit: int | None = COLOR_AUT_LIMIT) -> int:
    """Order of Sym(fiber) wr Aut(x) for a uniform reduced join: (s!)**|V(x)| * |Aut(x)|."""
    fiber = Fiber.make(fiber_size, fiber_kind)
    if not is_reduced_join(x, [fiber] * x.n):
        raise NotReducedError(f"uniform {fiber.kind.value} fibers of size {fiber.size} do not give a reduced join")
    aut_x, _ = color_aut(x, [0] * x.n, limit=limit)
    return factorial(fiber.size) ** x.n * aut_x


# -- group checks ------------------------------------------------------------

def fixes_fibers(c: CharacteristicGraph, p: Permutation) -> bool:
    return all(c.class_of[p(v)] == c.class_of[v] for v in range(c.host.n))


def closure(gens: Iterable[Permutation], degree: int, cap: int = CLOSURE_CAP) -> set[tuple[int, ...]] | None:
    """All elements of the group generated by ``gens``; ``None`` once more than ``cap`` are found."""
    gens = [p.images for p in gens]
    start = tuple(range(degree))
    seen = {start}
    queue = deque([start])
    while queue:
        e = queue.popleft()
        for g in gens:
            prod_ = tuple(g[i] for i in e)
            if prod_ not in seen:
                if len(seen) >= cap:
                    return None
                seen.add(prod_)
                queue.append(prod_)
    return seen
