"""Bitset-backed simple graphs and the structural predicates the bound
computations rely on.

Vertices are 0-based.  A vertex set is a plain int used as a bitmask
(bit v set <=> vertex v in the set), which keeps the inner loops of the
solvers branch-light.  Graphs are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

MAX_ORDER = 64

VertexSet = int


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the positions of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: adj[i] has bit j set iff {i,j} is an edge."""

    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(self.adj)}")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside 0..{n - 1}")
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if (self.adj[i] >> j) & 1 != (self.adj[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency at ({i},{j})")

    @classmethod
    def from_edges(cls, order: int, edges) -> Graph:
        rows = [0] * order
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, (0,) * order)

    @classmethod
    def path(cls, order: int) -> Graph:
        return cls.from_edges(order, [(i, i + 1) for i in range(order - 1)])

    @classmethod
    def cycle(cls, order: int) -> Graph:
        if order < 3:
            raise ValueError("cycle needs order >= 3")
        edges = [(i, (i + 1) % order) for i in range(order)]
        return cls.from_edges(order, edges)

    @classmethod
    def complete(cls, order: int) -> Graph:
        full = (1 << order) - 1
        return cls(order, tuple(full ^ (1 << i) for i in range(order)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        left = (1 << a) - 1
        right = ((1 << (a + b)) - 1) ^ left
        rows = [right] * a + [left] * b
        return cls(a + b, tuple(rows))

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.order) - 1

    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.order):
            for j in bits(self.adj[i] >> (i + 1)):
                yield i, i + 1 + j

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))


def size(g: Graph) -> int:
    """Number of edges of g."""
    return g.size()


def components(g: Graph) -> list[VertexSet]:
    """Maximal connected vertex sets, ascending by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.order):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = 0
            for u in bits(frontier):
                grown |= g.adj[u]
            frontier = grown & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def diameter(g: Graph) -> int:
    """Largest BFS distance over vertex pairs; rejects disconnected input."""
    best = 0
    full = g.vertex_mask
    for v in range(g.order):
        reached = 1 << v
        frontier = reached
        dist = 0
        while True:
            grown = 0
            for u in bits(frontier):
                grown |= g.adj[u]
            frontier = grown & ~reached
            if not frontier:
                break
            reached |= frontier
            dist += 1
        if reached != full:
            raise ValueError("diameter is undefined for a disconnected graph")
        best = max(best, dist)
    return best


def articulation_points(g: Graph) -> VertexSet:
    """Vertices whose removal increases the component count (DFS low-link)."""
    n = g.order
    disc = [-1] * n
    low = [0] * n
    cut = 0
    timer = 0

    def dfs(u: int, parent: int) -> None:
        nonlocal cut, timer
        disc[u] = low[u] = timer
        timer += 1
        children = 0
        for w in bits(g.adj[u]):
            if disc[w] == -1:
                children += 1
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if parent != -1 and low[w] >= disc[u]:
                    cut |= 1 << u
            elif w != parent:
                low[u] = min(low[u], disc[w])
        if parent == -1 and children >= 2:
            cut |= 1 << u

    for v in range(n):
        if disc[v] == -1:
            dfs(v, -1)
    return cut


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.size() == g.order - 1


def is_path(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in range(g.order))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.order, tuple((full ^ row) & ~(1 << i) for i, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by s, relabeled to 0..|s|-1 preserving vertex order."""
    if not s:
        raise ValueError("cannot induce on the empty vertex set")
    if s & ~g.vertex_mask:
        raise ValueError("vertex set has bits outside the graph")
    verts = list(bits(s))
    index = {v: k for k, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(verts), tuple(rows))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Adjacency-preserving bijection test; degree prefilter then backtracking."""
    n = g.order
    if n != h.order or g.size() != h.size():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    # Place high-degree vertices first: they prune hardest.
    verts = sorted(range(n), key=lambda v: -g.adj[v].bit_count())
    image = [0] * n      # image[k] = h-vertex assigned to verts[k]
    used = 0

    def place(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = verts[k]
        dv = g.adj[v].bit_count()
        for w in range(n):
            if (used >> w) & 1 or h.adj[w].bit_count() != dv:
                continue
            ok = True
            for e in range(k):
                if g.has_edge(v, verts[e]) != ((h.adj[w] >> image[e]) & 1 == 1):
                    ok = False
                    break
            if ok:
                image[k] = w
                used |= 1 << w
                if place(k + 1):
                    return True
                used &= ~(1 << w)
        return False

    return place(0)


def contains_induced(g: Graph, pattern: Graph) -> bool:
    """True iff some vertex subset of g induces a copy of pattern."""
    k = pattern.order
    if k > g.order:
        return False
    target_size = pattern.size()
    for subset in combinations(range(g.order), k):
        mask = 0
        for v in subset:
            mask |= 1 << v
        sub = induced_subgraph(g, mask)
        if sub.size() == target_size and is_isomorphic(sub, pattern):
            return True
    return False


def maximal_cliques(g: Graph) -> list[VertexSet]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted by bitset value."""
    out: list[VertexSet] = []
    adj = g.adj

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = -1
        best = -1
        for u in bits(p | x):
            c = (adj[u] & p).bit_count()
            if c > best:
                best = c
                pivot = u
        for v in bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, g.vertex_mask, 0)
    return sorted(out)
