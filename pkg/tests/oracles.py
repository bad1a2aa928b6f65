"""Independent reference implementations, used only to cross-check the
package's algorithms.  Each one deliberately takes a different route
than the production code."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from minrank_atlas.graphs import Graph, bits


def gauss_jordan_rank(rows) -> int:
    """Rank by plain rational Gauss-Jordan reduction (normalized pivots)."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def tree_path_cover_dp(t: Graph) -> int:
    """Minimum path cover of a tree by rooted DP over the max linear forest.

    At each vertex at most 2 incident forest edges are allowed (one fewer
    when the edge to the parent is taken); children are independent, so
    keep the best child gains.
    """
    n = t.order

    def best(v: int, parent: int, attached: int) -> int:
        children = [w for w in bits(t.adj[v]) if w != parent]
        base = 0
        gains = []
        for c in children:
            without = best(c, v, 0)
            base += without
            gains.append(best(c, v, 1) + 1 - without)
        gains.sort(reverse=True)
        return base + sum(g for g in gains[: 2 - attached] if g > 0)

    return n - best(0, -1, 0)


def brute_clique_cover(g: Graph) -> int:
    """Smallest family of cliques covering all edges, by raw enumeration.

    Cliques are all complete vertex subsets of size >= 2; only for tiny
    graphs.
    """
    edges = list(g.edges())
    if not edges:
        return 0
    eindex = {e: i for i, e in enumerate(edges)}
    cliques = []
    for k in range(2, g.order + 1):
        for sub in combinations(range(g.order), k):
            if all(g.has_edge(a, b) for a, b in combinations(sub, 2)):
                em = 0
                for a, b in combinations(sub, 2):
                    em |= 1 << eindex[(a, b)]
                cliques.append(em)
    full = (1 << len(edges)) - 1
    for k in range(1, len(edges) + 1):
        for family in combinations(cliques, k):
            acc = 0
            for em in family:
                acc |= em
            if acc == full:
                return k
    raise AssertionError("edges always coverable by themselves")


def brute_has_minor(g: Graph, h: Graph) -> bool:
    """Minor test by enumerating branch-set assignments (class 0 = unused).

    Each h-vertex gets a nonempty connected branch set; every h-edge
    needs some g-edge between the two sets.  Exponential; tiny g only.
    """
    k = h.order
    hedges = list(h.edges())
    for assign in product(range(k + 1), repeat=g.order):
        sets = [0] * k
        for v, c in enumerate(assign):
            if c:
                sets[c - 1] |= 1 << v
        if any(s == 0 for s in sets):
            continue
        if not all(_connected_in(g, s) for s in sets):
            continue
        ok = True
        for a, b in hedges:
            if not _touching(g, sets[a], sets[b]):
                ok = False
                break
        if ok:
            return True
    return False


def _connected_in(g: Graph, s: int) -> bool:
    start = s & -s
    comp = start
    while True:
        grown = comp
        for v in bits(comp):
            grown |= g.adj[v] & s
        if grown == comp:
            return comp == s
        comp = grown


def _touching(g: Graph, s1: int, s2: int) -> bool:
    return any(g.adj[v] & s2 for v in bits(s1))


def is_triangle_free(g: Graph) -> bool:
    return all(not g.adj[i] & g.adj[j] for i, j in g.edges())


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(rng, n: int) -> Graph:
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex v renamed to perm[v]."""
    rows = [0] * g.order
    for i in range(g.order):
        for j in bits(g.adj[i]):
            rows[perm[i]] |= 1 << perm[j]
    return Graph(g.order, tuple(rows))
