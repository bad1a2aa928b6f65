"""Minor containment for small graphs, and the excluded-minor planarity
and outerplanarity tests built on it.

has_minor searches by the classic recursion: H is a minor of G iff H is
a subgraph of G (vertex injection preserving edges) or H is a minor of
some single-edge contraction of G.  Intended for g of order <= 10 with
the fixed targets below; a visited set keeps repeated contractions from
blowing up.
"""

from __future__ import annotations

from minrank_atlas.graphs import Graph, bits

K5 = Graph.complete(5)
K4 = Graph.complete(4)
K33 = Graph.complete_bipartite(3, 3)
K23 = Graph.complete_bipartite(2, 3)


def _has_subgraph(g: Graph, h: Graph) -> bool:
    """Injective map V(h) -> V(g) sending every h-edge to a g-edge."""
    n, k = g.order, h.order
    if k > n or h.size() > g.size():
        return False
    gdeg = sorted((g.degree(v) for v in range(n)), reverse=True)
    hdeg = sorted((h.degree(v) for v in range(k)), reverse=True)
    if any(dh > dg for dg, dh in zip(gdeg, hdeg)):
        return False
    order = sorted(range(k), key=lambda v: -h.degree(v))
    image = [0] * k
    used = 0

    def place(t: int) -> bool:
        nonlocal used
        if t == k:
            return True
        v = order[t]
        dv = h.degree(v)
        for w in range(n):
            if (used >> w) & 1 or g.degree(w) < dv:
                continue
            ok = True
            for e in range(t):
                if h.has_edge(v, order[e]) and not (g.adj[w] >> image[e]) & 1:
                    ok = False
                    break
            if ok:
                image[t] = w
                used |= 1 << w
                if place(t + 1):
                    return True
                used &= ~(1 << w)
        return False

    return place(0)


def _contract(g: Graph, u: int, v: int) -> Graph:
    """Merge v into u and drop v; parallel edges and loops collapse away."""
    merged = list(g.adj)
    merged[u] |= merged[v]
    keep = [w for w in range(g.order) if w != v]
    index = {w: t for t, w in enumerate(keep)}
    rows = []
    for w in keep:
        row_bits = merged[w]
        if w == u:
            row_bits &= ~(1 << u) & ~(1 << v)
        elif (row_bits >> v) & 1:
            row_bits = (row_bits & ~(1 << v)) | (1 << u)
        out = 0
        for x in bits(row_bits):
            out |= 1 << index[x]
        rows.append(out)
    return Graph(g.order - 1, tuple(rows))


def has_minor(g: Graph, h: Graph) -> bool:
    """True iff h is a minor of g."""
    seen: set[tuple[int, tuple[int, ...]]] = set()

    def search(cur: Graph) -> bool:
        if cur.order < h.order or cur.size() < h.size():
            return False
        key = (cur.order, cur.adj)
        if key in seen:
            return False
        seen.add(key)
        if _has_subgraph(cur, h):
            return True
        if cur.order == h.order:
            return False
        for i, j in cur.edges():
            if search(_contract(cur, i, j)):
                return True
        return False

    return search(g)


def is_planar(g: Graph) -> bool:
    """No K5 minor and no K3,3 minor."""
    return not has_minor(g, K5) and not has_minor(g, K33)


def is_outerplanar(g: Graph) -> bool:
    """No K4 minor and no K2,3 minor."""
    return not has_minor(g, K4) and not has_minor(g, K23)
