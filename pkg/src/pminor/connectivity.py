"""Exact vertex connectivity via unit-capacity max flow, blocks and cut vertices."""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .graph import SimpleGraph, bits, popcount


def _flow_paths(g: SimpleGraph, s: int, t: int, cap: int | None, forbid_direct: bool) -> list[list[int]]:
    """Internally vertex-disjoint s-t paths by augmenting on the split graph.

    Vertex v becomes v_in = 2v, v_out = 2v+1 joined by a unit arc.  Stops once
    ``cap`` paths are found.  With ``forbid_direct`` the edge st is ignored.
    """
    n = g.n
    # in/out nodes differ, so every ordered node pair carries at most one original arc
    res: dict[tuple[int, int], int] = {}
    nbrs: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in res:
            res[(a, b)] = 0
            res[(b, a)] = res.get((b, a), 0)
            nbrs[a].append(b)
            nbrs[b].append(a)
        res[(a, b)] += c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        if forbid_direct and {u, v} == {s, t}:
            continue
        arc(2 * u + 1, 2 * v, 1)
        arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while cap is None or flow < cap:
        prev = {source: -1}
        dq = deque([source])
        while dq and sink not in prev:
            a = dq.popleft()
            for b in nbrs[a]:
                if b not in prev and res[(a, b)] > 0:
                    prev[b] = a
                    dq.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] != -1:
            a = prev[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        flow += 1
    # decompose: follow saturated vertex arcs from s
    paths = []
    used: set[tuple[int, int]] = set()
    for _ in range(flow):
        path = [s]
        cur = s
        while cur != t:
            nxt = None
            for w in g.neighbors(cur):
                if forbid_direct and {cur, w} == {s, t}:
                    continue
                a, b = 2 * cur + 1, 2 * w
                # unit arc a->b carries flow iff its residual dropped to zero
                if (a, b) not in used and res[(a, b)] == 0:
                    nxt = w
                    used.add((a, b))
                    break
            if nxt is None:
                break
            path.append(nxt)
            cur = nxt
        paths.append(path)
    return paths


def local_connectivity(g: SimpleGraph, s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths with s, t nonadjacent."""
    if g.has_edge(s, t):
        raise ValueError("local connectivity is defined here for nonadjacent pairs")
    return len(_flow_paths(g, s, t, cap, forbid_direct=False))


def disjoint_paths(g: SimpleGraph, s: int, t: int, cap: int | None = None) -> list[list[int]]:
    """Internally disjoint s-t paths of length at least two (the edge st is skipped)."""
    return _flow_paths(g, s, t, cap, forbid_direct=True)


def is_complete(g: SimpleGraph) -> bool:
    return g.size() == g.n * (g.n - 1) // 2


def vertex_connectivity(g: SimpleGraph) -> int:
    """Minimum vertex cut size; ``n-1`` for complete graphs, 0 if disconnected."""
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least two vertices")
    if is_complete(g):
        return n - 1
    if not g.is_connected():
        return 0
    kappa = min(g.degrees())
    for i in range(n):
        if i > kappa:
            break
        for w in range(n):
            if w == i or g.has_edge(i, w):
                continue
            kappa = min(kappa, local_connectivity(g, i, w, cap=kappa))
    return kappa


def is_k_connected(g: SimpleGraph, k: int) -> bool:
    """True iff ``g`` has at least ``k+1`` vertices and no vertex cut smaller than ``k``."""
    if k <= 0:
        return True
    if g.n < k + 1:
        return False
    if k == 1:
        return g.is_connected()
    if k == 2:
        return g.is_connected() and not cut_vertices(g)
    if min(g.degrees()) < k:
        return False
    if is_complete(g):
        return True
    for i in range(k):
        for w in range(g.n):
            if w == i or g.has_edge(i, w):
                continue
            if local_connectivity(g, i, w, cap=k) < k:
                return False
    return True


def _biconnected(g: SimpleGraph):
    """Tarjan's algorithm (iterative): returns (cut_vertex_set, list_of_block_vertex_masks)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    blocks: list[int] = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if g.degree(root) == 0:
            blocks.append(1 << root)
            disc[root] = timer
            timer += 1
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != root:
                        cuts.add(u)
                    m = 0
                    while edge_stack:
                        a, b = edge_stack.pop()
                        m |= (1 << a) | (1 << b)
                        if (a, b) == (u, v):
                            break
                    blocks.append(m)
        if root_children > 1:
            cuts.add(root)
    return cuts, blocks


def cut_vertices(g: SimpleGraph) -> set[int]:
    return _biconnected(g)[0]


def blocks(g: SimpleGraph) -> list[int]:
    """Blocks as vertex bitmasks (bridges and isolated vertices included)."""
    return _biconnected(g)[1]


def is_internally_4_connected(g: SimpleGraph) -> bool:
    """3-connected, and every 3-cut leaves one single vertex and one other component."""
    if g.n < 5:
        raise ValueError("internal 4-connectivity is defined here for order >= 5")
    if not is_k_connected(g, 3):
        return False
    full = (1 << g.n) - 1
    for trio in combinations(range(g.n), 3):
        rest = full & ~((1 << trio[0]) | (1 << trio[1]) | (1 << trio[2]))
        comps = g.components(rest)
        if len(comps) == 1:
            continue
        if len(comps) != 2 or min(popcount(c) for c in comps) != 1:
            return False
    return True


def connectivity_class(g: SimpleGraph, c: str | int) -> bool:
    """Membership test for the corpus filters ``1``, ``2``, ``3`` and ``4i``."""
    c = str(c)
    if c == "4i":
        return g.n >= 5 and is_internally_4_connected(g)
    return is_k_connected(g, int(c))
