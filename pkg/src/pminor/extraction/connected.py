"""Star-or-path minors and the connected reduction step."""

from __future__ import annotations

from ..connectivity import blocks, cut_vertices
from ..families import FamilyId, FamilyTag, generate
from ..graph import BranchPartition, MinorEmbedding, SimpleGraph, bits, compose, extend_to_partition, popcount, quotient_graph
from .bounds import f1
from .ramsey import ramsey_induced
from .results import FAMILY, TWO_CONNECTED, Certificate, Disconnected, Insufficient
from .search import clique_of_size, grow_hub, hub_partition, independent_of_size, long_path, split_runs


def _dfs_deep_path(g: SimpleGraph, root: int) -> list[int]:
    """Root-to-deepest-leaf path of an iterative DFS tree."""
    parent = {root: None}
    depth = {root: 0}
    stack = [root]
    deepest = root
    while stack:
        v = stack.pop()
        if depth[v] > depth[deepest]:
            deepest = v
        for w in sorted(bits(g.adj[v]), reverse=True):
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append(w)
    # stack-based DFS assigns parents on discovery; rebuild a genuine tree path
    path = [deepest]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def _far_vertex(g: SimpleGraph, src: int) -> int:
    seen = 1 << src
    frontier = 1 << src
    last = src
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if nxt:
            last = next(bits(nxt))
        seen |= nxt
        frontier = nxt
    return last


def star_or_path_minor(g: SimpleGraph, r: int, q: int, budget: int = 20_000) -> MinorEmbedding | Insufficient:
    """A K_{1,r} or P_q minor embedding of a connected graph.

    High degree gives the star directly.  Otherwise a rooted spanning tree of
    bounded branching must be deep, and its root-to-leaf path is the path.
    """
    if not g.is_connected():
        raise Disconnected("star_or_path_minor needs a connected graph")
    degs = g.degrees()
    if g.n and max(degs) >= r:
        v = max(range(g.n), key=lambda x: (degs[x], -x))
        leaves = g.neighbors(v)[:r]
        star = generate(FamilyId(FamilyTag.STAR, r))
        return MinorEmbedding.build(g, star, [[v]] + [[w] for w in leaves])
    if g.n >= q:
        top = max(range(g.n), key=lambda x: (degs[x], -x))
        candidates = []
        for root in (_far_vertex(g, top), top):
            candidates.append(_dfs_deep_path(g, root))
        candidates.append(long_path(g, q, budget))
        path = max(candidates, key=len)
        if len(path) >= q:
            target = generate(FamilyId(FamilyTag.PATH, q))
            return MinorEmbedding.build(g, target, [[v] for v in path[:q]])
    return Insufficient(f"order {g.n} below r^q = {r ** q}; neither K1,{r} nor P{q} found")


def _star_or_clique_at_hub(g: SimpleGraph, hub: int, k: int, trace: list[str]) -> Certificate | None:
    """Φ-member with a dominating hub, then a pivot set among the other parts."""
    bp = hub_partition(g, hub)
    if bp is None:
        return None
    q = quotient_graph(g, bp)
    rest = ((1 << q.n) - 1) & ~1
    rs = ramsey_induced(q, k, rest)
    if rs is not None:
        trace.append(f"Ramsey pivot on H-v: {rs.kind} of order {k}")
        kind, xs = rs.kind, list(rs.vertices)
    else:
        xs = independent_of_size(q, k, rest)
        kind = "independent"
        if xs is None:
            xs = clique_of_size(q, k, rest)
            kind = "clique"
        if xs is None:
            trace.append("no clique or independent set of the required order in H-v")
            return None
        trace.append(f"Ramsey pivot failed below its bound; exact search found {kind} set")
    if kind == "independent":
        # contract each edge vu with u outside the independent set
        others = [u for u in range(q.n) if u not in xs]
        inner = BranchPartition.of(q, [others] + [[x] for x in xs])
        trace.append("contract vu for u not in S: star")
        return Certificate(FAMILY, compose(bp, inner), FamilyId(FamilyTag.STAR, k), trace)
    inner = extend_to_partition(q, [[x] for x in xs])
    trace.append("absorb everything into the clique: complete graph")
    return Certificate(FAMILY, compose(bp, inner), FamilyId(FamilyTag.CLIQUE, k), trace)


def path_partition(g: SimpleGraph, path: list[int], k: int) -> BranchPartition | None:
    """Partition of ``g`` with quotient P_k, given a Hamiltonian-path Φ-member structure.

    ``path`` must be a path of ``g``; vertices off the path are attached by BFS.
    The block chain of the Φ-member decides how many path vertices survive.
    """
    if k <= 2:
        if len(path) < k:
            return None
        return extend_to_partition(g, [[v] for v in path[:k]])
    bp = extend_to_partition(g, [[v] for v in path])
    q = quotient_graph(g, bp)
    cuts = sorted(cut_vertices(q))
    if len(cuts) + 2 < k:
        return None
    n = q.n
    bounds = [0] + cuts + [cuts[-1] + 1]
    runs = [list(range(bounds[i], bounds[i + 1])) for i in range(len(bounds) - 1)]
    if bounds[-1] < n:
        runs.append(list(range(bounds[-1], n)))
    runs = [r for r in runs if r]
    if len(runs) < k:
        return None
    groups = [sum(grp, []) for grp in split_runs(runs, k)]
    inner = BranchPartition.of(q, groups)
    return compose(bp, inner)


def largest_block_partition(g: SimpleGraph) -> BranchPartition:
    """Partition whose quotient is the largest block of ``g`` (ties: smallest vertex)."""
    bl = max(blocks(g), key=lambda m: (popcount(m), -(m & -m)))
    return extend_to_partition(g, [[v] for v in bits(bl)])


def _hub_candidates(g: SimpleGraph, count: int = 3) -> list[int]:
    degs = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-degs[v], v))[:count]
    hubs = [1 << v for v in order]
    if order:
        grown = grow_hub(g, order[0])
        if grown not in hubs:
            hubs.append(grown)
    return hubs


def connected_step(g: SimpleGraph, k: int, l: int, budget: int = 20_000) -> Certificate | Insufficient:
    """K_{1,k}, P_k or K_k as a parallel minor, or a 2-connected parallel minor of order >= l.

    Case 1 (a large star minor) pivots on the hub of a Φ-member; Case 2 (a
    long path minor) splits on the number of cut vertices of the Φ-member.
    """
    if not g.is_connected():
        raise Disconnected("connected_step needs a connected graph")
    trace: list[str] = []
    r = f1(k)
    hubs = _hub_candidates(g)
    widest = max((popcount(g.neighborhood(h)) for h in hubs), default=0)
    trace.append(f"K1,{r} side condition: {'violated' if widest >= r else 'not refuted'}")
    if k <= 2:
        path = long_path(g, k, budget)
        bp = path_partition(g, path, k)
        if bp is not None:
            trace.append("trivial path")
            return Certificate(FAMILY, bp, FamilyId(FamilyTag.PATH, k), trace)
        return Insufficient(f"order {g.n} below {k}", trace)
    for hub in hubs:
        deg = popcount(g.neighborhood(hub))
        if deg < k:
            continue
        trace.append(f"case 1: K1,{deg} minor at hub {sorted(bits(hub))}")
        cert = _star_or_clique_at_hub(g, hub, k, trace)
        if cert is not None:
            return cert
    path = long_path(g, None, budget)
    trace.append(f"case 2: P{len(path)} minor")
    bp = path_partition(g, path, k)
    if bp is not None:
        trace.append("cut vertices of H: contract to a path")
        return Certificate(FAMILY, bp, FamilyId(FamilyTag.PATH, k), trace)
    bp = largest_block_partition(g)
    size = len(bp.parts)
    if size >= max(l, 3):
        trace.append(f"largest 2-connected piece: order {size}")
        return Certificate(TWO_CONNECTED, bp, None, trace)
    return Insufficient(f"largest block has order {size} < {l}", trace)
