"""Independent reference implementations used only by the tests.

Nothing here calls the package's search code: partitions are enumerated as
restricted growth strings, connectivity and isomorphism come from networkx.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from pathlib import Path

import networkx as nx
from networkx.algorithms import isomorphism as nxiso

from pminor.graph import SimpleGraph

DATA = Path(__file__).resolve().parent.parent / "src" / "pminor" / "data"


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> SimpleGraph:
    idx = {v: i for i, v in enumerate(h.nodes())}
    return SimpleGraph(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


@lru_cache(maxsize=None)
def corpus(n: int) -> tuple[nx.Graph, ...]:
    """All graphs of order n, decoded by networkx from the shipped graph6 files."""
    with open(DATA / f"graphs{n}.g6", "rb") as fh:
        return tuple(nx.from_graph6_bytes(line.strip()) for line in fh if line.strip())


def corpus_sg(n: int) -> list[SimpleGraph]:
    return [from_nx(h) for h in corpus(n)]


def set_partitions(n: int, blocks: int | None = None):
    """Every set partition of range(n) as a label list (restricted growth strings)."""
    labels = [0] * n

    def rec(i: int, used: int):
        if i == n:
            if blocks is None or used == blocks:
                yield list(labels)
            return
        if blocks is not None and used + (n - i) < blocks:
            return
        top = used + 1 if blocks is None else min(used + 1, blocks)
        for b in range(top):
            labels[i] = b
            yield from rec(i + 1, max(used, b + 1))

    if n == 0:
        if not blocks:
            yield []
        return
    yield from rec(0, 0)


def naive_quotients(h: nx.Graph, blocks: int | None = None):
    """(labels, quotient) for every partition of V(h) into connected parts."""
    nodes = sorted(h.nodes())
    for labels in set_partitions(len(nodes), blocks):
        k = max(labels) + 1 if labels else 0
        parts = [[nodes[i] for i in range(len(nodes)) if labels[i] == b] for b in range(k)]
        if not all(nx.is_connected(h.subgraph(p)) for p in parts):
            continue
        where = {v: labels[i] for i, v in enumerate(nodes)}
        q = nx.Graph()
        q.add_nodes_from(range(k))
        q.add_edges_from((where[u], where[v]) for u, v in h.edges() if where[u] != where[v])
        yield labels, q


def distinct(graphs) -> list[nx.Graph]:
    """Isomorphism-class representatives, bucketed by WL hash."""
    buckets: dict[str, list[nx.Graph]] = {}
    for q in graphs:
        key = nx.weisfeiler_lehman_graph_hash(q)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(q, r) for r in bucket):
            bucket.append(q)
    return [q for b in buckets.values() for q in b]


def naive_parallel_minor(g: nx.Graph, m: nx.Graph) -> bool:
    if m.number_of_nodes() > g.number_of_nodes():
        return False
    return any(nx.is_isomorphic(q, m) for _, q in naive_quotients(g, m.number_of_nodes()))


def contains_subgraph(big: nx.Graph, small: nx.Graph) -> bool:
    """small is isomorphic to a (not necessarily induced) subgraph of big."""
    if small.number_of_nodes() > big.number_of_nodes() or small.number_of_edges() > big.number_of_edges():
        return False
    return nxiso.GraphMatcher(big, small).subgraph_is_monomorphic()


def naive_minor(g: nx.Graph, n: nx.Graph, quotients: list[nx.Graph] | None = None) -> bool:
    """N is a subgraph of some parallel minor of G, by brute force over all partitions."""
    if quotients is None:
        quotients = distinct(q for _, q in naive_quotients(g))
    return any(contains_subgraph(q, n) for q in quotients)


def naive_internally_4_connected(h: nx.Graph) -> bool:
    if nx.node_connectivity(h) < 3:
        return False
    for trio in combinations(h.nodes(), 3):
        rest = h.copy()
        rest.remove_nodes_from(trio)
        comps = list(nx.connected_components(rest))
        if len(comps) > 1 and (len(comps) != 2 or min(map(len, comps)) != 1):
            return False
    return True


def embedding_ok(g: SimpleGraph, emb, target: SimpleGraph) -> None:
    """Assert the branch sets are disjoint, connected and realise every target edge."""
    h = to_nx(g)
    sets = list(emb.branch_sets)
    assert len(sets) == target.n
    flat = [v for s in sets for v in s]
    assert len(flat) == len(set(flat))
    for s in sets:
        assert s and nx.is_connected(h.subgraph(s))
    for a, b in target.edges():
        assert any(g.has_edge(u, v) for u in sets[a] for v in sets[b])


# ---------------------------------------------------------------- random hosts

def random_connected(rng: random.Random, n: int, extra: float) -> SimpleGraph:
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < extra:
            edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return SimpleGraph(n, [(perm[u], perm[v]) for u, v in edges])


def random_two_connected(rng: random.Random, n: int) -> SimpleGraph:
    """Ear construction: a cycle plus random open ears until n vertices, plus a few chords."""
    start = rng.randint(3, max(3, n // 2))
    edges = {(i, (i + 1) % start) for i in range(start)}
    size = start
    while size < n:
        a, b = rng.sample(range(size), 2)
        ln = rng.randint(1, min(4, n - size))
        chain = [a] + list(range(size, size + ln)) + [b]
        edges.update(zip(chain, chain[1:]))
        size += ln
    for _ in range(rng.randint(0, n // 3)):
        u, v = rng.sample(range(n), 2)
        edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return SimpleGraph(n, [(perm[u], perm[v]) for u, v in edges if u != v])


def random_three_connected(rng: random.Random, n: int) -> SimpleGraph:
    """Random Hamiltonian graph with chords added until networkx reports connectivity >= 3."""
    h = nx.cycle_graph(n)
    nodes = list(range(n))
    target = rng.choice([3, 3, 4])
    while True:
        for _ in range(max(1, n // 4)):
            u, v = rng.sample(nodes, 2)
            h.add_edge(u, v)
        if min(d for _, d in h.degree()) >= target and nx.node_connectivity(h) >= 3:
            break
    perm = list(range(n))
    rng.shuffle(perm)
    return SimpleGraph(n, [(perm[u], perm[v]) for u, v in h.edges()])


def random_hset(rng: random.Random, d: int, k: int, n: int | None = None):
    """A random H-set meeting the improvement preconditions |M| > dk and Δ(M) < d.

    M is a Hamilton cycle plus chords of bounded degree, with the first |P|-1
    vertices of P kept at degree two.  The host blows each M-vertex up into a
    short arc and may duplicate M-edges into parallel classes.
    """
    from pminor.extraction.hset import HSet
    from pminor.graph import BranchPartition

    n = n or d * k + 1 + rng.randint(0, 2 * d)
    p = rng.randint(2, k - 1)
    reverse = rng.random() < 0.5
    free = 0 if reverse else p - 1
    protected = set(range(p)) - {free}
    m_edges = {(i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i) for i in range(n)}
    deg = [2] * n
    for _ in range(rng.randint(0, n * d)):
        u, v = rng.sample(range(n), 2)
        u, v = min(u, v), max(u, v)
        if u in protected or v in protected or (u, v) in m_edges:
            continue
        if deg[u] >= d - 1 or deg[v] >= d - 1:
            continue
        m_edges.add((u, v))
        deg[u] += 1
        deg[v] += 1

    arcs, nxt = [], 0
    for _ in range(n):
        size = rng.choice([1, 1, 1, 2, 3])
        arcs.append(list(range(nxt, nxt + size)))
        nxt += size
    host_edges = set()
    for a in arcs:
        host_edges.update(zip(a, a[1:]))
        if len(a) == 3 and rng.random() < 0.5:
            host_edges.add((a[0], a[2]))
    cycle_edge = {}
    for i in range(n):
        j = (i + 1) % n
        cycle_edge[i] = (arcs[i][-1], arcs[j][0])
        host_edges.add(cycle_edge[i])
    for u, v in m_edges:
        for _ in range(1 + (rng.random() < 0.3)):
            host_edges.add((rng.choice(arcs[u]), rng.choice(arcs[v])))

    perm = list(range(nxt))
    rng.shuffle(perm)
    host = SimpleGraph(nxt, [(perm[a], perm[b]) for a, b in host_edges])
    order = list(range(n))
    rng.shuffle(order)
    slot = {arc: pos for pos, arc in enumerate(order)}  # arc i becomes M-vertex slot[i]
    parts = [None] * n
    for arc_i, pos in slot.items():
        parts[pos] = [perm[v] for v in arcs[arc_i]]
    bp = BranchPartition.of(host, parts)
    cyc = [slot[i] for i in range(n)]
    path_pos = list(range(p))
    if reverse:
        path_pos.reverse()
    P = [slot[i] for i in path_pos]
    i = rng.randrange(p - 1)
    a, b = cycle_edge[i]
    e = (perm[a], perm[b])
    return HSet.build(host, bp, cyc, {e}, P, e)


def independent_h_minor(lower, upper) -> bool:
    """lower arises from upper by contracting only edges of upper's Hamilton cycle."""
    if lower.host != upper.host or tuple(sorted(lower.e)) != tuple(sorted(upper.e)):
        return False
    low_lab = lower.partition.labels()
    up_parts = upper.partition.parts
    image = []
    for part in up_parts:
        owners = {low_lab[v] for v in part}
        if len(owners) != 1:
            return False
        image.append(owners.pop())
    n = len(upper.cycle)
    seq = [image[x] for x in upper.cycle]
    # each lower vertex must occupy one cyclic interval of upper's cycle
    changes = sum(seq[i] != seq[i - 1] for i in range(n))
    if changes != len(set(seq)) and not (changes == 0 and len(set(seq)) == 1):
        return False
    runs = [seq[i] for i in range(n) if seq[i] != seq[i - 1]]
    m = len(lower.cycle)
    if sorted(runs) != list(range(m)):
        return False
    j = lower.cycle.index(runs[0])
    fwd = [lower.cycle[(j + t) % m] for t in range(m)]
    bwd = [lower.cycle[(j - t) % m] for t in range(m)]
    return runs in (fwd, bwd)


def s_in_class_of_e(h) -> bool:
    lab = h.partition.labels()
    ends = {lab[h.e[0]], lab[h.e[1]]}
    return all({lab[a], lab[b]} == ends for a, b in h.S) and len(ends) == 2


def certificate_ok(host: SimpleGraph, fid, parts) -> bool:
    """Re-check a family certificate with networkx only: parts connected and spanning, quotient isomorphic."""
    from pminor.families import generate

    h = to_nx(host)
    flat = sorted(v for p in parts for v in p)
    if flat != list(range(host.n)) or not all(p and nx.is_connected(h.subgraph(p)) for p in parts):
        return False
    where = {v: i for i, p in enumerate(parts) for v in p}
    q = nx.Graph()
    q.add_nodes_from(range(len(parts)))
    q.add_edges_from((where[u], where[v]) for u, v in h.edges() if where[u] != where[v])
    return nx.is_isomorphic(q, to_nx(generate(fid)))
