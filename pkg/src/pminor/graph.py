"""Immutable simple graphs, branch partitions, minor embeddings and quotients.

Vertices are dense integer ids ``0..n-1``.  Adjacency is stored as one int
bitmask per vertex, which keeps the search kernels cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence


class GraphError(ValueError):
    """Malformed graph input."""


class InvalidPartition(ValueError):
    """A branch partition overlaps, misses vertices or has a disconnected part."""


class InvalidEmbedding(ValueError):
    """A minor embedding violates disjointness, connectivity or edge witnesses."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class SimpleGraph:
    """Labeled simple graph with vertices ``0..n-1``.

    Instances are treated as immutable values: equality and hashing compare
    the vertex count and edge set (labels are cosmetic).
    """

    __slots__ = ("_n", "_adj", "_labels", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._m = sum(popcount(a) for a in adj) // 2
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError("label count does not match vertex count")
        self._labels = labels

    @classmethod
    def from_adjacency(cls, adj: Sequence[int], labels: Sequence[str] | None = None) -> "SimpleGraph":
        n = len(adj)
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full or (a >> v) & 1:
                raise GraphError(f"bad adjacency mask at vertex {v}")
            for w in bits(a):
                if not (adj[w] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        g = cls.__new__(cls)
        g._n = n
        g._adj = tuple(adj)
        g._m = sum(popcount(a) for a in adj) // 2
        g._labels = tuple(labels) if labels is not None else None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    def __len__(self) -> int:
        return self._n

    def size(self) -> int:
        """Number of edges."""
        return self._m

    def vertices(self) -> range:
        return range(self._n)

    def label(self, v: int) -> str:
        return self._labels[v] if self._labels else str(v)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self._n):
            for v in bits(self._adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def complement(self) -> "SimpleGraph":
        full = (1 << self._n) - 1
        return SimpleGraph.from_adjacency([full & ~a & ~(1 << v) for v, a in enumerate(self._adj)])

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph on ``vertices``; returns the graph and new->old id map."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            a = 0
            for w in bits(self._adj[v]):
                if w in pos:
                    a |= 1 << pos[w]
            adj.append(a)
        labels = [self.label(v) for v in old] if self._labels else None
        return SimpleGraph.from_adjacency(adj, labels), old

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self._n) if v not in drop)

    def delete_edges(self, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = list(self._adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return SimpleGraph.from_adjacency(adj, self._labels)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return SimpleGraph(self._n, list(self.edges()) + list(edges), self._labels)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return SimpleGraph(self._n, [(perm[u], perm[v]) for u, v in self.edges()])

    def is_connected_set(self, mask: int) -> bool:
        """True iff ``mask`` is nonempty and induces a connected subgraph."""
        if not mask:
            return False
        start = mask & -mask
        seen = start
        frontier = start
        adj = self._adj
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & mask & ~seen
            seen |= new
            frontier |= new
        return seen == mask

    def is_connected(self) -> bool:
        return self._n == 0 or self.is_connected_set((1 << self._n) - 1)

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components (as bitmasks) of the subgraph induced by ``mask``."""
        if mask is None:
            mask = (1 << self._n) - 1
        comps = []
        rest = mask
        adj = self._adj
        while rest:
            start = rest & -rest
            seen = start
            frontier = start
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = adj[low.bit_length() - 1] & mask & ~seen
                seen |= new
                frontier |= new
            comps.append(seen)
            rest &= ~seen
        return comps

    def neighborhood(self, mask: int) -> int:
        """Vertices outside ``mask`` adjacent to some vertex of ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self._adj[v]
        return out & ~mask

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleGraph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class BranchPartition:
    """Partition of all host vertices into connected parts.

    Part i becomes quotient vertex i.  :meth:`of` keeps the given part order,
    :meth:`canonical` orders parts by their smallest vertex; parts are always
    sorted internally.
    """

    host: SimpleGraph = field(repr=False, compare=False)
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.host.n
        seen = 0
        for part in self.parts:
            if not part:
                raise InvalidPartition("empty part")
            m = 0
            for v in part:
                if not 0 <= v < n:
                    raise InvalidPartition(f"vertex {v} out of range")
                if (seen >> v) & 1 or (m >> v) & 1:
                    raise InvalidPartition(f"vertex {v} appears twice")
                m |= 1 << v
            if not self.host.is_connected_set(m):
                raise InvalidPartition(f"part {sorted(part)} is not connected")
            seen |= m
        if seen != (1 << n) - 1:
            missing = [v for v in range(n) if not (seen >> v) & 1]
            raise InvalidPartition(f"vertices {missing} not covered")

    @classmethod
    def of(cls, host: SimpleGraph, parts: Iterable[Iterable[int]]) -> "BranchPartition":
        """Build a partition keeping the given part order (parts sorted internally)."""
        return cls(host, tuple(tuple(sorted(p)) for p in parts))

    @classmethod
    def canonical(cls, host: SimpleGraph, parts: Iterable[Iterable[int]]) -> "BranchPartition":
        ps = sorted((tuple(sorted(p)) for p in parts), key=lambda p: p[0])
        return cls(host, tuple(ps))

    @classmethod
    def identity(cls, host: SimpleGraph) -> "BranchPartition":
        return cls(host, tuple((v,) for v in range(host.n)))

    @classmethod
    def from_labels(cls, host: SimpleGraph, labels: Sequence[int]) -> "BranchPartition":
        """Parts ordered by label value; labels must be ``0..m-1``, all used."""
        m = max(labels) + 1 if labels else 0
        parts: list[list[int]] = [[] for _ in range(m)]
        for v, a in enumerate(labels):
            parts[a].append(v)
        return cls.of(host, parts)

    @property
    def part_index(self) -> dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def labels(self) -> list[int]:
        lab = [0] * self.host.n
        for i, p in enumerate(self.parts):
            for v in p:
                lab[v] = i
        return lab

    def masks(self) -> list[int]:
        return [mask_of(p) for p in self.parts]

    def __len__(self) -> int:
        return len(self.parts)

    def coarsen(self, groups: Sequence[Iterable[int]]) -> "BranchPartition":
        """Merge parts: ``groups`` partitions the part indices.

        The result is a partition of the same host whose i-th part is the union
        of the parts listed in ``groups[i]``.
        """
        return BranchPartition.of(self.host, [[v for i in g for v in self.parts[i]] for g in groups])

    def canonicalized(self) -> "BranchPartition":
        return BranchPartition.canonical(self.host, self.parts)

    def as_lists(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


@dataclass(frozen=True)
class EdgeProvenance:
    """Quotient graph together with the host edges behind each quotient edge."""

    host: SimpleGraph = field(repr=False)
    quotient: SimpleGraph
    partition: BranchPartition = field(repr=False)
    class_of: Mapping[tuple[int, int], frozenset[tuple[int, int]]] = field(repr=False)

    def parallel_class(self, a: int, b: int) -> frozenset[tuple[int, int]]:
        return self.class_of[(a, b) if a < b else (b, a)]


def quotient(host: SimpleGraph, partition: BranchPartition) -> tuple[SimpleGraph, EdgeProvenance]:
    """Contract every part to a vertex and simplify.

    Quotient vertex ``i`` is ``partition.parts[i]``.  The provenance maps each
    quotient edge ``(a, b)``, ``a < b``, to the host edges crossing between the
    two parts.
    """
    if partition.host is not host and partition.host != host:
        raise InvalidPartition("partition belongs to a different host")
    lab = partition.labels()
    classes: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for u, v in host.edges():
        a, b = lab[u], lab[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        classes.setdefault(key, set()).add((u, v))
    q = SimpleGraph(len(partition.parts), classes.keys())
    prov = EdgeProvenance(host, q, partition, {k: frozenset(s) for k, s in classes.items()})
    return q, prov


def quotient_graph(host: SimpleGraph, partition: BranchPartition) -> SimpleGraph:
    """Quotient without provenance (fast path for the search kernels)."""
    lab = partition.labels()
    adj = [0] * len(partition.parts)
    for u in range(host.n):
        a = lab[u]
        for v in bits(host.adj[u]):
            b = lab[v]
            if a != b:
                adj[a] |= 1 << b
    return SimpleGraph.from_adjacency(adj)


def compose(outer: BranchPartition, inner: BranchPartition) -> BranchPartition:
    """Partition of ``outer.host`` whose quotient equals quotient(quotient(outer), inner).

    ``inner`` must be a partition of the quotient graph of ``outer``; part order
    follows ``inner``.
    """
    return outer.coarsen(inner.parts)


def lift_from_subgraph(
    host: SimpleGraph,
    sub_partition: BranchPartition,
    sub_to_host: Sequence[int],
    extra_parts: Iterable[Iterable[int]] = (),
) -> BranchPartition:
    """Lift a partition of an induced subgraph back to ``host``.

    The parts of ``sub_partition`` are translated through ``sub_to_host``; the
    remaining host vertices must be supplied as ``extra_parts``, which are
    appended after the lifted parts.
    """
    parts = [[sub_to_host[v] for v in p] for p in sub_partition.parts]
    parts.extend(list(p) for p in extra_parts)
    return BranchPartition.of(host, parts)


@dataclass(frozen=True)
class MinorEmbedding:
    """Disjoint connected branch sets of ``host`` modelling ``target`` as a minor."""

    host: SimpleGraph = field(repr=False)
    target: SimpleGraph
    branch_sets: tuple[tuple[int, ...], ...]
    edge_witness: Mapping[tuple[int, int], tuple[int, int]] = field(repr=False)

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if len(self.branch_sets) != self.target.n:
            raise InvalidEmbedding("one branch set per target vertex required")
        seen = 0
        masks = []
        for i, bs in enumerate(self.branch_sets):
            m = mask_of(bs)
            if not bs or popcount(m) != len(bs):
                raise InvalidEmbedding(f"branch set {i} empty or repeated")
            if m & seen:
                raise InvalidEmbedding(f"branch set {i} overlaps another")
            if not self.host.is_connected_set(m):
                raise InvalidEmbedding(f"branch set {i} not connected")
            seen |= m
            masks.append(m)
        for a, b in self.target.edges():
            w = self.edge_witness.get((a, b))
            if w is None:
                raise InvalidEmbedding(f"no witness for target edge {(a, b)}")
            x, y = w
            if not self.host.has_edge(x, y):
                raise InvalidEmbedding(f"witness {w} is not a host edge")
            if not (((masks[a] >> x) & 1 and (masks[b] >> y) & 1) or ((masks[a] >> y) & 1 and (masks[b] >> x) & 1)):
                raise InvalidEmbedding(f"witness {w} does not join branch sets {a}, {b}")

    @classmethod
    def build(cls, host: SimpleGraph, target: SimpleGraph, branch_sets: Sequence[Iterable[int]]) -> "MinorEmbedding":
        """Construct an embedding, picking the smallest witness for every target edge."""
        sets = tuple(tuple(sorted(b)) for b in branch_sets)
        masks = [mask_of(b) for b in sets]
        witness = {}
        for a, b in target.edges():
            found = None
            for x in sets[a]:
                hit = host.adj[x] & masks[b]
                if hit:
                    y = (hit & -hit).bit_length() - 1
                    found = (x, y)
                    break
            if found is None:
                raise InvalidEmbedding(f"branch sets {a} and {b} are not adjacent")
            witness[(a, b)] = found
        return cls(host, target, sets, witness)

    def to_partition(self) -> BranchPartition:
        """Spanning extension: leftover host vertices join an adjacent branch set.

        Leftovers are attached by multi-source BFS from the branch sets in
        target order, so the result is deterministic.  Requires every host
        component to meet some branch set.
        """
        return extend_to_partition(self.host, self.branch_sets)


def extend_to_partition(host: SimpleGraph, sets: Sequence[Iterable[int]]) -> BranchPartition:
    """Grow disjoint connected sets into a spanning connected partition by BFS."""
    owner = [-1] * host.n
    parts: list[list[int]] = []
    queue: list[int] = []
    for i, s in enumerate(sets):
        parts.append([])
        for v in s:
            owner[v] = i
            parts[i].append(v)
            queue.append(v)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w in bits(host.adj[v]):
            if owner[w] < 0:
                owner[w] = owner[v]
                parts[owner[v]].append(w)
                queue.append(w)
    if any(o < 0 for o in owner):
        raise InvalidPartition("some host component meets no branch set")
    return BranchPartition.of(host, parts)
