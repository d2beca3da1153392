"""Parallel-minor and minor containment with certificates.

Both searches assign host vertices, in BFS order, to target vertices (plus a
"deleted" value for ordinary minors).  A parallel minor is exactly a
surjective assignment with connected fibres such that host edges only join
equal or adjacent targets and every target edge is realised; the kernel
prunes on fibres that can no longer grow.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import (
    BranchPartition,
    MinorEmbedding,
    SimpleGraph,
    bits,
    popcount,
    quotient_graph,
)
from .iso import automorphism_orbits, is_isomorphic


class SearchBudgetExceeded(RuntimeError):
    """The configured node budget ran out before the search was decided."""


class CombinatorialBlowup(RuntimeError):
    """Exhaustive enumeration refused for a host above the configured cap."""


DELETED = -1


def _bfs_order(g: SimpleGraph) -> list[int]:
    order: list[int] = []
    seen = 0
    degs = g.degrees()
    remaining = sorted(range(g.n), key=lambda v: (-degs[v], v))
    for root in remaining:
        if (seen >> root) & 1:
            continue
        seen |= 1 << root
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            order.append(v)
            nbrs = sorted(bits(g.adj[v] & ~seen), key=lambda w: (-degs[w], w))
            for w in nbrs:
                seen |= 1 << w
                queue.append(w)
    return order


@lru_cache(maxsize=4096)
def _orbit_representatives(t: SimpleGraph) -> list[int]:
    orbit = automorphism_orbits(t) if t.n <= 16 else list(range(t.n))
    return [a for a in range(t.n) if orbit[a] == a]


@lru_cache(maxsize=4096)
def _twin_classes(m: SimpleGraph) -> list[int]:
    """twin[a] = smallest b with N(a)-b == N(b)-a (transposition automorphism)."""
    twin = list(range(m.n))
    for a in range(m.n):
        if twin[a] != a:
            continue
        for b in range(a + 1, m.n):
            if twin[b] == b and (m.adj[a] & ~(1 << b)) == (m.adj[b] & ~(1 << a)):
                twin[b] = a
    return twin


class _Search:
    """Shared state for the assignment kernel."""

    def __init__(self, g: SimpleGraph, t: SimpleGraph, induced: bool, budget: int | None):
        self.g = g
        self.t = t
        self.induced = induced
        self.budget = budget
        self.nodes = 0
        self.order = _bfs_order(g)
        self.lab = [None] * g.n  # None = unassigned
        self.fiber = [0] * t.n
        self.closed = 0
        self.unassigned = (1 << g.n) - 1
        self.used = 0
        self.twin = _twin_classes(t)
        self.closed_nbhd = [t.adj[a] | (1 << a) for a in range(t.n)]
        self.all_labels = (1 << t.n) - 1
        self.first_choices = _orbit_representatives(t)

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(f"search exceeded {self.budget} nodes")

    def candidates(self, v: int, first: bool) -> list[int]:
        g = self.g
        if first:
            base = 0
            for a in self.first_choices:
                base |= 1 << a
        else:
            base = self.all_labels & ~self.closed
        if self.induced:
            for w in bits(g.adj[v] & ~self.unassigned):
                a = self.lab[w]
                base &= self.closed_nbhd[a]
        out_used = []
        out_fresh = []
        seen_twins = set()
        for a in bits(base):
            if (self.used >> a) & 1:
                out_used.append(a)
            else:
                tw = self.twin[a]
                # fresh twin labels are interchangeable: keep the first one
                if tw in seen_twins:
                    continue
                seen_twins.add(tw)
                out_fresh.append(a)
        return out_fresh + out_used

    def _realized(self, b: int) -> int:
        out = 0
        lab = self.lab
        for v in bits(self.fiber[b]):
            for w in bits(self.g.adj[v]):
                a = lab[w]
                if a is not None and a >= 0 and a != b:
                    out |= 1 << a
        return out

    def _label_ok(self, b: int) -> bool:
        g = self.g
        fb = self.fiber[b]
        if not fb:
            return True
        frontier = g.neighborhood(fb) & self.unassigned
        if not frontier:
            if not g.is_connected_set(fb):
                return False
            need = self.t.adj[b]
            if (self._realized(b) & need) != need:
                return False
            self.closed |= 1 << b
            return True
        if not g.is_connected_set(fb):
            for comp in g.components(fb):
                if not (g.neighborhood(comp) & self.unassigned):
                    return False
        return True

    def run(self) -> list[int] | None:
        if self._rec(0):
            return list(self.lab)
        return None

    def _rec(self, i: int) -> bool:
        self.tick()
        g = self.g
        order = self.order
        if i == len(order):
            return self.used == self.all_labels and self.closed == self.all_labels
        v = order[i]
        remaining = len(order) - i
        unused = self.t.n - popcount(self.used)
        if unused > remaining:
            return False
        choices = self.candidates(v, i == 0)
        if not self.induced:
            choices = choices + [DELETED]
        if unused == remaining:
            choices = [a for a in choices if a != DELETED and not (self.used >> a) & 1]
        for a in choices:
            saved_closed = self.closed
            saved_used = self.used
            self.lab[v] = a
            self.unassigned &= ~(1 << v)
            ok = True
            touched = set()
            if a != DELETED:
                self.fiber[a] |= 1 << v
                self.used |= 1 << a
                touched.add(a)
            for w in bits(g.adj[v] & ~self.unassigned):
                b = self.lab[w]
                if b is not None and b >= 0:
                    touched.add(b)
            for b in touched:
                if (self.closed >> b) & 1:
                    continue
                if not self._label_ok(b):
                    ok = False
                    break
            if ok and self._rec(i + 1):
                return True
            self.closed = saved_closed
            self.used = saved_used
            if a != DELETED:
                self.fiber[a] &= ~(1 << v)
            self.unassigned |= 1 << v
            self.lab[v] = None
        return False


def is_parallel_minor(g: SimpleGraph, m: SimpleGraph, budget: int | None = None) -> BranchPartition | None:
    """Branch partition of ``g`` whose quotient is ``m`` (part i -> vertex i), or None.

    Raises :class:`SearchBudgetExceeded` when ``budget`` nodes are exhausted.
    """
    if m.n > g.n or m.n == 0 and g.n > 0:
        return None
    if m.size() > g.size():
        return None
    if m.n == g.n:
        iso = is_isomorphic(g, m)
        if iso is None:
            return None
        parts: list[list[int]] = [[] for _ in range(m.n)]
        for v, a in iso.items():
            parts[a] = [v]
        return BranchPartition.of(g, parts)
    gc = g.components()
    mc = m.components()
    if len(gc) != len(mc):
        return None
    s = _Search(g, m, induced=True, budget=budget)
    lab = s.run()
    if lab is None:
        return None
    return BranchPartition.from_labels(g, lab)


def is_minor(g: SimpleGraph, n: SimpleGraph, budget: int | None = None) -> MinorEmbedding | None:
    """Minor embedding of ``n`` in ``g`` (branch sets need not span), or None.

    Raises :class:`SearchBudgetExceeded` when ``budget`` nodes are exhausted,
    which is distinct from a verified absence.
    """
    if n.n > g.n or n.size() > g.size():
        return None
    if n.n == 0:
        return MinorEmbedding(g, n, (), {})
    lab = _Search(g, n, induced=False, budget=budget).run()
    if lab is None:
        return None
    sets: list[list[int]] = [[] for _ in range(n.n)]
    for v, a in enumerate(lab):
        if a is not None and a >= 0:
            sets[a].append(v)
    return MinorEmbedding.build(g, n, sets)


def connected_sets(g: SimpleGraph, root: int, allowed: int, max_size: int) -> Iterator[int]:
    """Every connected vertex set containing ``root`` inside ``allowed`` (bitmasks), each once."""

    def rec(s: int, cand: int, excl: int, size: int) -> Iterator[int]:
        yield s
        if size == max_size:
            return
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            ext = g.adj[w] & allowed & ~s & ~excl & ~low
            yield from rec(s | low, cand | ext, excl, size + 1)
            excl |= low

    start = 1 << root
    yield from rec(start, g.adj[root] & allowed & ~start, start, 1)


def connected_partitions(g: SimpleGraph, min_parts: int = 1, max_parts: int | None = None) -> Iterator[list[int]]:
    """Every partition of V(g) into connected parts, as part bitmasks.

    Each partition is produced once, parts ordered by smallest vertex.
    """
    n = g.n
    if max_parts is None:
        max_parts = n
    full = (1 << n) - 1

    def rec(rest: int, parts: list[int]) -> Iterator[list[int]]:
        if not rest:
            if len(parts) >= min_parts:
                yield list(parts)
            return
        p = len(parts)
        left = popcount(rest)
        if p + 1 > max_parts:
            return
        cap = left - (min_parts - p) + 1
        if cap < 1:
            return
        root = (rest & -rest).bit_length() - 1
        for s in connected_sets(g, root, rest, cap):
            after = rest & ~s
            if after and p + 1 + len(g.components(after)) > max_parts:
                continue
            parts.append(s)
            yield from rec(after, parts)
            parts.pop()

    yield from rec(full, [])


def parallel_minors(g: SimpleGraph, min_order: int = 1, max_order: int | None = None) -> Iterator[tuple[BranchPartition, SimpleGraph]]:
    """Every (partition, quotient) with quotient order in the given range."""
    for masks in connected_partitions(g, min_order, max_order):
        bp = BranchPartition.of(g, [list(bits(m)) for m in masks])
        yield bp, quotient_graph(g, bp)


def spanning_embedding(small: SimpleGraph, big: SimpleGraph) -> dict[int, int] | None:
    """Bijection V(small) -> V(big) mapping edges to edges (equal orders), or None."""
    if small.n != big.n or small.size() > big.size():
        return None
    n = small.n
    order = _bfs_order(small)
    sdeg = small.degrees()
    bdeg = big.degrees()
    img = [-1] * n
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        cand = ((1 << n) - 1) & ~used
        for w in bits(small.adj[v]):
            if img[w] >= 0:
                cand &= big.adj[img[w]]
        for a in bits(cand):
            if bdeg[a] < sdeg[v]:
                continue
            img[v] = a
            used |= 1 << a
            if rec(i + 1):
                return True
            used &= ~(1 << a)
            img[v] = -1
        return False

    if rec(0):
        return {v: img[v] for v in range(n)}
    return None


def phi_enumerate(g: SimpleGraph, n: SimpleGraph, cap: int = 12) -> list[tuple[SimpleGraph, BranchPartition, dict[int, int]]]:
    """All parallel minors M of ``g`` with |M| = |n| containing a copy of ``n``.

    Each entry is (M, partition, embedding of n into M).  Raises
    :class:`CombinatorialBlowup` when |g| exceeds ``cap``.
    """
    if g.n > cap:
        raise CombinatorialBlowup(f"host order {g.n} exceeds enumeration cap {cap}")
    out = []
    for bp, q in parallel_minors(g, n.n, n.n):
        emb = spanning_embedding(n, q)
        if emb is not None:
            out.append((q, bp, emb))
    return out
