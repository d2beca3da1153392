"""H-sets on Hamiltonian parallel minors and the cycle-contraction lemma.

An H-set is (M, C, S, P, e): a parallel minor M of a host G with Hamilton
cycle C, a path P along C whose vertices have degree two in M except the
last one, a host edge e whose image lies on P, and a set S of host edges in
the parallel class of e.  Every quotient built here numbers its vertices in
cycle order, so the cycle of a freshly built H-set is ``0, 1, ..., n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from ..graph import BranchPartition, EdgeProvenance, SimpleGraph, quotient, quotient_graph
from .results import Insufficient, NotHamiltonianCycle, PreconditionViolated
from .search import split_runs


def _norm(e: tuple[int, int]) -> tuple[int, int]:
    return (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])


@dataclass(frozen=True, order=True)
class HSetWeight:
    sigma: int
    pi: int


@dataclass(frozen=True)
class HSet:
    provenance: EdgeProvenance
    cycle: tuple[int, ...]
    S: frozenset
    P: tuple[int, ...]
    e: tuple[int, int]

    @classmethod
    def build(cls, host: SimpleGraph, partition: BranchPartition, cycle: Sequence[int],
              S, P: Sequence[int], e: tuple[int, int]) -> "HSet":
        _, prov = quotient(host, partition)
        return cls(prov, tuple(cycle), frozenset(_norm(x) for x in S), tuple(P), _norm(e))

    @property
    def host(self) -> SimpleGraph:
        return self.provenance.host

    @property
    def M(self) -> SimpleGraph:
        return self.provenance.quotient

    @property
    def partition(self) -> BranchPartition:
        return self.provenance.partition

    @cached_property
    def _part_of(self) -> dict[int, int]:
        return self.partition.part_index

    def image(self, host_edge: tuple[int, int]) -> tuple[int, int]:
        """The M-vertices holding the two ends of a host edge."""
        return self._part_of[host_edge[0]], self._part_of[host_edge[1]]

    @property
    def weight(self) -> HSetWeight:
        return HSetWeight(len(self.S), len(self.P))

    def check(self) -> None:
        """Raise ValueError unless every H-set invariant holds."""
        m = self.M
        n = m.n
        c = self.cycle
        if sorted(c) != list(range(n)) or n < 3:
            raise ValueError("C is not a Hamilton cycle ordering of M")
        for i in range(n):
            if not m.has_edge(c[i], c[(i + 1) % n]):
                raise ValueError(f"C edge {c[i]}-{c[(i + 1) % n]} missing from M")
        p = self.P
        if len(p) < 2 or len(set(p)) != len(p):
            raise ValueError("P must be a path with at least one edge")
        pos = {v: i for i, v in enumerate(c)}
        step = (pos[p[1]] - pos[p[0]]) % n
        if step not in (1, n - 1):
            raise ValueError("P does not follow C")
        for i in range(len(p) - 1):
            if (pos[p[i + 1]] - pos[p[i]]) % n != step:
                raise ValueError("P does not follow C")
        for v in p[:-1]:
            if m.degree(v) != 2:
                raise ValueError(f"P vertex {v} has degree {m.degree(v)} in M")
        a, b = self.image(self.e)
        if not any({a, b} == {p[i], p[i + 1]} for i in range(len(p) - 1)):
            raise ValueError("e does not lie on P")
        key = (min(a, b), max(a, b))
        cls_ = self.provenance.parallel_class(*key)
        for f in self.S:
            if f not in cls_:
                raise ValueError(f"S edge {f} is not parallel to e in M")
        if not self.S:
            raise ValueError("S is empty")


@dataclass(frozen=True)
class PathLongEnough:
    hset: HSet


def _contract_along(h: HSet, groups: list[list[int]], S, P: Sequence[int]) -> HSet:
    """New H-set whose M-vertex i is the union of the M-vertices in ``groups[i]``."""
    part = h.partition.coarsen(groups)
    return HSet.build(h.host, part, range(len(groups)), S, P, h.e)


def _class_rep(h: HSet, a: int, b: int) -> tuple[int, int]:
    return min(h.provenance.parallel_class(a, b))


def hset_improve(h: HSet, d: int, k: int, strict: bool = False) -> PathLongEnough | HSet:
    """|P| >= k, or an H-minor of strictly greater weight keeping a long cycle segment.

    ``strict`` enforces |M| > dk.  Otherwise only Δ(M) < d is required and the
    step is refused when every segment cut out by v_π and its neighbours is
    shorter than two edges.
    """
    m = h.M
    n = m.n
    p = list(h.P)
    pi = len(p)
    if pi >= k:
        return PathLongEnough(h)
    if m.max_degree() >= d:
        raise PreconditionViolated("degree", f"Δ(M) = {m.max_degree()} is not below d = {d}")
    if strict and n <= d * k:
        raise PreconditionViolated("order", f"|M| = {n} is not above dk = {d * k}")

    # orient C so that c[0..pi-1] == P
    cyc = h.cycle
    i0 = cyc.index(p[0])
    sgn = 1 if cyc[(i0 + 1) % n] == p[1] else -1
    c = [cyc[(i0 + sgn * j) % n] for j in range(n)]
    pos = {v: i for i, v in enumerate(c)}
    top = pi - 1  # index of v_π

    xs = sorted({top} | {pos[w] for w in m.neighbors(c[top])})
    segs = []  # (start, end, length); end may wrap past n
    for j, x in enumerate(xs):
        y = xs[(j + 1) % len(xs)]
        length = (y - x) % n
        segs.append((x, y, length))
    best = max(s[2] for s in segs)
    if best < 2:
        raise PreconditionViolated("order", f"every segment of C around v_π has length < 2 (|M| = {n})")

    def covers_p(seg) -> bool:
        x, _, length = seg
        span = {(x + t) % n for t in range(length + 1)}
        return all(i in span for i in range(pi - 1)) and top not in {(x + t) % n for t in range(1, length)}

    p_seg = next((s for s in segs if s[0] >= pi and s[1] == (top - 1) % n and covers_p(s)), None)
    if p_seg is not None and p_seg[2] == best:
        # Case 1: extend P by contracting v_{π+1} .. v_l onto v_l
        l = p_seg[0]
        groups = [[c[i]] for i in range(pi)] + [[c[i] for i in range(pi, l + 1)]] + [[c[i]] for i in range(l + 1, n)]
        new_p = list(range(pi + 1))
        return _contract_along(h, groups, h.S, new_p)

    l, mm, _ = min((s for s in segs if s[2] == best and s is not p_seg), key=lambda s: s[0])
    if not pi <= l < mm <= n - 1:
        raise PreconditionViolated("order", "long segment overlaps P")
    ea, eb = h.image(h.e)
    a = next(i for i in range(pi - 1) if {c[i], c[i + 1]} == {ea, eb})
    f = _class_rep(h, c[top], c[mm])
    g1 = [c[i % n] for i in range(mm, n + a + 1)]  # v_m .. v_a (wraps through v_1)
    g2 = [c[i] for i in range(a + 1, pi)]  # v_{a+1} .. v_π
    g3 = [c[i] for i in range(pi, l + 1)]  # v_{π+1} .. v_l
    singles = [[c[i]] for i in range(l + 1, mm)]
    groups = [g2, g3] + singles + [g1]
    new_p = [0, len(groups) - 1]  # (v_{a+1}, v_a): v_a may have high degree
    return _contract_along(h, groups, set(h.S) | {f}, new_p)


def is_h_minor(lower: HSet, upper: HSet) -> bool:
    """True iff ``lower`` arises from ``upper`` by contracting edges of upper's cycle only.

    Checks that the host and e agree, that every part of ``lower`` is a union
    of a contiguous arc of ``upper``'s cycle, and that ``lower``'s cycle visits
    those arcs in ``upper``'s cyclic order.
    """
    if lower.host != upper.host or lower.e != upper.e:
        return False
    up_index = upper._part_of
    low_index = lower._part_of
    n = upper.M.n
    # M-vertex of upper -> M-vertex of lower
    up_to_low = {}
    for v, a in up_index.items():
        b = low_index[v]
        if up_to_low.setdefault(a, b) != b:
            return False
    seq = [up_to_low[x] for x in upper.cycle]
    # collapse consecutive repeats into arcs, cyclically
    arcs = [seq[i] for i in range(n) if seq[i] != seq[i - 1]]
    if not arcs:
        arcs = [seq[0]]
    if len(arcs) != len(set(arcs)) or len(arcs) != lower.M.n:
        return False
    lc = list(lower.cycle)
    if len(lc) < 3:
        return sorted(arcs) == sorted(lc)
    j = lc.index(arcs[0])
    fwd = [lc[(j + t) % len(lc)] for t in range(len(lc))]
    bwd = [lc[(j - t) % len(lc)] for t in range(len(lc))]
    return arcs == fwd or arcs == bwd


@dataclass
class CycleCertificate:
    """Partition of the host into consecutive arcs of C whose quotient is C_k."""

    partition: BranchPartition
    k: int
    contracted: list[tuple[int, int]]
    trace: list[str] = field(default_factory=list)


@dataclass
class DegreeCertificate:
    """Partition of the host into arcs of C with a part of at least ``d`` neighbours."""

    partition: BranchPartition
    vertex: int
    degree: int
    contracted: list[tuple[int, int]]
    trace: list[str] = field(default_factory=list)


def _cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    n = len(cycle)
    return [_norm((cycle[i], cycle[(i + 1) % n])) for i in range(n)]


def _contracted(cycle: Sequence[int], bp: BranchPartition) -> list[tuple[int, int]]:
    lab = bp.labels()
    return [e for e in _cycle_edges(cycle) if lab[e[0]] == lab[e[1]]]


def _arc_partition(g: SimpleGraph, cycle: Sequence[int], runs: list[list[int]]) -> BranchPartition:
    """``runs`` are lists of cycle positions; returns the host partition in run order."""
    return BranchPartition.of(g, [[cycle[i] for i in run] for run in runs])


def _check_cycle(g: SimpleGraph, cycle: Sequence[int]) -> None:
    n = g.n
    if len(cycle) != n or sorted(cycle) != list(range(n)) or n < 3:
        raise NotHamiltonianCycle("C must list every vertex exactly once")
    for i in range(n):
        if not g.has_edge(cycle[i], cycle[(i + 1) % n]):
            raise NotHamiltonianCycle(f"{cycle[i]}-{cycle[(i + 1) % n]} is not an edge")


def _degree_cert(g: SimpleGraph, cycle, bp: BranchPartition, d: int, trace: list[str]) -> DegreeCertificate | None:
    q = quotient_graph(g, bp)
    degs = q.degrees()
    best = max(range(q.n), key=lambda v: (degs[v], -v))
    if degs[best] < d:
        return None
    return DegreeCertificate(bp, best, degs[best], _contracted(cycle, bp), trace)


def hamiltonian_step(g: SimpleGraph, cycle: Sequence[int], k: int, d: int,
                     max_iter: int | None = None) -> CycleCertificate | DegreeCertificate | Insufficient:
    """Contract edges of the Hamilton cycle C to reach C_k or a vertex with d neighbours."""
    if k < 3 or d < 3:
        raise ValueError("k and d must exceed two")
    _check_cycle(g, cycle)
    cycle = list(cycle)
    n = g.n
    trace: list[str] = []
    if g.max_degree() >= d:
        trace.append("a vertex already has d neighbours")
        return _degree_cert(g, cycle, BranchPartition.identity(g), d, trace)
    if g.size() == n:
        if n < k:
            return Insufficient(f"cycle of order {n} is shorter than {k}", trace)
        trace.append(f"G is its Hamilton cycle: contract to C{k}")
        bp = _arc_partition(g, cycle, split_runs(list(range(n)), k))
        return CycleCertificate(bp, k, _contracted(cycle, bp), trace)

    # keep the longest segment cut out by v and its neighbours, plus v's two cycle edges
    pos = {v: i for i, v in enumerate(cycle)}
    xs = sorted({0} | {pos[w] for w in g.neighbors(cycle[0])})
    segs = [(x, xs[(j + 1) % len(xs)], (xs[(j + 1) % len(xs)] - x) % n) for j, x in enumerate(xs)]
    best = max(s[2] for s in segs)
    l, r, _ = min((s for s in segs if s[2] == best), key=lambda s: s[0])
    keep = {(l + t) % n for t in range(best)}  # edge i joins positions i, i+1
    keep |= {0, n - 1}
    runs: list[list[int]] = []
    cur = [0]
    for i in range(n - 1):
        if i in keep:
            runs.append(cur)
            cur = [i + 1]
        else:
            cur.append(i + 1)
    runs.append(cur)
    bp = _arc_partition(g, cycle, runs)
    trace.append(f"preprocess: keep segment of length {best}, quotient order {len(runs)}")
    h_q, prov = quotient(g, bp)
    mcyc = list(range(len(runs)))
    if h_q.size() == h_q.n:
        if h_q.n < k:
            return Insufficient(f"preprocessed cycle has order {h_q.n} < {k}", trace)
        trace.append(f"quotient is a cycle: contract to C{k}")
        inner = split_runs(list(range(h_q.n)), k)
        full = bp.coarsen(inner)
        return CycleCertificate(full, k, _contracted(cycle, full), trace)

    # initial H-set: a maximal run of degree-two vertices through v, ending at a high vertex
    qn = h_q.n
    degs = h_q.degrees()
    if degs[0] != 2:
        return Insufficient("pivot vertex kept degree above two after preprocessing", trace)
    fwd = [0]
    j = 1
    while degs[j % qn] == 2 and j < qn:
        fwd.append(j % qn)
        j += 1
    fwd.append(j % qn)
    back = []
    j = qn - 1
    while degs[j] == 2 and j not in fwd:
        back.append(j)
        j -= 1
    p_path = back[::-1] + fwd
    e = min(prov.parallel_class(0, 1))
    hs = HSet(prov, tuple(mcyc), frozenset({e}), tuple(p_path), e)
    trace.append(f"initial H-set weight ({len(hs.S)},{len(hs.P)})")

    cap = max_iter if max_iter is not None else (k - 1) * (d * d - 1) + 1
    for it in range(cap + 1):
        if len(hs.P) >= k:
            trace.append(f"|P| = {len(hs.P)} >= {k}: contract the rest of C")
            return _cycle_from_path(g, cycle, hs, k, trace)
        if len(hs.S) >= d * d:
            trace.append(f"|S| = {len(hs.S)} >= d^2: contract one side of the parallel class")
            cert = _degree_from_parallel(g, cycle, hs, d, trace)
            if cert is not None:
                return cert
            return Insufficient("parallel class did not yield d neighbours", trace)
        if hs.M.max_degree() >= d:
            trace.append("contracted quotient has a vertex with d neighbours")
            return _degree_cert(g, cycle, hs.partition, d, trace)
        if it == cap:
            break
        try:
            nxt = hset_improve(hs, d, k)
        except PreconditionViolated as exc:
            trace.append(f"stalled: {exc}")
            return Insufficient(f"H-set improvement stalled at weight ({len(hs.S)},{len(hs.P)})", trace)
        if isinstance(nxt, PathLongEnough):
            continue
        trace.append(f"improve: weight ({len(nxt.S)},{len(nxt.P)}), |M| = {nxt.M.n}")
        hs = nxt
    return Insufficient("iteration cap reached", trace)


def _cycle_from_path(g: SimpleGraph, cycle, hs: HSet, k: int, trace: list[str]) -> CycleCertificate:
    n = hs.M.n
    p = list(hs.P)
    c = list(hs.cycle)
    i0 = c.index(p[0])
    sgn = 1 if c[(i0 + 1) % n] == p[1] else -1
    order = [c[(i0 + sgn * j) % n] for j in range(n)]
    groups = [[v] for v in order[:len(p)]]
    rest = order[len(p):]
    if rest:
        groups.append(rest)
    merged = [sum(grp, []) for grp in split_runs(groups, k)]
    full = hs.partition.coarsen(merged)
    return CycleCertificate(full, k, _contracted(cycle, full), trace)


def _degree_from_parallel(g: SimpleGraph, cycle, hs: HSet, d: int, trace: list[str]) -> DegreeCertificate | None:
    a, b = hs.image(hs.e)
    best = None
    for side in (a, b):
        arc = set(hs.partition.parts[side])
        parts = [sorted(arc)] + [[v] for v in range(g.n) if v not in arc]
        bp = BranchPartition.of(g, parts)
        cert = _degree_cert(g, cycle, bp, d, trace)
        if cert is not None and (best is None or cert.degree > best.degree):
            best = cert
    return best
