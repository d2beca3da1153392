"""Cycle-or-K_{2,r} minors and the 2-connected reduction step."""

from __future__ import annotations

from ..connectivity import disjoint_paths, is_k_connected
from ..families import FamilyId, FamilyTag, generate
from ..graph import BranchPartition, MinorEmbedding, SimpleGraph, bits, compose, extend_to_partition, quotient_graph
from .connected import connected_step
from .hset import CycleCertificate, DegreeCertificate, hamiltonian_step
from .ramsey import ramsey_induced
from .results import FAMILY, THREE_CONNECTED, TWO_CONNECTED, Certificate, Insufficient, NotTwoConnected
from .search import clique_of_size, independent_of_size, long_cycle, split_runs

PAIR_CAP = 60


def best_k2r(g: SimpleGraph, want: int | None = None) -> tuple[int, int, list[list[int]]]:
    """Vertex pair with the most internally disjoint paths of length >= 2 between them.

    Pairs are scanned by decreasing degree product, at most ``PAIR_CAP`` of them.
    """
    degs = g.degrees()
    pairs = sorted(((u, v) for u in range(g.n) for v in range(u + 1, g.n)),
                   key=lambda p: (-min(degs[p[0]], degs[p[1]]), -(degs[p[0]] * degs[p[1]]), p))[:PAIR_CAP]
    best = (-1, -1, [])
    for u, v in pairs:
        if min(degs[u], degs[v]) <= len(best[2]):
            continue
        paths = disjoint_paths(g, u, v, cap=want)
        if len(paths) > len(best[2]):
            best = (u, v, paths)
            if want is not None and len(paths) >= want:
                break
    return best


def cycle_or_k2r(g: SimpleGraph, r: int, budget: int = 20_000) -> MinorEmbedding | Insufficient:
    """A C_r or K_{2,r} minor embedding of a 2-connected graph."""
    if r <= 2:
        raise ValueError("r must exceed two")
    if not is_k_connected(g, 2):
        raise NotTwoConnected("cycle_or_k2r needs a 2-connected graph")
    cyc = long_cycle(g, r, budget)
    if len(cyc) >= r:
        target = generate(FamilyId(FamilyTag.CYCLE, r))
        return MinorEmbedding.build(g, target, split_runs(cyc, r))
    u, v, paths = best_k2r(g, r)
    if len(paths) >= r:
        target = generate(FamilyId(FamilyTag.COMPLETE_BIPARTITE, r, 2))
        sets = [[u], [v]] + [p[1:-1] for p in paths[:r]]
        return MinorEmbedding.build(g, target, sets)
    return Insufficient(f"longest cycle found {len(cyc)}, most disjoint paths {len(paths)}; both below {r}")


def _k2_case(g: SimpleGraph, k: int, trace: list[str]) -> Certificate | None:
    """Case 1: a K_{2,r} minor with r > k, then a pivot set among the path parts."""
    u, v, paths = best_k2r(g)
    r = len(paths)
    if r < k + 1:
        return None
    trace.append(f"case 1: K2,{r} minor between {u} and {v}")
    bp = extend_to_partition(g, [[u], [v]] + [p[1:-1] for p in paths])
    q = quotient_graph(g, bp)
    rest = ((1 << q.n) - 1) & ~0b11
    rs = ramsey_induced(q, k + 1, rest)
    if rs is not None:
        kind, xs = rs.kind, list(rs.vertices)
        trace.append(f"Ramsey pivot on H-{{v,w}}: {kind} of order {k + 1}")
    else:
        xs, kind = independent_of_size(q, k + 1, rest), "independent"
        if xs is None:
            xs, kind = clique_of_size(q, k + 1, rest), "clique"
        if xs is None:
            trace.append("no pivot set of order k+1 in H-{v,w}")
            return None
        trace.append(f"Ramsey pivot failed below its bound; exact search found {kind} set")
    if kind == "clique":
        inner = extend_to_partition(q, [[x] for x in xs[:k]])
        trace.append("clique: absorb the rest")
        return Certificate(FAMILY, compose(bp, inner), FamilyId(FamilyTag.CLIQUE, k), trace)
    # keep X and v; w absorbs everything else; one x joins v
    xset = set(xs)
    blob = [y for y in range(q.n) if y not in xset and y != 0]
    inner = BranchPartition.of(q, [[0, xs[-1]], blob] + [[x] for x in xs[:-1]])
    trace.append("contract edges off X+v, then one more edge")
    return Certificate(FAMILY, compose(bp, inner), FamilyId(FamilyTag.K2K_PRIME, k), trace)


def _fan_partition(g: SimpleGraph, cycle: list[int], hub: int) -> BranchPartition:
    """Hub alone; the Hamilton path C - hub cut into one run per hub neighbour."""
    n = len(cycle)
    i = cycle.index(hub)
    path = [cycle[(i + t) % n] for t in range(1, n)]
    runs: list[list[int]] = []
    cur: list[int] = []
    seen_nbr = False
    for x in path:
        if g.has_edge(hub, x) and seen_nbr:
            runs.append(cur)
            cur = []
        if g.has_edge(hub, x):
            seen_nbr = True
        cur.append(x)
    runs.append(cur)
    return BranchPartition.of(g, [[hub]] + runs)


def _lift_dominating(cert: Certificate) -> FamilyId | None:
    fam = cert.family
    if fam is None:
        return None
    lift = {
        FamilyTag.STAR: FamilyTag.K2K_PRIME,
        FamilyTag.PATH: FamilyTag.FAN,
        FamilyTag.CLIQUE: FamilyTag.CLIQUE,
    }.get(fam.tag)
    return None if lift is None else FamilyId(lift, fam.k + (1 if lift is FamilyTag.CLIQUE else 0))


def _cycle_case(g: SimpleGraph, k: int, q: int, trace: list[str], budget: int) -> Certificate | Insufficient | None:
    cyc = long_cycle(g, None, budget)
    if len(cyc) < k:
        return None
    trace.append(f"case 2: C{len(cyc)} minor")
    bp = extend_to_partition(g, [[v] for v in cyc])
    h = quotient_graph(g, bp)
    hc = list(range(h.n))
    lo = max(3, k)
    tried: set = set()
    for d in range(max(h.n - 1, lo), lo - 1, -1):
        res = hamiltonian_step(h, hc, k, d)
        if isinstance(res, DegreeCertificate):
            if res.partition.parts in tried:
                continue
            tried.add(res.partition.parts)
        if isinstance(res, CycleCertificate):
            trace.append(f"hamiltonian step (d={d}): C{k}")
            trace.extend("  " + t for t in res.trace)
            return Certificate(FAMILY, compose(bp, res.partition), FamilyId(FamilyTag.CYCLE, k), trace)
        if not isinstance(res, DegreeCertificate):
            continue
        h2 = quotient_graph(h, res.partition)
        c2 = _quotient_cycle(res.partition, hc)
        fan = _fan_partition(h2, c2, res.vertex)
        hf = quotient_graph(h2, fan)
        sub, sub_map = hf.delete_vertices([0])
        trace.append(f"hamiltonian step (d={d}): hub of degree {res.degree}; fan F{hf.n - 1} Φ-member")
        step = connected_step(sub, k, max(q - 1, 3), budget)
        if isinstance(step, Insufficient):
            trace.append(f"  connected step on H'-v: {step.reason}")
            continue
        trace.extend("  " + t for t in step.trace)
        # lift: the hub joins as its own part; it is adjacent to every other part
        lifted = BranchPartition.of(hf, [[0]] + [[sub_map[x] for x in p] for p in step.partition.parts])
        chain = compose(compose(compose(bp, res.partition), fan), lifted)
        if step.kind == TWO_CONNECTED:
            trace.append("dominating vertex over a 2-connected minor: 3-connected")
            return Certificate(THREE_CONNECTED, chain, None, trace)
        fam = _lift_dominating(step)
        if fam.tag is FamilyTag.CLIQUE:
            chain = chain.coarsen([[0, 1]] + [[i] for i in range(2, len(chain.parts))])
            fam = FamilyId(FamilyTag.CLIQUE, k)
        trace.append(f"lift by the hub: {fam}")
        return Certificate(FAMILY, chain, fam, trace)
    return Insufficient("cycle case: no C_k and no usable hub", trace)


def _quotient_cycle(bp: BranchPartition, cycle: list[int]) -> list[int]:
    lab = bp.labels()
    out: list[int] = []
    for v in cycle:
        if not out or out[-1] != lab[v]:
            out.append(lab[v])
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def two_connected_step(g: SimpleGraph, k: int, q: int, budget: int = 20_000) -> Certificate | Insufficient:
    """K'_{2,k}, C_k, F_k or K_k as a parallel minor, or a 3-connected one of order >= q."""
    if k <= 2 or q <= 2:
        raise ValueError("k and q must exceed two")
    if not is_k_connected(g, 2):
        raise NotTwoConnected("two_connected_step needs a 2-connected graph")
    trace: list[str] = []
    cert = _k2_case(g, k, trace)
    if cert is not None:
        return cert
    res = _cycle_case(g, k, q, trace, budget)
    if isinstance(res, Certificate):
        return res
    if g.n >= q and is_k_connected(g, 3):
        trace.append(f"input itself is 3-connected of order {g.n}")
        return Certificate(THREE_CONNECTED, BranchPartition.identity(g), None, trace)
    if res is None:
        return Insufficient("neither case applies", trace)
    return res
