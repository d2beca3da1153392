"""Theorem drivers: extract a listed family as a parallel minor of a c-connected graph.

Every driver composes the reduction steps opportunistically and re-verifies
the final partition by isomorphism.  A certificate that fails verification is
never returned; the driver reports Insufficient instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

from ..connectivity import is_internally_4_connected, is_k_connected
from ..families import THEOREM_FAMILIES, THEOREM_MIN_K, FamilyId, FamilyTag, ParameterOutOfRange, generate, identify_all
from ..graph import BranchPartition, SimpleGraph, bits, compose, popcount, quotient_graph
from ..iso import is_isomorphic
from .connected import connected_step
from .hset import CycleCertificate, DegreeCertificate, hamiltonian_step
from .ladder import collapse_ladder, sides, square_cycle_order, square_shrink_groups, zigzag_cleanup
from .results import (
    FAMILY,
    THREE_CONNECTED,
    Disconnected,
    NotInternallyFourConnected,
    NotThreeConnected,
    NotTwoConnected,
)
from .search import finish, grow_hub, hub_partition, split_runs
from .twoconn import two_connected_step

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DEFAULT_BUDGET = 20_000

Found = tuple[FamilyId, BranchPartition]
Core = Callable[[SimpleGraph, int, list[str], int], "Found | None"]


@dataclass
class ExtractionOutcome:
    """Tagged result of a theorem driver.

    When ``family`` is set, ``partition`` is a branch partition of ``host``
    whose quotient is isomorphic to ``generate(family)``.
    """

    host: SimpleGraph
    c: int
    k: int
    family: FamilyId | None = None
    partition: BranchPartition | None = None
    trace: list[str] = field(default_factory=list)
    reason: str | None = None

    @property
    def found(self) -> bool:
        return self.family is not None

    def verify(self) -> bool:
        if self.family is None or self.partition is None:
            return False
        if self.family.tag not in THEOREM_FAMILIES[self.c] or self.family.k != self.k:
            return False
        if self.partition.host != self.host:
            return False
        q = quotient_graph(self.host, self.partition)
        return is_isomorphic(q, generate(self.family)) is not None

    def to_json(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "status": "found" if self.found else "insufficient",
            "family": self.family.tag.value if self.family else None,
            "k": self.k,
            "partition": self.partition.as_lists() if self.partition else None,
            "trace": list(self.trace),
            "reason": self.reason,
        }

    @classmethod
    def from_json(cls, host: SimpleGraph, c: int, obj: dict) -> "ExtractionOutcome":
        if obj.get("version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported outcome version {obj.get('version')!r}")
        fam = FamilyId(FamilyTag(obj["family"]), obj["k"]) if obj.get("family") else None
        bp = BranchPartition.of(host, obj["partition"]) if obj.get("partition") else None
        return cls(host, c, obj["k"], fam, bp, list(obj.get("trace", [])), obj.get("reason"))


# -- conversions between family members, written on generator labels --------

def _hubs(tag: FamilyTag) -> int:
    return {
        FamilyTag.FAN: 1, FamilyTag.WHEEL: 1, FamilyTag.DOUBLE_FAN: 2, FamilyTag.DOUBLE_WHEEL: 2,
        FamilyTag.DOUBLE_WHEEL_AXLE: 2, FamilyTag.TRIPLE_FAN: 3,
    }.get(tag, 0)


def _shrink(fid: FamilyId, k: int) -> list[list[int]] | None:
    """Groups turning ``generate(fid)`` into the same family with parameter k."""
    t, kk = fid.tag, fid.k
    if kk < k:
        return None
    if t is FamilyTag.STAR:
        return [[0] + list(range(k + 1, kk + 1))] + [[i] for i in range(1, k + 1)]
    if t in (FamilyTag.CYCLE, FamilyTag.PATH):
        return split_runs(list(range(kk)), k)
    if t is FamilyTag.CLIQUE:
        return [list(range(kk - k + 1))] + [[i] for i in range(kk - k + 1, kk)]
    a = {FamilyTag.K2K_PRIME: 2, FamilyTag.K3K_PRIME: 3, FamilyTag.K4K_PRIME: 4}.get(t)
    if a is not None:
        return [[0] + list(range(a + k, a + kk))] + [[i] for i in range(1, a + k)]
    h = _hubs(t)
    if h:
        return [[i] for i in range(h)] + split_runs(list(range(h, h + kk)), k)
    if t is FamilyTag.ZIGZAG and k >= 3:
        return square_shrink_groups(2 * kk, 2 * k)
    if t is FamilyTag.MOEBIUS_ZIGZAG and k >= 2:
        return square_shrink_groups(2 * kk + 1, 2 * k + 1)
    return None


# source/target pairs related by merging the two adjacent hubs labelled 0 and 1
_HUB_MERGES = {
    (FamilyTag.K3K_PRIME, FamilyTag.K2K_PRIME),
    (FamilyTag.K4K_PRIME, FamilyTag.K3K_PRIME),
    (FamilyTag.DOUBLE_FAN, FamilyTag.FAN),
    (FamilyTag.TRIPLE_FAN, FamilyTag.DOUBLE_FAN),
    (FamilyTag.DOUBLE_WHEEL_AXLE, FamilyTag.WHEEL),
}


def _convert(fid: FamilyId, tag: FamilyTag, k: int) -> list[list[int]] | None:
    """Groups turning ``generate(fid)`` into ``generate(FamilyId(tag, k))``, if a rule applies."""
    if fid.tag is tag:
        return _shrink(fid, k)
    t, kk = fid.tag, fid.k
    if tag is FamilyTag.STAR:
        if t is FamilyTag.K2K_PRIME and kk >= k:
            # merge the two hubs, then shrink the star
            return [[0, 1] + list(range(2 + k, 2 + kk))] + [[i] for i in range(2, 2 + k)]
        if t is FamilyTag.FAN and kk >= 2 * k - 1:
            # hub plus every other path vertex; the rest become leaves
            leaves = list(range(1, kk + 1, 2))
            centre = [0] + [i for i in range(1, kk + 1) if i not in leaves[:k]]
            return [centre] + [[x] for x in leaves[:k]]
    if tag is FamilyTag.FAN and t is FamilyTag.WHEEL and kk - 1 >= k:
        # contract one spoke: the rim minus that vertex is a path
        return [[0, 1]] + split_runs(list(range(2, kk + 1)), k)
    if (t, tag) in _HUB_MERGES and kk >= k:
        # merge two adjacent hubs, then shrink like the target family
        rest = _shrink(FamilyId(tag, kk), k)
        if rest is None:
            return None
        return [sum(([0, 1] if x == 0 else [x + 1] for x in grp), []) for grp in rest]
    return None


def _settle(g: SimpleGraph, bp: BranchPartition, c: int, k: int, trace: list[str], budget: int,
            search: bool = True) -> Found | None:
    """Turn a partition of ``g`` whose quotient is some family member into a listed target of order k."""
    q = quotient_graph(g, bp)
    targets = THEOREM_FAMILIES[c]
    for fid in identify_all(q):
        for tag in targets:
            groups = _convert(fid, tag, k)
            if groups is None:
                continue
            try:
                target = FamilyId(tag, k)
            except ParameterOutOfRange:
                continue
            iso = is_isomorphic(generate(fid), q)
            inner = BranchPartition.of(q, [[iso[x] for x in grp] for grp in groups])
            if is_isomorphic(quotient_graph(q, inner), generate(target)) is None:
                log.debug("conversion %s -> %s did not verify", fid, target)
                continue
            if fid != target:
                trace.append(f"contract {fid} to {target}")
            return target, compose(bp, inner)
    if not search:
        return None
    hit = finish(q, _target_ids(c, k), budget=budget * 10)
    if hit is not None:
        trace.append(f"finishing search on a quotient of order {q.n}: {hit[0]}")
        return hit[0], compose(bp, hit[1])
    return None


def _target_ids(c: int, k: int) -> list[FamilyId]:
    out = []
    for tag in THEOREM_FAMILIES[c]:
        try:
            out.append(FamilyId(tag, k))
        except ParameterOutOfRange:
            pass
    return out


# -- lifting through a hub ----------------------------------------------------

def _hub_route(g: SimpleGraph, c: int, k: int, inner: Core, trace: list[str], budget: int) -> Found | None:
    """Pivot on a high-degree vertex (or a grown hub), solve the smaller problem without it, lift back."""
    if g.n == 0:
        return None
    degs = g.degrees()
    top = max(range(g.n), key=lambda v: (degs[v], -v))
    ks = [k + 1, k] if c == 2 else [k]
    attempts: list[tuple[str, int, BranchPartition | None]] = []
    if g.n - 1 - degs[top] <= c - 1:
        attempts.append(("vertex", 1 << top, None))
    for hub in dict.fromkeys([1 << top, grow_hub(g, top)]):
        bp = hub_partition(g, hub)
        if bp is not None:
            attempts.append(("hub", hub, bp))
    for label, hub, bp in attempts:
        if bp is None:
            sub, back = g.delete_vertices(bits(hub))
            sub_parts = [[back[x]] for x in range(sub.n)]
        else:
            q = quotient_graph(g, bp)
            sub, back = q.delete_vertices([0])
            sub_parts = [list(bp.parts[back[x]]) for x in range(sub.n)]
        if sub.n < k:
            continue
        for kk in ks:
            local: list[str] = []
            res = inner(sub, kk, local, budget)
            if res is None:
                continue
            _, sbp = res
            parts = [list(bits(hub))] + [sum((sub_parts[x] for x in p), []) for p in sbp.parts]
            lifted = BranchPartition.of(g, parts)
            kind = "dominating hub" if bp is not None else "vertex"
            step = [f"pivot on {kind} {sorted(bits(hub))} (degree {popcount(g.neighborhood(hub))})"]
            step += ["  " + t for t in local] + [f"lift {res[0]} by the pivot"]
            done = _settle(g, lifted, c, k, step, budget)
            if done is not None:
                trace.extend(step)
                return done
    return None


# -- cores: no precondition errors, None on failure ---------------------------

def _core_1c(g: SimpleGraph, k: int, trace: list[str], budget: int) -> Found | None:
    if g.n < k or not g.is_connected():
        return None
    res = connected_step(g, k, max(k, 3), budget)
    if not res:
        trace.append(f"connected step: {res.reason}")
        return _finish_only(g, 1, k, trace, budget)
    trace.extend(res.trace)
    if res.kind == FAMILY:
        return _settle(g, res.partition, 1, k, trace, budget)
    q = res.quotient()
    for kk in dict.fromkeys([2 * k - 1, k]):
        local: list[str] = []
        sub = _core_2c(q, max(kk, 3), local, budget)
        if sub is None:
            continue
        trace.extend("  " + t for t in local)
        done = _settle(g, compose(res.partition, sub[1]), 1, k, trace, budget)
        if done is not None:
            return done
    return _finish_only(g, 1, k, trace, budget)


def _core_2c(g: SimpleGraph, k: int, trace: list[str], budget: int) -> Found | None:
    if g.n < k or not is_k_connected(g, 2):
        return None
    res = two_connected_step(g, k, k + 4, budget)
    if res:
        trace.extend(res.trace)
        if res.kind == FAMILY:
            done = _settle(g, res.partition, 2, k, trace, budget)
            if done is not None:
                return done
        elif res.kind == THREE_CONNECTED:
            q = res.quotient()
            local: list[str] = []
            sub = _hub_route(q, 2, k, _core_1c, local, budget)
            if sub is not None:
                trace.extend(local)
                return sub[0], compose(res.partition, sub[1])
    else:
        trace.append(f"two-connected step: {res.reason}")
    if is_k_connected(g, 3):
        done = _hub_route(g, 2, k, _core_1c, trace, budget)
        if done is not None:
            return done
    return _finish_only(g, 2, k, trace, budget)


def _core_3c(g: SimpleGraph, k: int, trace: list[str], budget: int) -> Found | None:
    if g.n < k + 1 or not is_k_connected(g, 3):
        return None
    done = _hub_route(g, 3, k, _core_2c, trace, budget)
    if done is not None:
        return done
    return _finish_only(g, 3, k, trace, budget)


def _core_4c(g: SimpleGraph, k: int, trace: list[str], budget: int) -> Found | None:
    if g.n < k + 2 or not is_internally_4_connected(g):
        return None
    done = _hub_route(g, 4, k, _core_3c, trace, budget)
    if done is not None:
        return done
    done = _ladder_route(g, k, trace, budget)
    if done is not None:
        return done
    return _finish_only(g, 4, k, trace, budget)


def _finish_only(g: SimpleGraph, c: int, k: int, trace: list[str], budget: int) -> Found | None:
    hit = finish(g, _target_ids(c, k), budget=budget * 10)
    if hit is not None:
        trace.append(f"finishing search on order {g.n}: {hit[0]}")
    return hit


def _arcs(bp: BranchPartition, cycle: list[int]) -> list[list[int]]:
    """Parts of a partition into arcs of ``cycle``, each listed along the cycle, in cyclic order."""
    lab = bp.labels()
    n = len(cycle)
    start = next(i for i in range(n) if lab[cycle[i]] != lab[cycle[i - 1]])
    out: list[list[int]] = []
    for t in range(n):
        v = cycle[(start + t) % n]
        if out and lab[out[-1][-1]] == lab[v]:
            out[-1].append(v)
        else:
            out.append([v])
    return out


def _ladder_route(g: SimpleGraph, k: int, trace: list[str], budget: int) -> Found | None:
    """Spanning zigzag or Moebius ladder: collapse rungs, shorten the cycle, split back into sides."""
    order = square_cycle_order(g, budget=budget)
    if order is None:
        return None
    n = len(order)
    trace.append(f"spanning square of C{n} found")
    # without chords the ladder shrinks directly
    m2 = 2 * k + (n % 2)
    if n >= m2:
        direct = BranchPartition.of(g, [[order[p] for p in grp] for grp in square_shrink_groups(n, m2)])
        done = _settle(g, direct, 4, k, trace, budget, search=False)
        if done is not None:
            trace.append("ladder shrinks by alternating side runs")
            return done
    col = collapse_ladder(g, order)
    h = quotient_graph(g, col)
    pos = {v: i for i, v in enumerate(order)}
    even = n % 2 == 0
    want = 2 * k if even else k + 1
    if h.n < want or want < 3:
        return None
    hc = list(range(h.n))
    seen: set = set()
    for d in range(max(h.n - 1, 4), 3, -1):
        res = hamiltonian_step(h, hc, want, d)
        if isinstance(res, CycleCertificate):
            arcs = _arcs(res.partition, hc)
            runs = [sorted((pos[v] for x in arc for v in col.parts[x]), key=lambda p: (p - pos[col.parts[arc[0]][0]]) % n)
                    for arc in arcs]
            if even:
                parts = zigzag_cleanup(runs)
                trace.append(f"rung collapse and C{want} contraction; zigzag cleanup")
            else:
                parts = sides(runs)
                trace.append(f"triangle and rung collapse, C{want} contraction, side split")
            bp = BranchPartition.of(g, [[order[p] for p in part] for part in parts])
            done = _settle(g, bp, 4, k, trace, budget)
            if done is not None:
                return done
            continue
        if isinstance(res, DegreeCertificate):
            if res.partition.parts in seen:
                continue
            seen.add(res.partition.parts)
            lifted = compose(col, res.partition)
            q = quotient_graph(g, lifted)
            local: list[str] = []
            sub = _hub_route(q, 4, k, _core_3c, local, budget) if is_internally_4_connected(q) else None
            if sub is not None:
                trace.append(f"collapsed cycle gives a vertex of degree {res.degree}")
                trace.extend(local)
                return sub[0], compose(lifted, sub[1])
    return None


# -- public drivers -----------------------------------------------------------

_CORES: dict[int, Core] = {1: _core_1c, 2: _core_2c, 3: _core_3c, 4: _core_4c}


def _run(g: SimpleGraph, c: int, k: int, budget: int) -> ExtractionOutcome:
    if k < THEOREM_MIN_K[c]:
        raise ParameterOutOfRange(f"c={c} needs k >= {THEOREM_MIN_K[c]}, got {k}")
    trace: list[str] = []
    found = _CORES[c](g, k, trace, budget)
    if found is None:
        return ExtractionOutcome(g, c, k, trace=trace, reason="no reduction reached a listed family")
    out = ExtractionOutcome(g, c, k, found[0], found[1], trace)
    if not out.verify():
        log.warning("discarding an unverified certificate for %s", found[0])
        return ExtractionOutcome(g, c, k, trace=trace, reason="certificate failed verification")
    return out


def extract_1c(g: SimpleGraph, k: int, budget: int = DEFAULT_BUDGET) -> ExtractionOutcome:
    """K_{1,k}, C_k, P_k or K_k as a parallel minor of a connected graph."""
    if not g.is_connected():
        raise Disconnected("extract_1c needs a connected graph")
    return _run(g, 1, k, budget)


def extract_2c(g: SimpleGraph, k: int, budget: int = DEFAULT_BUDGET) -> ExtractionOutcome:
    """K'_{2,k}, C_k, F_k or K_k as a parallel minor of a 2-connected graph."""
    if not is_k_connected(g, 2):
        raise NotTwoConnected("extract_2c needs a 2-connected graph")
    return _run(g, 2, k, budget)


def extract_3c(g: SimpleGraph, k: int, budget: int = DEFAULT_BUDGET) -> ExtractionOutcome:
    """K'_{3,k}, W_k, DF_k or K_k as a parallel minor of a 3-connected graph."""
    if not is_k_connected(g, 3):
        raise NotThreeConnected("extract_3c needs a 3-connected graph")
    return _run(g, 3, k, budget)


def extract_4c(g: SimpleGraph, k: int, budget: int = DEFAULT_BUDGET) -> ExtractionOutcome:
    """K'_{4,k}, D_k, D'_k, TF_k, M_k, Z_k or K_k as a parallel minor of an internally 4-connected graph."""
    if not is_internally_4_connected(g):
        raise NotInternallyFourConnected("extract_4c needs an internally 4-connected graph")
    return _run(g, 4, k, budget)


EXTRACTORS = {1: extract_1c, 2: extract_2c, 3: extract_3c, 4: extract_4c}


def extract(g: SimpleGraph, c: int | str, k: int, budget: int = DEFAULT_BUDGET) -> ExtractionOutcome:
    """Dispatch on the connectivity class (``"4i"`` is accepted for 4)."""
    key = 4 if str(c) == "4i" else int(c)
    if key not in EXTRACTORS:
        raise ValueError(f"unknown connectivity class {c!r}")
    return EXTRACTORS[key](g, k, budget)
