"""Generators and recognisers for the unavoidable families.

Labelling conventions (hubs always come first):

* ``star``           centre 0, leaves 1..k
* ``cycle``/``path`` 0..k-1 in order
* ``kXk-prime``      clique side 0..a-1, independent side a..a+k-1
* ``fan``            hub 0, path 1..k
* ``wheel``          hub 0, rim 1..k
* ``double-fan``     adjacent hubs 0,1, path 2..k+1
* ``triple-fan``     mutually adjacent hubs 0,1,2, path 3..k+2
* ``double-wheel``   nonadjacent hubs 0,1, rim 2..k+1 (``-axle``: hubs adjacent)
* ``zigzag``         u_i = 2i, v_i = 2i+1; the square of the cycle 0..2k-1
* ``moebius-zigzag`` square of the cycle 0..2k
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from functools import lru_cache

from .graph import BranchPartition, EdgeProvenance, SimpleGraph, quotient
from .iso import is_isomorphic

log = logging.getLogger(__name__)


class ParameterOutOfRange(ValueError):
    pass


class NotALadder(ValueError):
    pass


class FamilyTag(enum.Enum):
    # declaration order is the tie-break order used by identify()
    STAR = "star"
    CYCLE = "cycle"
    PATH = "path"
    CLIQUE = "clique"
    K2K_PRIME = "k2k-prime"
    FAN = "fan"
    K3K_PRIME = "k3k-prime"
    WHEEL = "wheel"
    DOUBLE_FAN = "double-fan"
    K4K_PRIME = "k4k-prime"
    DOUBLE_WHEEL = "double-wheel"
    DOUBLE_WHEEL_AXLE = "double-wheel-axle"
    TRIPLE_FAN = "triple-fan"
    MOEBIUS_ZIGZAG = "moebius-zigzag"
    ZIGZAG = "zigzag"
    COMPLETE_BIPARTITE = "complete-bipartite"

    @property
    def rank(self) -> int:
        return _TAG_ORDER[self]


_TAG_ORDER = {t: i for i, t in enumerate(FamilyTag)}

# smallest structurally meaningful parameter per family
_MIN_K = {
    FamilyTag.STAR: 1,
    FamilyTag.CYCLE: 3,
    FamilyTag.PATH: 1,
    FamilyTag.CLIQUE: 1,
    FamilyTag.K2K_PRIME: 1,
    FamilyTag.FAN: 1,
    FamilyTag.K3K_PRIME: 1,
    FamilyTag.WHEEL: 3,
    FamilyTag.DOUBLE_FAN: 1,
    FamilyTag.K4K_PRIME: 1,
    FamilyTag.DOUBLE_WHEEL: 3,
    FamilyTag.DOUBLE_WHEEL_AXLE: 3,
    FamilyTag.TRIPLE_FAN: 1,
    FamilyTag.MOEBIUS_ZIGZAG: 2,
    FamilyTag.ZIGZAG: 3,
    FamilyTag.COMPLETE_BIPARTITE: 1,
}

# family lists of the four unavoidable-parallel-minor theorems, by connectivity
THEOREM_FAMILIES: dict[int, tuple[FamilyTag, ...]] = {
    1: (FamilyTag.STAR, FamilyTag.CYCLE, FamilyTag.PATH, FamilyTag.CLIQUE),
    2: (FamilyTag.K2K_PRIME, FamilyTag.CYCLE, FamilyTag.FAN, FamilyTag.CLIQUE),
    3: (FamilyTag.K3K_PRIME, FamilyTag.WHEEL, FamilyTag.DOUBLE_FAN, FamilyTag.CLIQUE),
    4: (
        FamilyTag.K4K_PRIME,
        FamilyTag.DOUBLE_WHEEL,
        FamilyTag.DOUBLE_WHEEL_AXLE,
        FamilyTag.TRIPLE_FAN,
        FamilyTag.MOEBIUS_ZIGZAG,
        FamilyTag.ZIGZAG,
        FamilyTag.CLIQUE,
    ),
}

# the theorems ask for k exceeding c-1
THEOREM_MIN_K = {1: 1, 2: 3, 3: 4, 4: 5}


@dataclass(frozen=True, order=True)
class FamilyId:
    tag: FamilyTag
    k: int
    a: int | None = None

    def __post_init__(self):
        if self.tag is FamilyTag.COMPLETE_BIPARTITE:
            if self.a is None or self.a < 1:
                raise ParameterOutOfRange("complete-bipartite needs a side parameter a >= 1")
        elif self.a is not None:
            raise ParameterOutOfRange(f"{self.tag.value} takes no side parameter")
        if self.k < _MIN_K[self.tag]:
            raise ParameterOutOfRange(f"{self.tag.value} needs k >= {_MIN_K[self.tag]}, got {self.k}")

    def sort_key(self) -> tuple:
        return (self.tag.rank, self.k, self.a or 0)

    def __str__(self) -> str:
        if self.a is not None:
            return f"{self.tag.value}({self.a},{self.k})"
        return f"{self.tag.value}({self.k})"


def _join(n_hubs: int, hub_edges: bool, body_edges: list[tuple[int, int]], body_n: int) -> list[tuple[int, int]]:
    edges = []
    if hub_edges:
        edges += [(i, j) for i in range(n_hubs) for j in range(i + 1, n_hubs)]
    edges += [(h, n_hubs + b) for h in range(n_hubs) for b in range(body_n)]
    edges += [(n_hubs + u, n_hubs + v) for u, v in body_edges]
    return edges


def _path_edges(k: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(k - 1)]


def _cycle_edges(k: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


def _square_cycle(m: int) -> list[tuple[int, int]]:
    es = set()
    for i in range(m):
        for d in (1, 2):
            j = (i + d) % m
            es.add((min(i, j), max(i, j)))
    return sorted(es)


@lru_cache(maxsize=1024)
def generate(fid: FamilyId) -> SimpleGraph:
    """Labelled member of a family (see module docstring for conventions)."""
    t, k = fid.tag, fid.k
    hub = lambda i: f"h{i + 1}"  # noqa: E731
    if t is FamilyTag.STAR:
        return SimpleGraph(k + 1, [(0, i) for i in range(1, k + 1)], ["c"] + [f"l{i}" for i in range(1, k + 1)])
    if t is FamilyTag.CYCLE:
        return SimpleGraph(k, _cycle_edges(k), [f"v{i + 1}" for i in range(k)])
    if t is FamilyTag.PATH:
        return SimpleGraph(k, _path_edges(k), [f"v{i + 1}" for i in range(k)])
    if t is FamilyTag.CLIQUE:
        return SimpleGraph(k, _join(k, True, [], 0), [f"v{i + 1}" for i in range(k)])
    if t in (FamilyTag.K2K_PRIME, FamilyTag.K3K_PRIME, FamilyTag.K4K_PRIME):
        a = {FamilyTag.K2K_PRIME: 2, FamilyTag.K3K_PRIME: 3, FamilyTag.K4K_PRIME: 4}[t]
        return SimpleGraph(a + k, _join(a, True, [], k), [f"a{i + 1}" for i in range(a)] + [f"b{i + 1}" for i in range(k)])
    if t is FamilyTag.COMPLETE_BIPARTITE:
        a = fid.a
        return SimpleGraph(a + k, _join(a, False, [], k), [f"a{i + 1}" for i in range(a)] + [f"b{i + 1}" for i in range(k)])
    if t in (FamilyTag.FAN, FamilyTag.DOUBLE_FAN, FamilyTag.TRIPLE_FAN):
        h = {FamilyTag.FAN: 1, FamilyTag.DOUBLE_FAN: 2, FamilyTag.TRIPLE_FAN: 3}[t]
        return SimpleGraph(h + k, _join(h, True, _path_edges(k), k), [hub(i) for i in range(h)] + [f"p{i + 1}" for i in range(k)])
    if t is FamilyTag.WHEEL:
        return SimpleGraph(k + 1, _join(1, True, _cycle_edges(k), k), ["h1"] + [f"r{i + 1}" for i in range(k)])
    if t in (FamilyTag.DOUBLE_WHEEL, FamilyTag.DOUBLE_WHEEL_AXLE):
        return SimpleGraph(k + 2, _join(2, t is FamilyTag.DOUBLE_WHEEL_AXLE, _cycle_edges(k), k),
                           ["h1", "h2"] + [f"r{i + 1}" for i in range(k)])
    if t is FamilyTag.ZIGZAG:
        labels = [f"{'uv'[i % 2]}{i // 2 + 1}" for i in range(2 * k)]
        return SimpleGraph(2 * k, _square_cycle(2 * k), labels)
    if t is FamilyTag.MOEBIUS_ZIGZAG:
        return SimpleGraph(2 * k + 1, _square_cycle(2 * k + 1), [f"w{i + 1}" for i in range(2 * k + 1)])
    raise ParameterOutOfRange(f"unknown family {t}")


def family(tag: FamilyTag | str, k: int, a: int | None = None) -> SimpleGraph:
    """Convenience wrapper: ``family('wheel', 5)``."""
    if isinstance(tag, str):
        tag = FamilyTag(tag)
    return generate(FamilyId(tag, k, a))


def _candidates(n: int) -> list[FamilyId]:
    out = []
    fixed = {
        FamilyTag.STAR: n - 1,
        FamilyTag.CYCLE: n,
        FamilyTag.PATH: n,
        FamilyTag.CLIQUE: n,
        FamilyTag.K2K_PRIME: n - 2,
        FamilyTag.FAN: n - 1,
        FamilyTag.K3K_PRIME: n - 3,
        FamilyTag.WHEEL: n - 1,
        FamilyTag.DOUBLE_FAN: n - 2,
        FamilyTag.K4K_PRIME: n - 4,
        FamilyTag.DOUBLE_WHEEL: n - 2,
        FamilyTag.DOUBLE_WHEEL_AXLE: n - 2,
        FamilyTag.TRIPLE_FAN: n - 3,
    }
    for tag, k in fixed.items():
        if k >= _MIN_K[tag]:
            out.append(FamilyId(tag, k))
    if n % 2 == 1 and (n - 1) // 2 >= _MIN_K[FamilyTag.MOEBIUS_ZIGZAG]:
        out.append(FamilyId(FamilyTag.MOEBIUS_ZIGZAG, (n - 1) // 2))
    if n % 2 == 0 and n // 2 >= _MIN_K[FamilyTag.ZIGZAG]:
        out.append(FamilyId(FamilyTag.ZIGZAG, n // 2))
    for a in range(1, n // 2 + 1):
        out.append(FamilyId(FamilyTag.COMPLETE_BIPARTITE, n - a, a))
    return out


def identify_all(g: SimpleGraph, tags: tuple[FamilyTag, ...] | None = None) -> list[FamilyId]:
    """Every family member isomorphic to ``g``, in tie-break order."""
    hits = []
    degs = sorted(g.degrees())
    for fid in _candidates(g.n):
        if tags is not None and fid.tag not in tags:
            continue
        h = generate(fid)
        if h.size() != g.size() or sorted(h.degrees()) != degs:
            continue
        if is_isomorphic(g, h) is not None:
            hits.append(fid)
    hits.sort(key=FamilyId.sort_key)
    return hits


def identify(g: SimpleGraph, tags: tuple[FamilyTag, ...] | None = None) -> FamilyId | None:
    """The family member isomorphic to ``g``; ties go to the earliest tag and are logged."""
    hits = identify_all(g, tags)
    if not hits:
        return None
    if len(hits) > 1:
        log.debug("identify: %s ambiguous between %s", g, ", ".join(map(str, hits)))
    return hits[0]


def _ladder_k(g: SimpleGraph) -> tuple[FamilyId, dict[int, int]]:
    n = g.n
    if n % 2 == 0:
        fid = FamilyId(FamilyTag.ZIGZAG, n // 2) if n // 2 >= 3 else None
    else:
        k = (n - 1) // 2
        if k < 2:
            raise NotALadder(f"order {n} is too small for a ladder")
        fid = FamilyId(FamilyTag.MOEBIUS_ZIGZAG, k)
    if fid is None:
        raise NotALadder(f"order {n} is too small for a ladder")
    iso = is_isomorphic(generate(fid), g)
    if iso is None:
        raise NotALadder("graph is not a zigzag or Moebius zigzag ladder")
    return fid, iso


def ladder_collapse_groups(m: int) -> list[list[int]]:
    """Groups of positions along a square-of-cycle ordering that rung contraction merges.

    Even ``m``: the rungs (2i, 2i+1).  Odd ``m``: the triangle (0, 1, 2)
    followed by the remaining rungs (3, 4), (5, 6), ...
    """
    if m % 2 == 0:
        return [[2 * i, 2 * i + 1] for i in range(m // 2)]
    return [[0, 1, 2]] + [[2 * i + 1, 2 * i + 2] for i in range(1, (m - 1) // 2)]


def rung_contraction(ladder: SimpleGraph) -> tuple[SimpleGraph, EdgeProvenance, list[int]]:
    """Collapse every rung u_i v_i of a zigzag ladder (or a triangle plus rungs of a
    Moebius zigzag ladder) to obtain a cycle.

    Returns the quotient, its provenance and the Hamilton cycle of the quotient
    (vertex ids of the quotient, in ladder order).
    """
    fid, iso = _ladder_k(ladder)
    k = fid.k
    if k < 3:
        raise ParameterOutOfRange(f"rung contraction of {fid} degenerates below a 3-cycle")
    m = ladder.n
    groups = [[iso[p] for p in grp] for grp in ladder_collapse_groups(m)]
    bp = BranchPartition.of(ladder, groups)
    q, prov = quotient(ladder, bp)
    return q, prov, list(range(len(groups)))
