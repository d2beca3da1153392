"""Budgeted search helpers shared by the extraction procedures."""

from __future__ import annotations

from typing import Sequence

from ..containment import SearchBudgetExceeded, is_parallel_minor
from ..families import FamilyId, generate
from ..graph import BranchPartition, SimpleGraph, bits, extend_to_partition, popcount

# hosts up to this order are handed to the generic containment search
FINISH_CAP = 13
FINISH_BUDGET = 200_000


def long_cycle(g: SimpleGraph, target: int | None = None, budget: int = 20_000) -> list[int]:
    """A long cycle (vertex list) found by budgeted DFS; empty if the graph is a forest.

    Stops early once a cycle with ``target`` vertices (default: all) is found.
    Each start vertex is the smallest on its cycles, so cycles are not revisited
    from every rotation.
    """
    n = g.n
    want = n if target is None else min(target, n)
    best: list[int] = []
    nodes = 0
    degs = g.degrees()

    for s in sorted(range(n), key=lambda v: (-degs[v], v)):
        if len(best) >= want or nodes > budget:
            break
        allowed = ((1 << n) - 1) & ~((1 << s) - 1)
        path = [s]
        on = 1 << s
        # iterative DFS; stack of candidate iterators
        stack = [sorted(bits(g.adj[s] & allowed), key=lambda w: degs[w])]
        while stack and nodes <= budget:
            cands = stack[-1]
            if not cands:
                stack.pop()
                v = path.pop()
                on &= ~(1 << v)
                continue
            w = cands.pop(0)
            nodes += 1
            if (on >> w) & 1:
                continue
            path.append(w)
            on |= 1 << w
            if len(path) >= 3 and g.has_edge(w, s) and len(path) > len(best):
                best = list(path)
                if len(best) >= want:
                    break
            nxt = g.adj[w] & allowed & ~on
            # Warnsdorff-style: fewest onward options first
            stack.append(sorted(bits(nxt), key=lambda x: (popcount(g.adj[x] & allowed & ~on), x)))
    return best


def long_path(g: SimpleGraph, target: int | None = None, budget: int = 20_000, mask: int | None = None) -> list[int]:
    """A long simple path inside ``mask`` by budgeted DFS from every start vertex."""
    n = g.n
    if mask is None:
        mask = (1 << n) - 1
    want = popcount(mask) if target is None else min(target, popcount(mask))
    best: list[int] = []
    nodes = 0
    starts = sorted(bits(mask), key=lambda v: (popcount(g.adj[v] & mask), v))
    for s in starts:
        if len(best) >= want or nodes > budget:
            break
        path = [s]
        on = 1 << s
        stack = [sorted(bits(g.adj[s] & mask), key=lambda x: (popcount(g.adj[x] & mask), x))]
        if len(path) > len(best):
            best = list(path)
        while stack and nodes <= budget:
            cands = stack[-1]
            if not cands:
                stack.pop()
                v = path.pop()
                on &= ~(1 << v)
                continue
            w = cands.pop(0)
            nodes += 1
            if (on >> w) & 1:
                continue
            path.append(w)
            on |= 1 << w
            if len(path) > len(best):
                best = list(path)
                if len(best) >= want:
                    break
            stack.append(sorted(bits(g.adj[w] & mask & ~on), key=lambda x: (popcount(g.adj[x] & mask & ~on), x)))
    return best


def clique_of_size(g: SimpleGraph, size: int, mask: int | None = None, budget: int = 50_000) -> list[int] | None:
    """A clique of exactly ``size`` vertices inside ``mask``, or None (also on budget exhaustion)."""
    if mask is None:
        mask = (1 << g.n) - 1
    if size <= 0:
        return []
    nodes = 0

    def rec(chosen: list[int], cand: int) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("clique search budget")
        if len(chosen) == size:
            return chosen
        if len(chosen) + popcount(cand) < size:
            return None
        while cand:
            if len(chosen) + popcount(cand) < size:
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            res = rec(chosen + [v], cand & g.adj[v])
            if res is not None:
                return res
        return None

    try:
        return rec([], mask)
    except SearchBudgetExceeded:
        return None


def independent_of_size(g: SimpleGraph, size: int, mask: int | None = None, budget: int = 50_000) -> list[int] | None:
    return clique_of_size(g.complement(), size, mask, budget)


def split_runs(seq: Sequence[int], parts: int) -> list[list[int]]:
    """Cut ``seq`` into ``parts`` consecutive nonempty runs of near-equal length."""
    n = len(seq)
    if parts > n or parts <= 0:
        raise ValueError("cannot split into that many runs")
    out = []
    start = 0
    for i in range(parts):
        end = start + (n - start) // (parts - i)
        out.append(list(seq[start:end]))
        start = end
    return out


def grow_hub(g: SimpleGraph, start: int, avoid: int = 0, rounds: int | None = None) -> int:
    """Greedily grow a connected set from ``start`` while its neighbourhood grows.

    Returns the set as a bitmask.  ``avoid`` vertices are never absorbed.
    """
    hub = 1 << start
    best = popcount(g.neighborhood(hub) & ~avoid)
    steps = 0
    while rounds is None or steps < rounds:
        steps += 1
        choice = None
        for w in bits(g.neighborhood(hub) & ~avoid):
            val = popcount(g.neighborhood(hub | (1 << w)) & ~avoid)
            if val > best:
                best, choice = val, w
        if choice is None:
            break
        hub |= 1 << choice
    return hub


def hub_partition(g: SimpleGraph, hub: int) -> BranchPartition | None:
    """Hub as part 0, every other part seeded by one hub neighbour (Voronoi growth).

    The hub is adjacent to every other part of the quotient.  Returns None
    when some component of ``g - hub`` avoids the hub's neighbourhood.
    """
    seeds = [[v] for v in bits(g.neighborhood(hub))]
    sub_sets = [list(bits(hub))] + seeds
    try:
        return extend_to_partition(g, sub_sets)
    except ValueError:
        return None


def finish(g: SimpleGraph, targets: Sequence[FamilyId], budget: int = FINISH_BUDGET,
           cap: int = FINISH_CAP) -> tuple[FamilyId, BranchPartition] | None:
    """Generic containment search for the first target (in list order) that ``g`` contains."""
    if g.n > cap:
        return None
    for fid in targets:
        t = generate(fid)
        if t.n > g.n:
            continue
        try:
            bp = is_parallel_minor(g, t, budget=budget)
        except SearchBudgetExceeded:
            continue
        if bp is not None:
            return fid, bp
    return None
