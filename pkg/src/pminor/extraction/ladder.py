"""Zigzag and Moebius ladder handling for the internally 4-connected driver."""

from __future__ import annotations

from ..containment import SearchBudgetExceeded
from ..families import ladder_collapse_groups
from ..graph import BranchPartition, SimpleGraph, bits
from .search import split_runs


def square_cycle_order(g: SimpleGraph, budget: int = 50_000) -> list[int] | None:
    """Cyclic order w_0..w_{n-1} with w_i adjacent to w_{i+1} and w_{i+2}, or None.

    Such an order exists iff g contains the square of C_n as a spanning
    subgraph, i.e. a spanning zigzag (n even) or Moebius zigzag (n odd) ladder.
    """
    n = g.n
    if n < 5 or min(g.degrees()) < 4:
        return None
    start = min(range(n), key=lambda v: (g.degree(v), v))
    nodes = 0
    order = [start]
    used = 1 << start

    def rec() -> bool:
        nonlocal nodes, used
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("ladder search budget")
        i = len(order)
        if i == n:
            a, b = order[-2], order[-1]
            return g.has_edge(a, order[0]) and g.has_edge(b, order[0]) and g.has_edge(b, order[1])
        cand = g.adj[order[-1]] & ~used
        if i >= 2:
            cand &= g.adj[order[-2]]
        # vertices that must still close the cycle need room: the last two touch w_0
        if i >= n - 2:
            cand &= g.adj[order[0]]
        if i == n - 1:
            cand &= g.adj[order[1]]
        for w in bits(cand):
            order.append(w)
            used |= 1 << w
            if rec():
                return True
            order.pop()
            used &= ~(1 << w)
        return False

    try:
        return list(order) if rec() else None
    except SearchBudgetExceeded:
        return None


def collapse_ladder(g: SimpleGraph, order: list[int]) -> BranchPartition:
    """Rung-collapse partition of ``g`` along a square-cycle order (parts in cycle order)."""
    return BranchPartition.of(g, [[order[p] for p in grp] for grp in ladder_collapse_groups(len(order))])


def sides(runs: list[list[int]]) -> list[list[int]]:
    """Split each run of consecutive positions into its even-offset and odd-offset halves.

    Both halves are connected in a square of a cycle because w_i is adjacent
    to w_{i+2}.  A run of length one yields a single part.
    """
    out = []
    for run in runs:
        out.append(run[0::2])
        if len(run) > 1:
            out.append(run[1::2])
    return out


def square_shrink_groups(m: int, m2: int) -> list[list[int]]:
    """Position groups turning the square of C_m into the square of C_{m2}.

    Requires m2 <= m with equal parity.  Runs of even length split into two
    alternating sides; for odd m position 0 stays alone.
    """
    if m2 > m or (m - m2) % 2:
        raise ValueError(f"cannot shrink a square cycle of order {m} to {m2}")
    head = [[0]] if m % 2 else []
    first = 1 if m % 2 else 0
    pairs = [[p, p + 1] for p in range(first, m, 2)]
    runs = [sum(r, []) for r in split_runs(pairs, (m2 - len(head)) // 2)]
    return head + sides(runs)


def zigzag_cleanup(runs: list[list[int]]) -> list[list[int]]:
    """Merge the sides of 2k even-length runs into the 2k parts of a zigzag ladder.

    With a_j, b_j the start and end sides of run j, the parts are
    a_{2i} + a_{2i+1} and b_{2i+1} + b_{2i+2} (indices mod 2k).  Edges
    between the sides of neighbouring runs then all fall inside the ladder,
    so chords that only join consecutive runs disappear.
    """
    m = len(runs)
    if m % 2 or any(len(r) % 2 for r in runs):
        raise ValueError("cleanup needs an even number of even-length runs")
    a = [r[0::2] for r in runs]
    b = [r[1::2] for r in runs]
    out = []
    for i in range(m // 2):
        out.append(a[2 * i] + a[2 * i + 1])
        out.append(b[2 * i + 1] + b[(2 * i + 2) % m])
    return out
