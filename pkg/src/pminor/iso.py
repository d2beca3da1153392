"""Isomorphism by colour refinement plus individualisation backtracking."""

from __future__ import annotations

from .graph import SimpleGraph, bits


def refine(g: SimpleGraph, colors: list[int]) -> list[int]:
    """Equitable refinement of ``colors``.

    Colours are renamed canonically (by sorted signature), so two graphs
    refined from matching initial colourings get comparable colour ids.
    """
    n = g.n
    adj = g.adj
    cur = list(colors)
    while True:
        sigs = []
        for v in range(n):
            counts: dict[int, int] = {}
            for w in bits(adj[v]):
                c = cur[w]
                counts[c] = counts.get(c, 0) + 1
            sigs.append((cur[v], tuple(sorted(counts.items()))))
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == len(set(cur)):
            return new
        cur = new


def _joint_refine(g: SimpleGraph, h: SimpleGraph, cg: list[int], ch: list[int]):
    """Refine both colourings with a shared signature table.

    Returns None when the colour class sizes stop matching.
    """
    n = g.n
    while True:
        sg = []
        sh = []
        for graph, cur, out in ((g, cg, sg), (h, ch, sh)):
            adj = graph.adj
            for v in range(n):
                counts: dict[int, int] = {}
                for w in bits(adj[v]):
                    c = cur[w]
                    counts[c] = counts.get(c, 0) + 1
                out.append((cur[v], tuple(sorted(counts.items()))))
        table = {s: i for i, s in enumerate(sorted(set(sg) | set(sh)))}
        ng = [table[s] for s in sg]
        nh = [table[s] for s in sh]
        if sorted(ng) != sorted(nh):
            return None
        if len(set(ng)) == len(set(cg)):
            return ng, nh
        cg, ch = ng, nh


def is_isomorphic(g: SimpleGraph, h: SimpleGraph, g_colors: list[int] | None = None,
                  h_colors: list[int] | None = None) -> dict[int, int] | None:
    """Return an adjacency-preserving bijection ``V(g) -> V(h)`` or None.

    Optional initial colourings must be respected by the bijection.
    """
    if g.n != h.n or g.size() != h.size():
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    if n == 0:
        return {}
    cg = list(g_colors) if g_colors is not None else [0] * n
    ch = list(h_colors) if h_colors is not None else [0] * n
    if sorted(cg) != sorted(ch):
        return None
    res = _joint_refine(g, h, cg, ch)
    if res is None:
        return None
    return _search(g, h, *res)


def _search(g: SimpleGraph, h: SimpleGraph, cg: list[int], ch: list[int]) -> dict[int, int] | None:
    n = g.n
    if len(set(cg)) == n:
        pos = {c: v for v, c in enumerate(ch)}
        m = {v: pos[cg[v]] for v in range(n)}
        for v in range(n):
            img = 0
            for w in bits(g.adj[v]):
                img |= 1 << m[w]
            if img != h.adj[m[v]]:
                return None
        return m
    sizes: dict[int, int] = {}
    for c in cg:
        sizes[c] = sizes.get(c, 0) + 1
    target = min((s, c) for c, s in sizes.items() if s > 1)[1]
    v = cg.index(target)
    fresh = max(max(cg), max(ch)) + 1
    for w in range(n):
        if ch[w] != target:
            continue
        ng = list(cg)
        nh = list(ch)
        ng[v] = fresh
        nh[w] = fresh
        res = _joint_refine(g, h, ng, nh)
        if res is None:
            continue
        m = _search(g, h, *res)
        if m is not None:
            return m
    return None


def automorphism_orbits(g: SimpleGraph) -> list[int]:
    """Orbit id for each vertex under Aut(g) (ids are the smallest member)."""
    n = g.n
    orbit = list(range(n))
    base = refine(g, [0] * n)
    for v in range(n):
        if orbit[v] != v:
            continue
        for w in range(v + 1, n):
            if orbit[w] != w or base[w] != base[v]:
                continue
            cv = [0] * n
            cw = [0] * n
            cv[v] = 1
            cw[w] = 1
            if is_isomorphic(g, g, cv, cw) is not None:
                orbit[w] = v
    return orbit


def invariant(g: SimpleGraph) -> tuple:
    """Cheap isomorphism invariant (refined colour histogram)."""
    cols = refine(g, [0] * g.n)
    hist: dict[int, int] = {}
    for c in cols:
        hist[c] = hist.get(c, 0) + 1
    return (g.n, g.size(), tuple(sorted(g.degrees())), tuple(sorted(hist.items())))
