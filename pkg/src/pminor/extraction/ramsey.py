"""Constructive Ramsey pivot: a k-clique or an independent k-set."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import SimpleGraph, bits


@dataclass(frozen=True)
class RamseySet:
    kind: str  # "clique" or "independent"
    vertices: tuple[int, ...]


def _find(g: SimpleGraph, s: int, a: int, b: int) -> RamseySet | None:
    if a <= 0:
        return RamseySet("clique", ())
    if b <= 0:
        return RamseySet("independent", ())
    if not s:
        return None
    if a == 1:
        return RamseySet("clique", (next(bits(s)),))
    if b == 1:
        return RamseySet("independent", (next(bits(s)),))
    low = s & -s
    v = low.bit_length() - 1
    nb = s & g.adj[v]
    non = s & ~g.adj[v] & ~low
    res = _find(g, nb, a - 1, b)
    if res is not None:
        if res.kind == "clique":
            return RamseySet("clique", tuple(sorted(res.vertices + (v,))))
        return res
    res = _find(g, non, a, b - 1)
    if res is not None:
        if res.kind == "independent":
            return RamseySet("independent", tuple(sorted(res.vertices + (v,))))
        return res
    return None


def ramsey_induced(g: SimpleGraph, k: int, mask: int | None = None) -> RamseySet | None:
    """k vertices inducing K_k or its complement, or None (NotFound).

    Pivots on the smallest remaining vertex, first looking for a (k-1)-clique
    among its neighbours, then for an independent (k-1)-set among its
    non-neighbours.  Succeeds whenever the vertex set has at least
    binom(2k-2, k-1) members.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if mask is None:
        mask = (1 << g.n) - 1
    return _find(g, mask, k, k)
