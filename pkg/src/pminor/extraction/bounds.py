"""Concrete bound functions and whether each one is a proven guarantee."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable


class UnknownBound(LookupError):
    """The bound depends on a cited result whose function is not explicit."""


def f1(k: int) -> int:
    """Ramsey pivot bound: every graph of this order has K_k or an independent k-set."""
    return comb(2 * k - 2, k - 1)


def f_p2(r: int, q: int) -> int:
    """Spanning-tree bound for a K_{1,r} or P_q minor in a connected graph."""
    return r ** q


def f_lemma(k: int, d: int) -> int:
    """Hamilton-cycle contraction bound r_H."""
    return d ** ((k - 1) * (d * d - 1) + 2)


def f_l1(k: int, l: int) -> int:
    return f_p2(f1(k), l * (k + 1))


@dataclass(frozen=True)
class Bound:
    name: str
    formula: str
    fn: Callable[..., int] | None
    guaranteed: bool


@dataclass
class BoundTable:
    entries: dict[str, Bound] = field(default_factory=dict)

    @classmethod
    def default(cls) -> "BoundTable":
        rows = [
            Bound("f1", "binom(2k-2, k-1)", f1, True),
            Bound("f_p2", "r^q", f_p2, True),
            Bound("f_l1", "f_p2(f1(k), l(k+1))", f_l1, True),
            Bound("f_lemma", "d^((k-1)(d^2-1)+2)", f_lemma, True),
            # cited results without explicit functions
            Bound("f_p1", "unknown (cycle or K_{2,r} minor)", None, False),
            Bound("f_l2", "f_p1(f1(k+1) + f_lemma(k, f_l1(k, q)))", None, False),
            Bound("f_1c", "f_l1(k, f_l2(2k, f_t2(f1(k))))", None, False),
            Bound("f_2c", "f_l2(k, f_t2(f_1c(k+2)))", None, False),
            Bound("f_3c", "f_t2(f_2c(k+2))", None, False),
            Bound("f_4c", "f_t3(f_3c(k+3), f_lemma(2k, 4 f_3c(k+3)))", None, False),
        ]
        return cls({b.name: b for b in rows})

    def value(self, name: str, *args: int) -> int:
        b = self.entries[name]
        if b.fn is None:
            raise UnknownBound(f"{name} = {b.formula} has no explicit value")
        return b.fn(*args)

    def guaranteed(self, name: str) -> bool:
        return self.entries[name].guaranteed

    def as_rows(self) -> list[dict]:
        return [{"name": b.name, "formula": b.formula, "guaranteed": b.guaranteed} for b in self.entries.values()]
