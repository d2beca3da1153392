"""Closure check: large c-connected parallel minors of a family member stay in the family."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..connectivity import connectivity_class
from ..containment import parallel_minors
from ..families import FamilyId, FamilyTag, ParameterOutOfRange, generate, identify_all


@dataclass
class Counterexample:
    member: FamilyId
    partition: list[list[int]]
    minor_edges: list[tuple[int, int]]


@dataclass
class NecessityReport:
    tag: FamilyTag
    c: int
    order_cap: int
    floor: int
    members: list[FamilyId] = field(default_factory=list)
    minors_checked: int = 0
    distinct_minors: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "family": self.tag.value,
            "c": self.c,
            "order_cap": self.order_cap,
            "floor": self.floor,
            "members": [str(m) for m in self.members],
            "minors_checked": self.minors_checked,
            "distinct_minors": self.distinct_minors,
            "counterexamples": [
                {"member": str(x.member), "partition": x.partition, "edges": x.minor_edges}
                for x in self.counterexamples
            ],
        }


def _members(tag: FamilyTag, order_cap: int) -> list[FamilyId]:
    out = []
    for k in range(1, order_cap + 1):
        try:
            fid = FamilyId(tag, k)
        except ParameterOutOfRange:
            continue
        if generate(fid).n <= order_cap:
            out.append(fid)
    return out


def necessity_check(tag: FamilyTag | str, c: int | str, order_cap: int, floor: int = 5) -> NecessityReport:
    """Enumerate every c-connected parallel minor of order >= ``floor`` of each member up to ``order_cap``.

    Each such minor must again be a member of the same family; anything else is
    recorded as a counterexample.  Identical labelled quotients are classified once.
    """
    if isinstance(tag, str):
        tag = FamilyTag(tag)
    if str(c) not in {"1", "2", "3", "4", "4i"}:
        raise ValueError(f"unknown connectivity class {c!r}")
    cls = "4i" if str(c) == "4" else str(c)
    report = NecessityReport(tag, int(str(c)[0]), order_cap, floor)
    verdicts: dict[tuple, bool] = {}
    for fid in _members(tag, order_cap):
        g = generate(fid)
        if g.n < floor:
            continue
        report.members.append(fid)
        for bp, q in parallel_minors(g, min_order=floor):
            report.minors_checked += 1
            key = q.adj
            if key not in verdicts:
                verdicts[key] = not connectivity_class(q, cls) or bool(identify_all(q, (tag,)))
                report.distinct_minors += 1
            if not verdicts[key]:
                report.counterexamples.append(Counterexample(fid, bp.as_lists(), q.edges()))
    return report
