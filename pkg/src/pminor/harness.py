"""Corpus ingestion and exhaustive small-order verification of the unavoidable-minor theorems."""

from __future__ import annotations

import json
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .connectivity import connectivity_class
from .containment import SearchBudgetExceeded, is_parallel_minor
from .families import THEOREM_FAMILIES, FamilyId, FamilyTag, ParameterOutOfRange, generate
from .graph import BranchPartition, SimpleGraph, quotient_graph
from .graph6 import Graph6Error, decode
from .iso import is_isomorphic

REPORT_VERSION = 1

# number of simple graphs on n unlabelled vertices
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168}
BUNDLED_ORDERS = range(1, 9)


class CorpusParseError(ValueError):
    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


class NonExhaustiveCorpus(ValueError):
    pass


@dataclass(frozen=True)
class NotReached:
    """No order in range is free of misses from there upward."""

    order_max: int
    misses_at_max: int

    def __bool__(self) -> bool:
        return False


def bundled_path(n: int) -> Path:
    return Path(str(resources.files("pminor") / "data" / f"graphs{n}.g6"))


@dataclass
class CorpusSpec:
    """graph6 sources plus a connectivity filter (``1``, ``2``, ``3`` or ``4i``) and an order range.

    ``exhaustive`` is the caller's attestation that every order in range is
    complete up to isomorphism.
    """

    sources: list[str | Path]
    filter: str | None = None
    order_min: int = 1
    order_max: int | None = None
    exhaustive: bool = False

    @classmethod
    def bundled(cls, order_min: int, order_max: int, filter: str | int | None = None) -> "CorpusSpec":
        """The shipped exhaustive corpora; attested because their counts are checked."""
        orders = range(max(order_min, 1), order_max + 1)
        missing = [n for n in orders if n not in BUNDLED_ORDERS]
        if missing:
            raise ValueError(f"no bundled corpus for orders {missing}")
        return cls([bundled_path(n) for n in orders], None if filter is None else str(filter),
                   order_min, order_max, exhaustive=True)

    def in_range(self, n: int) -> bool:
        return n >= self.order_min and (self.order_max is None or n <= self.order_max)

    def entries(self) -> Iterator[tuple[str, int, str, SimpleGraph]]:
        """(source, line number, graph6 text, graph) for every entry passing the filters."""
        for src in self.sources:
            with open(src, encoding="ascii") as fh:
                for lineno, raw in enumerate(fh, 1):
                    text = raw.strip()
                    if not text or text.startswith(">>"):
                        continue
                    try:
                        g = decode(text)
                    except (Graph6Error, ValueError) as exc:
                        raise CorpusParseError(str(src), lineno, str(exc)) from exc
                    if not self.in_range(g.n):
                        continue
                    if self.filter is not None and not connectivity_class(g, self.filter):
                        continue
                    yield str(src), lineno, text, g

    def order_counts(self) -> dict[int, int]:
        """Unfiltered per-order line counts, for checking an attestation against known totals."""
        counts: dict[int, int] = {}
        plain = CorpusSpec(self.sources, None, self.order_min, self.order_max)
        for _, _, _, g in plain.entries():
            counts[g.n] = counts.get(g.n, 0) + 1
        return counts


@dataclass
class Hit:
    graph6: str
    family: FamilyId
    partition: list[list[int]]

    def verify(self) -> bool:
        g = decode(self.graph6)
        bp = BranchPartition.of(g, self.partition)
        return is_isomorphic(quotient_graph(g, bp), generate(self.family)) is not None


@dataclass
class OrderStats:
    tested: int = 0
    hits: int = 0
    misses: int = 0
    unknown: int = 0


@dataclass
class VerificationReport:
    c: int
    k: int
    filter: str | None
    order_min: int
    order_max: int | None
    exhaustive: bool
    per_order: dict[int, OrderStats] = field(default_factory=dict)
    family_hits: dict[str, int] = field(default_factory=dict)
    misses: list[str] = field(default_factory=list)
    certificates: list[Hit] = field(default_factory=list)
    unknown: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def tested(self) -> int:
        return sum(s.tested for s in self.per_order.values())

    def threshold(self) -> int | NotReached:
        """Smallest order in range above which no tested graph misses every family."""
        if not self.per_order:
            return self.order_min
        top = max(self.per_order)
        bad = [n for n, s in self.per_order.items() if s.misses or s.unknown]
        if not bad:
            return self.order_min
        last = max(bad)
        if last >= (self.order_max if self.order_max is not None else top):
            return NotReached(last, self.per_order[last].misses)
        return last + 1

    def reverify(self) -> list[str]:
        """graph6 strings whose stored certificate no longer checks out."""
        return [h.graph6 for h in self.certificates if not h.verify()]

    def to_json(self) -> dict:
        thr = self.threshold()
        return {
            "version": REPORT_VERSION,
            "c": self.c,
            "k": self.k,
            "filter": self.filter,
            "order_min": self.order_min,
            "order_max": self.order_max,
            "exhaustive": self.exhaustive,
            "tested": self.tested,
            "per_order": {str(n): vars(s) for n, s in sorted(self.per_order.items())},
            "family_hits": dict(sorted(self.family_hits.items())),
            "threshold": thr if isinstance(thr, int) else None,
            "threshold_reached": isinstance(thr, int),
            "misses": self.misses,
            "unknown": self.unknown,
            "certificates": [
                {"graph6": h.graph6, "family": h.family.tag.value, "k": h.family.k, "partition": h.partition}
                for h in self.certificates
            ],
            "seconds": round(self.seconds, 3),
        }

    @classmethod
    def from_json(cls, obj: dict | str) -> "VerificationReport":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if obj.get("version") != REPORT_VERSION:
            raise ValueError(f"unsupported report version {obj.get('version')!r}")
        rep = cls(obj["c"], obj["k"], obj["filter"], obj["order_min"], obj["order_max"], obj["exhaustive"])
        rep.per_order = {int(n): OrderStats(**s) for n, s in obj["per_order"].items()}
        rep.family_hits = dict(obj["family_hits"])
        rep.misses = list(obj["misses"])
        rep.unknown = list(obj.get("unknown", []))
        rep.certificates = [Hit(h["graph6"], FamilyId(FamilyTag(h["family"]), h["k"]), h["partition"])
                            for h in obj["certificates"]]
        rep.seconds = obj.get("seconds", 0.0)
        return rep

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=1) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "VerificationReport":
        return cls.from_json(Path(path).read_text())

    def csv_rows(self) -> list[list]:
        rows: list[list] = [["order", "tested", "hits", "misses", "unknown"]]
        for n, s in sorted(self.per_order.items()):
            rows.append([n, s.tested, s.hits, s.misses, s.unknown])
        return rows


def targets_for(c: int, k: int) -> list[FamilyId]:
    out = []
    for tag in THEOREM_FAMILIES[c]:
        try:
            out.append(FamilyId(tag, k))
        except ParameterOutOfRange:
            pass
    return out


def _check_one(args: tuple[str, int, int, int | None]) -> tuple[str, int, list[tuple[str, list[list[int]]]], bool]:
    """Containment of every target family; returns (graph6, order, hits, budget_exhausted)."""
    text, c, k, budget = args
    g = decode(text)
    hits = []
    exhausted = False
    for fid in targets_for(c, k):
        t = generate(fid)
        if t.n > g.n:
            continue
        try:
            bp = is_parallel_minor(g, t, budget=budget)
        except SearchBudgetExceeded:
            exhausted = True
            continue
        if bp is not None:
            hits.append((fid.tag.value, bp.as_lists()))
    return text, g.n, hits, exhausted


def corpus_verify(spec: CorpusSpec, c: int, k: int, budget: int | None = None, jobs: int = 1) -> VerificationReport:
    """Test every filtered corpus graph for each family of the (c, k) list.

    Graphs containing none of the families are misses.  A graph where some
    search ran out of budget without any hit is recorded as unknown and
    counts against the threshold.  Results are merged in corpus order, so
    the report does not depend on ``jobs``.
    """
    if c not in THEOREM_FAMILIES:
        raise ValueError(f"c must be one of {sorted(THEOREM_FAMILIES)}")
    if k < 1:
        raise ValueError("k must be positive")
    if spec.filter is None:
        spec = CorpusSpec(spec.sources, "4i" if c == 4 else str(c), spec.order_min, spec.order_max, spec.exhaustive)
    start = time.perf_counter()
    rep = VerificationReport(c, k, spec.filter, spec.order_min, spec.order_max, spec.exhaustive)
    for fid in targets_for(c, k):
        rep.family_hits[str(fid)] = 0
    work = [(text, c, k, budget) for _, _, text, _ in spec.entries()]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_one, work, chunksize=max(1, len(work) // (8 * jobs))))
    else:
        results = [_check_one(w) for w in work]
    for text, n, hits, exhausted in results:
        st = rep.per_order.setdefault(n, OrderStats())
        st.tested += 1
        if hits:
            st.hits += 1
            for tag, _ in hits:
                rep.family_hits[str(FamilyId(FamilyTag(tag), k))] += 1
            tag, part = hits[0]
            rep.certificates.append(Hit(text, FamilyId(FamilyTag(tag), k), part))
        elif exhausted:
            st.unknown += 1
            rep.unknown.append(text)
        else:
            st.misses += 1
            rep.misses.append(text)
    rep.per_order = dict(sorted(rep.per_order.items()))
    rep.seconds = time.perf_counter() - start
    return rep


def empirical_threshold(c: int, k: int, corpus: CorpusSpec, budget: int | None = None,
                        jobs: int = 1) -> int | NotReached:
    """Smallest order n such that every filtered corpus graph of order >= n contains a listed family."""
    if not corpus.exhaustive:
        raise NonExhaustiveCorpus("the corpus is not attested exhaustive; pass the attestation explicitly")
    return corpus_verify(corpus, c, k, budget=budget, jobs=jobs).threshold()


def check_attestation(spec: CorpusSpec, orders: Sequence[int] | None = None) -> list[int]:
    """Orders whose unfiltered line count disagrees with the known number of graphs."""
    counts = spec.order_counts()
    if orders is None:
        orders = sorted(counts)
    return [n for n in orders if counts.get(n, 0) != KNOWN_COUNTS.get(n, -1)]
