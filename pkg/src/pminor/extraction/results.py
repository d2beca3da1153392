"""Result and error types shared by the extraction steps."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..families import FamilyId
from ..graph import BranchPartition, SimpleGraph, quotient_graph


class Disconnected(ValueError):
    pass


class NotTwoConnected(ValueError):
    pass


class NotThreeConnected(ValueError):
    pass


class NotInternallyFourConnected(ValueError):
    pass


class NotHamiltonianCycle(ValueError):
    pass


class PreconditionViolated(ValueError):
    """Raised by hset_improve; ``which`` is ``"order"`` or ``"degree"``."""

    def __init__(self, which: str, message: str):
        super().__init__(message)
        self.which = which


@dataclass
class Insufficient:
    reason: str
    trace: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return False


FAMILY = "family"
TWO_CONNECTED = "two-connected"
THREE_CONNECTED = "three-connected"


@dataclass
class Certificate:
    """Parallel-minor certificate of a step: a partition of the step's input graph.

    ``kind`` is ``family`` (quotient is isomorphic to ``family``), or one of the
    connectivity outcomes, in which case the quotient itself is the object.
    """

    kind: str
    partition: BranchPartition
    family: FamilyId | None = None
    trace: list[str] = field(default_factory=list)

    @property
    def host(self) -> SimpleGraph:
        return self.partition.host

    def quotient(self) -> SimpleGraph:
        return quotient_graph(self.partition.host, self.partition)
