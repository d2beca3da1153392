"""Constructive extraction procedures with verifiable certificates."""

from .drivers import ExtractionOutcome, extract, extract_1c, extract_2c, extract_3c, extract_4c
from .results import (
    Disconnected,
    Insufficient,
    NotHamiltonianCycle,
    NotInternallyFourConnected,
    NotThreeConnected,
    NotTwoConnected,
    PreconditionViolated,
)

__all__ = [
    "Disconnected",
    "ExtractionOutcome",
    "Insufficient",
    "NotHamiltonianCycle",
    "NotInternallyFourConnected",
    "NotThreeConnected",
    "NotTwoConnected",
    "PreconditionViolated",
    "extract",
    "extract_1c",
    "extract_2c",
    "extract_3c",
    "extract_4c",
]
