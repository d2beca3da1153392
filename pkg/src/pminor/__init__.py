"""Parallel minors: exact containment tests, unavoidable families and constructive extraction."""

from .connectivity import is_internally_4_connected, is_k_connected, vertex_connectivity
from .containment import is_minor, is_parallel_minor
from .families import FamilyId, FamilyTag, family, generate, identify
from .graph import BranchPartition, MinorEmbedding, SimpleGraph, quotient, quotient_graph
from .graph6 import decode, encode
from .iso import is_isomorphic

__version__ = "0.1.0"

__all__ = [
    "BranchPartition",
    "FamilyId",
    "FamilyTag",
    "MinorEmbedding",
    "SimpleGraph",
    "decode",
    "encode",
    "family",
    "generate",
    "identify",
    "is_internally_4_connected",
    "is_isomorphic",
    "is_k_connected",
    "is_minor",
    "is_parallel_minor",
    "quotient",
    "quotient_graph",
    "vertex_connectivity",
]
