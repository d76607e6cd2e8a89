"""Verification toolkit for perfect divisibility of small graphs."""

from .canon import canonical_form, enumerate_nonisomorphic, is_isomorphic
from .detectors import ClassSpec, Witness, contains_induced, find_forbidden, is_class_member
from .divisibility import (
    Partition,
    find_good_partition,
    is_perfectly_divisible,
    is_perfectly_weight_divisible_bounded,
)
from .graph import Graph, GraphError, PreconditionError, make_named
from .graph6 import decode_graph6, encode_graph6, load_corpus
from .invariants import chromatic_number, clique_number, is_perfect

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "PreconditionError", "make_named",
    "encode_graph6", "decode_graph6", "load_corpus",
    "canonical_form", "enumerate_nonisomorphic", "is_isomorphic",
    "ClassSpec", "Witness", "contains_induced", "find_forbidden", "is_class_member",
    "clique_number", "chromatic_number", "is_perfect",
    "Partition", "find_good_partition", "is_perfectly_divisible",
    "is_perfectly_weight_divisible_bounded",
]
