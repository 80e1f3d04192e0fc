"""Minimum cost homomorphism dichotomy for locally semicomplete and quasi-transitive digraphs."""

from .classifier import classify, classify_locally_semicomplete, classify_quasi_transitive
from .digraph import BipartiteGraph, Digraph
from .ordering import MinMaxOrdering, find_minmax_ordering, proper_exchange_procedure, verify_minmax
from .pibigraph import is_proper_interval_bigraph
from .solver import Homomorphism, brute_force_minhom, solve

__all__ = [
    "BipartiteGraph",
    "Digraph",
    "Homomorphism",
    "MinMaxOrdering",
    "brute_force_minhom",
    "classify",
    "classify_locally_semicomplete",
    "classify_quasi_transitive",
    "find_minmax_ordering",
    "is_proper_interval_bigraph",
    "proper_exchange_procedure",
    "solve",
    "verify_minmax",
]
