"""Small named hypergraphs used as fixtures and examples."""

from itertools import combinations

from .hypergraph import Hypergraph


def pendant() -> Hypergraph:
    """A 4-edge {1,2,3,4} with a pendant 2-edge {4,5}: rank 4, co-rank 2."""
    return Hypergraph(5, ((1, 2, 3, 4), (4, 5)))


def complete_uniform(n: int, k: int) -> Hypergraph:
    return Hypergraph(n, tuple(combinations(range(1, n + 1), k)))


def path(n: int) -> Hypergraph:
    return Hypergraph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Hypergraph:
    return Hypergraph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def star(leaves: int) -> Hypergraph:
    """Centre 1 joined to ``leaves`` vertices."""
    return Hypergraph(leaves + 1, tuple((1, j) for j in range(2, leaves + 2)))
