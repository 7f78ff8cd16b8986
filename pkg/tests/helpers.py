import numpy as np

from hyperten.hypergraph import Hypergraph, connected_components


def random_hypergraph(rng, n_max=10, sizes=(2, 4), density=3, n_min=2, no_isolated=False):
    """Random simple hypergraph with edge sizes drawn from ``sizes`` (inclusive)."""
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        lo, hi = sizes
        hi = min(hi, n)
        if lo > hi:
            continue
        m = int(rng.integers(1, density * n + 1))
        edges = set()
        for _ in range(m):
            s = int(rng.integers(lo, hi + 1))
            edges.add(tuple(sorted(rng.choice(np.arange(1, n + 1), s, replace=False).tolist())))
        H = Hypergraph(n, tuple(edges))
        if no_isolated and min(H.degrees) == 0:
            continue
        return H


def random_connected(rng, **kw):
    while True:
        H = random_hypergraph(rng, **kw)
        if len(connected_components(H)) == 1:
            return H


def random_same_rank_sub(rng, H):
    """Random proper sub-hypergraph keeping at least one edge of maximal size."""
    from hyperten.hypergraph import proper_sub_hypergraph

    if H.m < 2 and H.n == max(len(e) for e in H.edges):
        raise ValueError("a single spanning edge has no proper same-rank sub-hypergraph")
    k = H.rank
    while True:
        anchor = H.edges[int(rng.choice([i for i, e in enumerate(H.edges) if len(e) == k]))]
        keep_edges = [e for e in H.edges if e == anchor or rng.random() < 0.6]
        verts = set(v for e in keep_edges for v in e)
        extra = [v for v in H.vertices if v not in verts and rng.random() < 0.5]
        sub = proper_sub_hypergraph(H, verts | set(extra), keep_edges)
        if sub.proper:
            return sub
