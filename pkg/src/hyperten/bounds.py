"""Degree-based bounds on the adjacency spectral radius.

Every upper bound here is a k-th (or square) root of an integer, so each one
also carries that integer; comparisons between bounds are made on the
integers, and perfect powers come out as exact floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .hypergraph import Hypergraph, HypergraphError, connected_components, is_regular, is_uniform
from .perron import PerronResult

__all__ = [
    "Bound",
    "BoundsReport",
    "integer_root",
    "lower_bound_average_degree",
    "upper_bound_max_degree",
    "upper_bound_edge_degree_product",
    "upper_bound_uniform_geometric_mean",
    "upper_bound_yuan_pairwise",
    "bounds_report",
]

SANDWICH_SLACK = 1e-8


class Bound(NamedTuple):
    value: float | int | Fraction
    equality: bool | None = None
    witness: tuple[int, ...] | None = None
    power: int | None = None


def integer_root(N: int, k: int) -> float:
    """``N ** (1/k)``, exact whenever ``N`` is a perfect k-th power."""
    if N < 0:
        raise ValueError("negative radicand")
    r = round(N ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == N:
            return float(c)
    return N ** (1.0 / k)


def lower_bound_average_degree(H: Hypergraph) -> Bound:
    """Average degree; tight exactly for regular hypergraphs."""
    if H.n == 0:
        raise HypergraphError("average degree of an empty vertex set")
    return Bound(Fraction(sum(len(e) for e in H.edges), H.n), is_regular(H))


def upper_bound_max_degree(H: Hypergraph) -> Bound:
    """Maximum degree; tight exactly for regular connected hypergraphs."""
    return Bound(max(H.degrees, default=0), is_regular(H))


def _edge_power(degrees: list[int], k: int) -> int:
    d = sorted(degrees, reverse=True)
    return d[0] ** (k - len(d) + 1) * math.prod(d[1:])


def upper_bound_edge_degree_product(H: Hypergraph, order: int | None = None) -> Bound:
    """Max over edges of ``(d_1^{k-s+1} d_2 ... d_s)^{1/k}``, degrees of the edge sorted descending.

    ``power`` holds the maximal integer under the root and ``witness`` the
    first edge attaining it.
    """
    if not H.edges:
        raise HypergraphError("edge degree product bound needs at least one edge")
    k = H.rank if order is None else order
    deg = H.degrees
    best, witness = -1, None
    for e in H.edges:
        p = _edge_power([deg[v - 1] for v in e], k)
        if p > best:
            best, witness = p, e
    return Bound(integer_root(best, k), None, witness, best)


def upper_bound_uniform_geometric_mean(H: Hypergraph) -> Bound | None:
    """Max over edges of the geometric mean of the edge's degrees; None unless uniform."""
    if not H.edges or not is_uniform(H):
        return None
    return upper_bound_edge_degree_product(H)


def upper_bound_yuan_pairwise(H: Hypergraph) -> Bound | None:
    """Max over edges and vertex pairs inside an edge of ``sqrt(d_i d_j)``.

    None when no edge holds two vertices (only singleton edges).
    """
    if not H.edges:
        raise HypergraphError("pairwise degree bound needs at least one edge")
    deg = H.degrees
    best, witness = -1, None
    for e in H.edges:
        if len(e) < 2:
            continue
        top = sorted((deg[v - 1] for v in e), reverse=True)
        p = top[0] * top[1]
        if p > best:
            best, witness = p, e
    if witness is None:
        return None
    return Bound(integer_root(best, 2), None, witness, best)


@dataclass
class BoundsReport:
    k: int | None
    lower_average_degree: Fraction
    upper_max_degree: int
    upper_edge_degree_product: float | None
    edge_degree_product_power: int | None
    edge_degree_product_witness: tuple[int, ...] | None
    upper_uniform_geometric_mean: float | None
    upper_yuan_pairwise: float | None
    yuan_in_scope: bool
    equality_flags: dict
    best_upper: float
    connected: bool
    notes: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        avg = self.lower_average_degree
        return {
            "lower_average_degree": f"{avg.numerator}/{avg.denominator}",
            "lower_average_degree_float": float(avg),
            "upper_max_degree": self.upper_max_degree,
            "upper_edge_degree_product": self.upper_edge_degree_product,
            "edge_degree_product_power": self.edge_degree_product_power,
            "edge_degree_product_witness": (None if self.edge_degree_product_witness is None
                                            else list(self.edge_degree_product_witness)),
            "upper_uniform_geometric_mean": self.upper_uniform_geometric_mean,
            "upper_yuan_pairwise": self.upper_yuan_pairwise,
            "yuan_in_scope": self.yuan_in_scope,
            "equality_flags": dict(self.equality_flags),
            "best_upper": self.best_upper,
            "connected": self.connected,
            "notes": list(self.notes),
            "violations": list(self.violations),
        }


def bounds_report(H: Hypergraph, perron: PerronResult | None = None,
                  slack: float = SANDWICH_SLACK) -> BoundsReport:
    """All degree bounds for ``H``, optionally checked against an adjacency enclosure.

    The pairwise bound counts towards ``best_upper`` only for uniform
    hypergraphs, where it is known to hold.
    """
    lower = lower_bound_average_degree(H)
    delta = upper_bound_max_degree(H)
    connected = len(connected_components(H)) == 1
    uniform = is_uniform(H)
    notes = []
    if not connected:
        notes.append("hypergraph is disconnected: upper bounds applied per component with the global rank")
    if H.edges:
        k = H.rank
        prod = upper_bound_edge_degree_product(H)
        geo = upper_bound_uniform_geometric_mean(H)
        yuan = upper_bound_yuan_pairwise(H)
        uppers = [float(delta.value), prod.value]
        if yuan is None:
            notes.append("pairwise degree bound undefined: no edge holds two vertices")
        elif uniform:
            uppers.append(yuan.value)
        else:
            notes.append("pairwise degree bound reported but excluded from best_upper: "
                         "its known scope is uniform hypergraphs")
        rep = BoundsReport(
            k=k,
            lower_average_degree=lower.value,
            upper_max_degree=delta.value,
            upper_edge_degree_product=prod.value,
            edge_degree_product_power=prod.power,
            edge_degree_product_witness=prod.witness,
            upper_uniform_geometric_mean=None if geo is None else geo.value,
            upper_yuan_pairwise=None if yuan is None else yuan.value,
            yuan_in_scope=uniform and yuan is not None,
            equality_flags={"average_degree": lower.equality, "max_degree": delta.equality},
            best_upper=min(uppers),
            connected=connected,
            notes=notes,
        )
    else:
        rep = BoundsReport(None, lower.value, 0, None, None, None, None, None, True,
                           {"average_degree": True, "max_degree": True}, 0.0, connected, notes)
    if perron is not None:
        if perron.target != "a":
            raise ValueError("degree bounds concern the adjacency tensor; got a signless Laplacian result")
        if perron.rho_upper < float(rep.lower_average_degree) - slack:
            rep.violations.append(f"rho_upper={perron.rho_upper!r} below average degree "
                                  f"{rep.lower_average_degree}")
        if perron.rho_lower > rep.best_upper + slack:
            rep.violations.append(f"rho_lower={perron.rho_lower!r} above best upper bound {rep.best_upper!r}")
    return rep
