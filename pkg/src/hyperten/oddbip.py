"""Odd-bipartiteness: exact decision over GF(2) and spectral certificates.

``H`` is odd-bipartite when some vertex set ``V1`` meets every edge in an odd
number of vertices and its complement does too. Writing ``y_v = [v in V1]``
this is the GF(2) system ``sum_{v in e} y_v = 1`` over all edges, together
with every edge having even size.

Given such a ``V1`` and the sign matrix ``P = diag(s)`` with ``s_v = -1`` on
``V1``, the adjacency tensor satisfies ``A = -P^{-(k-1)} A P`` and the
Laplacians ``L = P^{-(k-1)} Q P``; flipping the Perron vector on ``V1`` gives
an eigenvector for ``-rho`` and the sign vector itself spans a kernel vector
of ``Q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .hypergraph import Hypergraph, HypergraphError
from .perron import PerronResult
from .tensor import (
    DEFAULT_BUDGET,
    DiagonalMatrix,
    HypergraphTensor,
    Residual,
    dense_adjacency,
    dense_laplacian,
    dense_signless,
    eigen_residual,
    two_sided_product,
)

__all__ = [
    "OddBipartition",
    "find_odd_bipartition",
    "check_partition",
    "check_witness",
    "sign_vector",
    "signed_perron_certificate",
    "signless_kernel_certificate",
    "similarity_certificate",
    "laplacian_allones_check",
]


@dataclass(frozen=True)
class OddBipartition:
    """Outcome of the decision.

    When feasible, ``V1`` is the canonical solution. When infeasible,
    ``witness_edges`` is either a single odd-size edge (``witness_kind ==
    "odd_edge"``) or an odd number of edges covering every vertex an even
    number of times, so their constraints add up to ``0 = 1``.
    """

    feasible: bool
    V1: tuple[int, ...] | None = None
    witness_kind: str | None = None
    witness_edges: tuple[tuple[int, ...], ...] = ()

    def witness_dict(self) -> dict | None:
        if self.feasible:
            return None
        return {"kind": self.witness_kind, "edges": [list(e) for e in self.witness_edges]}


def find_odd_bipartition(H: Hypergraph) -> OddBipartition:
    """Decide odd-bipartiteness by Gauss-Jordan elimination over GF(2).

    Columns are pivoted in increasing vertex order and free variables are
    set to 0, so ``V1`` is the solution that is smallest when read as a
    binary number with vertex ``n`` as the most significant bit.
    """
    for e in H.edges:
        if len(e) % 2:
            return OddBipartition(False, None, "odd_edge", (e,))
    # row = (variable bits, rhs bit, provenance bits over edge indices)
    rows = [[sum(1 << (v - 1) for v in e), 1, 1 << t] for t, e in enumerate(H.edges)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(H.n):
        bit = 1 << col
        pr = next((i for i in range(r, len(rows)) if rows[i][0] & bit), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv, prhs, pprov = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][0] & bit:
                rows[i][0] ^= pv
                rows[i][1] ^= prhs
                rows[i][2] ^= pprov
        pivots.append((col, r))
        r += 1
    for vars_, rhs, prov in rows[r:]:
        if rhs:
            edges = tuple(e for t, e in enumerate(H.edges) if prov >> t & 1)
            return OddBipartition(False, None, "inconsistent_rows", edges)
    V1 = tuple(sorted(col + 1 for col, row in pivots if rows[row][1]))
    return OddBipartition(True, V1)


def check_partition(H: Hypergraph, V1) -> bool:
    """Direct edge-by-edge parity check of a candidate ``V1``."""
    V1 = set(V1)
    return all(len(V1 & set(e)) % 2 == 1 and len(set(e) - V1) % 2 == 1 for e in H.edges)


def check_witness(H: Hypergraph, bip: OddBipartition) -> bool:
    """Verify an infeasibility witness without re-running the elimination."""
    if bip.feasible:
        return False
    edges = set(H.edges)
    if not bip.witness_edges or not set(bip.witness_edges) <= edges:
        return False
    if bip.witness_kind == "odd_edge":
        return len(bip.witness_edges) == 1 and len(bip.witness_edges[0]) % 2 == 1
    if bip.witness_kind == "inconsistent_rows":
        count: dict[int, int] = {}
        for e in bip.witness_edges:
            for v in e:
                count[v] = count.get(v, 0) + 1
        return len(bip.witness_edges) % 2 == 1 and all(c % 2 == 0 for c in count.values())
    return False


def sign_vector(n: int, V1) -> np.ndarray:
    """Integer vector with -1 on ``V1`` and +1 elsewhere."""
    s = np.ones(n, dtype=np.int64)
    s[np.subtract(sorted(V1), 1).astype(np.intp)] = -1
    return s


def _require_feasible(bip: OddBipartition):
    if not bip.feasible:
        raise HypergraphError("certificate needs a feasible odd bipartition")


def signed_perron_certificate(H: Hypergraph, bip: OddBipartition, perron: PerronResult,
                              order: int | None = None) -> Residual:
    """Residual of ``(-rho, P y)`` for the adjacency tensor, ``y`` the Perron vector."""
    _require_feasible(bip)
    if not perron.converged:
        raise ValueError("Perron solve did not converge")
    if perron.target != "a":
        raise ValueError("signed certificate needs the adjacency Perron result")
    z = sign_vector(H.n, bip.V1) * np.asarray(perron.vector, dtype=float)
    return eigen_residual(HypergraphTensor(H, "a", order), -perron.rho, z)


def signless_kernel_certificate(H: Hypergraph, bip: OddBipartition, exact: bool = True,
                                order: int | None = None) -> Residual:
    """Residual of ``Q s^{k-1} = 0`` for the sign vector ``s``; exactly 0 for a valid ``V1``."""
    _require_feasible(bip)
    if not H.edges:
        return Residual(Fraction(0) if exact else 0.0)
    s = sign_vector(H.n, bip.V1)
    x = [int(v) for v in s] if exact else s.astype(float)
    return eigen_residual(HypergraphTensor(H, "q", order), 0 if exact else 0.0, x)


def similarity_certificate(H: Hypergraph, bip: OddBipartition, budget: int = DEFAULT_BUDGET,
                           order: int | None = None) -> bool:
    """Exact check of ``A = -P^{-(k-1)} A P`` and ``L = P^{-(k-1)} Q P`` on dense tensors."""
    _require_feasible(bip)
    if not H.edges:
        return True
    A = dense_adjacency(H, order, budget)
    P = DiagonalMatrix(tuple(Fraction(int(v)) for v in sign_vector(H.n, bip.V1)))
    left = P.power(-(A.order - 1))
    if two_sided_product(left, A, P, budget) != -A:
        return False
    return two_sided_product(left, dense_signless(H, order, budget), P, budget) == \
        dense_laplacian(H, order, budget)


def laplacian_allones_check(H: Hypergraph) -> Residual:
    """Residual of ``L 1^{k-1} = 0``, computed exactly."""
    if not H.edges:
        return Residual(Fraction(0))
    return eigen_residual(HypergraphTensor(H, "l"), 0, [1] * H.n)
