"""Spectral radius of the adjacency and signless Laplacian tensors.

Shifted power iteration on ``T + I`` with Collatz-Wielandt enclosures. For a
connected hypergraph both tensors are nonnegative and weakly irreducible, so
the spectral radius is the unique eigenvalue with a positive eigenvector and
every positive vector ``x`` brackets it:

    min_i (T x^{k-1})_i / x_i^{k-1}  <=  rho  <=  max_i (T x^{k-1})_i / x_i^{k-1}
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from .hypergraph import (
    Hypergraph,
    HypergraphError,
    SubHypergraph,
    connected_components,
    induced_component,
)
from .tensor import HypergraphTensor

__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_MAX_ITERATIONS",
    "NotConnectedError",
    "PerronResult",
    "collatz_wielandt",
    "power_iterates",
    "spectral_radius",
    "spectral_radius_per_component",
    "rayleigh",
    "check_strict_monotonicity",
]

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITERATIONS = 100_000
TARGETS = ("a", "q")


class NotConnectedError(HypergraphError):
    pass


@dataclass
class PerronResult:
    rho_lower: float
    rho_upper: float
    vector: np.ndarray = field(repr=False)
    iterations: int
    converged: bool
    target: str

    @property
    def rho(self) -> float:
        return 0.5 * (self.rho_lower + self.rho_upper)

    @property
    def width(self) -> float:
        return self.rho_upper - self.rho_lower

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "rho_lower": float(self.rho_lower),
            "rho_upper": float(self.rho_upper),
            "rho": float(self.rho),
            "width": float(self.width),
            "iterations": int(self.iterations),
            "converged": bool(self.converged),
            "vector": [float(v) for v in self.vector],
        }


def _check_target(target: str) -> str:
    target = target.lower()
    if target not in TARGETS:
        raise ValueError(f"target must be 'a' or 'q', got {target!r}")
    return target


def collatz_wielandt(op, x) -> tuple[float, float]:
    """Min and max of ``(T x^{k-1})_i / x_i^{k-1}`` over a strictly positive ``x``."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("Collatz-Wielandt quotients need a strictly positive vector")
    q = op(x) / x ** (op.order - 1)
    return float(q.min()), float(q.max())


def power_iterates(op, x0=None) -> Iterator[tuple[np.ndarray, float, float]]:
    """Yield ``(x, lower, upper)`` for the shifted iteration, forever.

    Each step maps ``x`` to ``(T x^{k-1} + x^{[k-1]})^{[1/(k-1)]}`` scaled to
    unit max-magnitude; ``lower``/``upper`` are the quotients of ``x`` itself.
    """
    k = op.order
    x = np.ones(op.dim) if x0 is None else np.asarray(x0, dtype=float)
    x = x / x.max()
    while True:
        xk = x ** (k - 1)
        y = op(x)
        q = y / xk
        yield x, float(q.min()), float(q.max())
        x = (y + xk) ** (1.0 / (k - 1))
        x = x / x.max()


def spectral_radius(H: Hypergraph, target: str = "a", tol: float = DEFAULT_TOL,
                    max_iterations: int = DEFAULT_MAX_ITERATIONS, order: int | None = None) -> PerronResult:
    """Certified enclosure of the spectral radius of a connected hypergraph.

    Converges when ``rho_upper - rho_lower <= tol * max(1, rho_upper)``. On
    running out of iterations the best enclosure seen is returned with
    ``converged=False``.
    """
    target = _check_target(target)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if len(connected_components(H)) != 1:
        raise NotConnectedError("spectral_radius needs a connected hypergraph; "
                                "use spectral_radius_per_component")
    op = HypergraphTensor(H, target, order)
    lo, hi = -np.inf, np.inf
    x = np.ones(H.n)
    it = 0
    for it, (x, lower, upper) in enumerate(power_iterates(op), start=1):
        # every iterate's quotients are a valid bracket, so keep the tightest
        lo, hi = max(lo, lower), min(hi, upper)
        if hi - lo <= tol * max(1.0, hi):
            return PerronResult(lo, hi, x.copy(), it, True, target)
        if it >= max_iterations:
            break
    return PerronResult(lo, hi, x.copy(), it, False, target)


def spectral_radius_per_component(H: Hypergraph, target: str = "a", tol: float = DEFAULT_TOL,
                                  max_iterations: int = DEFAULT_MAX_ITERATIONS,
                                  order: int | None = None) -> PerronResult:
    """Spectral radius of a possibly disconnected hypergraph.

    Each component is solved as its diagonal block of the full tensor, i.e.
    with the global order. The enclosure is the componentwise maximum; the
    vector is the winning component's Perron vector padded with zeros.
    """
    target = _check_target(target)
    if not H.edges:
        return PerronResult(0.0, 0.0, np.ones(H.n), 0, True, target)
    k = H.rank if order is None else order
    best: PerronResult | None = None
    best_verts: tuple[int, ...] = ()
    lo = hi = 0.0
    iterations = 0
    converged = True
    for comp in connected_components(H):
        sub = induced_component(H, comp)
        if not sub.graph.edges:
            continue
        res = spectral_radius(sub.graph, target, tol, max_iterations, order=k)
        iterations = max(iterations, res.iterations)
        converged &= res.converged
        lo, hi = max(lo, res.rho_lower), max(hi, res.rho_upper)
        if best is None or res.rho > best.rho:
            best, best_verts = res, sub.vertices
    vec = np.zeros(H.n)
    vec[np.subtract(best_verts, 1)] = best.vector
    return PerronResult(lo, hi, vec, iterations, converged, target)


def rayleigh(H: Hypergraph, target: str, x, order: int | None = None) -> float:
    """``x^T (T x^{k-1})`` after scaling ``x`` to ``sum x_i^k = 1``; a lower bound on rho."""
    target = _check_target(target)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("rayleigh quotient needs a nonnegative vector")
    if not np.any(x > 0):
        raise ValueError("rayleigh quotient needs a nonzero vector")
    if not H.edges:
        return 0.0
    op = HypergraphTensor(H, target, order)
    k = op.order
    x = x / x.max()
    x = x / np.sum(x**k) ** (1.0 / k)
    return float(x @ op(x))


def check_strict_monotonicity(H: Hypergraph, G: SubHypergraph, target: str = "a",
                              tol: float = DEFAULT_TOL,
                              max_iterations: int = DEFAULT_MAX_ITERATIONS) -> bool | None:
    """Compare rho(G) against rho(H) for a proper same-rank sub-hypergraph.

    Returns True when the enclosures separate in the expected direction,
    False when they separate the wrong way, and None when they overlap.
    """
    if not G.proper:
        raise HypergraphError("sub-hypergraph is not proper")
    if not G.same_rank:
        raise HypergraphError("sub-hypergraph rank differs from the parent rank")
    rH = spectral_radius(H, target, tol, max_iterations)
    rG = spectral_radius_per_component(G.graph, target, tol, max_iterations)
    if rG.rho_upper < rH.rho_lower:
        return True
    if rG.rho_lower > rH.rho_upper:
        return False
    return None
