"""Aggregate spectral report and its JSON / text renderings."""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import BoundsReport, bounds_report
from .hypergraph import (
    Hypergraph,
    connected_components,
    degree_profile,
    induced_component,
    is_regular,
    is_uniform,
    rank_corank,
)
from .oddbip import (
    OddBipartition,
    find_odd_bipartition,
    laplacian_allones_check,
    signed_perron_certificate,
    signless_kernel_certificate,
    similarity_certificate,
)
from .perron import (
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_TOL,
    PerronResult,
    spectral_radius,
    spectral_radius_per_component,
)
from .tensor import DenseBudgetError

__all__ = [
    "SCHEMA_VERSION",
    "REPORT_DENSE_BUDGET",
    "SpectralReport",
    "build_report",
    "solve_targets",
    "oddbip_section",
    "dumps_json",
    "format_text",
    "worker_count",
]

SCHEMA_VERSION = 1
# dense Fraction tensors are slow in pure Python; the report's exact similarity
# check is skipped above this many entries
REPORT_DENSE_BUDGET = 10**6


def worker_count(default: int = 2) -> int:
    raw = os.environ.get("HYPERTEN_THREADS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


@dataclass
class SpectralReport:
    H: Hypergraph
    perron: dict[str, PerronResult]
    bounds: BoundsReport
    oddbip: dict
    settings: dict
    notes: list[str] = field(default_factory=list)

    @property
    def converged(self) -> bool:
        return all(r.converged for r in self.perron.values())

    def to_dict(self) -> dict:
        H = self.H
        comps = connected_components(H)
        prof = degree_profile(H)
        rank = corank = None
        if H.edges:
            rank, corank = rank_corank(H)
        avg = prof.average_degree
        return {
            "schema_version": SCHEMA_VERSION,
            "input": {
                "n": H.n,
                "edge_count": H.m,
                "rank": rank,
                "corank": corank,
                "uniform": is_uniform(H),
                "regular": is_regular(H),
                "connected": len(comps) == 1,
                "components": comps,
            },
            "degrees": {
                "degrees": list(prof.degrees),
                "max_degree": prof.max_degree,
                "min_degree": prof.min_degree,
                "average_degree": f"{avg.numerator}/{avg.denominator}",
            },
            "perron": {t: self.perron[t].to_dict() if t in self.perron else None for t in ("a", "q")},
            "bounds": self.bounds.to_dict(),
            "odd_bipartite": self.oddbip,
            "settings": dict(self.settings),
            "notes": list(self.notes),
        }


def solve_targets(H: Hypergraph, targets, tol: float, max_iterations: int,
                  workers: int | None = None) -> dict[str, PerronResult]:
    """Spectral radius for each target, solved concurrently when allowed."""
    targets = list(targets)
    workers = worker_count() if workers is None else workers

    def solve(t):
        return spectral_radius_per_component(H, t, tol, max_iterations)

    if workers > 1 and len(targets) > 1:
        with ThreadPoolExecutor(max_workers=min(workers, len(targets))) as pool:
            results = list(pool.map(solve, targets))
    else:
        results = [solve(t) for t in targets]
    return dict(zip(targets, results))


def _signed_residual(H: Hypergraph, bip: OddBipartition, perron_a: PerronResult,
                     tol: float, max_iterations: int) -> float:
    comps = connected_components(H)
    if len(comps) == 1:
        return float(signed_perron_certificate(H, bip, perron_a).value)
    # no single Perron vector exists; certify each component block with the global order
    k = H.rank
    worst = 0.0
    V1 = set(bip.V1)
    for comp in comps:
        sub = induced_component(H, comp)
        if not sub.graph.edges:
            continue
        res = spectral_radius(sub.graph, "a", tol, max_iterations, order=k)
        if not res.converged:
            raise ValueError("component Perron solve did not converge")
        local = OddBipartition(True, tuple(t for t, v in enumerate(sub.vertices, 1) if v in V1))
        worst = max(worst, float(signed_perron_certificate(sub.graph, local, res, order=k).value))
    return worst


def oddbip_section(H: Hypergraph, bip: OddBipartition, perron_a: PerronResult | None,
                   tol: float, max_iterations: int, dense_budget: int = REPORT_DENSE_BUDGET) -> dict:
    certs: dict = {
        "signed_perron_residual": None,
        "signless_kernel_exact": None,
        "similarity_exact": None,
        "laplacian_allones_residual": float(laplacian_allones_check(H).value),
        "spectral": "not applicable",
    }
    if bip.feasible:
        certs["signless_kernel_exact"] = signless_kernel_certificate(H, bip).value == 0
        try:
            certs["similarity_exact"] = similarity_certificate(H, bip, dense_budget)
        except DenseBudgetError:
            certs["similarity_exact"] = None
        if perron_a is None or not perron_a.converged:
            certs["spectral"] = "skipped"
        elif H.edges:
            try:
                certs["signed_perron_residual"] = _signed_residual(H, bip, perron_a, tol, max_iterations)
                certs["spectral"] = "ok"
            except ValueError:
                certs["spectral"] = "skipped"
    return {
        "odd_bipartite": bip.feasible,
        "V1": None if bip.V1 is None else list(bip.V1),
        "witness": bip.witness_dict(),
        "certificates": certs,
    }


def build_report(H: Hypergraph, tol: float = DEFAULT_TOL, max_iterations: int = DEFAULT_MAX_ITERATIONS,
                 target: str = "both", dense_budget: int = REPORT_DENSE_BUDGET) -> SpectralReport:
    targets = ["a", "q"] if target == "both" else [target]
    perron = solve_targets(H, targets, tol, max_iterations)
    pa = perron.get("a")
    bounds = bounds_report(H, pa if pa is not None and pa.converged else None)
    bip = find_odd_bipartition(H)
    section = oddbip_section(H, bip, pa, tol, max_iterations, dense_budget)
    notes = []
    if not all(r.converged for r in perron.values()):
        notes.append("spectral radius iteration did not converge; enclosure is the best found")
    if len(connected_components(H)) > 1:
        notes.append("disconnected: spectral radius is the maximum over component blocks")
    if bip.feasible and section["certificates"]["similarity_exact"] is None:
        notes.append(f"similarity certificate skipped: dense tensor exceeds budget of {dense_budget} entries")
    settings = {"tol": tol, "max_iterations": max_iterations, "target": target,
                "dense_budget": dense_budget, "workers": worker_count()}
    return SpectralReport(H, perron, bounds, section, settings, notes)


# --------------------------------------------------------------------------
# serialization


def _encode(obj) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize non-finite float {obj!r}")
        text = format(obj, ".17g")
        if "e" not in text and "." not in text:
            text += ".0"
        return text
    if isinstance(obj, Fraction):
        return json.dumps(f"{obj.numerator}/{obj.denominator}")
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k), ensure_ascii=False)}: {_encode(v)}"
                               for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    if hasattr(obj, "item"):
        return _encode(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_json(obj) -> str:
    """JSON text with every float written to 17 significant digits."""
    return _encode(obj)


def _fmt(x) -> str:
    return "n/a" if x is None else f"{x:.12g}"


def format_text(rep: SpectralReport) -> str:
    d = rep.to_dict()
    inp, deg, b, ob = d["input"], d["degrees"], d["bounds"], d["odd_bipartite"]
    out = [
        f"hypergraph: n={inp['n']} edges={inp['edge_count']} rank={inp['rank']} corank={inp['corank']}",
        f"  uniform={inp['uniform']} regular={inp['regular']} connected={inp['connected']} "
        f"components={len(inp['components'])}",
        f"degrees: {deg['degrees']}  max={deg['max_degree']} min={deg['min_degree']} "
        f"average={deg['average_degree']}",
    ]
    for t, name in (("a", "adjacency"), ("q", "signless Laplacian")):
        p = d["perron"][t]
        if p is None:
            continue
        status = "converged" if p["converged"] else "NOT converged"
        out.append(f"rho({name}) in [{p['rho_lower']:.15g}, {p['rho_upper']:.15g}]  "
                   f"width={p['width']:.3g} iterations={p['iterations']} {status}")
    out += [
        "bounds:",
        f"  average degree (lower)     {b['lower_average_degree']} = {_fmt(b['lower_average_degree_float'])}",
        f"  max degree                 {b['upper_max_degree']}",
        f"  edge degree product        {_fmt(b['upper_edge_degree_product'])}  "
        f"witness={b['edge_degree_product_witness']}",
        f"  uniform geometric mean     {_fmt(b['upper_uniform_geometric_mean'])}",
        f"  pairwise (uniform scope)   {_fmt(b['upper_yuan_pairwise'])}"
        + ("" if b["yuan_in_scope"] else "  [out of scope]"),
        f"  best upper                 {_fmt(b['best_upper'])}",
    ]
    for v in b["violations"]:
        out.append(f"  VIOLATION: {v}")
    if ob["odd_bipartite"]:
        c = ob["certificates"]
        out.append(f"odd-bipartite: yes, V1={ob['V1']}")
        out.append(f"  signless kernel exact={c['signless_kernel_exact']} "
                   f"similarity exact={c['similarity_exact']} "
                   f"signed Perron residual={_fmt(c['signed_perron_residual'])} ({c['spectral']})")
    else:
        w = ob["witness"]
        out.append(f"odd-bipartite: no, witness {w['kind']}: {w['edges']}")
    for note in d["notes"] + b["notes"]:
        out.append(f"note: {note}")
    return "\n".join(out) + "\n"
