"""Hypergraph data model: parsing, degrees, rank, connectivity."""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

__all__ = [
    "Hypergraph",
    "HypergraphError",
    "ParseError",
    "DegreeProfile",
    "AdjacencyDigraph",
    "SubHypergraph",
    "parse_hypergraph",
    "read_hypergraph",
    "serialize_hypergraph",
    "degree_profile",
    "rank_corank",
    "is_uniform",
    "is_regular",
    "connected_components",
    "adjacency_digraph",
    "strongly_connected_components",
    "is_weakly_irreducible",
    "is_connected",
    "proper_sub_hypergraph",
    "induced_component",
]


class HypergraphError(ValueError):
    """Invalid hypergraph, or an operation undefined for the given one."""


class ParseError(HypergraphError):
    """Malformed edge-list text. ``line`` is 1-based, or None."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class Hypergraph:
    """Simple hypergraph on vertices ``1..n``.

    Edges are stored as ascending tuples of distinct vertex ids, in the
    order they were given. Instances are immutable; derived quantities are
    cached on first access.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    allow_singletons: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError(f"vertex count must be nonnegative, got {self.n}")
        canon = []
        seen = set()
        min_size = 1 if self.allow_singletons else 2
        for edge in self.edges:
            e = tuple(sorted(edge))
            if len(set(e)) != len(e):
                raise HypergraphError(f"edge {list(edge)} repeats a vertex")
            if len(e) < min_size:
                raise HypergraphError(f"edge {list(edge)} has fewer than {min_size} vertices")
            for v in e:
                if not 1 <= v <= self.n:
                    raise HypergraphError(f"vertex {v} in edge {list(edge)} outside 1..{self.n}")
            if e in seen:
                raise HypergraphError(f"duplicate edge {list(e)}")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "edges", tuple(canon))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], n: int | None = None,
                   allow_singletons: bool = False) -> "Hypergraph":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = max((max(e) for e in edges if e), default=0)
        return cls(n, tuple(edges), allow_singletons)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """``incident[v-1]`` lists the indices of edges containing ``v`` (the set E_v)."""
        inc = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                inc[v - 1].append(idx)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incident)

    @property
    def rank(self) -> int:
        return rank_corank(self)[0]

    @property
    def corank(self) -> int:
        return rank_corank(self)[1]

    def __str__(self):
        body = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"Hypergraph(n={self.n}, edges=[{body}])"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int
    average_degree: Fraction


@dataclass(frozen=True)
class AdjacencyDigraph:
    """Digraph on ``1..n``; ``arcs`` holds ordered pairs (i, j)."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def successors(self) -> list[list[int]]:
        out = [[] for _ in range(self.n + 1)]
        for i, j in sorted(self.arcs):
            out[i].append(j)
        return out


@dataclass(frozen=True)
class SubHypergraph:
    """A sub-hypergraph together with how it sits inside its parent.

    ``graph`` is relabelled to ``1..len(vertices)``; ``vertices[t-1]`` is the
    parent id of vertex ``t``.
    """

    graph: Hypergraph
    vertices: tuple[int, ...]
    proper: bool
    same_rank: bool


_INT = re.compile(r"[+-]?\d+")


def parse_hypergraph(text: str, n: int | None = None, allow_singletons: bool = False) -> Hypergraph:
    """Parse the edge-list format.

    Optional header ``n <count>`` on the first content line; then one edge per
    line as whitespace-separated vertex ids. Lines starting with ``#`` are
    comments and blank lines are skipped. Without a header (or ``n``
    argument) the vertex count is the largest id seen.
    """
    declared = n
    edges: list[tuple[int, ...]] = []
    edge_lines: dict[tuple[int, ...], int] = {}
    first_content = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if first_content and tokens[0] == "n":
            first_content = False
            if len(tokens) != 2 or not _INT.fullmatch(tokens[1]) or int(tokens[1]) < 0:
                raise ParseError(f"bad header {line!r}, expected 'n <count>'", lineno)
            header_n = int(tokens[1])
            if declared is not None and declared != header_n:
                raise ParseError(f"header declares n={header_n} but n={declared} was requested", lineno)
            declared = header_n
            continue
        first_content = False
        for tok in tokens:
            if not _INT.fullmatch(tok):
                raise ParseError(f"non-integer token {tok!r}", lineno)
        edge = tuple(int(t) for t in tokens)
        if any(v < 1 for v in edge):
            raise ParseError(f"vertex id < 1 in edge {list(edge)}", lineno)
        if declared is not None and any(v > declared for v in edge):
            raise ParseError(f"vertex id > n={declared} in edge {list(edge)}", lineno)
        if len(set(edge)) != len(edge):
            raise ParseError(f"edge {list(edge)} repeats a vertex", lineno)
        if len(edge) < (1 if allow_singletons else 2):
            raise ParseError(f"edge {list(edge)} has fewer than 2 vertices", lineno)
        key = tuple(sorted(edge))
        if key in edge_lines:
            raise ParseError(f"duplicate edge {list(key)} (first seen on line {edge_lines[key]})", lineno)
        edge_lines[key] = lineno
        edges.append(edge)
    if declared is None:
        declared = max((max(e) for e in edges), default=0)
    return Hypergraph(declared, tuple(edges), allow_singletons)


def read_hypergraph(path, allow_singletons: bool = False) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read(), allow_singletons=allow_singletons)


def serialize_hypergraph(H: Hypergraph) -> str:
    """Canonical edge-list text: header, then edges sorted lexicographically."""
    lines = [f"n {H.n}"]
    lines += [" ".join(map(str, e)) for e in sorted(H.edges)]
    return "\n".join(lines) + "\n"


def degree_profile(H: Hypergraph) -> DegreeProfile:
    d = H.degrees
    if H.n == 0:
        return DegreeProfile((), 0, 0, Fraction(0))
    return DegreeProfile(d, max(d), min(d), Fraction(sum(len(e) for e in H.edges), H.n))


def rank_corank(H: Hypergraph) -> tuple[int, int]:
    if not H.edges:
        raise HypergraphError("rank and co-rank are undefined for an edgeless hypergraph")
    sizes = [len(e) for e in H.edges]
    return max(sizes), min(sizes)


def is_uniform(H: Hypergraph) -> bool:
    return len({len(e) for e in H.edges}) <= 1


def is_regular(H: Hypergraph) -> bool:
    return len(set(H.degrees)) <= 1


def connected_components(H: Hypergraph) -> list[list[int]]:
    """Vertex classes of the shared-edge walk relation, each sorted, ordered by smallest vertex."""
    parent = list(range(H.n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in H.edges:
        root = find(e[0])
        for v in e[1:]:
            rv = find(v)
            if rv != root:
                if rv < root:
                    root, rv = rv, root
                parent[rv] = root
    groups: dict[int, list[int]] = {}
    for v in H.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def adjacency_digraph(H: Hypergraph) -> AdjacencyDigraph:
    """Digraph of the nonzero pattern of the adjacency tensor.

    (i, j) is an arc iff i != j lie in a common edge. Self-loops that the
    tensor pattern also produces for padded edges are omitted; they play no
    role in strong connectivity.
    """
    arcs = set()
    for e in H.edges:
        for i in e:
            for j in e:
                if i != j:
                    arcs.add((i, j))
    return AdjacencyDigraph(H.n, frozenset(arcs))


def strongly_connected_components(G: AdjacencyDigraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components are returned sorted internally."""
    succ = G.successors()
    index = [0] * (G.n + 1)
    low = [0] * (G.n + 1)
    visited = [False] * (G.n + 1)
    on_stack = [False] * (G.n + 1)
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 1
    for root in range(1, G.n + 1):
        if visited[root]:
            continue
        work = [(root, 0)]
        visited[root] = True
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            if pos < len(succ[v]):
                work[-1] = (v, pos + 1)
                w = succ[v][pos]
                if not visited[w]:
                    visited[w] = True
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return sorted(comps, key=lambda c: c[0])


def is_weakly_irreducible(H: Hypergraph) -> bool:
    if H.n == 0:
        raise HypergraphError("weak irreducibility needs at least one vertex")
    return len(strongly_connected_components(adjacency_digraph(H))) == 1


def is_connected(H: Hypergraph) -> bool:
    return len(connected_components(H)) == 1


def proper_sub_hypergraph(H: Hypergraph, keep_vertices: Iterable[int],
                          keep_edges: Iterable[Iterable[int]]) -> SubHypergraph:
    """Sub-hypergraph on ``keep_vertices`` with edge set ``keep_edges``.

    The result is relabelled to consecutive ids; ``proper`` and ``same_rank``
    report whether it meets the hypotheses of strict spectral monotonicity.
    """
    verts = tuple(sorted(set(keep_vertices)))
    vset = set(verts)
    for v in verts:
        if not 1 <= v <= H.n:
            raise HypergraphError(f"vertex {v} not in H")
    parent_edges = set(H.edges)
    kept = []
    for edge in keep_edges:
        e = tuple(sorted(edge))
        if e not in parent_edges:
            raise HypergraphError(f"edge {list(e)} is not an edge of H")
        if not set(e) <= vset:
            raise HypergraphError(f"edge {list(e)} is not within the kept vertices")
        kept.append(e)
    if len(set(kept)) != len(kept):
        raise HypergraphError("keep_edges lists an edge twice")
    relabel = {v: t for t, v in enumerate(verts, start=1)}
    G = Hypergraph(len(verts), tuple(tuple(relabel[v] for v in e) for e in kept), H.allow_singletons)
    proper = len(verts) < H.n or len(kept) < H.m
    same_rank = bool(kept) and bool(H.edges) and G.rank == H.rank
    return SubHypergraph(G, verts, proper, same_rank)


def induced_component(H: Hypergraph, vertices: Iterable[int]) -> SubHypergraph:
    """Sub-hypergraph on a union of components, keeping every edge inside it."""
    vset = set(vertices)
    return proper_sub_hypergraph(H, vset, [e for e in H.edges if set(e) <= vset])
