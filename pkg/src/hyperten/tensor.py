"""Adjacency, Laplacian and signless Laplacian tensors of a hypergraph.

Two regimes live here. The implicit operators evaluate ``T x^{k-1}`` straight
from the edge list in O(sum |e|) work and never build the tensor; they run in
float64, or in exact rationals when handed ``Fraction``/``int`` input. The
dense tensors hold every entry as a ``Fraction`` and serve as the brute-force
oracle on small instances.

Vectors are 0-based arrays (``x[v-1]`` belongs to vertex ``v``). Dense tensor
indices are 0-based as well; the text dump is 1-based.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .hypergraph import Hypergraph, HypergraphError

__all__ = [
    "DEFAULT_BUDGET",
    "DenseBudgetError",
    "HypergraphTensor",
    "DenseTensor",
    "DiagonalMatrix",
    "Residual",
    "adjacency_apply",
    "laplacian_apply",
    "signless_apply",
    "adjacency_form",
    "adjacency_entry",
    "dense_adjacency",
    "dense_laplacian",
    "dense_signless",
    "dense_apply",
    "two_sided_product",
    "diag_similarity",
    "principal_subtensor",
    "eigen_residual",
    "power_vector",
]

DEFAULT_BUDGET = 10**7
_KINDS = ("a", "l", "q")


class DenseBudgetError(ValueError):
    """Dense tensor would exceed the entry budget."""


def _is_exact(x) -> bool:
    if isinstance(x, np.ndarray) and x.dtype != object:
        return x.dtype.kind in "iub"
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in x)


def _as_exact(x) -> np.ndarray:
    return np.array([Fraction(v) for v in x], dtype=object)


def power_vector(x, p: int) -> np.ndarray:
    """Componentwise power ``x^{[p]}``."""
    if _is_exact(x):
        return np.array([v**p for v in _as_exact(x)], dtype=object)
    return np.asarray(x, dtype=float) ** p


class HypergraphTensor:
    """Implicit adjacency (``"a"``), Laplacian (``"l"``) or signless Laplacian (``"q"``) tensor.

    ``order`` defaults to the rank of ``H``. A larger order gives the tensor of
    ``H`` viewed as a block of a bigger hypergraph of that rank; this is how
    per-component solves reuse the global order.
    """

    def __init__(self, H: Hypergraph, kind: str = "a", order: int | None = None):
        if kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
        if not H.edges:
            raise HypergraphError("tensor apply is undefined for an edgeless hypergraph")
        k = H.rank if order is None else order
        if k < H.rank:
            raise ValueError(f"order {k} below the rank {H.rank}")
        self.H = H
        self.kind = kind
        self.order = k
        self.dim = H.n
        r = H.rank
        idx = np.full((H.m, r), H.n, dtype=np.intp)
        for t, e in enumerate(H.edges):
            idx[t, : len(e)] = [v - 1 for v in e]
        self._idx = idx
        self._mask = idx < H.n
        self._pad = (k - np.array([len(e) for e in H.edges], dtype=np.intp))[:, None]
        self._deg = np.array(H.degrees, dtype=float)

    def __repr__(self):
        return f"HypergraphTensor(kind={self.kind!r}, order={self.order}, n={self.dim}, m={self.H.m})"

    def __call__(self, x) -> np.ndarray:
        return self.apply(x)

    def apply(self, x) -> np.ndarray:
        """Return ``T x^{k-1}``."""
        if len(x) != self.dim:
            raise ValueError(f"vector length {len(x)} != {self.dim}")
        if _is_exact(x):
            return self._apply_exact(_as_exact(x))
        x = np.asarray(x, dtype=float)
        adj = self._adjacency_float(x)
        if self.kind == "a":
            return adj
        diag = self._deg * x ** (self.order - 1)
        return diag - adj if self.kind == "l" else diag + adj

    def _adjacency_float(self, x: np.ndarray) -> np.ndarray:
        k = self.order
        xe = np.append(x, 1.0)[self._idx]
        ones = np.ones((xe.shape[0], 1))
        # product over e minus the current position, without dividing by x_i
        left = np.cumprod(np.hstack([ones, xe[:, :-1]]), axis=1)
        right = np.cumprod(np.hstack([ones, xe[:, :0:-1]]), axis=1)[:, ::-1]
        others = left * right
        padded = np.where(self._mask, xe ** self._pad, 0.0)
        total = padded.sum(axis=1, keepdims=True)
        terms = (self._pad * others * padded + others * total) / k
        return np.bincount(self._idx[self._mask], weights=terms[self._mask], minlength=self.dim)

    def _apply_exact(self, x: np.ndarray) -> np.ndarray:
        k = self.order
        out = [Fraction(0)] * self.dim
        for e in self.H.edges:
            p = k - len(e)
            total = sum(x[j - 1] ** p for j in e)
            for i in e:
                others = math.prod((x[j - 1] for j in e if j != i), start=Fraction(1))
                out[i - 1] += Fraction(p * others * x[i - 1] ** p + others * total, k)
        if self.kind != "a":
            sign = -1 if self.kind == "l" else 1
            out = [d * x[i] ** (k - 1) + sign * out[i] for i, d in enumerate(self.H.degrees)]
        return np.array(out, dtype=object)

    def form(self, x):
        """``x^T (T x^{k-1})``."""
        return sum(a * b for a, b in zip(x, self.apply(x)))


def adjacency_apply(H: Hypergraph, x, order: int | None = None) -> np.ndarray:
    return HypergraphTensor(H, "a", order)(x)


def laplacian_apply(H: Hypergraph, x, order: int | None = None) -> np.ndarray:
    return HypergraphTensor(H, "l", order)(x)


def signless_apply(H: Hypergraph, x, order: int | None = None) -> np.ndarray:
    return HypergraphTensor(H, "q", order)(x)


def adjacency_form(H: Hypergraph, x, order: int | None = None):
    """``A x^k`` summed edge by edge: each edge contributes ``x^e * sum_{j in e} x_j^{k-|e|}``."""
    if not H.edges:
        return Fraction(0) if _is_exact(x) else 0.0
    k = H.rank if order is None else order
    if _is_exact(x):
        x = _as_exact(x)
        return sum((math.prod((x[v - 1] for v in e), start=Fraction(1))
                    * sum(x[j - 1] ** (k - len(e)) for j in e)) for e in H.edges)
    x = np.asarray(x, dtype=float)
    parts = (x[np.subtract(e, 1)] for e in H.edges)
    return float(sum(np.prod(xe) * np.sum(xe ** (k - len(xe))) for xe in parts))


# --------------------------------------------------------------------------
# dense tensors


@dataclass(eq=False)
class DenseTensor:
    """Order-``order``, dimension-``dim`` tensor, flat row-major list of entries."""

    order: int
    dim: int
    entries: list

    @classmethod
    def zeros(cls, order: int, dim: int, budget: int = DEFAULT_BUDGET) -> "DenseTensor":
        if order < 1:
            raise ValueError("order must be at least 1")
        size = dim**order
        if size > budget:
            raise DenseBudgetError(f"dense tensor of order {order} and dimension {dim} has "
                                   f"{size} entries, over the budget of {budget}")
        return cls(order, dim, [Fraction(0)] * size)

    @property
    def size(self) -> int:
        return len(self.entries)

    def flat_index(self, idx: Sequence[int]) -> int:
        if len(idx) != self.order:
            raise IndexError(f"expected {self.order} indices, got {len(idx)}")
        f = 0
        for i in idx:
            if not 0 <= i < self.dim:
                raise IndexError(f"index {i} out of range for dimension {self.dim}")
            f = f * self.dim + i
        return f

    def unflatten(self, f: int) -> tuple[int, ...]:
        idx = []
        for _ in range(self.order):
            f, r = divmod(f, self.dim)
            idx.append(r)
        return tuple(reversed(idx))

    def __getitem__(self, idx):
        return self.entries[self.flat_index(idx)]

    def __setitem__(self, idx, value):
        self.entries[self.flat_index(idx)] = value

    def nonzeros(self) -> Iterator[tuple[tuple[int, ...], object]]:
        for f, v in enumerate(self.entries):
            if v != 0:
                yield self.unflatten(f), v

    def nnz(self) -> int:
        return sum(1 for v in self.entries if v != 0)

    def copy(self) -> "DenseTensor":
        return DenseTensor(self.order, self.dim, list(self.entries))

    def _check_like(self, other: "DenseTensor"):
        if (self.order, self.dim) != (other.order, other.dim):
            raise ValueError("tensor shapes differ")

    def __eq__(self, other):
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return (self.order, self.dim) == (other.order, other.dim) and self.entries == other.entries

    def __neg__(self):
        return DenseTensor(self.order, self.dim, [-v for v in self.entries])

    def __add__(self, other):
        self._check_like(other)
        return DenseTensor(self.order, self.dim, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_like(other)
        return DenseTensor(self.order, self.dim, [a - b for a, b in zip(self.entries, other.entries)])

    def __call__(self, x) -> np.ndarray:
        return dense_apply(self, x)

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array(self.entries, dtype=dtype).reshape((self.dim,) * self.order)

    def is_symmetric(self) -> bool:
        """True iff every nonzero entry is repeated at all rearrangements of its index."""
        for idx, v in self.nonzeros():
            if any(self[p] != v for p in _distinct_permutations(idx)):
                return False
        return True

    def dump(self) -> str:
        """One line per nonzero, ``i1 ... ik p/q``, 1-based, lexicographic."""
        lines = []
        for idx, v in self.nonzeros():
            v = Fraction(v)
            val = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
            lines.append(" ".join(str(i + 1) for i in idx) + " " + val)
        return "\n".join(lines) + ("\n" if lines else "")


def _distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of a multiset, lexicographic."""
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    yield from rec()


def adjacency_entry(H: Hypergraph, idx: Sequence[int], order: int | None = None) -> Fraction:
    """Adjacency tensor entry at a 0-based index tuple, evaluated from the definition.

    A tuple whose support is an edge of size ``k`` gets ``1/(k-1)!``; a tuple
    whose support is an edge ``e`` with ``|e| = s < k``, one vertex repeated
    ``k-s+1`` times and the others once, gets ``(k-s+1)!/k!``; anything else 0.
    """
    k = H.rank if order is None else order
    if len(idx) != k:
        raise ValueError(f"expected {k} indices")
    support = tuple(sorted({i + 1 for i in idx}))
    if support not in _edge_set(H):
        return Fraction(0)
    s = len(support)
    if s == k:
        return Fraction(1, math.factorial(k - 1))
    mult = sorted(Counter(idx).values())
    if mult == [1] * (s - 1) + [k - s + 1]:
        return Fraction(math.factorial(k - s + 1), math.factorial(k))
    return Fraction(0)


def _edge_set(H: Hypergraph) -> frozenset:
    return frozenset(H.edges)


def dense_adjacency(H: Hypergraph, order: int | None = None, budget: int = DEFAULT_BUDGET) -> DenseTensor:
    """Exact adjacency tensor, built by placing each edge's weight on all its arrangements."""
    if not H.edges:
        raise HypergraphError("adjacency tensor is undefined for an edgeless hypergraph")
    k = H.rank if order is None else order
    if k < H.rank:
        raise ValueError(f"order {k} below the rank {H.rank}")
    T = DenseTensor.zeros(k, H.n, budget)
    for e in H.edges:
        s = len(e)
        zero_based = [v - 1 for v in e]
        if s == k:
            w = Fraction(1, math.factorial(k - 1))
            for p in _distinct_permutations(zero_based):
                T[p] = w
            continue
        w = Fraction(math.factorial(k - s + 1), math.factorial(k))
        for j in zero_based:
            multiset = [j] * (k - s + 1) + [v for v in zero_based if v != j]
            for p in _distinct_permutations(multiset):
                T[p] = w
    return T


def _with_degrees(H: Hypergraph, A: DenseTensor, sign: int) -> DenseTensor:
    T = A.copy() if sign > 0 else -A
    for v, d in enumerate(H.degrees):
        T[(v,) * T.order] += d
    return T


def dense_laplacian(H: Hypergraph, order: int | None = None, budget: int = DEFAULT_BUDGET) -> DenseTensor:
    """``D - A`` with ``D`` the diagonal degree tensor."""
    return _with_degrees(H, dense_adjacency(H, order, budget), -1)


def dense_signless(H: Hypergraph, order: int | None = None, budget: int = DEFAULT_BUDGET) -> DenseTensor:
    """``D + A``."""
    return _with_degrees(H, dense_adjacency(H, order, budget), +1)


def dense_apply(T: DenseTensor, x) -> np.ndarray:
    """Brute-force contraction ``(T x^{k-1})_i = sum a_{i i2..ik} x_{i2}..x_{ik}``."""
    if len(x) != T.dim:
        raise ValueError(f"vector length {len(x)} != tensor dimension {T.dim}")
    exact = _is_exact(x)
    xs = list(_as_exact(x)) if exact else [float(v) for v in x]
    out = [Fraction(0) if exact else 0.0] * T.dim
    for idx, a in T.nonzeros():
        term = a if exact else float(a)
        for j in idx[1:]:
            term = term * xs[j]
        out[idx[0]] += term
    return np.array(out, dtype=object if exact else float)


@dataclass(frozen=True)
class DiagonalMatrix:
    values: tuple

    def __post_init__(self):
        if any(v == 0 for v in self.values):
            raise ValueError("diagonal matrix must be nonsingular")
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def dim(self) -> int:
        return len(self.values)

    def power(self, p: int) -> "DiagonalMatrix":
        vals = [Fraction(v) ** p if isinstance(v, (int, Fraction)) else float(v) ** p for v in self.values]
        return DiagonalMatrix(tuple(vals))

    def inverse(self) -> "DiagonalMatrix":
        return self.power(-1)

    def full(self) -> list[list]:
        n = self.dim
        zero = 0 if all(isinstance(v, (int, Fraction)) for v in self.values) else 0.0
        return [[self.values[i] if i == j else zero for j in range(n)] for i in range(n)]


def _as_matrix(M, n: int) -> np.ndarray:
    rows = M.full() if isinstance(M, DiagonalMatrix) else M
    arr = np.array([[v for v in row] for row in rows], dtype=object)
    if arr.shape != (n, n):
        raise ValueError(f"matrix shape {arr.shape} does not match dimension {n}")
    return arr


def two_sided_product(P, T: DenseTensor, Q, budget: int = DEFAULT_BUDGET) -> DenseTensor:
    """``P T Q`` with entries ``sum_j a_{j1..jk} p_{i1 j1} q_{j2 i2} .. q_{jk ik}``.

    Diagonal factors take a direct entrywise-scaling path; general matrices
    are contracted one mode at a time.
    """
    if T.size > budget:
        raise DenseBudgetError(f"tensor with {T.size} entries is over the budget of {budget}")
    n, k = T.dim, T.order
    if isinstance(P, DiagonalMatrix) and isinstance(Q, DiagonalMatrix):
        if P.dim != n or Q.dim != n:
            raise ValueError("diagonal matrix dimension does not match the tensor")
        out = DenseTensor(k, n, list(T.entries))
        for f, a in enumerate(T.entries):
            if a == 0:
                continue
            idx = out.unflatten(f)
            v = a * P.values[idx[0]]
            for i in idx[1:]:
                v = v * Q.values[i]
            out.entries[f] = v
        return out
    Pm, Qm = _as_matrix(P, n), _as_matrix(Q, n)
    arr = np.array(T.entries, dtype=object).reshape((n,) * k)
    arr = np.tensordot(Pm, arr, axes=([1], [0]))
    for mode in range(1, k):
        arr = np.moveaxis(np.tensordot(arr, Qm, axes=([mode], [0])), -1, mode)
    return DenseTensor(k, n, list(arr.reshape(-1)))


def diag_similarity(T: DenseTensor, D: DiagonalMatrix) -> DenseTensor:
    """``D^{-(k-1)} T D``, which has the same spectrum and H-spectrum as ``T``."""
    return two_sided_product(D.power(-(T.order - 1)), T, D)


def principal_subtensor(T: DenseTensor, alpha) -> DenseTensor:
    """Restriction of every index to the 1-based vertex subset ``alpha``, reindexed in sorted order."""
    keep = sorted(set(alpha))
    if not keep:
        raise ValueError("principal subtensor needs a nonempty index set")
    if keep[0] < 1 or keep[-1] > T.dim:
        raise ValueError(f"index set {keep} not within 1..{T.dim}")
    pos = [v - 1 for v in keep]
    sub = DenseTensor(T.order, len(pos), [Fraction(0)] * len(pos) ** T.order)
    for f in range(sub.size):
        sub.entries[f] = T[tuple(pos[i] for i in sub.unflatten(f))]
    return sub


@dataclass(frozen=True)
class Residual:
    """``max_i |(T x^{k-1})_i - lambda x_i^{k-1}|`` with ``x`` scaled to unit max-magnitude."""

    value: object
    norm: str = "max"

    def __float__(self):
        return float(self.value)


def eigen_residual(op, lam, x) -> Residual:
    """Eigen-equation residual of ``(lam, x)`` for an operator with an ``order`` attribute.

    Exact when ``lam`` and ``x`` are rationals and ``op`` honours exact input.
    """
    k = op.order
    exact = _is_exact(x) and isinstance(lam, (int, Fraction))
    xs = _as_exact(x) if exact else np.asarray(x, dtype=float)
    scale = max(abs(v) for v in xs) if len(xs) else 0
    if scale == 0:
        raise ValueError("eigen residual needs a nonzero vector")
    xs = np.array([v / scale for v in xs], dtype=object) if exact else xs / scale
    Tx = op(xs)
    diffs = [abs(a - lam * b ** (k - 1)) for a, b in zip(Tx, xs)]
    value = max(diffs) if exact else float(max(diffs))
    return Residual(value)
