"""Implicit symmetric tensor operators for the three edge weightings.

The order-k adjacency-style tensor of a k-uniform hypergraph never gets
materialized: each edge e carries one scalar weight and the product
``T x^{k-1}`` collapses to an edge-major sum

    (T x^{k-1})_i = sum over e containing i of w(e) * prod_{j in e, j!=i} x_j

because the (k-1)! symmetric entries cancel the 1/(k-1)! normalization.

Weight rules (d_i = vertex degrees, products/sums over the edge):

* adjacency:  1
* abc:        ((sum d_i - k) / (prod d_i)) ^ (1/k)
* randic:     (prod d_i) ^ (-1/k)
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .hypergraph import UniformHypergraph

if os.environ.get("ABCTENSOR_PURE"):
    from . import _kernels_py as _kernels
else:
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _kernels

COMPILED_KERNEL = bool(getattr(_kernels, "COMPILED", False))


class Weighting(str, enum.Enum):
    ADJACENCY = "adjacency"
    ABC = "abc"
    RANDIC = "randic"


def omega(G: UniformHypergraph, e: int) -> float:
    """(sum of degrees in edge e - k) / (product of degrees in edge e).

    Computed in exact integer arithmetic, converting to float only at the
    final division.  Always >= 0; zero iff all k degrees are 1.
    """
    d = G.degree_list
    edge = G.edges[e]
    num = sum(d[v] for v in edge) - G.k
    den = math.prod(d[v] for v in edge)
    return num / den


def edge_weight(G: UniformHypergraph, e: int, w: Weighting) -> float:
    if w is Weighting.ADJACENCY:
        return 1.0
    if w is Weighting.ABC:
        return omega(G, e) ** (1.0 / G.k)
    d = G.degree_list
    den = math.prod(d[v] for v in G.edges[e])
    return den ** (-1.0 / G.k)


@dataclass(frozen=True)
class TensorOperator:
    """Edge-weighted implicit tensor; weights cached once, then immutable."""

    G: UniformHypergraph
    weights: np.ndarray = field(repr=False)
    _edge_idx: np.ndarray = field(repr=False)

    @classmethod
    def from_weighting(cls, G: UniformHypergraph, w: Weighting) -> "TensorOperator":
        weights = np.array([edge_weight(G, e, w) for e in range(G.m)], dtype=np.float64)
        return cls(G=G, weights=weights, _edge_idx=_edge_index_array(G))

    @property
    def k(self) -> int:
        return self.G.k

    @property
    def n(self) -> int:
        return self.G.n

    def is_zero(self) -> bool:
        return bool(np.all(self.weights == 0.0))

    def scaled(self, c: float) -> "TensorOperator":
        return TensorOperator(G=self.G, weights=self.weights * c, _edge_idx=self._edge_idx)

    def apply(self, x: np.ndarray) -> np.ndarray:
        """(T x^{k-1})_i, deterministic edge-major accumulation."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.n,):
            raise ValueError(f"vector length {x.shape} does not match n={self.n}")
        out = np.zeros(self.n, dtype=np.float64)
        _kernels.contract(self._edge_idx, self.weights, x, out)
        return out

    def form(self, x: np.ndarray) -> float:
        """T x^k = x . (T x^{k-1}) = k * sum_e w(e) prod_{j in e} x_j."""
        x = np.asarray(x, dtype=np.float64)
        return float(x @ self.apply(x))


def _edge_index_array(G: UniformHypergraph) -> np.ndarray:
    arr = np.array(G.edges, dtype=np.int64).reshape(G.m, G.k)
    return np.ascontiguousarray(arr)


def apply(G: UniformHypergraph, w: Weighting, x: np.ndarray) -> np.ndarray:
    return TensorOperator.from_weighting(G, w).apply(x)


def form(G: UniformHypergraph, w: Weighting, x: np.ndarray) -> float:
    return TensorOperator.from_weighting(G, w).form(x)


def abc_index(G: UniformHypergraph) -> float:
    """(1/(k-1)!) * sum over edges of omega(e)^(1/k)."""
    k = G.k
    total = sum(omega(G, e) ** (1.0 / k) for e in range(G.m))
    return total / math.factorial(k - 1)


def k_unit(x: np.ndarray, k: int) -> np.ndarray:
    """Rescale a nonnegative vector so sum x_i^k = 1."""
    x = np.asarray(x, dtype=np.float64)
    norm = float(np.sum(x**k)) ** (1.0 / k)
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return x / norm
