"""Pure-numpy fallback for the edge-major tensor contraction.

Accumulation order matches the compiled kernel exactly (prefix/suffix
products per edge, edges processed in order), so both produce
bit-identical output.
"""

from __future__ import annotations

import numpy as np

COMPILED = False


def contract(edge_idx: np.ndarray, weights: np.ndarray, x: np.ndarray, out: np.ndarray):
    """out[i] += sum over edges e containing i of w_e * prod_{j in e, j != i} x_j."""
    m, k = edge_idx.shape
    if m == 0:
        return
    X = x[edge_idx]  # (m, k)
    pref = np.ones_like(X)
    np.cumprod(X[:, :-1], axis=1, out=pref[:, 1:])
    suff = np.ones_like(X)
    np.cumprod(X[:, :0:-1], axis=1, out=suff[:, -2::-1])
    contrib = (weights[:, None] * pref) * suff
    np.add.at(out, edge_idx, contrib)
