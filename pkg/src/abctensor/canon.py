"""Canonical codes for small hypergraphs.

Two hypergraphs get equal codes iff they are isomorphic.  The labeling
is found by iterated color refinement plus individualization search,
with discovered automorphisms pruning equivalent branches.  Worst-case
cost is exponential; at the desk scales this package targets (n below
the configured cap) it is fast.
"""

from __future__ import annotations

from .hypergraph import SizeCapExceededError, UniformHypergraph

DEFAULT_SIZE_CAP = 64


def _refine(G: UniformHypergraph, colors: list[int]) -> list[int]:
    """Stable partition refinement; colors are canonical ranks."""
    n = G.n
    while True:
        edge_sigs = [tuple(sorted(colors[v] for v in e)) for e in G.edges]
        keys = [
            (colors[v], tuple(sorted(edge_sigs[ei] for ei in G.vertex_edges[v])))
            for v in range(n)
        ]
        rank = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [rank[keys[v]] for v in range(n)]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _cells(colors: list[int]) -> list[list[int]]:
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def _encode(G: UniformHypergraph, perm: list[int]) -> bytes:
    """Byte code of the relabeled edge list (perm maps old id -> new id)."""
    edges = sorted(tuple(sorted(perm[v] for v in e)) for e in G.edges)
    out = bytearray()
    out.extend(G.k.to_bytes(2, "big"))
    out.extend(G.n.to_bytes(2, "big"))
    out.extend(G.m.to_bytes(4, "big"))
    for e in edges:
        out.extend(e)  # vertex ids fit one byte under the size cap
    return bytes(out)


def canonical_code(G: UniformHypergraph, size_cap: int = DEFAULT_SIZE_CAP) -> bytes:
    if G.n > min(size_cap, 255):
        raise SizeCapExceededError(
            f"canonical labeling capped at {min(size_cap, 255)} vertices, got {G.n}"
        )
    n = G.n
    d = G.degree_list
    init = sorted(set(d))
    colors = _refine(G, [init.index(d[v]) for v in range(n)])

    best_code: bytes | None = None
    best_inv: list[int] = []
    autos: list[list[int]] = []

    def orbit_reaches(v: int, tried: list[int], fixed: list[int]) -> bool:
        """True if some discovered automorphism fixing `fixed` pointwise
        maps v into the already-tried candidates (closure via union-find)."""
        valid = [g for g in autos if all(g[w] == w for w in fixed)]
        if not valid:
            return False
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in valid:
            for a in range(n):
                ra, rb = find(a), find(g[a])
                if ra != rb:
                    parent[ra] = rb
        rv = find(v)
        return any(find(u) == rv for u in tried)

    def search(colors: list[int], fixed: list[int]):
        nonlocal best_code, best_inv
        cells = _cells(colors)
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            perm = [0] * n
            for new_id, v in enumerate(sorted(range(n), key=lambda v: colors[v])):
                perm[v] = new_id
            code = _encode(G, perm)
            if best_code is None or code < best_code:
                best_code = code
                best_inv = [0] * n
                for v in range(n):
                    best_inv[perm[v]] = v
            elif code == best_code:
                autos.append([best_inv[perm[v]] for v in range(n)])
            return
        tried: list[int] = []
        for v in target:
            if orbit_reaches(v, tried, fixed):
                continue
            tried.append(v)
            split = [2 * c + (1 if u == v else 0) for u, c in enumerate(colors)]
            search(_refine(G, split), fixed + [v])

    search(colors, [])
    assert best_code is not None
    return best_code
