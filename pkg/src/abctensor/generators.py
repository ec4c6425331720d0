"""Constructors for the named hypergraph families and hypertree enumeration.

Families follow the usual naming:

* ``S_{m,k}``            hyperstar: m pendant edges at one center.
* ``P_{m,k}``            hyperpath: consecutive edges share one vertex.
* ``C_{g,k}``            hypercycle of length g.
* ``K_n^(k)``            complete k-uniform hypergraph.
* ``G^k``                k-th power: each edge padded with fresh vertices.
* ``D_{m,a}``            double star (2-uniform).
* ``S_{m,k;a_1..a_k}``   a_i pendant edges at vertex i of a base edge.
* ``U_{m,k,g}(a_1..a_k)``  cycle of length g with a_i pendant edges at
                           the vertices of its first edge.

Fresh vertex ids are always appended at the end, so every generator is
reproducible byte for byte.
"""

from __future__ import annotations

import math
import random
from itertools import combinations
from typing import Sequence

from .canon import canonical_code
from .hypergraph import UniformHypergraph, build


class BudgetExceededError(ValueError):
    """Requested size exceeds the configured desk-scale budget."""


def attach_pendant_edge(G: UniformHypergraph, v: int) -> UniformHypergraph:
    """Add one new edge {v, n, n+1, ..., n+k-2} on k-1 fresh vertices."""
    if not (0 <= v < G.n):
        raise ValueError(f"vertex {v} outside [0, {G.n})")
    new_edge = (v,) + tuple(range(G.n, G.n + G.k - 1))
    return build(G.k, G.n + G.k - 1, list(G.edges) + [new_edge])


def hyperstar(m: int, k: int) -> UniformHypergraph:
    """S_{m,k}: m edges through a common center, n = m(k-1)+1."""
    if m < 1 or k < 2:
        raise ValueError("hyperstar needs m >= 1 and k >= 2")
    edges = [(0,) + tuple(range(1 + i * (k - 1), 1 + (i + 1) * (k - 1))) for i in range(m)]
    return build(k, m * (k - 1) + 1, edges)


def hyperpath(m: int, k: int) -> UniformHypergraph:
    """P_{m,k}: consecutive edges share exactly one vertex."""
    if m < 1 or k < 2:
        raise ValueError("hyperpath needs m >= 1 and k >= 2")
    edges = [tuple(range(i * (k - 1), i * (k - 1) + k)) for i in range(m)]
    return build(k, m * (k - 1) + 1, edges)


def hypercycle(g: int, k: int) -> UniformHypergraph:
    """C_{g,k}: cycle of g edges, n = g(k-1); consecutive edges share one
    vertex (two when g = 2, where the wraparound identifies both ends)."""
    if g < 2 or k < 3:
        raise ValueError("hypercycle needs g >= 2 and k >= 3")
    n = g * (k - 1)
    edges = []
    for i in range(g):
        edges.append(tuple((i * (k - 1) + j) % n for j in range(k)))
    return build(k, n, edges)


def cycle_graph(g: int) -> UniformHypergraph:
    """Ordinary cycle on g vertices (2-uniform)."""
    if g < 3:
        raise ValueError("cycle_graph needs g >= 3")
    return build(2, g, [(i, (i + 1) % g) for i in range(g)])


def complete(n: int, k: int, max_edges: int = 200_000) -> UniformHypergraph:
    """K_n^(k): all k-subsets of [n] as edges."""
    if not (2 <= k < n):
        raise ValueError("complete needs n > k >= 2")
    if math.comb(n, k) > max_edges:
        raise BudgetExceededError(f"complete({n},{k}) has {math.comb(n, k)} edges")
    return build(k, n, [tuple(c) for c in combinations(range(n), k)])


def power(G: UniformHypergraph, k: int) -> UniformHypergraph:
    """k-th power: each edge gains k-r fresh degree-1 vertices (r = G.k).

    For k == G.k the hypergraph is returned unchanged.
    """
    r = G.k
    if k < r:
        raise ValueError(f"power target k={k} must be >= edge cardinality {r}")
    if k == r:
        return G
    edges = []
    nxt = G.n
    for e in G.edges:
        edges.append(e + tuple(range(nxt, nxt + k - r)))
        nxt += k - r
    return build(k, nxt, edges)


def double_star(m: int, a: int) -> UniformHypergraph:
    """D_{m,a}: centers of S_{a,2} and S_{m-1-a,2} joined by an edge."""
    if m < 3 or not (1 <= a <= (m - 1) / 2):
        raise ValueError(f"double_star needs m >= 3 and 1 <= a <= (m-1)/2, got m={m}, a={a}")
    b = m - 1 - a
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return build(2, 2 + a + b, edges)


def s_composition(m: int, k: int, a: Sequence[int]) -> UniformHypergraph:
    """S_{m,k;a_1..a_k}: a_i pendant edges at vertex i of a base edge."""
    a = tuple(a)
    if len(a) != k:
        raise ValueError(f"composition must have k={k} entries, got {len(a)}")
    if any(x < 0 for x in a):
        raise ValueError("composition entries must be >= 0")
    if sum(a) != m - 1:
        raise ValueError(f"composition must sum to m-1={m - 1}, got {sum(a)}")
    G = build(k, k, [tuple(range(k))])
    for v in range(k):
        for _ in range(a[v]):
            G = attach_pendant_edge(G, v)
    return G


def unicyclic_family(m: int, k: int, g: int, a: Sequence[int]) -> UniformHypergraph:
    """U_{m,k,g}(a_1..a_k): hypercycle of length g with a_i pendant edges
    at vertex i of its first edge (vertices 1 and k are the cycle joints)."""
    if g not in (2, 3):
        raise ValueError("g must be 2 or 3")
    if k < 3:
        raise ValueError("k must be >= 3")
    a = tuple(a)
    if len(a) != k or any(x < 0 for x in a):
        raise ValueError(f"composition must have k={k} nonnegative entries")
    if sum(a) != m - g:
        raise ValueError(f"composition must sum to m-g={m - g}, got {sum(a)}")
    G = hypercycle(g, k)
    # Edge 0 of C_{g,k} is (0, 1, ..., k-1) with joints 0 and k-1.
    for v in range(k):
        for _ in range(a[v]):
            G = attach_pendant_edge(G, v)
    return G


def unicyclic_graph(m: int, g: int) -> UniformHypergraph:
    """U_{m,g}: ordinary cycle of length g with m-g pendant edges at one
    cycle vertex (2-uniform)."""
    if g < 3 or m < g:
        raise ValueError("unicyclic_graph needs g >= 3 and m >= g")
    G = cycle_graph(g)
    for _ in range(m - g):
        G = attach_pendant_edge(G, 0)
    return G


def t_family(m: int, idx: int) -> UniformHypergraph:
    """The four 3-uniform hypertrees competing just below S_{m,3;m-3,1,1}.

    idx 1: S_{m,3;m-4,2,1} (m >= 6).
    idx 2: S_{m-1,3;m-4,1,1} plus a pendant edge at a pendant vertex of a
           pendant edge at the degree-(m-3) vertex (m >= 5).
    idx 3: cube of D_{m-2,1} plus one pendant edge at each of the two
           pendant vertices of the pendant edge at the degree-2 center
           (m >= 5).
    idx 4: S_{m-1,3;m-4,1,1} plus a pendant edge at a pendant vertex of
           the pendant edge at a degree-2 vertex (m >= 5).
    """
    if idx == 1:
        if m < 6:
            raise ValueError("t_family idx 1 needs m >= 6")
        return s_composition(m, 3, (m - 4, 2, 1))
    if idx not in (2, 3, 4):
        raise ValueError("idx must be in {1,2,3,4}")
    if m < 5:
        raise ValueError(f"t_family idx {idx} needs m >= 5")
    if idx == 2:
        G = s_composition(m - 1, 3, (m - 4, 1, 1))
        # First pendant edge at vertex 0 is (0, 3, 4); vertex 3 is pendant.
        return attach_pendant_edge(G, 3)
    if idx == 3:
        # Built directly: hub c2=0 with m-4 pendant edges, bridge {0, c1, z},
        # edge {c1, w1, w2}, and a pendant edge at each of w1, w2.
        edges = []
        nxt = 1
        for _ in range(m - 4):
            edges.append((0, nxt, nxt + 1))
            nxt += 2
        c1, z = nxt, nxt + 1
        edges.append((0, c1, z))
        w1, w2 = nxt + 2, nxt + 3
        edges.append((c1, w1, w2))
        nxt += 4
        edges.append((w1, nxt, nxt + 1))
        edges.append((w2, nxt + 2, nxt + 3))
        return build(3, nxt + 4, edges)
    G = s_composition(m - 1, 3, (m - 4, 1, 1))
    # Pendant edge at vertex 1 (degree 2) is (1, x, x+1) with x = 3 + 2(m-4).
    x = 3 + 2 * (m - 4)
    return attach_pendant_edge(G, x)


def example_h(idx: int) -> UniformHypergraph:
    """The two worked-example hypertrees: pendant-expanded hyperstars.

    idx 1: S_{2,3} with a pendant edge added at each of its 4 pendant
    vertices (6 edges, 3-uniform).  idx 2: S_{3,4} with a pendant edge at
    each of its 9 pendant vertices (12 edges, 4-uniform).
    """
    if idx == 1:
        G = hyperstar(2, 3)
        for v in range(1, 5):
            G = attach_pendant_edge(G, v)
        return G
    if idx == 2:
        G = hyperstar(3, 4)
        for v in range(1, 10):
            G = attach_pendant_edge(G, v)
        return G
    raise ValueError("idx must be 1 or 2")


_ENUM_BUDGET = {2: 8, 3: 6, 4: 5}


def enumerate_hypertrees(
    m: int, k: int, max_m: int | None = None
) -> list[UniformHypergraph]:
    """One representative per isomorphism class of k-uniform hypertrees
    with m edges, grown by pendant-edge attachment with canonical dedupe.

    Every hypertree is reachable this way: ordering its edges by breadth
    first search from any edge, each subsequent edge meets the previous
    ones in exactly one vertex.
    """
    cap = max_m if max_m is not None else _ENUM_BUDGET.get(k, 4)
    if m > cap:
        raise BudgetExceededError(
            f"enumerate_hypertrees({m},{k}) exceeds budget m <= {cap}"
        )
    if m < 1:
        raise ValueError("m must be >= 1")
    base = build(k, k, [tuple(range(k))])
    reps = {canonical_code(base): base}
    for _ in range(m - 1):
        grown: dict[bytes, UniformHypergraph] = {}
        for G in reps.values():
            for v in range(G.n):
                H = attach_pendant_edge(G, v)
                grown.setdefault(canonical_code(H), H)
        reps = grown
    return [reps[c] for c in sorted(reps)]


def random_hypertree(m: int, k: int, seed: int) -> UniformHypergraph:
    """Seeded random hypertree built by uniform pendant-edge attachment."""
    rng = random.Random(seed)
    G = build(k, k, [tuple(range(k))])
    for _ in range(m - 1):
        G = attach_pendant_edge(G, rng.randrange(G.n))
    return G


def random_connected_hypergraph(m: int, k: int, seed: int) -> UniformHypergraph:
    """Seeded random connected k-uniform hypergraph with m edges: a random
    hypertree plus extra random edges over the existing vertex set."""
    rng = random.Random(seed)
    t = rng.randint(max(1, m - 3), m)
    G = random_hypertree(t, k, rng.randrange(2**30))
    existing = set(G.edges)
    edges = list(G.edges)
    attempts = 0
    while len(edges) < m and attempts < 10_000:
        attempts += 1
        e = tuple(sorted(rng.sample(range(G.n), k)))
        if e not in existing:
            existing.add(e)
            edges.append(e)
    return build(k, G.n, edges)
