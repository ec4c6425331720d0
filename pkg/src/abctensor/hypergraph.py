"""k-uniform hypergraphs: representation, validation, classification, UHG I/O.

A hypergraph is a frozen value: ``k`` (edge cardinality), ``n`` (vertex
count, vertices are ``0..n-1``) and a lexicographically sorted tuple of
edges, each an ascending tuple of ``k`` distinct vertex ids.  All
operations here are pure functions; instances are safe to share across
threads.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class InvalidHypergraphError(ValueError):
    """Input violates a structural invariant.

    ``edge_index`` names the offending edge in the caller's edge list
    (None when the problem is not tied to a single edge).
    """

    def __init__(self, message: str, edge_index: Optional[int] = None):
        super().__init__(message)
        self.edge_index = edge_index


class EdgeCardinalityError(InvalidHypergraphError):
    pass


class RepeatedVertexError(InvalidHypergraphError):
    pass


class VertexRangeError(InvalidHypergraphError):
    pass


class DuplicateEdgeError(InvalidHypergraphError):
    pass


class SizeCapExceededError(ValueError):
    """Desk-scale cap exceeded (canonical labeling, enumerations)."""


@dataclass(frozen=True)
class UniformHypergraph:
    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @functools.cached_property
    def degree_list(self) -> tuple[int, ...]:
        d = [0] * self.n
        for e in self.edges:
            for v in e:
                d[v] += 1
        return tuple(d)

    @functools.cached_property
    def vertex_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of its incident edges."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(ei) for ei in inc)


@dataclass(frozen=True)
class DegreeVector:
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    kind: str  # "hypertree" | "unicyclic" | "other"
    linear: bool
    girth: Optional[int]
    girth_status: str  # "exact" | "acyclic" | "undetermined"
    power_hypertree: Optional[bool]


def build(k: int, n: int, edges: Iterable[Sequence[int]]) -> UniformHypergraph:
    """Validate and normalize an edge list into a UniformHypergraph.

    Edges are stored sorted ascending and the edge list sorted
    lexicographically, so equal hypergraphs compare equal regardless of
    input order.
    """
    if k < 2:
        raise InvalidHypergraphError(f"edge cardinality k={k} must be >= 2")
    if n < k:
        raise InvalidHypergraphError(f"vertex count n={n} must be >= k={k}")
    edge_list = [tuple(e) for e in edges]
    if not edge_list:
        raise InvalidHypergraphError("edge list must be nonempty")
    seen: dict[tuple[int, ...], int] = {}
    normalized = []
    for i, e in enumerate(edge_list):
        if len(e) != k:
            raise EdgeCardinalityError(
                f"edge {i} has {len(e)} vertices, expected {k}", edge_index=i
            )
        if len(set(e)) != k:
            raise RepeatedVertexError(f"edge {i} repeats a vertex: {e}", edge_index=i)
        for v in e:
            if not (0 <= v < n):
                raise VertexRangeError(
                    f"edge {i} contains vertex {v} outside [0, {n})", edge_index=i
                )
        key = tuple(sorted(e))
        if key in seen:
            raise DuplicateEdgeError(
                f"edge {i} duplicates edge {seen[key]}: {key}", edge_index=i
            )
        seen[key] = i
        normalized.append(key)
    normalized.sort()
    return UniformHypergraph(k=k, n=n, edges=tuple(normalized))


def degrees(G: UniformHypergraph) -> DegreeVector:
    d = G.degree_list
    return DegreeVector(degrees=d, max_degree=max(d), min_degree=min(d))


def is_connected(G: UniformHypergraph) -> bool:
    """Every pair of vertices joined by a path of overlapping edges."""
    seen = [False] * G.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for ei in G.vertex_edges[v]:
            for w in G.edges[ei]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
    return count == G.n


def is_linear(G: UniformHypergraph) -> bool:
    """Every two distinct edges share at most one vertex."""
    sets = [set(e) for e in G.edges]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if len(sets[i] & sets[j]) > 1:
                return False
    return True


def girth(G: UniformHypergraph, budget: int = 500_000) -> tuple[Optional[int], str]:
    """Length of a shortest cycle, or None.

    A cycle of length L >= 2 is a sequence of distinct vertices
    v_1..v_L and distinct edges e_1..e_L with {v_i, v_{i+1}} in e_i
    (indices wrapping) and cyclically non-adjacent edges disjoint.
    Returns (length, "exact"), (None, "acyclic"), or
    (None, "undetermined") when the node budget is exhausted.
    """
    sets = [set(e) for e in G.edges]
    m = len(sets)
    # Length 2: any pair of edges meeting in >= 2 vertices.
    for i in range(m):
        for j in range(i + 1, m):
            if len(sets[i] & sets[j]) >= 2:
                return 2, "exact"

    best: Optional[int] = None
    nodes = 0
    exhausted = False

    def extend(v_start, verts, edge_ids, limit):
        # verts: v_1..v_t chosen; edge_ids: e_1..e_{t-1}; try to close or grow.
        nonlocal best, nodes, exhausted
        if exhausted:
            return
        t = len(verts)
        v_cur = verts[-1]
        for ei in G.vertex_edges[v_cur]:
            if ei in edge_ids:
                continue
            nodes += 1
            if nodes > budget:
                exhausted = True
                return
            e = sets[ei]
            # Closing edge: must contain v_start; cycle length t.
            if t >= 3 and v_start in e and t <= limit:
                ok = True
                for pos, ej in enumerate(edge_ids):
                    # Closing edge has index t (1-based); adjacent to e_1 and e_{t-1}.
                    if 0 < pos < t - 2 and e & sets[ej]:
                        ok = False
                        break
                if ok:
                    if best is None or t < best:
                        best = t
                    continue
            if t >= limit:
                continue
            # Grow: next vertex in e, distinct from all chosen.
            for w in e:
                if w == v_cur or w in verts:
                    continue
                ok = True
                for pos, ej in enumerate(edge_ids):
                    # New edge index is t; non-adjacent to e_1..e_{t-2}.
                    if pos < t - 2 and e & sets[ej]:
                        ok = False
                        break
                if ok:
                    extend(v_start, verts + [w], edge_ids + [ei], limit)

    # Iterative deepening keeps the first hit minimal and bounds the search.
    for limit in range(3, m + 1):
        for v in range(G.n):
            extend(v, [v], [], limit)
            if exhausted:
                break
        if best is not None or exhausted:
            break
    if best is not None:
        return best, "exact"
    if exhausted:
        return None, "undetermined"
    return None, "acyclic"


def classify(G: UniformHypergraph, girth_budget: int = 500_000) -> StructureReport:
    """Connectivity, hypertree/unicyclic kind, linearity, girth, power flag.

    Kind detection uses the vertex-count identities (connected with
    n = m(k-1)+1 is acyclic; n = m(k-1) has exactly one cycle), which are
    exact for connected k-uniform hypergraphs.  A hypertree with k >= 3
    is the k-th power of an ordinary tree iff every edge carries at least
    k-2 vertices of degree one.
    """
    connected = is_connected(G)
    m, k, n = G.m, G.k, G.n
    if connected and n == m * (k - 1) + 1:
        kind = "hypertree"
    elif connected and n == m * (k - 1):
        kind = "unicyclic"
    else:
        kind = "other"
    linear = is_linear(G)

    if kind == "hypertree":
        g_val, g_status = None, "acyclic"
    else:
        g_val, g_status = girth(G, budget=girth_budget)

    power_flag: Optional[bool] = None
    if kind == "hypertree" and k >= 3:
        d = G.degree_list
        power_flag = all(sum(1 for v in e if d[v] == 1) >= k - 2 for e in G.edges)

    return StructureReport(
        connected=connected,
        kind=kind,
        linear=linear,
        girth=g_val,
        girth_status=g_status,
        power_hypertree=power_flag,
    )


class UhgParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_uhg(G: UniformHypergraph) -> str:
    """Serialize to the UHG v1 text format."""
    lines = [f"uhg {G.k} {G.n} {G.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in G.edges)
    return "\n".join(lines) + "\n"


def parse_uhg(text: str) -> UniformHypergraph:
    """Parse the UHG v1 text format.

    Line 1 is ``uhg <k> <n> <m>``; each of the next m lines holds k
    space-separated 0-based vertex ids.  Lines starting with ``#`` are
    comments.  Malformed input raises UhgParseError with a line number.
    """
    header = None
    header_line = 0
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "uhg":
                raise UhgParseError("expected header 'uhg <k> <n> <m>'", lineno)
            try:
                header = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise UhgParseError("non-integer field in header", lineno) from None
            header_line = lineno
            continue
        try:
            ids = [int(p) for p in line.split()]
        except ValueError:
            raise UhgParseError("non-integer vertex id", lineno) from None
        rows.append((lineno, ids))
    if header is None:
        raise UhgParseError("missing header", 1)
    k, n, m = header
    if len(rows) != m:
        raise UhgParseError(
            f"header declares {m} edges but {len(rows)} edge lines found", header_line
        )
    for lineno, ids in rows:
        if len(ids) != k:
            raise UhgParseError(f"expected {k} vertex ids, got {len(ids)}", lineno)
    try:
        return build(k, n, [ids for _, ids in rows])
    except InvalidHypergraphError as exc:
        lineno = rows[exc.edge_index][0] if exc.edge_index is not None else header_line
        raise UhgParseError(str(exc), lineno) from exc
