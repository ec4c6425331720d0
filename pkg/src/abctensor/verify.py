"""Numeric verification suite: every bound, equality condition, and
extremal ordering becomes an interval-safe check at desk scale.

Checks never compare bare floats: spectral estimates enter as certified
brackets and closed forms as bisection enclosures, so ``violated`` is
reported only when intervals are disjoint beyond the combined
tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import closed_forms as cf
from .canon import canonical_code
from .generators import (
    attach_pendant_edge,
    double_star,
    enumerate_hypertrees,
    hypercycle,
    power,
    s_composition,
    unicyclic_family,
)
from .hypergraph import UniformHypergraph, classify, degrees
from .spectral import SolveOptions, SpectralEstimate, residual_of, spectral_radius
from .tensor import TensorOperator, Weighting, abc_index, k_unit, omega

HOLDS = "holds"
EQUALITY = "equality-attained"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

SLACK = 1e-12  # absorbs last-ulp noise in interval comparisons


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    lhs: float
    rhs: float
    margin: float
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != VIOLATED


def _interval(est: SpectralEstimate) -> tuple[float, float]:
    return est.lower - SLACK, est.upper + SLACK


def _le(a: tuple[float, float], b: tuple[float, float]) -> str:
    """Status of the claim 'a <= b' given enclosing intervals."""
    if a[1] <= b[0]:
        return HOLDS
    if a[0] > b[1]:
        return VIOLATED
    return EQUALITY  # intervals overlap: equality within tolerance


def _solve(G: UniformHypergraph, w: Weighting, opts: Optional[SolveOptions] = None):
    return spectral_radius(G, w, opts or SolveOptions())


# ----------------------------------------------------------------------
# Bound checks.


def check_edge_sum_bounds(G: UniformHypergraph, opts=None) -> CheckResult:
    """min_e (sum_{i in e} d_i - k)^(1/k) <= rho_abc <= max_e (...)^(1/k);
    both collapse to equalities iff edge degree sums are constant."""
    d = G.degree_list
    k = G.k
    sums = [sum(d[v] for v in e) - k for e in G.edges]
    lo_bound = min(sums) ** (1.0 / k)
    hi_bound = max(sums) ** (1.0 / k)
    est = _solve(G, Weighting.ABC, opts)
    ival = _interval(est)
    constant = min(sums) == max(sums)
    if ival[1] < lo_bound - SLACK or ival[0] > hi_bound + SLACK:
        status = VIOLATED
    elif constant and ival[0] <= hi_bound + SLACK and ival[1] >= lo_bound - SLACK:
        status = EQUALITY
    else:
        status = HOLDS
    return CheckResult(
        name="edge-sum-bounds",
        status=status,
        lhs=est.rho,
        rhs=hi_bound,
        margin=min(est.rho - lo_bound, hi_bound - est.rho),
        detail=f"bounds [{lo_bound:.12g}, {hi_bound:.12g}], edge sums constant: {constant}",
    )


def check_regular_corollary(G: UniformHypergraph, opts=None) -> CheckResult:
    """(k*delta - k)^(1/k) <= rho_abc <= (k*Delta - k)^(1/k); equalities iff regular."""
    dv = degrees(G)
    k = G.k
    lo_bound = (k * dv.min_degree - k) ** (1.0 / k)
    hi_bound = (k * dv.max_degree - k) ** (1.0 / k)
    est = _solve(G, Weighting.ABC, opts)
    ival = _interval(est)
    regular = dv.min_degree == dv.max_degree
    if ival[1] < lo_bound - SLACK or ival[0] > hi_bound + SLACK:
        status = VIOLATED
    elif regular:
        status = EQUALITY
    else:
        status = HOLDS
    return CheckResult(
        name="regular-corollary",
        status=status,
        lhs=est.rho,
        rhs=hi_bound,
        margin=min(est.rho - lo_bound, hi_bound - est.rho),
        detail=f"bounds [{lo_bound:.12g}, {hi_bound:.12g}], regular: {regular}",
    )


def check_mean_bound(G: UniformHypergraph, opts=None) -> CheckResult:
    """rho_abc >= k! * abc_index / n, equality iff the per-vertex sums of
    omega^(1/k) over incident edges are constant."""
    k = G.k
    bound = math.factorial(k) * abc_index(G) / G.n
    est = _solve(G, Weighting.ABC, opts)
    ival = _interval(est)
    row = [0.0] * G.n
    for ei, e in enumerate(G.edges):
        w = omega(G, ei) ** (1.0 / k)
        for v in e:
            row[v] += w
    constant_rows = max(row) - min(row) <= 1e-12 * max(1.0, max(row))
    if ival[1] < bound - SLACK:
        status = VIOLATED
    elif constant_rows:
        status = EQUALITY
    else:
        status = HOLDS
    return CheckResult(
        name="mean-bound",
        status=status,
        lhs=est.rho,
        rhs=bound,
        margin=est.rho - bound,
        detail=f"constant row sums: {constant_rows}",
    )


def check_delta_bound(G: UniformHypergraph, opts=None) -> CheckResult:
    """rho_abc <= ((Delta-1)/Delta)^(1/k) * rho_adj (Delta >= 2), equality
    iff every edge has omega = (Delta-1)/Delta."""
    dv = degrees(G)
    if dv.max_degree < 2:
        raise ValueError("delta bound requires maximum degree >= 2")
    k = G.k
    factor = ((dv.max_degree - 1) / dv.max_degree) ** (1.0 / k)
    abc_est = _solve(G, Weighting.ABC, opts)
    adj_est = _solve(G, Weighting.ADJACENCY, opts)
    lhs = _interval(abc_est)
    rhs = (factor * adj_est.lower - SLACK, factor * adj_est.upper + SLACK)
    target = (dv.max_degree - 1) / dv.max_degree
    all_at_cap = all(abs(omega(G, e) - target) <= 1e-12 for e in range(G.m))
    status = _le(lhs, rhs)
    if status != VIOLATED:
        status = EQUALITY if all_at_cap else HOLDS
    return CheckResult(
        name="delta-bound",
        status=status,
        lhs=abc_est.rho,
        rhs=factor * adj_est.rho,
        margin=factor * adj_est.rho - abc_est.rho,
        detail=f"all omega at (Delta-1)/Delta: {all_at_cap}",
    )


def check_power_relation(G: UniformHypergraph, k: int, opts=None) -> CheckResult:
    """rho_abc(G^k) equals rho_abc(G)^(r/k)."""
    r = G.k
    base = _solve(G, Weighting.ABC, opts)
    lifted = _solve(power(G, k), Weighting.ABC, opts)
    expo = r / k
    lhs = (max(base.lower, 0.0) ** expo - SLACK, max(base.upper, 0.0) ** expo + SLACK)
    rhs = _interval(lifted)
    overlap = lhs[0] <= rhs[1] and rhs[0] <= lhs[1]
    status = HOLDS if overlap else VIOLATED
    return CheckResult(
        name="power-relation",
        status=status,
        lhs=lifted.rho,
        rhs=base.rho**expo,
        margin=abs(lifted.rho - base.rho**expo),
        detail=f"r={r}, k={k}",
    )


def check_randic_unit(G: UniformHypergraph, opts=None) -> CheckResult:
    """rho of the randic tensor is 1; x_i = d_i^(1/k) is an exact eigenvector."""
    est = _solve(G, Weighting.RANDIC, opts)
    d = np.array(G.degree_list, dtype=float)
    x = k_unit(d ** (1.0 / G.k), G.k)
    res = residual_of(TensorOperator.from_weighting(G, Weighting.RANDIC), 1.0, x)
    ival = _interval(est)
    ok = ival[0] <= 1.0 <= ival[1] and res <= 1e-10
    return CheckResult(
        name="randic-unit",
        status=HOLDS if ok else VIOLATED,
        lhs=est.rho,
        rhs=1.0,
        margin=abs(est.rho - 1.0),
        detail=f"explicit eigenvector residual {res:.3e}",
    )


# ----------------------------------------------------------------------
# Extremal scans.


def _scan_table(entries):
    lines = [f"{rho:.12f}  m={G.m}" for rho, G in entries]
    return "; ".join(lines)


def extremal_scan_hypertrees(m: int, k: int, opts=None) -> list[CheckResult]:
    """Enumerate hypertrees of size m, rank abc radii, and confirm:
    unique max S_{m,k}; unique second max D_{m,1}^k (m >= 4); unique
    non-power max S_{m,k;m-3,1,1} (k >= 3, m >= 4); maxima match their
    closed forms; consecutive ranks gap > 1e-9."""
    from .generators import BudgetExceededError

    try:
        trees = enumerate_hypertrees(m, k)
    except BudgetExceededError as exc:
        return [
            CheckResult(
                name=f"hypertree-scan-max[m={m},k={k}]",
                status=INCONCLUSIVE,
                lhs=float("nan"),
                rhs=float("nan"),
                margin=float("nan"),
                detail=str(exc),
            )
        ]
    solved = [(spectral_radius(T, Weighting.ABC, opts or SolveOptions()), T) for T in trees]
    ranked = sorted(solved, key=lambda p: -p[0].rho)
    results = []
    table = "; ".join(f"{e.rho:.12f}" for e, _ in ranked)

    star_code = canonical_code(s_composition(m, k, (m - 1,) + (0,) * (k - 1)))
    top_est, top_tree = ranked[0]
    top_is_star = canonical_code(top_tree) == star_code
    closed = cf.rho_abc_hyperstar(m, k)
    gap_ok = len(ranked) < 2 or top_est.rho - ranked[1][0].rho > 1e-9
    ok = top_is_star and abs(top_est.rho - closed) <= max(1e-9, 10 * top_est.width) and gap_ok
    results.append(
        CheckResult(
            name=f"hypertree-scan-max[m={m},k={k}]",
            status=HOLDS if ok else VIOLATED,
            lhs=top_est.rho,
            rhs=closed,
            margin=top_est.rho - (ranked[1][0].rho if len(ranked) > 1 else 0.0),
            detail=f"classes={len(ranked)}; radii: {table}",
        )
    )

    if m >= 4 and len(ranked) >= 2:
        second_est, second_tree = ranked[1]
        ds_code = canonical_code(power(double_star(m, 1), k))
        second_ok = canonical_code(second_tree) == ds_code
        closed2 = cf.rho_abc_double_star1(m, k)
        gap2 = len(ranked) < 3 or second_est.rho - ranked[2][0].rho > 1e-9
        ok2 = second_ok and abs(second_est.rho - closed2) <= max(1e-9, 10 * second_est.width) and gap2
        results.append(
            CheckResult(
                name=f"hypertree-scan-second[m={m},k={k}]",
                status=HOLDS if ok2 else VIOLATED,
                lhs=second_est.rho,
                rhs=closed2,
                margin=(second_est.rho - ranked[2][0].rho) if len(ranked) > 2 else float("inf"),
                detail="second maximum is the lifted double star",
            )
        )

    if k >= 3 and m >= 4:
        non_power = [
            (est, T) for est, T in ranked if classify(T).power_hypertree is False
        ]
        if non_power:
            np_est, np_tree = non_power[0]
            target = canonical_code(s_composition(m, k, (m - 3, 1, 1) + (0,) * (k - 3)))
            closed3 = cf.rho_abc_s311(m, k)
            gap3 = len(non_power) < 2 or np_est.rho - non_power[1][0].rho > 1e-9
            ok3 = (
                canonical_code(np_tree) == target
                and abs(np_est.rho - closed3) <= max(1e-9, 10 * np_est.width)
                and gap3
            )
            results.append(
                CheckResult(
                    name=f"hypertree-scan-nonpower[m={m},k={k}]",
                    status=HOLDS if ok3 else VIOLATED,
                    lhs=np_est.rho,
                    rhs=closed3,
                    margin=(np_est.rho - non_power[1][0].rho)
                    if len(non_power) > 1
                    else float("inf"),
                    detail=f"non-power classes={len(non_power)}",
                )
            )
    return results


def _partitions_desc(total: int, slots: int):
    """Weakly decreasing nonnegative tuples of length `slots` summing to total."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _partitions_desc(total - first, slots - 1):
            if not rest or first >= rest[0]:
                yield (first,) + rest


def _u_compositions(total: int, k: int):
    """Compositions of `total` into k parts, one canonical representative
    per symmetry class of the attachment positions: the two cycle joints
    (first and last slot) are swappable and the middles permutable."""
    out = []
    for e1 in range(total, -1, -1):
        for e2 in range(min(e1, total - e1), -1, -1):
            for mid in _partitions_desc(total - e1 - e2, k - 2):
                out.append((e1,) + mid + (e2,))
    return out


def extremal_scan_unicyclic_family(m: int, k: int, g: int, opts=None) -> list[CheckResult]:
    """Over all compositions a of m-g, confirm the unique maximizer of
    rho_abc(U_{m,k,g}(a)) is a = (m-g, 0, ..., 0) and its value matches
    the closed form."""
    entries = []
    for a in _u_compositions(m - g, k):
        G = unicyclic_family(m, k, g, a)
        est = spectral_radius(G, Weighting.ABC, opts or SolveOptions())
        entries.append((est, a))
    ranked = sorted(entries, key=lambda p: -p[0].rho)
    top_est, top_a = ranked[0]
    want = (m - g,) + (0,) * (k - 1)
    closed = cf.rho_abc_u2(m, k) if g == 2 else cf.rho_abc_u3(m, k)
    gap_ok = len(ranked) < 2 or top_est.rho - ranked[1][0].rho > 1e-9
    ok = top_a == want and abs(top_est.rho - closed) <= max(1e-8, 10 * top_est.width) and gap_ok
    table = "; ".join(f"{e.rho:.10f}@a={a}" for e, a in ranked)
    return [
        CheckResult(
            name=f"unicyclic-scan[m={m},k={k},g={g}]",
            status=HOLDS if ok else VIOLATED,
            lhs=top_est.rho,
            rhs=closed,
            margin=(top_est.rho - ranked[1][0].rho) if len(ranked) > 1 else float("inf"),
            detail=f"members={len(ranked)}; {table}",
        )
    ]


def enumerate_small_unicyclic(m: int, k: int) -> list[UniformHypergraph]:
    """All unicyclic k-uniform hypergraphs with m edges (m small), grown
    from hypercycles by pendant-edge attachment with canonical dedupe."""
    reps: dict[bytes, UniformHypergraph] = {}
    for g in range(2, m + 1):
        G = hypercycle(g, k)
        layer = {canonical_code(G): G}
        for _ in range(m - g):
            nxt: dict[bytes, UniformHypergraph] = {}
            for H in layer.values():
                for v in range(H.n):
                    H2 = attach_pendant_edge(H, v)
                    nxt.setdefault(canonical_code(H2), H2)
            layer = nxt
        reps.update(layer)
    return [reps[c] for c in sorted(reps)]


def check_unicyclic_global_max(m: int, k: int, opts=None) -> CheckResult:
    """Scan all unicyclic shapes (small m): the maximum abc radius is
    attained exactly at U_{m,2}^(k) with value (m-1+2/m)^(1/k)."""
    shapes = enumerate_small_unicyclic(m, k)
    target = canonical_code(unicyclic_family(m, k, 2, (m - 2,) + (0,) * (k - 1)))
    closed = cf.rho_abc_u2(m, k)
    best = None
    for G in shapes:
        est = spectral_radius(G, Weighting.ABC, opts or SolveOptions())
        if best is None or est.rho > best[0].rho:
            best = (est, G)
    est, G = best
    ok = canonical_code(G) == target and abs(est.rho - closed) <= max(1e-8, 10 * est.width)
    return CheckResult(
        name=f"unicyclic-global-max[m={m},k={k}]",
        status=HOLDS if ok else VIOLATED,
        lhs=est.rho,
        rhs=closed,
        margin=abs(est.rho - closed),
        detail=f"shapes={len(shapes)}",
    )


# ----------------------------------------------------------------------
# Worked examples.


def run_worked_examples(opts=None) -> list[CheckResult]:
    """Rebuild the two pendant-expanded hyperstars, verify the univariate
    reductions of their eigen-equations, the four tabulated values, and
    the strict comparisons against hyperpath radii."""
    from .generators import example_h

    results = []
    opts = opts or SolveOptions()

    h1 = example_h(1)
    e1 = spectral_radius(h1, Weighting.ABC, opts)
    f1 = lambda t: t**3 - math.sqrt(3.0 / 4.0) * t**1.5 - 0.5  # noqa: E731
    path63 = cf.rho_abc_hyperpath(6, 3)
    vals1 = (f1(1.0), f1(path63))
    expect1 = (-0.366025, 0.07559)
    red1 = abs(f1(e1.rho)) <= 1e-6
    num1 = all(abs(v - e) <= 5e-5 for v, e in zip(vals1, expect1))
    ineq1 = e1.upper + SLACK < path63
    results.append(
        CheckResult(
            name="worked-example-1",
            status=HOLDS if (red1 and num1 and ineq1) else VIOLATED,
            lhs=e1.rho,
            rhs=path63,
            margin=path63 - e1.rho,
            detail=f"f(rho)={f1(e1.rho):.2e}; f(1)={vals1[0]:.6f}; f(path)={vals1[1]:.5f}",
        )
    )

    h2 = example_h(2)
    e2 = spectral_radius(h2, Weighting.ABC, opts)
    f2 = lambda t: t**4 - (5.0 / 8.0) ** (1.0 / 3.0) * t ** (8.0 / 3.0) - 0.5  # noqa: E731
    path124 = cf.rho_abc_hyperpath(12, 4)
    path123 = cf.rho_abc_hyperpath(12, 3)
    vals2 = (f2(1.0), f2(path124))
    expect2 = (-0.35499, 0.08894)
    red2 = abs(f2(e2.rho)) <= 1e-6
    num2 = all(abs(v - e) <= 5e-5 for v, e in zip(vals2, expect2))
    ineq2 = e2.upper + SLACK < path124
    ineq2_alt = e2.upper + SLACK < path123
    results.append(
        CheckResult(
            name="worked-example-2",
            status=HOLDS if (red2 and num2 and ineq2) else VIOLATED,
            lhs=e2.rho,
            rhs=path124,
            margin=path124 - e2.rho,
            detail=(
                f"f(rho)={f2(e2.rho):.2e}; f(1)={vals2[0]:.6f}; f(path)={vals2[1]:.5f}; "
                f"4-uniform reading holds: {ineq2}; 3-uniform reading holds: {ineq2_alt} "
                f"(the comparison target is the 4-uniform hyperpath P_12,4; the 3-uniform "
                f"reading is reported for completeness)"
            ),
        )
    )
    return results


# ----------------------------------------------------------------------
# Suite driver.


def default_suite(
    m: Optional[int] = None, k: Optional[int] = None, g: Optional[int] = None
) -> list[CheckResult]:
    """Run every check over a desk-scale grid (or a single (m, k, g))."""
    from .generators import complete, hyperpath, hyperstar

    results: list[CheckResult] = []
    ms = [m] if m else list(range(3, 9))
    ks = [k] if k else [2, 3, 4]
    gs = [g] if g else [2, 3]

    bound_graphs: list[UniformHypergraph] = []
    for mm in ms:
        for kk in ks:
            bound_graphs.append(hyperstar(mm, kk))
            bound_graphs.append(hyperpath(mm, kk))
            if kk >= 3:
                bound_graphs.append(hypercycle(mm, kk))
            if mm >= 4 and kk >= 3:
                bound_graphs.append(s_composition(mm, kk, (mm - 3, 1, 1) + (0,) * (kk - 3)))
    bound_graphs.append(complete(4, 3))
    bound_graphs.append(complete(5, 2))
    for G in bound_graphs:
        if degrees(G).max_degree >= 2:
            results.append(check_delta_bound(G))
        results.append(check_edge_sum_bounds(G))
        results.append(check_regular_corollary(G))
        results.append(check_mean_bound(G))
        results.append(check_randic_unit(G))

    for mm in ms:
        if mm >= 3:
            results.append(check_power_relation(double_star(mm, 1), max(3, max(ks))))
    for kk in ks:
        if kk >= 3:
            for mm in ms:
                if mm <= (5 if kk >= 4 else 6):
                    results.extend(extremal_scan_hypertrees(mm, kk))
                for gg in gs:
                    if gg <= mm <= 7:
                        results.extend(extremal_scan_unicyclic_family(mm, kk, gg))
    results.extend(run_worked_examples())
    return sorted(results, key=lambda r: r.name)
