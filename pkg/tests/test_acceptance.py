"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines alongside the pytest verdicts.
"""

import math
import time

import numpy as np
import pytest

import abctensor as ab
from abctensor import closed_forms as cf
from abctensor import generators as gen
from abctensor import verify as ver
from abctensor.spectral import spectral_radius
from abctensor.tensor import Weighting, form, k_unit
from helpers import dense_form

ABC = Weighting.ABC
ADJ = Weighting.ADJACENCY
RND = Weighting.RANDIC


def _report(tag, ok, extra=""):
    print(f"[acceptance] {tag}: {'PASS' if ok else 'FAIL'} {extra}")
    assert ok


def test_criterion_1_hyperstar_exactness():
    t0 = time.time()
    worst = 0.0
    for k in (2, 3, 4):
        for m in range(1, 13):
            est = spectral_radius(gen.hyperstar(m, k), ABC)
            worst = max(worst, abs(est.rho - (m - 1) ** (1.0 / k)))
    elapsed = time.time() - t0
    _report(
        "C1 hyperstar exactness (m 1..12, k 2..4)",
        worst <= 1e-7 and elapsed < 5.0,
        f"worst |err|={worst:.2e}, {elapsed:.2f}s",
    )


def test_criterion_2_closed_forms_vs_oracle():
    t0 = time.time()
    cases = []
    for k in (2, 3, 4):
        cases += [
            (f"double-star-1({m},{k})", cf.rho_abc_double_star1(m, k),
             gen.power(gen.double_star(m, 1), k), ABC)
            for m in range(3, 11)
        ]
        cases += [
            (f"double-star-2-adj({m},{k})", cf.rho_adj_double_star2(m, k),
             gen.power(gen.double_star(m, 2), k), ADJ)
            for m in range(5, 11)
        ]
        cases += [
            (f"hyperpath({m},{k})", cf.rho_abc_hyperpath(m, k), gen.hyperpath(m, k), ABC)
            for m in range(2, 11)
        ]
        cases += [
            (f"complete-bound({n},{k})", cf.rho_abc_complete_bound(n, k),
             gen.complete(n, k), ABC)
            for n in range(k + 1, 8)
        ]
    for k in (3, 4):
        cases += [
            (f"u2({m},{k})", cf.rho_abc_u2(m, k),
             gen.unicyclic_family(m, k, 2, (m - 2,) + (0,) * (k - 1)), ABC)
            for m in range(2, 11)
        ]
        cases += [
            (f"u3({m},{k})", cf.rho_abc_u3(m, k),
             gen.unicyclic_family(m, k, 3, (m - 3,) + (0,) * (k - 1)), ABC)
            for m in range(3, 11)
        ]
        cases += [
            (f"s311({m},{k})", cf.rho_abc_s311(m, k),
             gen.s_composition(m, k, (m - 3, 1, 1) + (0,) * (k - 3)), ABC)
            for m in range(4, 11)
        ]
    cases += [(f"t(m={m},1)", cf.rho_abc_t(m, 1), gen.t_family(m, 1), ABC) for m in range(6, 11)]
    for idx in (2, 3, 4):
        cases += [
            (f"t(m={m},{idx})", cf.rho_abc_t(m, idx), gen.t_family(m, idx), ABC)
            for m in range(5, 11)
        ]
    cases += [
        (f"s4-1111({m})", cf.rho_abc_s4_1111(m), gen.s_composition(m, 4, (m - 4, 1, 1, 1)), ABC)
        for m in range(5, 11)
    ]

    worst = ("", 0.0)
    for tag, val, G, w in cases:
        est = spectral_radius(G, w)
        rel = abs(est.rho - val) / max(1.0, abs(val))
        if rel > worst[1]:
            worst = (tag, rel)
    elapsed = time.time() - t0
    _report(
        f"C2 closed forms vs oracle ({len(cases)} cases)",
        worst[1] <= 1e-7 and elapsed < 60.0,
        f"worst rel err {worst[1]:.2e} at {worst[0]}, {elapsed:.1f}s",
    )


def test_criterion_3_randic_unit():
    graphs = []
    seed = 0
    while len(graphs) < 50:
        k = 3 if seed % 2 == 0 else 4
        m = 2 + seed % 9  # m <= 10
        graphs.append(gen.random_hypertree(m, k, seed=seed))
        seed += 1
    graphs += [
        gen.hyperstar(6, 3),
        gen.hyperpath(5, 4),
        gen.hypercycle(4, 3),
        gen.complete(5, 3),
        gen.double_star(6, 2),
        gen.power(gen.double_star(5, 1), 4),
        gen.s_composition(6, 3, (3, 1, 1)),
        gen.unicyclic_family(5, 3, 2, (3, 0, 0)),
        gen.t_family(6, 3),
        gen.example_h(1),
    ]
    worst = 0.0
    for G in graphs:
        est = spectral_radius(G, RND)
        worst = max(worst, abs(est.rho - 1.0))
    _report(
        f"C3 randic unit ({len(graphs)} graphs)", worst <= 1e-8, f"worst |rho-1|={worst:.2e}"
    )


def test_criterion_4_bound_suite():
    t0 = time.time()
    family_graphs = [
        gen.hyperstar(5, 3),
        gen.hyperstar(8, 2),
        gen.hyperpath(6, 3),
        gen.hyperpath(4, 4),
        gen.hypercycle(3, 3),
        gen.hypercycle(4, 4),
        gen.complete(4, 3),
        gen.complete(5, 2),
        gen.double_star(6, 2),
        gen.power(gen.double_star(5, 1), 3),
        gen.s_composition(6, 3, (3, 1, 1)),
        gen.s_composition(5, 4, (2, 1, 1, 0)),
        gen.unicyclic_family(5, 3, 2, (3, 0, 0)),
        gen.unicyclic_family(6, 3, 3, (1, 1, 1)),
        gen.t_family(6, 1),
        gen.t_family(7, 4),
        gen.example_h(1),
        gen.example_h(2),
    ]
    random_graphs = []
    seed = 0
    while len(random_graphs) < 100:
        k = (2, 3, 4)[seed % 3]
        m = 2 + seed % 7
        G = gen.random_connected_hypergraph(m, k, seed=seed)
        random_graphs.append(G)
        seed += 1

    statuses = {}
    for G in family_graphs + random_graphs:
        results = [
            ver.check_edge_sum_bounds(G),
            ver.check_regular_corollary(G),
            ver.check_mean_bound(G),
        ]
        if max(G.degree_list) >= 2:
            results.append(ver.check_delta_bound(G))
        for r in results:
            assert r.ok, (r.name, G.edges, r)
        statuses[id(G)] = {r.name: r.status for r in results}

    # Documented equality cases.
    eq_expect = [
        (gen.hyperstar(5, 3), "edge-sum-bounds"),
        (gen.hyperstar(5, 3), "delta-bound"),
        (gen.hypercycle(4, 3), "edge-sum-bounds"),
        (gen.hypercycle(4, 3), "delta-bound"),
        (gen.complete(4, 3), "edge-sum-bounds"),
        (gen.complete(4, 3), "regular-corollary"),
        (gen.complete(4, 3), "mean-bound"),
    ]
    checkers = {
        "edge-sum-bounds": ver.check_edge_sum_bounds,
        "regular-corollary": ver.check_regular_corollary,
        "mean-bound": ver.check_mean_bound,
        "delta-bound": ver.check_delta_bound,
    }
    eq_ok = all(checkers[name](G).status == ver.EQUALITY for G, name in eq_expect)
    elapsed = time.time() - t0
    _report(
        f"C4 bound suite ({len(family_graphs)} families + {len(random_graphs)} random)",
        eq_ok,
        f"{elapsed:.1f}s",
    )


def test_criterion_5_power_lift():
    bases = [
        gen.cycle_graph(3),
        gen.double_star(5, 1),
        gen.double_star(7, 2),
        gen.hyperpath(5, 2),
        gen.s_composition(4, 3, (1, 1, 1)),
    ]
    worst = 0.0
    for G in bases:
        base = spectral_radius(G, ABC)
        r = G.k
        for k in (3, 4, 5):
            if k < r:
                continue
            lifted = spectral_radius(gen.power(G, k), ABC)
            worst = max(worst, abs(lifted.rho - base.rho ** (r / k)))
    _report("C5 power lift", worst <= 1e-7, f"worst |err|={worst:.2e}")


def test_criterion_6_extremal_scans():
    t0 = time.time()
    all_ok = True
    details = []
    for k, ms in ((3, (4, 5, 6)), (4, (4, 5))):
        for m in ms:
            results = ver.extremal_scan_hypertrees(m, k)
            names = {r.name.split("[")[0] for r in results}
            assert "hypertree-scan-max" in names
            assert "hypertree-scan-second" in names
            assert "hypertree-scan-nonpower" in names
            ok = all(r.ok for r in results)
            all_ok = all_ok and ok
            details.append(f"(m={m},k={k}):{'ok' if ok else 'FAIL'}")
    elapsed = time.time() - t0
    _report(
        "C6 hypertree extremal scans",
        all_ok and elapsed < 600.0,
        f"{' '.join(details)}, {elapsed:.1f}s",
    )


def test_criterion_7_unicyclic_scans():
    all_ok = True
    for g in (2, 3):
        for m in range(3, 8):
            (r,) = ver.extremal_scan_unicyclic_family(m, 3, g)
            all_ok = all_ok and r.ok
    _report("C7 unicyclic family scans (k=3, g=2,3, m=3..7)", all_ok)


def test_criterion_8_worked_example_numerics():
    f1 = lambda t: t**3 - math.sqrt(3 / 4) * t**1.5 - 0.5  # noqa: E731
    f2 = lambda t: t**4 - (5 / 8) ** (1 / 3) * t ** (8 / 3) - 0.5  # noqa: E731
    path63 = cf.rho_abc_hyperpath(6, 3)
    path124 = cf.rho_abc_hyperpath(12, 4)
    printed = [
        (f1(1.0), -0.366025),
        (f1(path63), 0.07559),
        (f2(1.0), -0.35499),
        (f2(path124), 0.08894),
    ]
    nums_ok = all(abs(got - want) <= 5e-5 for got, want in printed)
    h1 = spectral_radius(gen.example_h(1), ABC)
    h2 = spectral_radius(gen.example_h(2), ABC)
    ineq_ok = h1.upper < path63 and h2.upper < path124
    _report(
        "C8 worked-example numerics and strict comparisons",
        nums_ok and ineq_ok,
        f"rho(H1)={h1.rho:.6f} < {path63:.6f}; rho(H2)={h2.rho:.6f} < {path124:.6f}",
    )


def test_criterion_9_dense_oracle_equivalence():
    rng = np.random.default_rng(123)
    count = 0
    worst = 0.0
    seed = 0
    while count < 20:
        seed += 1
        G = gen.random_connected_hypergraph(1 + seed % 6, 3, seed=seed)
        if G.n > 8:
            continue
        count += 1
        x = rng.uniform(-1.0, 1.0, size=G.n)
        w = (ABC, ADJ, RND)[count % 3]
        worst = max(worst, abs(form(G, w, x) - dense_form(G, w, x)))
    _report("C9 dense-contraction oracle equivalence (20 pairs)", worst <= 1e-10,
            f"worst |diff|={worst:.2e}")
