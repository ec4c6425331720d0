"""Representation, validation, classification, canonical codes, UHG I/O."""

import random

import pytest

import abctensor as ab
from abctensor import (
    DuplicateEdgeError,
    EdgeCardinalityError,
    InvalidHypergraphError,
    RepeatedVertexError,
    SizeCapExceededError,
    UhgParseError,
    VertexRangeError,
    build,
    canonical_code,
    classify,
    degrees,
    format_uhg,
    is_connected,
    parse_uhg,
)
from abctensor import generators as gen
from helpers import relabel


def test_build_minimal_single_edge():
    G = build(3, 3, [[0, 1, 2]])
    assert G.m == 1 and G.n == 3 and G.k == 3
    assert G.edges == ((0, 1, 2),)


def test_build_matches_hyperstar_generator():
    G = build(3, 5, [[0, 1, 2], [0, 3, 4]])
    assert G == gen.hyperstar(2, 3)


def test_build_sorts_edges_and_vertices():
    G = build(3, 5, [[4, 3, 0], [2, 1, 0]])
    assert G.edges == ((0, 1, 2), (0, 3, 4))


def test_build_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdgeError) as exc:
        build(2, 3, [[0, 1], [1, 0]])
    assert exc.value.edge_index == 1


def test_build_rejects_wrong_cardinality():
    with pytest.raises(EdgeCardinalityError) as exc:
        build(3, 4, [[0, 1, 2], [0, 1]])
    assert exc.value.edge_index == 1


def test_build_rejects_repeated_vertex():
    with pytest.raises(RepeatedVertexError) as exc:
        build(3, 4, [[0, 1, 1]])
    assert exc.value.edge_index == 0


def test_build_rejects_out_of_range():
    with pytest.raises(VertexRangeError) as exc:
        build(3, 3, [[0, 1, 3]])
    assert exc.value.edge_index == 0


def test_build_rejects_empty_and_bad_params():
    with pytest.raises(InvalidHypergraphError):
        build(3, 3, [])
    with pytest.raises(InvalidHypergraphError):
        build(1, 3, [[0]])
    with pytest.raises(InvalidHypergraphError):
        build(3, 2, [[0, 1, 2]])


def test_degrees_hyperstar():
    dv = degrees(gen.hyperstar(3, 3))
    assert dv.degrees[0] == 3
    assert sorted(dv.degrees) == [1] * 6 + [3]
    assert dv.max_degree == 3 and dv.min_degree == 1


def test_degrees_single_edge_k4():
    dv = degrees(build(4, 4, [[0, 1, 2, 3]]))
    assert dv.degrees == (1, 1, 1, 1)
    assert dv.max_degree == dv.min_degree == 1


def test_degrees_hypercycle_sum():
    G = gen.hypercycle(3, 3)
    dv = degrees(G)
    assert sorted(dv.degrees) == [1, 1, 1, 2, 2, 2]
    assert sum(dv.degrees) == G.m * G.k == 9


def test_degree_sum_identity_random():
    for seed in range(10):
        G = gen.random_connected_hypergraph(6, 3, seed)
        assert sum(degrees(G).degrees) == G.m * G.k


def test_is_connected():
    assert is_connected(gen.hyperstar(4, 3))
    assert is_connected(gen.hypercycle(4, 3))
    assert not is_connected(build(3, 6, [[0, 1, 2], [3, 4, 5]]))


def test_classify_hyperstar():
    rep = classify(gen.hyperstar(4, 3))
    assert rep.connected and rep.kind == "hypertree" and rep.linear
    assert rep.girth is None and rep.girth_status == "acyclic"
    assert rep.power_hypertree is True


def test_classify_nonpower_hypertree():
    rep = classify(gen.s_composition(5, 3, (2, 1, 1)))
    assert rep.kind == "hypertree"
    assert rep.power_hypertree is False


def test_classify_unicyclic_g2():
    G = gen.unicyclic_family(5, 3, 2, (3, 0, 0))
    rep = classify(G)
    assert rep.kind == "unicyclic"
    assert not rep.linear
    assert rep.girth == 2 and rep.girth_status == "exact"


def test_classify_girth_matches_cycle_length():
    for g in (2, 3, 4, 5):
        rep = classify(gen.hypercycle(g, 3))
        assert rep.kind == "unicyclic"
        assert rep.girth == g


def test_classify_2uniform_cycle():
    rep = classify(gen.cycle_graph(5))
    assert rep.kind == "unicyclic" and rep.girth == 5 and rep.linear


def test_classify_multicyclic_is_other():
    rep = classify(gen.complete(4, 3))
    assert rep.kind == "other"
    assert rep.girth == 2  # two edges of K_4^(3) share two vertices


def test_girth_budget_reports_undetermined():
    G = gen.hypercycle(5, 3)  # girth 5, forcing a real search
    g_val, status = ab.girth(G, budget=2)
    assert g_val is None and status == "undetermined"


def test_vertex_count_identities_on_generated_families():
    for m in range(1, 7):
        for k in (2, 3, 4):
            T = gen.random_hypertree(m, k, seed=m * k)
            assert T.n == m * (k - 1) + 1
            assert classify(T).kind == "hypertree"
    for m in (3, 5):
        for k in (3, 4):
            U = gen.unicyclic_family(m, k, 2, (m - 2,) + (0,) * (k - 1))
            assert U.n == m * (k - 1)
            assert classify(U).kind == "unicyclic"


def test_power_of_tree_is_power_hypertree():
    rng = random.Random(5)
    for _ in range(8):
        m = rng.randint(1, 6)
        T = gen.random_hypertree(m, 2, seed=rng.randrange(1000))
        for k in (3, 4, 5):
            rep = classify(gen.power(T, k))
            assert rep.power_hypertree is True


# ---- canonical codes ----


def test_canonical_code_permutation_invariant():
    rng = random.Random(11)
    samples = [
        gen.hyperstar(3, 3),
        gen.hyperpath(4, 3),
        gen.hypercycle(3, 3),
        gen.complete(5, 2),
        gen.s_composition(5, 3, (2, 1, 1)),
        gen.unicyclic_family(4, 3, 2, (2, 0, 0)),
        gen.power(gen.double_star(5, 2), 3),
    ]
    for G in samples:
        c0 = canonical_code(G)
        for _ in range(6):
            perm = list(range(G.n))
            rng.shuffle(perm)
            assert canonical_code(relabel(G, perm)) == c0


def test_canonical_code_distinguishes_shapes():
    assert canonical_code(gen.s_composition(4, 3, (1, 1, 1))) != canonical_code(
        gen.s_composition(4, 3, (2, 1, 0))
    )
    assert canonical_code(gen.hyperstar(3, 3)) != canonical_code(gen.hyperpath(3, 3))


def test_canonical_code_single_edge_all_labelings():
    import itertools

    codes = set()
    for perm in itertools.permutations(range(3)):
        codes.add(canonical_code(build(3, 3, [list(perm)])))
    assert len(codes) == 1


def test_canonical_code_size_cap():
    with pytest.raises(SizeCapExceededError):
        canonical_code(gen.hyperstar(40, 3), size_cap=64)


# ---- UHG v1 ----


def test_uhg_round_trip():
    for G in (gen.hyperstar(5, 3), gen.hypercycle(4, 4), gen.double_star(5, 2)):
        assert parse_uhg(format_uhg(G)) == G


def test_uhg_comments_and_blanks():
    text = "# a comment\n\nuhg 2 3 2\n0 1\n# middle\n1 2\n"
    assert parse_uhg(text) == build(2, 3, [[0, 1], [1, 2]])


def test_uhg_errors_carry_line_numbers():
    with pytest.raises(UhgParseError) as exc:
        parse_uhg("uhg 2 3\n0 1\n")
    assert exc.value.line == 1
    with pytest.raises(UhgParseError) as exc:
        parse_uhg("uhg 2 3 2\n0 1\n1 x\n")
    assert exc.value.line == 3
    with pytest.raises(UhgParseError) as exc:
        parse_uhg("uhg 2 3 2\n0 1\n0 1 2\n")
    assert exc.value.line == 3
    with pytest.raises(UhgParseError) as exc:
        parse_uhg("uhg 2 3 2\n0 1\n0 1\n")  # duplicate edge
    assert exc.value.line == 3
