import random
from itertools import combinations

import pytest

from bcslab.graphs import RedBlueGraph, WitnessKind, parse_graph, validate_witness
from bcslab.oracle import all_witness_sets, oracle_solve
from bcslab.colorcoding import (
    EdgeColoring,
    VertexColoring,
    colorful_bcs_dp,
    colorful_bt_dp,
    colorful_ebp_dp,
    family_driver,
    greedy_hash_family,
    random_coloring_driver,
)

from conftest import B, R, path_graph, random_redblue

TRI = parse_graph("graph 3 3\ne 1 2 R\ne 2 3 B\ne 1 3 R\n")


def test_bcs_dp_examples():
    w = colorful_bcs_dp(TRI, EdgeColoring(2, (1, 2, 1)), 2)
    assert w is not None and sorted(w.edge_indices) == [0, 1]
    assert colorful_bcs_dp(TRI, EdgeColoring(2, (1, 1, 1)), 2) is None
    single = path_graph([R])
    assert colorful_bcs_dp(single, EdgeColoring(2, (1,)), 2) is None


def test_bt_dp_examples():
    pg = path_graph([R, B])
    assert colorful_bt_dp(pg, VertexColoring(2, (0, 1, 2, 3)), 2) is not None
    assert colorful_bt_dp(pg, VertexColoring(2, (0, 1, 2, 1)), 2) is None
    allred = path_graph([R, R])
    assert colorful_bt_dp(allred, VertexColoring(2, (0, 1, 2, 3)), 2) is None


def test_ebp_dp_examples():
    pg = path_graph([R, B])
    w = colorful_ebp_dp(pg, VertexColoring(2, (0, 1, 2, 3)), 2)
    assert w is not None and sorted(w.edge_indices) == [0, 1]
    c4 = parse_graph("graph 4 4\ne 1 2 R\ne 2 3 B\ne 3 4 R\ne 4 1 B\n")
    assert colorful_ebp_dp(c4, VertexColoring(4, (0, 1, 2, 3, 4)), 4) is None


def test_dp_witnesses_are_colorful():
    rng = random.Random(0)
    for seed in range(25):
        g = random_redblue(6, 0.5, seed + 900)
        if g.m < 4:
            continue
        k = 4
        sig = EdgeColoring(k, tuple(rng.randrange(1, k + 1) for _ in range(g.m)))
        w = colorful_bcs_dp(g, sig, k)
        if w is not None:
            assert validate_witness(g, w, k).valid
            assert len({sig.labels[i] for i in w.edge_indices}) == k
        tau = VertexColoring(k, (0,) + tuple(rng.randrange(1, k + 2) for _ in range(g.n)))
        for dp in (colorful_bt_dp, colorful_ebp_dp):
            w = dp(g, tau, k)
            if w is not None:
                assert validate_witness(g, w, k).valid
                verts = set()
                for i in w.edge_indices:
                    u, v, _ = g.edges[i]
                    verts |= {u, v}
                assert len({tau.labels[v] for v in verts}) == k + 1


def test_dp_completeness_under_injectivity():
    # if the coloring is injective on a witness, the DP must find something
    for seed in range(20):
        g = random_redblue(6, 0.6, seed + 50)
        for k in (2, 4):
            sets = all_witness_sets(g, k, WitnessKind.SUBGRAPH)
            if not sets:
                continue
            target = sets[0]
            labels = [1] * g.m
            for lab, e in enumerate(target, start=1):
                labels[e] = lab
            w = colorful_bcs_dp(g, EdgeColoring(k, tuple(labels)), k)
            assert w is not None


def test_table_size_bound():
    # nonzero keys <= m k^2 2^k
    for seed in (123, 321, 7):
        g = random_redblue(7, 0.6, seed)
        if g.m < 4:
            continue
        k = 4
        sig = EdgeColoring(k, tuple((i % k) + 1 for i in range(g.m)))
        stats = {}
        colorful_bcs_dp(g, sig, k, stats=stats)
        assert stats["entries"] <= g.m * k * k * (1 << k)


def test_greedy_family_identity_case():
    fam = greedy_hash_family(3, 3)
    assert len(fam) == 1 and sorted(fam[0]) == [1, 2, 3]


def test_greedy_family_m4_k2():
    fam = greedy_hash_family(4, 2)
    assert len(fam) <= 3
    for sub in combinations(range(4), 2):
        assert any(len({f[x] for x in sub}) == 2 for f in fam)


def test_greedy_family_m6_k3_exhaustive():
    fam = greedy_hash_family(6, 3)
    for sub in combinations(range(6), 3):
        assert any(len({f[x] for x in sub}) == 3 for f in fam)


def test_greedy_family_scale_limit():
    with pytest.raises(ValueError):
        greedy_hash_family(21, 4)


def test_family_driver_matches_oracle():
    for seed in range(30):
        g = random_redblue(6, 0.5, seed + 2000)
        for k in (2, 4):
            for kind in WitnessKind:
                got = family_driver(g, k, kind)
                exp = oracle_solve(g, k, kind)
                assert (got is None) == (exp is None), (seed, k, kind)
                if got is not None:
                    assert validate_witness(g, got, k).valid


def test_mc_driver_examples():
    # YES instances with k=4 and delta .01 found across seeds; NO never found
    g = parse_graph("graph 4 5\ne 1 2 R\ne 2 3 B\ne 3 4 R\ne 4 1 B\ne 1 3 R\n")
    assert oracle_solve(g, 4, WitnessKind.SUBGRAPH) is not None
    hits = sum(
        1
        for s in range(1, 21)
        if random_coloring_driver(g, 4, WitnessKind.SUBGRAPH, 0.01, seed=s) is not None
    )
    assert hits == 20
    allred = path_graph([R, R, R])
    for s in range(1, 6):
        assert random_coloring_driver(allred, 2, WitnessKind.PATH, 0.01, seed=s) is None


def test_mc_driver_deterministic_per_seed():
    g = random_redblue(6, 0.5, 77)
    a = random_coloring_driver(g, 2, WitnessKind.SUBGRAPH, 0.1, seed=5)
    b = random_coloring_driver(g, 2, WitnessKind.SUBGRAPH, 0.1, seed=5)
    assert a == b
