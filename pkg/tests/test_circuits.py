import pytest

from bcslab.graphs import RedBlueGraph, WitnessKind, parse_graph
from bcslab.oracle import all_witness_sets
from bcslab.algebra.circuits import (
    Circuit,
    build_circuit_ebcs,
    build_circuit_ebp,
    build_circuit_ebt,
    dump_circuit,
    expand_multilinear,
)

from conftest import B, R, path_graph, random_redblue

TRI = parse_graph("graph 3 3\ne 1 2 R\ne 2 3 B\ne 1 3 R\n")


def _support(c, deg, var_kind):
    return {frozenset(i for kind, i in m if kind == var_kind)
            for m in expand_multilinear(c, deg)}


def test_ebcs_zero_on_single_edge():
    g = parse_graph("graph 2 1\ne 1 2 R\n")
    c = build_circuit_ebcs(g, 2)
    assert expand_multilinear(c, 2) == {}
    assert c.gates[c.output][0] == "c0"


def test_ebcs_triangle_monomials():
    c = build_circuit_ebcs(TRI, 2)
    assert _support(c, 2, "x") == {frozenset({0, 1}), frozenset({1, 2})}


def test_ebcs_degree_exactly_k():
    for seed in (3, 14):
        g = random_redblue(5, 0.6, seed)
        for k in (2, 4):
            exp = expand_multilinear(build_circuit_ebcs(g, k), k + 2)
            assert all(len(m) == k for m in exp)


def test_ebt_path_monomial():
    g = path_graph([R, B])
    c = build_circuit_ebt(g, 2)
    assert _support(c, 3, "y") == {frozenset({1, 2, 3})}


def test_ebt_zero_on_single_edge():
    g = parse_graph("graph 2 1\ne 1 2 R\n")
    assert expand_multilinear(build_circuit_ebt(g, 2), 3) == {}


def test_ebt_degree_exactly_k_plus_1():
    g = random_redblue(5, 0.6, 8)
    for k in (2, 4):
        exp = expand_multilinear(build_circuit_ebt(g, k), k + 3)
        assert all(len(m) == k + 1 for m in exp)


def test_ebp_both_orientations_counted():
    g = path_graph([R, B])
    exp = expand_multilinear(build_circuit_ebp(g, 2), 3)
    assert set(exp) == {frozenset((("y", 1), ("y", 2), ("y", 3)))}
    # two orientations contribute with tags set to one
    assert list(exp.values()) == [2]


def test_ebp_all_red_zero():
    assert expand_multilinear(build_circuit_ebp(path_graph([R, R]), 2), 3) == {}


def test_ebp_triangle_matches_oracle_counts():
    exp = expand_multilinear(build_circuit_ebp(TRI, 2), 3)
    # each balanced path counted once per endpoint orientation; the triangle's
    # two paths share their vertex set, so one monomial with coefficient 4
    n_paths = len(all_witness_sets(TRI, 2, WitnessKind.PATH))
    assert sum(exp.values()) == 2 * n_paths
    assert len(exp) == 1


def test_support_equals_oracle_families():
    for seed in range(25):
        g = random_redblue(6, 0.5, seed + 700)
        if not 2 <= g.m <= 8:
            continue
        for k in (2, 4):
            got = _support(build_circuit_ebcs(g, k), k, "x")
            exp = {frozenset(s) for s in all_witness_sets(g, k, WitnessKind.SUBGRAPH)}
            assert got == exp
            for builder, kind in ((build_circuit_ebt, WitnessKind.TREE),
                                  (build_circuit_ebp, WitnessKind.PATH)):
                got = _support(builder(g, k), k + 1, "y")
                exp = set()
                for s in all_witness_sets(g, k, kind):
                    vs = set()
                    for i in s:
                        u, v, _ = g.edges[i]
                        vs |= {u, v}
                    exp.add(frozenset(vs))
                assert got == exp, (seed, k, kind)


def test_expansion_coefficients_positive():
    # over Z with tags at one, coefficients are positive (no cancellation)
    g = random_redblue(5, 0.7, 42)
    for build, k in ((build_circuit_ebcs, 4), (build_circuit_ebt, 2), (build_circuit_ebp, 2)):
        exp = expand_multilinear(build(g, k), 5)
        assert all(v > 0 for v in exp.values())


def test_circuit_validation():
    with pytest.raises(ValueError):
        Circuit((("add", 0, 1), ("c0",)), 0, 1, 0)  # forward reference
    with pytest.raises(ValueError):
        Circuit((("c0",),), 5, 1, 0)  # output out of range


def test_circuit_degrees_and_bound():
    c = build_circuit_ebt(TRI, 2)
    degs = c.degrees()
    assert degs[c.output] == 3 == c.degree_bound


def test_dump_format():
    c = build_circuit_ebp(path_graph([R, B]), 2)
    text = dump_circuit(c)
    lines = text.strip().splitlines()
    assert lines[-1].startswith("out g")
    assert any(" = IN y" in l for l in lines)
    assert any(" = IN t" in l for l in lines)
    assert any(" = MUL " in l for l in lines)
    assert any(" = ADD " in l for l in lines) or len(lines) < 8


def test_gate_sharing():
    # memoized cells keep the circuit polynomial-sized
    g = random_redblue(6, 0.8, 5)
    c = build_circuit_ebcs(g, 4)
    assert len(c.gates) < 12000
