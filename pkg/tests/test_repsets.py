from itertools import combinations
from math import comb

import pytest

from bcslab.graphs import EdgeColor, RedBlueGraph, WitnessKind, validate_witness
from bcslab.oracle import oracle_solve
from bcslab.repsets import (
    RepConfig,
    SetFamily,
    convolve_extend,
    default_config,
    minor_vector,
    reduce_family,
    solve_ebp_repsets,
)

from conftest import B, R, path_graph, random_redblue


def _mask(*verts):
    m = 0
    for v in verts:
        m |= 1 << v
    return m


def _represents(reduced_masks, original_masks, universe, q):
    """Brute-force q-representation check over all Y with |Y| <= q."""
    for ysize in range(q + 1):
        for Y in combinations(universe, ysize):
            ym = _mask(*Y)
            if any(m & ym == 0 for m in original_masks):
                if not any(m & ym == 0 for m in reduced_masks):
                    return False
    return True


def test_reduce_singletons():
    S = SetFamily(4, 1, ((_mask(1), (1,)), (_mask(2), (2,)), (_mask(3), (3,))))
    cfg = RepConfig(2, 5)
    Sh = reduce_family(S, 2, cfg)
    assert len(Sh.sets) <= 2
    assert _represents([m for m, _ in Sh.sets], [m for m, _ in S.sets], range(1, 5), 1)


def test_reduce_single_set_identity():
    S = SetFamily(4, 2, ((_mask(1, 2), (1, 2)),))
    assert reduce_family(S, 2, RepConfig(2, 5)).sets == S.sets


def test_reduce_q_zero_keeps_one():
    allp = tuple((_mask(a, b), (a, b)) for a, b in combinations(range(1, 5), 2))
    S = SetFamily(4, 2, allp)
    Sh = reduce_family(S, 2, RepConfig(2, 5))
    assert len(Sh.sets) == 1


def test_reduce_size_bound_and_representation():
    # random families over n = 7, several (p, k_cap)
    import random

    rng = random.Random(9)
    for trial in range(12):
        p = rng.choice([1, 2, 3])
        k_cap = p + rng.choice([0, 1, 2])
        universe = range(1, 8)
        pool = list(combinations(universe, p))
        rng.shuffle(pool)
        sets = tuple((_mask(*s), tuple(s)) for s in pool[: rng.randrange(1, len(pool) + 1)])
        S = SetFamily(7, p, sets)
        cfg = RepConfig(k_cap, 11)
        Sh = reduce_family(S, k_cap, cfg)
        assert len(Sh.sets) <= comb(k_cap, p)
        assert set(Sh.sets) <= set(S.sets)
        assert _represents(
            [m for m, _ in Sh.sets], [m for m, _ in S.sets], universe, k_cap - p
        )


def test_reduce_union_law():
    # reducing a union of reduced families still represents the union
    import random

    rng = random.Random(4)
    universe = range(1, 8)
    pool = list(combinations(universe, 2))
    half = len(pool) // 2
    S1 = SetFamily(7, 2, tuple((_mask(*s), tuple(s)) for s in pool[:half]))
    S2 = SetFamily(7, 2, tuple((_mask(*s), tuple(s)) for s in pool[half:]))
    cfg = RepConfig(4, 11)
    R1 = reduce_family(S1, 4, cfg)
    R2 = reduce_family(S2, 4, cfg)
    union = SetFamily(7, 2, R1.sets + R2.sets)
    RU = reduce_family(union, 4, cfg)
    all_masks = [m for m, _ in S1.sets] + [m for m, _ in S2.sets]
    assert _represents([m for m, _ in RU.sets], all_masks, universe, 2)


def test_minor_vector_independence():
    # any k_cap moment columns are independent: single-column vectors differ
    q = 11
    vecs = [tuple(minor_vector(_mask(v), 3, q)) for v in range(1, 8)]
    assert len(set(vecs)) == len(vecs)


def test_reduce_errors():
    S = SetFamily(4, 2, ((_mask(1, 2), (1, 2)),))
    with pytest.raises(ValueError):
        reduce_family(S, 1, RepConfig(1, 5))  # p > k_cap
    with pytest.raises(ValueError):
        reduce_family(S, 3, RepConfig(3, 3))  # prime <= ground


def test_convolve_extend():
    S = SetFamily(5, 2, ((_mask(1, 2), (1, 2)),))
    out = convolve_extend(S, 3)
    assert out.p == 3 and out.sets == ((_mask(1, 2, 3), (1, 2, 3)),)
    assert convolve_extend(S, 2).sets == ()
    S2 = SetFamily(5, 1, ((_mask(1), (1,)), (_mask(2), (2,))))
    assert len(convolve_extend(S2, 3).sets) == 2


def test_solver_base_example():
    g = path_graph([R, B])
    w = solve_ebp_repsets(g, 2)
    assert w is not None and sorted(w.edge_indices) == [0, 1]


def test_solver_all_red_absent():
    assert solve_ebp_repsets(path_graph([R, R]), 2) is None


def test_solver_agrees_with_oracle():
    for seed in range(40):
        g = random_redblue(7, 0.5, seed + 4000)
        for k in (2, 4):
            got = solve_ebp_repsets(g, k)
            exp = oracle_solve(g, k, WitnessKind.PATH)
            assert (got is None) == (exp is None), (seed, k)
            if got is not None:
                assert validate_witness(g, got, k).valid


def test_recorded_reductions_represent_true_families():
    # the reduced family must represent the brute-force path family, not just
    # its own input candidates
    g = random_redblue(7, 0.6, 99)
    k = 4
    rec = []
    solve_ebp_repsets(g, k, record=rec)
    kcap = k + 1

    def brute_paths(u, v, r, b):
        out = set()
        adj = g.adjacency

        def dfs(x, seen, cr, cb):
            if cr > r or cb > b:
                return
            if x == v and (cr, cb) == (r, b):
                out.add(frozenset(seen))
                return
            for y, e in adj[x]:
                if y in seen:
                    continue
                nc = g.color(e)
                dfs(y, seen | {y}, cr + (nc is EdgeColor.RED), cb + (nc is EdgeColor.BLUE))

        dfs(u, {u}, 0, 0)
        return [
            sum(1 << x for x in s) for s in out if len(s) == r + b + 1
        ]

    checked = 0
    for (u, v, r, b, cand, red) in rec[:20]:
        true_masks = brute_paths(u, v, r, b)
        if not true_masks:
            continue
        q = kcap - (r + b + 1)
        assert _represents([m for m, _ in red.sets], true_masks, range(1, g.n + 1), q)
        assert len(red.sets) <= comb(kcap, r + b + 1)
        checked += 1
    assert checked > 0


def test_default_config_prime():
    cfg = default_config(10, 6)
    assert cfg.field_prime == 11 and cfg.k_cap == 7
