"""Randomized multilinear-monomial detection and the solvers built on it.

Substitution: every structural variable x_i (or y_v) receives a rank-one
nilpotent element A_i = sum_j c_ij u_j with c_ij uniform in GF(2^l); every
tag variable receives a nonzero scalar from the GF(2^16) subfield. Squares
vanish (A_i^2 = 0 in characteristic 2), so only multilinear monomials can
survive; a surviving set of d <= k_dim variables contributes a determinant
of a random d x k_dim matrix over GF(2^l), nonzero except with probability
~ d/2^l. One trial is one joint draw; the answer is one-sided: a zero
polynomial evaluates to zero on every draw.

Evaluation is vectorized across trials. For degree-homogeneous circuits whose
output degree equals k_dim (all three builders), each gate holds one
subset-zeta vector and a product is a single pointwise field multiplication:
lower-rank junk introduced by overlapping unions can never reach the full
mask, whose Moebius coefficient (the XOR of the whole vector) is therefore
the exact top-rank ring coefficient. Other circuits fall back to exact
ranked subset convolution per gate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..graphs import RedBlueGraph, Witness, WitnessKind, require_even_k, validate_witness
from .circuits import Circuit, build_circuit_ebcs, build_circuit_ebt, build_circuit_ebp
from .field import GF2e, VecGF
from .group_algebra import Backend, Basis, GroupAlgebraElement, ga_multiply

_TAG_ELL = 16  # tags live in the GF(2^16) subfield; cheap limb-wise products


@dataclass(frozen=True)
class Substitution:
    """One batch of independent trials.

    vectors[t, i, j]: coefficient of u_j in the value of structural variable i
    (trial t); tags[t, s]: nonzero scalar for tag variable s.
    """

    k_dim: int
    ell: int
    vectors: np.ndarray  # (B, nvars, k_dim) uint64
    tags: np.ndarray  # (B, ntags) uint64, values in [1, 2^16)


def draw_substitution(
    nvars: int, ntags: int, k_dim: int, ell: int, seed: int, batch: int,
    batch_index: int = 0,
) -> Substitution:
    gen = np.random.Generator(np.random.Philox(key=[seed & (2**64 - 1), batch_index]))
    if ell == 64:
        vectors = gen.integers(0, 2**64, size=(batch, nvars, k_dim), dtype=np.uint64)
    else:
        vectors = gen.integers(0, 2**ell, size=(batch, nvars, k_dim), dtype=np.uint64)
    tags = gen.integers(1, 2**_TAG_ELL, size=(batch, max(1, ntags)), dtype=np.uint64)
    return Substitution(k_dim, ell, vectors, tags)


def _index_vars(c: Circuit):
    """Stable numbering of structural variables in gate order."""
    order = []
    seen = {}
    for g in c.gates:
        if g[0] == "in" and g[1][0] != "t":
            if g[1] not in seen:
                seen[g[1]] = len(order)
                order.append(g[1])
    return seen, order


def _is_homogeneous(c: Circuit) -> Optional[int]:
    """Output degree if every add combines equal degrees, else None."""
    deg = []
    for g in c.gates:
        if g[0] == "in":
            deg.append(0 if g[1][0] == "t" else 1)
        elif g[0] in ("c0", "c1"):
            deg.append(0)
        elif g[0] == "add":
            if deg[g[1]] != deg[g[2]]:
                return None
            deg.append(deg[g[1]])
        else:
            deg.append(deg[g[1]] + deg[g[2]])
    return deg[c.output]


def _last_uses(c: Circuit):
    last = [gid for gid in range(len(c.gates))]
    for gid, g in enumerate(c.gates):
        if g[0] in ("add", "mul"):
            last[g[1]] = gid
            last[g[2]] = gid
    return last


def _eval_fast(c: Circuit, sub: Substitution) -> np.ndarray:
    """(B,) output top-rank coefficients for homogeneous circuits."""
    K = sub.k_dim
    B = sub.vectors.shape[0]
    vf = VecGF(sub.ell)
    varmap, _ = _index_vars(c)
    last = _last_uses(c)
    vals: list = [None] * len(c.gates)

    def leaf_vec(i):
        z = np.zeros((B, 1 << K), dtype=np.uint64)
        cv = sub.vectors[:, i, :]
        for j in range(K):
            blk = 1 << j
            z[:, blk : 2 * blk] = z[:, :blk] ^ cv[:, j : j + 1]
        return z

    for gid, g in enumerate(c.gates):
        if g[0] == "in":
            if g[1][0] == "t":
                v = sub.tags[:, g[1][1] : g[1][1] + 1]
            else:
                v = leaf_vec(varmap[g[1]])
        elif g[0] == "c0":
            v = np.zeros((B, 1), dtype=np.uint64)
        elif g[0] == "c1":
            v = np.ones((B, 1), dtype=np.uint64)
        elif g[0] == "add":
            v = vals[g[1]] ^ vals[g[2]]
        else:
            a, b = vals[g[1]], vals[g[2]]
            ga, gb = c.gates[g[1]], c.gates[g[2]]
            if ga[0] == "in" and ga[1][0] == "t":
                v = vf.mul_scalar16(b, a)
            elif gb[0] == "in" and gb[1][0] == "t":
                v = vf.mul_scalar16(a, b)
            else:
                v = vf.mul(a, b)
        vals[gid] = v
        if g[0] in ("add", "mul"):
            for op in (g[1], g[2]):
                if last[op] == gid and op != c.output:
                    vals[op] = None
    out = vals[c.output]
    if out.shape[1] == 1:
        # constant circuit: degree 0 means no monomial of positive degree
        return np.zeros(out.shape[0], dtype=np.uint64)
    return np.bitwise_xor.reduce(out, axis=1)


def _eval_exact(c: Circuit, sub: Substitution) -> np.ndarray:
    """Per-trial nonzero flags via exact ranked subset convolution (slow path)."""
    K = sub.k_dim
    B = sub.vectors.shape[0]
    varmap, _ = _index_vars(c)
    flags = np.zeros(B, dtype=np.uint64)
    for t in range(B):
        vals: list = []
        for g in c.gates:
            if g[0] == "in":
                if g[1][0] == "t":
                    lam = int(sub.tags[t, g[1][1]])
                    vals.append(("s", lam))
                else:
                    i = varmap[g[1]]
                    coeffs = [0] * (1 << K)
                    for j in range(K):
                        coeffs[1 << j] = int(sub.vectors[t, i, j])
                    vals.append(("e", GroupAlgebraElement(K, sub.ell, Basis.NILPOTENT, tuple(coeffs))))
            elif g[0] == "c0":
                vals.append(("s", 0))
            elif g[0] == "c1":
                vals.append(("s", 1))
            elif g[0] == "add":
                a, b = vals[g[1]], vals[g[2]]
                if a[0] == "s" and b[0] == "s":
                    vals.append(("s", a[1] ^ b[1]))
                else:
                    ea = _as_elem(a, K, sub.ell)
                    eb = _as_elem(b, K, sub.ell)
                    vals.append(("e", ea.add(eb)))
            else:
                a, b = vals[g[1]], vals[g[2]]
                if a[0] == "s" and b[0] == "s":
                    vals.append(("s", GF2e(sub.ell).mul(a[1], b[1])))
                elif a[0] == "s":
                    vals.append(("e", b[1].scale(a[1])))
                elif b[0] == "s":
                    vals.append(("e", a[1].scale(b[1])))
                else:
                    vals.append(("e", ga_multiply(a[1], b[1], Backend.SUBSET_CONVOLUTION)))
        out = vals[c.output]
        nz = (out[1] != 0) if out[0] == "s" else not out[1].is_zero()
        flags[t] = 1 if nz else 0
    return flags


def _as_elem(v, K, ell):
    if v[0] == "e":
        return v[1]
    coeffs = [0] * (1 << K)
    coeffs[0] = v[1]
    return GroupAlgebraElement(K, ell, Basis.NILPOTENT, tuple(coeffs))


def run_trials(c: Circuit, k_dim: int, ell: int, trials: int, seed: int,
               batch_index: int = 0) -> np.ndarray:
    """Per-trial positive flags; one-sided (never positive on zero polynomials)."""
    if c.degree_bound > k_dim:
        raise ValueError("circuit degree bound exceeds k_dim")
    nvars = len(_index_vars(c)[1])
    sub = draw_substitution(max(1, nvars), c.n_tags, k_dim, ell, seed, trials, batch_index)
    hom = _is_homogeneous(c)
    if hom is not None and hom == k_dim:
        return _eval_fast(c, sub) != 0
    return _eval_exact(c, sub) != 0


def detect_multilinear(c: Circuit, k_dim: int, ell: int, trials: int, seed: int) -> bool:
    """True iff any trial evaluates the substituted circuit to nonzero."""
    if trials < 1:
        raise ValueError("need at least one trial")
    # first trial alone: on yes-instances it almost always decides
    if bool(run_trials(c, k_dim, ell, 1, seed, batch_index=0).any()):
        return True
    if trials == 1:
        return False
    return bool(run_trials(c, k_dim, ell, trials - 1, seed, batch_index=1).any())


_BUILDERS = {
    WitnessKind.SUBGRAPH: (build_circuit_ebcs, 0),
    WitnessKind.TREE: (build_circuit_ebt, 1),
    WitnessKind.PATH: (build_circuit_ebp, 1),
}


@dataclass(frozen=True)
class RandomizedAnswer:
    yes: bool
    witness: Optional[Witness]


def randomized_solve(
    G: RedBlueGraph,
    k: int,
    kind: WitnessKind,
    trials: Optional[int] = None,
    seed: int = 0,
    want_witness: bool = False,
    ell: int = 64,
) -> RandomizedAnswer:
    """One-sided randomized decision (and optional witness by self-reduction)."""
    require_even_k(k)
    if trials is None:
        trials = max(16, k)
    build, extra = _BUILDERS[kind]
    k_dim = k + extra

    def decide(graph, s):
        c = build(graph, k)
        if graph.m < k or c.gates[c.output][0] == "c0":
            return False
        return detect_multilinear(c, k_dim, ell, trials, s)

    if not decide(G, seed):
        return RandomizedAnswer(False, None)
    if not want_witness:
        return RandomizedAnswer(True, None)

    kept = list(range(G.m))
    step = 0
    for e in list(kept):
        cand = [i for i in kept if i != e]
        step += 1
        sub = G.subgraph_of_edges(cand)
        if len(cand) >= k and decide(sub, seed * 1_000_003 + step):
            kept = cand
    w = Witness(kind, tuple(kept))
    if validate_witness(G, w, k).valid:
        return RandomizedAnswer(True, w)
    return RandomizedAnswer(True, None)
