"""Representative families over the uniform matroid and the path solver on them.

A family of p-subsets of [n] is reduced to a q-representative subfamily
(q = k_cap - p) by linear algebra: ground element j maps to the moment vector
(1, j, j^2, ..., j^(k_cap-1)) over GF(prime > n), a p-set maps to its vector
of p x p minors (the coordinates of the wedge of its columns), and a row basis
of those vectors, kept greedily in insertion order, is the subfamily. Any
k_cap columns are independent (Vandermonde), which is what the representation
property needs. Size bound: C(k_cap, p).

The exact balanced path solver runs the families P[(u,v,r,b)] of vertex sets
of u-v paths with r red and b blue edges, extending by one vertex per level
and reducing with k_cap = k+1 after every level. Each kept set carries one
realizing path so the decision is constructive.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from .graphs import EdgeColor, RedBlueGraph, Witness, WitnessKind, require_even_k


@dataclass(frozen=True)
class SetFamily:
    """Equal-size vertex subsets (bitmask over 1..ground_size) with one witness path each."""

    ground_size: int
    p: int
    sets: tuple  # tuple of (mask, witness_vertices) with popcount(mask) == p

    def __post_init__(self):
        for mask, wit in self.sets:
            if bin(mask).count("1") != self.p:
                raise ValueError("set size differs from p")
            wmask = 0
            for v in wit:
                wmask |= 1 << v
            if wmask != mask:
                raise ValueError("witness vertex set differs from the subset")

    def masks(self) -> list:
        return [m for m, _ in self.sets]


@dataclass(frozen=True)
class RepConfig:
    k_cap: int
    field_prime: int


def _smallest_prime_above(n: int) -> int:
    x = n + 1
    while True:
        if x > 1 and all(x % d for d in range(2, int(x**0.5) + 1)):
            return x
        x += 1


def default_config(n: int, k: int) -> RepConfig:
    return RepConfig(k_cap=k + 1, field_prime=_smallest_prime_above(n))


def _colex_row_subsets(k_cap: int, p: int) -> list:
    return sorted(combinations(range(k_cap), p), key=lambda t: tuple(reversed(t)))


def _det_mod(rows: List[List[int]], q: int) -> int:
    """Determinant over GF(q) by elimination, pivoting on the lowest row index."""
    a = [row[:] for row in rows]
    n = len(a)
    det = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] % q:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = (-det) % q
        inv = pow(a[col][col], -1, q)
        det = det * a[col][col] % q
        for r in range(col + 1, n):
            f = a[r][col] * inv % q
            if f:
                for c in range(col, n):
                    a[r][c] = (a[r][c] - f * a[col][c]) % q
    return det % q


def minor_vector(mask: int, k_cap: int, q: int) -> list:
    """Vector of p x p minors of the moment-matrix columns selected by mask."""
    cols = [v for v in range(1, mask.bit_length() + 1) if mask >> v & 1]
    p = len(cols)
    # column vectors: (1, a, a^2, ..., a^{k_cap-1}) at a = vertex id
    colvecs = []
    for a in cols:
        vec = [1]
        for _ in range(k_cap - 1):
            vec.append(vec[-1] * a % q)
        colvecs.append(vec)
    out = []
    for rows in _colex_row_subsets(k_cap, p):
        sub = [[colvecs[c][r] for c in range(p)] for r in rows]
        out.append(_det_mod(sub, q))
    return out


def reduce_family(S: SetFamily, k_cap: int, cfg: RepConfig) -> SetFamily:
    """(k_cap - p)-representative subfamily of size <= C(k_cap, p).

    Keeps the sets whose minor vectors extend a growing row basis over
    GF(field_prime), in insertion order.
    """
    if S.p > k_cap:
        raise ValueError("p exceeds k_cap")
    q = cfg.field_prime
    if q <= S.ground_size:
        raise ValueError("field prime must exceed the ground size")
    if not S.sets:
        return S
    dim = None
    basis = []  # echelon rows: (pivot_index, row)
    kept = []
    for mask, wit in S.sets:
        vec = minor_vector(mask, k_cap, q)
        if dim is None:
            dim = len(vec)
        row = vec[:]
        for piv, brow in basis:
            f = row[piv] % q
            if f:
                inv = pow(brow[piv], -1, q)
                g = f * inv % q
                row = [(x - g * y) % q for x, y in zip(row, brow)]
        piv = next((i for i, x in enumerate(row) if x % q), None)
        if piv is not None:
            basis.append((piv, row))
            kept.append((mask, wit))
    return SetFamily(S.ground_size, S.p, tuple(kept))


def convolve_extend(S: SetFamily, v: int) -> SetFamily:
    """The * {{v}} convolution: add v to every member set not containing it."""
    bit = 1 << v
    out = []
    for mask, wit in S.sets:
        if mask & bit:
            continue
        out.append((mask | bit, wit + (v,)))
    return SetFamily(S.ground_size, S.p + 1, tuple(out))


def solve_ebp_repsets(
    G: RedBlueGraph,
    k: int,
    record: Optional[list] = None,
) -> Optional[Witness]:
    """Exact balanced path of size k via representative-family DP.

    When `record` is a list, every reduction appends
    (u, v, r, b, candidate_family, reduced_family) for property checks.
    """
    require_even_k(k)
    half = k // 2
    cfg = default_config(G.n, k)
    k_cap = k + 1

    fam = {}  # (u, v, r, b) -> SetFamily

    def put(u, v, r, b, pairs):
        # dedupe masks, first witness wins, insertion order by construction
        seen = {}
        for mask, wit in pairs:
            if mask not in seen:
                seen[mask] = wit
        cand = SetFamily(G.n, r + b + 1, tuple((m, w) for m, w in seen.items()))
        red = reduce_family(cand, k_cap, cfg)
        if record is not None:
            record.append((u, v, r, b, cand, red))
        if red.sets:
            fam[(u, v, r, b)] = red

    for ei in range(G.m):
        u, v, c = G.edges[ei]
        for a, bnd in ((u, v), (v, u)):
            key = (a, bnd, 1, 0) if c is EdgeColor.RED else (a, bnd, 0, 1)
            mask = (1 << a) | (1 << bnd)
            fam[key] = SetFamily(G.n, 2, ((mask, (a, bnd)),))

    for j in range(2, k + 1):
        for r in range(max(0, j - half), min(half, j) + 1):
            b = j - r
            for u in range(1, G.n + 1):
                for v in range(1, G.n + 1):
                    if u == v:
                        continue
                    pairs = []
                    for w, ei in G.adjacency[v]:
                        if G.color(ei) is EdgeColor.RED:
                            rc, bc = r - 1, b
                        else:
                            rc, bc = r, b - 1
                        if rc < 0 or bc < 0:
                            continue
                        prev = fam.get((u, w, rc, bc))
                        if prev is None:
                            continue
                        ext = convolve_extend(prev, v)
                        pairs.extend(ext.sets)
                    if pairs:
                        put(u, v, r, b, pairs)

    for u in range(1, G.n + 1):
        for v in range(1, G.n + 1):
            f = fam.get((u, v, half, half))
            if f and f.sets:
                wit = f.sets[0][1]
                edges = []
                byends = {}
                for ei, (a, bnd, _) in enumerate(G.edges):
                    byends[(a, bnd)] = ei
                    byends[(bnd, a)] = ei
                for x, y in zip(wit, wit[1:]):
                    edges.append(byends[(x, y)])
                return Witness(WitnessKind.PATH, tuple(sorted(edges)))
    return None
