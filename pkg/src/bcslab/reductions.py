"""Hardness-construction instance generators, used as adversarial corpora.

steiner_to_ebcs colors the source graph blue and hangs exactly k red pendant
edges off the terminals (extras at the first terminal), so a balanced
connected subgraph of size 2k must pick up every red edge, hence every
terminal. longest_path_split_to_ebp hangs a red path of length k at u0 and
blue-saturates the even-index new vertices against the clique, keeping the
result split. Both emit the intended witness for YES sources, so tests can
compare witnesses and not just decisions.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

from .graphs import EdgeColor, RedBlueGraph, Witness, WitnessKind


@dataclass(frozen=True)
class GeneratedInstance:
    graph: RedBlueGraph
    target: int  # solve for size >= target (equals 2k)
    kind: WitnessKind
    intended: Optional[Witness]
    info: dict


def _connected(n, edges, verts) -> bool:
    adj = {v: [] for v in verts}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].append(v)
            adj[v].append(u)
    verts = list(verts)
    if not verts:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def steiner_min_edges(n: int, edges: list, terminals: set) -> Optional[int]:
    """Fewest edges of a subtree spanning the terminals; None if disconnected.

    Scans vertex supersets of the terminal set: a Steiner tree on vertex set W
    has |W|-1 edges, and any connected G[W] contains one.
    """
    terminals = set(terminals)
    others = [v for v in range(1, n + 1) if v not in terminals]
    best = None
    for extra in range(len(others) + 1):
        if best is not None:
            break
        for add in combinations(others, extra):
            W = terminals | set(add)
            ewithin = [(u, v) for u, v in edges if u in W and v in W]
            if _connected(n, ewithin, W):
                best = len(W) - 1
                break
    return best


def steiner_to_ebcs(n: int, edges: list, terminals: list, k: int) -> GeneratedInstance:
    """Steiner source (G, T, k) -> balanced-connected-subgraph instance (H, 2k)."""
    T = list(dict.fromkeys(terminals))
    if not (1 <= len(T) <= k <= len(edges)):
        raise ValueError("need |T| <= k <= |E(G)|")
    if not _connected(n, edges, set(range(1, n + 1))):
        raise ValueError("source graph must be connected")
    hedges = [(u, v, EdgeColor.BLUE) for u, v in edges]
    nn = n
    for t in T:
        nn += 1
        hedges.append((t, nn, EdgeColor.RED))
    for _ in range(k - len(T)):
        nn += 1
        hedges.append((T[0], nn, EdgeColor.RED))
    H = RedBlueGraph(nn, tuple(hedges))

    intended = None
    opt = steiner_min_edges(n, edges, set(T))
    if opt is not None and opt <= k:
        # forward witness: a terminal-spanning tree padded to exactly k blue edges
        W = None
        others = [v for v in range(1, n + 1) if v not in T]
        for extra in range(len(others) + 1):
            if W is not None:
                break
            for add in combinations(others, extra):
                cand = set(T) | set(add)
                ew = [(u, v) for u, v in edges if u in cand and v in cand]
                if len(cand) - 1 <= k and _connected(n, ew, cand):
                    W = cand
                    break
        # spanning tree of G[W], then greedy padding with adjacent edges
        chosen = []
        seen = {min(W)}
        grew = True
        while grew:
            grew = False
            for i, (u, v) in enumerate(edges):
                if i in chosen:
                    continue
                if (u in seen) != (v in seen) and (u in W and v in W):
                    chosen.append(i)
                    seen |= {u, v}
                    grew = True
        while len(chosen) < k:
            for i, (u, v) in enumerate(edges):
                if i not in chosen and (u in seen or v in seen):
                    chosen.append(i)
                    seen |= {u, v}
                    break
            else:
                raise AssertionError("cannot pad witness; |E| >= k was checked")
        red_part = list(range(len(edges), len(hedges)))
        intended = Witness(WitnessKind.SUBGRAPH, tuple(sorted(chosen + red_part)))
    return GeneratedInstance(
        H, 2 * k, WitnessKind.SUBGRAPH, intended,
        {"reduction": "steiner", "n": n, "terminals": T, "k": k},
    )


def longest_path_from(n: int, edges: list, u0: int) -> int:
    """Length (edge count) of the longest simple path starting at u0; DFS."""
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    best = 0

    def dfs(x, seen, depth):
        nonlocal best
        best = max(best, depth)
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                dfs(y, seen, depth + 1)
                seen.remove(y)

    dfs(u0, {u0}, 0)
    return best


def longest_path_split_to_ebp(
    n: int,
    edges: list,
    clique: set,
    independent: set,
    u0: int,
    k: int,
) -> GeneratedInstance:
    """Longest-path-from-u0 source on a split graph -> balanced-path instance (H, 2k)."""
    clique, independent = set(clique), set(independent)
    if clique | independent != set(range(1, n + 1)) or clique & independent:
        raise ValueError("clique/independent must partition the vertices")
    eset = {(min(u, v), max(u, v)) for u, v in edges}
    for u in clique:
        for v in clique:
            if u < v and (u, v) not in eset:
                raise ValueError("clique part is not a clique")
    for u in independent:
        for v in independent:
            if u < v and (u, v) in eset:
                raise ValueError("independent part is not independent")
    if u0 not in clique:
        raise ValueError("u0 must lie in the clique part")
    if k < 1:
        raise ValueError("k must be positive")

    hedges = [(u, v, EdgeColor.BLUE) for u, v in edges]
    us = [n + i for i in range(1, k + 1)]  # u_1 .. u_k
    hedges.append((u0, us[0], EdgeColor.RED))
    for a, b in zip(us, us[1:]):
        hedges.append((a, b, EdgeColor.RED))
    # Clique side S takes the u_i whose index parity differs from k, so that
    # u_k stays on the independent side: a balanced path must then end at u_k
    # and cannot leak back into the clique past the red spine. (Indexing S by
    # the even positions regardless of k would put u_k in S for even k and
    # break the backward direction of the equivalence.)
    start = 1 if k % 2 == 0 else 2
    S = [us[i - 1] for i in range(start, k + 1, 2)]
    for a, b in combinations(S, 2):
        hedges.append((a, b, EdgeColor.BLUE))
    for c in sorted(clique):
        for s in S:
            if (c, s) == (u0, us[0]):
                continue  # already present as the red attachment edge
            hedges.append((c, s, EdgeColor.BLUE))
    H = RedBlueGraph(n + k, tuple(hedges))

    intended = None
    best = _longest_path_vertices(n, edges, u0, k)
    if best is not None:
        # path u_k .. u_1 u0 x_1 .. x_k: red spine plus k blue source edges
        byends = {}
        for i, (u, v, _) in enumerate(H.edges):
            byends[(u, v)] = i
            byends[(v, u)] = i
        seq = list(reversed(us)) + best
        eidx = [byends[(a, b)] for a, b in zip(seq, seq[1:])]
        intended = Witness(WitnessKind.PATH, tuple(sorted(eidx)))
    return GeneratedInstance(
        H, 2 * k, WitnessKind.PATH, intended,
        {"reduction": "splitpath", "n": n, "u0": u0, "k": k,
         "clique": sorted(clique | set(S)),
         "independent": sorted(independent | (set(us) - set(S)))},
    )


def _longest_path_vertices(n, edges, u0, k):
    """A simple path of exactly k edges starting at u0, as a vertex list, or None."""
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    path = [u0]

    def dfs(x, seen):
        if len(path) == k + 1:
            return True
        for y in sorted(adj[x]):
            if y not in seen:
                seen.add(y)
                path.append(y)
                if dfs(y, seen):
                    return True
                path.pop()
                seen.remove(y)
        return False

    if dfs(u0, {u0}):
        return path
    return None
