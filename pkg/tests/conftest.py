import random

from bcslab.graphs import EdgeColor, RedBlueGraph

R = EdgeColor.RED
B = EdgeColor.BLUE


def path_graph(colors):
    """Path with the given edge colors on vertices 1..len+1."""
    return RedBlueGraph(
        len(colors) + 1,
        tuple((i + 1, i + 2, c) for i, c in enumerate(colors)),
    )


def random_redblue(n, p, seed):
    rng = random.Random(seed)
    edges = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if rng.random() < p:
                edges.append((a, b, R if rng.random() < 0.5 else B))
    return RedBlueGraph(n, tuple(edges))
