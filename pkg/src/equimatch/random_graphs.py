"""Seeded random graph generators used by the property suites and demos."""

from __future__ import annotations

import random
from typing import Optional

from .graph import Graph, build_graph, complement, is_connected


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_relabel(g: Graph, rng: random.Random) -> tuple[Graph, list[int]]:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm), perm


def _has_triangle_with(adj: list[int], u: int, v: int) -> bool:
    return bool(adj[u] & adj[v])


def random_triangle_free(n: int, rng: random.Random) -> Graph:
    """Triangle-free graph from one of two processes, picked at random:
    sparse G(n, p) rejection, or a random greedy triangle-free process
    stopped at a random length. Not uniform over triangle-free graphs.
    """
    if rng.random() < 0.5:
        p = rng.uniform(0.05, 2.0 / max(n, 2))
        for _ in range(200):
            g = gnp(n, p, rng)
            if all(not g.adj[u] & g.adj[v] for u, v in g.edges()):
                return g
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    stop = rng.randint(0, len(pairs))
    adj = [0] * n
    for u, v in pairs[:stop]:
        if not _has_triangle_with(adj, u, v):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, adj)


def random_alpha_at_most_two(n: int, rng: random.Random, connected: bool = True) -> Graph:
    """Complement of a random triangle-free graph, so the independence number is at most 2."""
    while True:
        g = complement(random_triangle_free(n, rng))
        if not connected or is_connected(g):
            return g


def random_edge_swap(g: Graph, rng: random.Random, tries: int = 1000) -> Optional[Graph]:
    """Replace edges ab, cd by ac, bd (degree preserving); None if no valid swap was found."""
    edges = g.edges()
    if len(edges) < 2:
        return None
    for _ in range(tries):
        (a, b), (c, d) = rng.sample(edges, 2)
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or g.has_edge(a, c) or g.has_edge(b, d):
            continue
        rest = [e for e in edges if e not in ((min(a, b), max(a, b)), (min(c, d), max(c, d)))]
        return build_graph(g.n, rest + [(a, c), (b, d)])
    return None
