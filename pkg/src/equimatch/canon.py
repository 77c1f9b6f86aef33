"""Exact canonical labelling by partition refinement plus individualisation search.

The search tree individualises vertices of the first non-singleton cell of an
equitable partition, refines, and recurses. Each discrete leaf yields a
relabelled adjacency certificate; the lexicographically smallest one is the
canonical form. Two prunings keep symmetric graphs tractable:

* twins (``N(u) - v == N(v) - u``) inside one cell give identical subtrees;
* automorphisms discovered from equal leaf certificates are used to skip
  children in the same orbit of the pointwise stabiliser of the current path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, iter_bits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Totally ordered isomorphism-class certificate: ``(n, adjacency rows...)``."""

    certificate: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.certificate[0]


def _refine(adj: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Coarsest equitable refinement of an ordered partition.

    Fragments of a split cell are ordered by their neighbour count in the
    splitter, which is labelling-independent, so the result is canonical.
    """
    while True:
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new: list[tuple[int, ...]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                counts = [(adj[v] & smask).bit_count() for v in cell]
                first = counts[0]
                if all(c == first for c in counts):
                    new.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v, c in zip(cell, counts):
                    groups.setdefault(c, []).append(v)
                for c in sorted(groups):
                    new.append(tuple(groups[c]))
                split = True
            if split:
                cells = new
                break
        else:
            return cells


class _Search:
    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = g.adj
        self.best_cert: Optional[tuple[int, ...]] = None
        self.best_order: Optional[tuple[int, ...]] = None
        self.first_cert: Optional[tuple[int, ...]] = None
        self.first_order: Optional[tuple[int, ...]] = None
        self.autos: list[tuple[int, ...]] = []

    def _twins(self, u: int, v: int) -> bool:
        adj = self.adj
        return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)

    def _leaf(self, cells: list[tuple[int, ...]]) -> None:
        order = tuple(c[0] for c in cells)
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = self.adj
        rows = []
        for v in order:
            acc = 0
            for u in iter_bits(adj[v]):
                acc |= 1 << pos[u]
            rows.append(acc)
        cert = tuple(rows)
        if self.first_cert is None:
            self.first_cert, self.first_order = cert, order
            self.best_cert, self.best_order = cert, order
            return
        for ref_cert, ref_order in ((self.first_cert, self.first_order),
                                    (self.best_cert, self.best_order)):
            if cert == ref_cert:
                perm = [0] * self.n
                for a, b in zip(order, ref_order):
                    perm[a] = b
                perm_t = tuple(perm)
                if perm_t != tuple(range(self.n)):
                    self.autos.append(perm_t)
                return
        if cert < self.best_cert:
            self.best_cert, self.best_order = cert, order

    def _orbit_roots(self, fixed: tuple[int, ...]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.autos:
            if any(perm[f] != f for f in fixed):
                continue
            for a, b in enumerate(perm):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return [find(x) for x in range(self.n)]

    def run(self, cells: list[tuple[int, ...]], fixed: tuple[int, ...]) -> None:
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf(cells)
            return
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        explored: list[int] = []
        for v in target:
            if any(self._twins(v, w) for w in explored):
                continue
            if explored and self.autos:
                roots = self._orbit_roots(fixed)
                if roots[v] in {roots[w] for w in explored}:
                    continue
            explored.append(v)
            rest = tuple(x for x in target if x != v)
            self.run(cells[:t] + [(v,), rest] + cells[t + 1:], fixed + (v,))


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form of ``g`` and a relabelling ``perm`` (old id -> canonical id).

    ``g.relabel(perm)`` is the same graph for every member of the isomorphism class.
    """
    n = g.n
    if n == 0:
        return CanonicalForm((0,)), ()
    search = _Search(g)
    search.run([tuple(range(n))], ())
    perm = [0] * n
    for i, v in enumerate(search.best_order):
        perm[v] = i
    return CanonicalForm((n,) + search.best_cert), tuple(perm)


def canonicalize(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g)[1])


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonicalize(g) == canonicalize(h)

