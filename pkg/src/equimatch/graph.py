"""Immutable simple graphs on dense vertex ids, backed by adjacency bitmasks.

Vertex sets are passed around as plain iterables of ints at the API surface
and as int bitmasks internally; ``MAX_ORDER`` keeps every set inside one
machine-word-sized integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_ORDER = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; two graphs compare equal only when
    they have the same order and the same labelled edge set.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in 0..{MAX_ORDER}, got {n}")
        if len(adj) != n:
            raise ValueError("adjacency length does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        self._n = n
        self._adj = tuple(adj)

    @property
    def n(self) -> int:
        return self._n

    order = n

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, one per vertex."""
        return self._adj

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self._adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def mask_of(self, vertices: Iterable[int]) -> int:
        """Bitmask of ``vertices``, rejecting ids outside the graph."""
        mask = 0
        for v in vertices:
            if not 0 <= v < self._n:
                raise ValueError(f"vertex {v} out of range for order {self._n}")
            mask |= 1 << v
        return mask

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm is not a permutation of the vertex set")
        new = [0] * self._n
        for v, row in enumerate(self._adj):
            pv = perm[v]
            acc = 0
            for u in iter_bits(row):
                acc |= 1 << perm[u]
            new[pv] = acc
        return Graph(self._n, new)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge list; duplicates collapse."""
    if not 0 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 0..{MAX_ORDER}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``, relabelled densely in increasing order.

    Returns the subgraph and the map ``new id -> old id``.
    """
    keep = tuple(iter_bits(g.mask_of(vertices)))
    index = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        acc = 0
        for u in iter_bits(g.adj[old]):
            j = index.get(u)
            if j is not None:
                acc |= 1 << j
        adj.append(acc)
    return Graph(len(keep), adj), keep


def remove_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``g - vertices`` with the same relabelling convention as :func:`induced_subgraph`."""
    drop = g.mask_of(vertices)
    return induced_subgraph(g, iter_bits(g.vertex_mask & ~drop))


# -- structure -------------------------------------------------------------


def component_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` inside the vertex set ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components (as bitmasks) of the subgraph induced by ``within``."""
    rest = g.vertex_mask if within is None else within
    out = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_mask(g.adj, start, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected_mask(g: Graph, within: int) -> bool:
    if within == 0:
        return True
    start = (within & -within).bit_length() - 1
    return component_mask(g.adj, start, within) == within


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g, g.vertex_mask)


def is_biconnected_mask(g: Graph, within: int) -> bool:
    """2-connectivity of the subgraph induced by ``within``; false below 3 vertices."""
    if within.bit_count() < 3 or not is_connected_mask(g, within):
        return False
    return all(is_connected_mask(g, within & ~(1 << v)) for v in iter_bits(within))


def is_biconnected(g: Graph) -> bool:
    return is_biconnected_mask(g, g.vertex_mask)


def cut_vertices(g: Graph, within: Optional[int] = None) -> list[int]:
    """Cut vertices of the (connected) subgraph induced by ``within``."""
    mask = g.vertex_mask if within is None else within
    base = len(components(g, mask))
    return [v for v in iter_bits(mask) if len(components(g, mask & ~(1 << v))) > base]


def bipartition(g: Graph, within: Optional[int] = None) -> Optional[tuple[int, int]]:
    """Two-colouring ``(side0, side1)`` as bitmasks, or ``None`` if an odd cycle exists.

    Each component puts its lowest vertex on side 0.
    """
    mask = g.vertex_mask if within is None else within
    adj = g.adj
    side = [0, 0]
    colour: dict[int, int] = {}
    for v in iter_bits(mask):
        if v in colour:
            continue
        colour[v] = 0
        stack = [v]
        while stack:
            x = stack.pop()
            cx = colour[x]
            side[cx] |= 1 << x
            for y in iter_bits(adj[x] & mask):
                cy = colour.get(y)
                if cy is None:
                    colour[y] = 1 - cx
                    stack.append(y)
                elif cy == cx:
                    return None
    return side[0], side[1]


def is_independent_mask(g: Graph, mask: int) -> bool:
    return all(not (g.adj[v] & mask) for v in iter_bits(mask))


def is_clique_mask(g: Graph, mask: int) -> bool:
    return all((g.adj[v] | (1 << v)) & mask == mask for v in iter_bits(mask))


def regularity(g: Graph) -> Optional[int]:
    """Common degree if ``g`` is regular (the null graph counts as 0-regular)."""
    degs = set(g.degrees())
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


@dataclass(frozen=True)
class StructureProfile:
    order: int
    connected: bool
    biconnected: bool
    bipartition: Optional[tuple[frozenset[int], frozenset[int]]]
    regularity: Optional[int]
    degree_sequence: tuple[int, ...]

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None


def profile(g: Graph) -> StructureProfile:
    bp = bipartition(g)
    sides = None
    if bp is not None:
        sides = (frozenset(iter_bits(bp[0])), frozenset(iter_bits(bp[1])))
    return StructureProfile(
        order=g.n,
        connected=is_connected(g),
        biconnected=is_biconnected(g),
        bipartition=sides,
        regularity=regularity(g),
        degree_sequence=tuple(sorted(g.degrees())),
    )


def boundary_counts(
    g: Graph, x: Iterable[int], y: Optional[Iterable[int]] = None
) -> tuple[int, Optional[int]]:
    """Edge counts ``(|∂(x)|, |E(x, y)|)``.

    ``∂(x)`` is the set of edges with exactly one end in ``x`` and ``E(x, y)``
    is ``∂(x) ∩ ∂(y)``, which for disjoint sets is just the edges running
    between them. The second entry is ``None`` when ``y`` is omitted.
    """
    xm = g.mask_of(x)
    ym = None if y is None else g.mask_of(y)
    boundary = sum((g.adj[v] & ~xm).bit_count() for v in iter_bits(xm))
    if ym is None:
        return boundary, None
    cross = 0
    for u, v in g.edges():
        e = (1 << u) | (1 << v)
        if (e & xm).bit_count() == 1 and (e & ym).bit_count() == 1:
            cross += 1
    return boundary, cross


def edges_within(g: Graph, mask: int) -> int:
    return sum((g.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2
