"""Exact matching computations on small graphs.

Maximum matchings come from Edmonds' blossom-contraction search. Minimum-size
maximal matchings, maximal-matching enumeration and isolating-matching
enumeration use exact backtracking over vertex bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, stored as sorted ``(u, v)`` pairs, ``u < v``."""

    edges: tuple[tuple[int, int], ...]

    def __init__(self, edges: Iterable[tuple[int, int]] = ()):
        norm = sorted({(min(u, v), max(u, v)) for u, v in edges})
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def mask(self) -> int:
        acc = 0
        for u, v in self.edges:
            acc |= (1 << u) | (1 << v)
        return acc

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges)


def check_matching(g: Graph, m: Matching) -> None:
    """Raise ``ValueError`` unless ``m`` is a matching of ``g``."""
    seen = 0
    for u, v in m.edges:
        if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        e = (1 << u) | (1 << v)
        if seen & e:
            raise ValueError(f"edge ({u}, {v}) shares an endpoint with another matching edge")
        seen |= e


@dataclass(frozen=True)
class AlternatingPath:
    """Vertex sequence of an alternating path; ``matched[i]`` tells whether edge i is in M."""

    vertices: tuple[int, ...]
    matched: tuple[bool, ...] = field(default=())

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))


# -- blossom search ----------------------------------------------------------


def _augmenting_search(adj: Sequence[Sequence[int]], match: list[int], root: int) -> list[int]:
    """Edmonds search from exposed ``root``; returns an augmenting path or ``[]``.

    The path runs from the exposed end vertex back to ``root``.
    """
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = [root]

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    path = []
                    x = to
                    while x != -1:
                        px = parent[x]
                        path.append(x)
                        path.append(px)
                        x = match[px]
                    return path
                used[match[to]] = True
                queue.append(match[to])
    return []


def _augment(match: list[int], path: list[int]) -> None:
    for a, b in zip(path[::2], path[1::2]):
        match[a] = b
        match[b] = a


def _adj_lists(g: Graph) -> list[list[int]]:
    return [list(iter_bits(row)) for row in g.adj]


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching of ``g``."""
    n = g.n
    adj = _adj_lists(g)
    match = [-1] * n
    # greedy start; the blossom search only has to fix what greedy misses
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break
    for v in range(n):
        if match[v] == -1:
            path = _augmenting_search(adj, match, v)
            if path:
                _augment(match, path)
    return Matching((v, match[v]) for v in range(n) if match[v] > v)


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def is_factor_critical(g: Graph) -> bool:
    """Whether ``g - v`` has a perfect matching for every vertex ``v``.

    Even-order and disconnected graphs are rejected up front.
    """
    from .graph import is_connected, remove_vertices

    if g.n % 2 == 0 or not is_connected(g):
        return False
    return all(has_perfect_matching(remove_vertices(g, [v])[0]) for v in range(g.n))


def find_augmenting_path(
    g: Graph, m: Matching, sources: Iterable[int], targets: Iterable[int]
) -> Optional[AlternatingPath]:
    """An ``m``-augmenting path from some source to some (distinct) target, if any."""
    check_matching(g, m)
    smask = g.mask_of(sources)
    tmask = g.mask_of(targets)
    covered = m.mask
    if (smask | tmask) & covered:
        raise ValueError("sources and targets must be exposed by the matching")
    if smask & tmask:
        for s in iter_bits(smask):
            for t in iter_bits(tmask):
                if s != t:
                    path = _directed_augmenting_path(g, m, 1 << s, 1 << t)
                    if path is not None:
                        return path
        return None
    return _directed_augmenting_path(g, m, smask, tmask)


def _directed_augmenting_path(g: Graph, m: Matching, smask: int, tmask: int) -> Optional[AlternatingPath]:
    # Auxiliary graph: keep V(m) + S + T, hang a matched pendant on every
    # source and target, and join the pendants to a super-source A and a
    # super-target B. The only exposed vertices are A and B, so any
    # augmenting path runs A - s^ - s ... t - t^ - B.
    keep = m.mask | smask | tmask
    old = list(iter_bits(keep))
    index = {v: i for i, v in enumerate(old)}
    adj: list[list[int]] = [[index[u] for u in iter_bits(g.adj[v] & keep)] for v in old]
    match = [-1] * len(old)
    for u, v in m.edges:
        match[index[u]], match[index[v]] = index[v], index[u]
    a_id = len(adj)
    adj.append([])
    b_id = len(adj)
    adj.append([])
    match += [-1, -1]
    for v in iter_bits(smask | tmask):
        hat = len(adj)
        hub = a_id if smask >> v & 1 else b_id
        adj.append([index[v], hub])
        adj[index[v]].append(hat)
        adj[hub].append(hat)
        match.append(index[v])
        match[index[v]] = hat
    path = _augmenting_search(adj, match, a_id)
    if not path:
        return None
    # path runs B, t^, t, ..., s, s^, A
    inner = path[2:-2][::-1]
    vertices = tuple(old[i] for i in inner)
    mate = m.mate()
    matched = tuple(mate.get(a) == b for a, b in zip(vertices, vertices[1:]))
    return AlternatingPath(vertices, matched)


def is_augmenting_path(g: Graph, m: Matching, path: AlternatingPath) -> bool:
    vs = path.vertices
    if len(vs) < 2 or len(set(vs)) != len(vs):
        return False
    covered = m.mask
    if covered >> vs[0] & 1 or covered >> vs[-1] & 1:
        return False
    mate = m.mate()
    for i, (a, b) in enumerate(zip(vs, vs[1:])):
        if not g.has_edge(a, b):
            return False
        if (mate.get(a) == b) != (i % 2 == 1):
            return False
    return True


# -- maximal matchings ---------------------------------------------------------


def is_maximal(g: Graph, m: Matching) -> bool:
    check_matching(g, m)
    free = g.vertex_mask & ~m.mask
    return all(not (g.adj[v] & free) for v in iter_bits(free))


def _maximal_search(g: Graph, bound: Optional[int]) -> Iterator[list[tuple[int, int]]]:
    """Yield maximal matchings of size < ``bound`` (all when ``bound`` is None).

    Branching is on the lowest undecided vertex with an undecided neighbour:
    match it to each such neighbour in increasing order, then commit it to
    stay exposed. Every maximal matching is produced by exactly one leaf.
    """
    adj = g.adj
    n = g.n
    limit = n + 1 if bound is None else bound
    chosen: list[tuple[int, int]] = []

    def lower_bound_extra(undecided: int, committed: int) -> int:
        # vertices next to a committed one must still be covered
        need = 0
        for d in iter_bits(committed):
            need |= adj[d]
        need &= undecided
        if not need:
            return 0
        lonely = 0
        for x in iter_bits(need):
            if not adj[x] & undecided & ~(1 << x):
                return n + 1
            if not adj[x] & need:
                lonely += 1
        return lonely + (need.bit_count() - lonely + 1) // 2

    def rec(undecided: int, committed: int, size: int) -> Iterator[list[tuple[int, int]]]:
        if size >= limit:
            return
        if size + lower_bound_extra(undecided, committed) >= limit:
            return
        v = -1
        rest = undecided
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            if adj[x] & undecided:
                v = x
                break
            rest ^= low
        if v < 0:
            for d in iter_bits(committed):
                if adj[d] & undecided:
                    return
            yield list(chosen)
            return
        nbrs = adj[v] & undecided
        for w in iter_bits(nbrs):
            chosen.append((v, w))
            yield from rec(undecided & ~((1 << v) | (1 << w)), committed, size + 1)
            chosen.pop()
        if not adj[v] & committed:
            yield from rec(undecided & ~(1 << v), committed | (1 << v), size)

    yield from rec(g.vertex_mask, 0, 0)


def find_small_maximal_matching(g: Graph, bound: int) -> Optional[Matching]:
    """A maximal matching with fewer than ``bound`` edges, or ``None`` if none exists."""
    for edges in _maximal_search(g, bound):
        return Matching(edges)
    return None


def minimum_maximal_matching(g: Graph) -> Matching:
    """A smallest maximal matching (a minimum edge dominating set of matching form)."""
    best = maximum_matching(g)
    while True:
        smaller = find_small_maximal_matching(g, len(best))
        if smaller is None:
            return best
        best = smaller


@dataclass(frozen=True)
class Enumeration:
    """Items produced by a capped enumeration and whether the cap cut it short."""

    items: tuple[Matching, ...]
    truncated: bool

    def sizes(self) -> list[int]:
        return sorted(len(m) for m in self.items)


def iter_maximal_matchings(g: Graph) -> Iterator[Matching]:
    for edges in _maximal_search(g, None):
        yield Matching(edges)


def _capped(it: Iterator[Matching], cap: Optional[int]) -> Enumeration:
    items = []
    for m in it:
        if cap is not None and len(items) >= cap:
            return Enumeration(tuple(items), True)
        items.append(m)
    return Enumeration(tuple(items), False)


def enumerate_maximal_matchings(g: Graph, cap: Optional[int] = None) -> Enumeration:
    return _capped(iter_maximal_matchings(g), cap)


# -- isolating matchings -----------------------------------------------------


def is_isolating(g: Graph, m: Matching, v: int) -> bool:
    """``v`` is exposed by ``m`` and every neighbour of ``v`` is covered."""
    check_matching(g, m)
    covered = m.mask
    return not covered >> v & 1 and g.adj[v] & ~covered == 0


def minimize_isolating(g: Graph, m: Matching, v: int) -> Matching:
    """Drop edges in ascending order while ``v`` stays isolated, until nothing can go."""
    if not is_isolating(g, m, v):
        raise ValueError(f"matching does not isolate vertex {v}")
    edges = list(m.edges)
    changed = True
    while changed:
        changed = False
        for e in list(edges):
            trial = Matching(x for x in edges if x != e)
            if is_isolating(g, trial, v):
                edges.remove(e)
                changed = True
    return Matching(edges)


def iter_minimal_isolating(g: Graph, v: int) -> Iterator[Matching]:
    """Every minimal matching isolating ``v``, each exactly once.

    A matching isolating ``v`` is minimal exactly when each of its edges
    touches ``N(v)``, so the search repeatedly covers the lowest uncovered
    neighbour of ``v`` and nothing else.
    """
    adj = g.adj
    target = adj[v]
    chosen: list[tuple[int, int]] = []

    def rec(free: int) -> Iterator[Matching]:
        todo = target & free
        if not todo:
            yield Matching(chosen)
            return
        x = (todo & -todo).bit_length() - 1
        for y in iter_bits(adj[x] & free & ~(1 << x)):
            chosen.append((x, y))
            yield from rec(free & ~((1 << x) | (1 << y)))
            chosen.pop()

    yield from rec(g.vertex_mask & ~(1 << v))


def enumerate_minimal_isolating(g: Graph, v: int, cap: Optional[int] = None) -> Enumeration:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return _capped(iter_minimal_isolating(g, v), cap)


def perfect_matchings(g: Graph, within: Optional[int] = None) -> Iterator[Matching]:
    """Perfect matchings of the subgraph induced by ``within``, in lexicographic order."""
    adj = g.adj
    chosen: list[tuple[int, int]] = []

    def rec(free: int) -> Iterator[Matching]:
        if not free:
            yield Matching(chosen)
            return
        x = (free & -free).bit_length() - 1
        for y in iter_bits(adj[x] & free):
            chosen.append((x, y))
            yield from rec(free & ~((1 << x) | (1 << y)))
            chosen.pop()

    mask = g.vertex_mask if within is None else within
    if mask.bit_count() % 2 == 0:
        yield from rec(mask)
