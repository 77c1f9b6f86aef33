"""Exact maximum independent sets by branch and bound over bitmasks."""

from __future__ import annotations

from typing import Iterator, Optional

from .graph import Graph, iter_bits


def _clique_cover_bound(adj: tuple[int, ...], cand: int) -> int:
    """Greedy clique cover size of ``cand``: an upper bound on its independence number."""
    bound = 0
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        clique = low
        common = adj[v] & rest
        while common:
            lw = common & -common
            w = lw.bit_length() - 1
            clique |= lw
            common &= adj[w]
        rest &= ~clique
        bound += 1
    return bound


def _pick_branch_vertex(adj: tuple[int, ...], cand: int) -> int:
    best, best_deg = -1, -1
    for v in iter_bits(cand):
        d = (adj[v] & cand).bit_count()
        if d > best_deg:
            best, best_deg = v, d
    return best


def max_independent_set_mask(g: Graph, within: Optional[int] = None) -> int:
    """A maximum independent set of ``g[within]`` as a bitmask."""
    adj = g.adj
    cand0 = g.vertex_mask if within is None else within
    best = [0]

    def rec(chosen: int, cand: int) -> None:
        # vertices with no neighbour among the candidates are always taken
        while True:
            free = 0
            for v in iter_bits(cand):
                if not adj[v] & cand:
                    free |= 1 << v
            if not free:
                break
            chosen |= free
            cand &= ~free
        size = chosen.bit_count()
        if not cand:
            if size > best[0].bit_count():
                best[0] = chosen
            return
        if size + _clique_cover_bound(adj, cand) <= best[0].bit_count():
            return
        v = _pick_branch_vertex(adj, cand)
        rec(chosen | (1 << v), cand & ~adj[v] & ~(1 << v))
        rec(chosen, cand & ~(1 << v))

    rec(0, cand0)
    return best[0]


def independence_number(g: Graph, within: Optional[int] = None) -> tuple[int, frozenset[int]]:
    """``(alpha, witness)`` for ``g`` (or for the subgraph induced by the mask ``within``)."""
    mask = max_independent_set_mask(g, within)
    return mask.bit_count(), frozenset(iter_bits(mask))


def alpha(g: Graph, within: Optional[int] = None) -> int:
    return max_independent_set_mask(g, within).bit_count()


def iter_maximum_independent_sets(g: Graph, within: Optional[int] = None) -> Iterator[int]:
    """Every maximum independent set (as a bitmask), each exactly once.

    Branches on the lowest candidate vertex (include, then exclude), pruned
    by the clique-cover bound against the known optimum.
    """
    adj = g.adj
    cand0 = g.vertex_mask if within is None else within
    target = alpha(g, within)

    def rec(chosen: int, cand: int, size: int) -> Iterator[int]:
        if not cand:
            if size == target:
                yield chosen
            return
        if size + _clique_cover_bound(adj, cand) < target:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        yield from rec(chosen | low, cand & ~adj[v] & ~low, size + 1)
        yield from rec(chosen, cand & ~low, size)

    yield from rec(0, cand0, 0)


def maximum_independent_sets(g: Graph, cap: Optional[int] = None) -> list[frozenset[int]]:
    out = []
    for mask in iter_maximum_independent_sets(g):
        if cap is not None and len(out) >= cap:
            break
        out.append(frozenset(iter_bits(mask)))
    return out
