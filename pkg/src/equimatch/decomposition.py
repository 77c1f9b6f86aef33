"""The I / W / T' / T'' partition around a near-perfect matching, and instance
audits of the structural facts known for the target class.

The target class is: connected r-regular graphs with r even and at least 6,
odd order, independence number at least 3, equimatchable. Every check below
is gated on an explicit hypothesis predicate; when it is not met the check is
reported as skipped, never as passed.

Decomposition vocabulary, for a maximum independent set ``I``, a vertex
``v`` in ``I`` and a perfect matching ``Mv`` of ``G - v``:

* ``M1``: edges of ``Mv`` with an end in ``I``; ``M2``: the rest.
* ``W = V(M1) - I``.
* ``M20`` / ``M21`` / ``M22``: ``M2`` edges whose ends see no ``W`` vertex /
  each see at most one (and not both none) / one end sees two or more.
* ``T' = V(M21 + M22)``, ``T'' = V(M20)``.
* ``T_w = {w} + ends of M21 edges with an end adjacent to w``; ``W'`` holds
  the ``w`` with ``|T_w| >= 3``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .classify import is_equimatchable
from .families import FamilySpec, recognize_family
from .graph import (
    Graph,
    bipartition,
    components,
    cut_vertices,
    is_biconnected_mask,
    is_clique_mask,
    is_connected,
    is_connected_mask,
    is_independent_mask,
    iter_bits,
    regularity,
)
from .independence import alpha, iter_maximum_independent_sets
from .matching import (
    Matching,
    check_matching,
    find_augmenting_path,
    find_small_maximal_matching,
    is_factor_critical,
    maximum_matching,
    perfect_matchings,
)
from .graph import induced_subgraph

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-hypothesis-unmet"


class DecompositionError(ValueError):
    """Inputs cannot produce a decomposition (bad independent set, vertex, or matching)."""


class NoPerfectMatchingError(DecompositionError):
    """``G - v`` has no perfect matching, so ``G`` is not factor-critical at ``v``."""


def _mask(vertices: Iterable[int]) -> int:
    acc = 0
    for v in vertices:
        acc |= 1 << v
    return acc


def _set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class Decomposition:
    v: int
    I: frozenset[int]
    Mv: Matching
    M1: Matching
    M2: Matching
    W: frozenset[int]
    Tprime: frozenset[int]
    Tdoubleprime: frozenset[int]
    M20: Matching
    M21: Matching
    M22: Matching
    Tw: dict[int, frozenset[int]]
    Wprime: frozenset[int]

    def summary(self) -> dict:
        return {
            "v": self.v,
            "I": sorted(self.I),
            "W": sorted(self.W),
            "Tprime": sorted(self.Tprime),
            "Tdoubleprime": sorted(self.Tdoubleprime),
            "M20": [list(e) for e in self.M20],
            "M21": [list(e) for e in self.M21],
            "M22": [list(e) for e in self.M22],
            "Tw": {str(w): sorted(t) for w, t in sorted(self.Tw.items())},
            "Wprime": sorted(self.Wprime),
        }


def first_perfect_matching(g: Graph, within: int) -> Optional[Matching]:
    """Lexicographically first perfect matching of ``g[within]``."""
    for m in perfect_matchings(g, within):
        return m
    return None


def sample_perfect_matchings(
    g: Graph, within: int, count: int, rng: random.Random, attempts: int = 0
) -> list[Matching]:
    """Up to ``count`` distinct perfect matchings of ``g[within]``.

    The lexicographically first one leads; the rest come from depth-first
    searches with shuffled neighbour orders.
    """
    first = first_perfect_matching(g, within)
    if first is None:
        return []
    found = {first.edges: first}
    adj = g.adj
    tries = attempts or 20 * count

    def randomized(free: int) -> Optional[list[tuple[int, int]]]:
        if not free:
            return []
        x = (free & -free).bit_length() - 1
        opts = list(iter_bits(adj[x] & free))
        rng.shuffle(opts)
        for y in opts:
            rest = randomized(free & ~((1 << x) | (1 << y)))
            if rest is not None:
                return [(x, y)] + rest
        return None

    for _ in range(tries):
        if len(found) >= count:
            break
        edges = randomized(within)
        if edges is not None:
            m = Matching(edges)
            found.setdefault(m.edges, m)
    return list(found.values())[:count]


def build_decomposition(
    g: Graph, I: Iterable[int], v: int, mv: Optional[Matching] = None
) -> Decomposition:
    imask = g.mask_of(I)
    if not is_independent_mask(g, imask):
        raise DecompositionError("I is not an independent set")
    if imask.bit_count() != alpha(g):
        raise DecompositionError(f"I has size {imask.bit_count()} but the independence number is {alpha(g)}")
    if not imask >> v & 1:
        raise DecompositionError(f"v={v} is not in I")
    rest = g.vertex_mask & ~(1 << v)
    if mv is None:
        mv = first_perfect_matching(g, rest)
        if mv is None:
            raise NoPerfectMatchingError(f"G - {v} has no perfect matching; G is not factor-critical")
    else:
        try:
            check_matching(g, mv)
        except ValueError as exc:
            raise DecompositionError(str(exc)) from None
        if mv.mask != rest:
            raise DecompositionError(f"given matching is not a perfect matching of G - {v}")
    adj = g.adj
    m1 = [e for e in mv if (imask >> e[0] | imask >> e[1]) & 1]
    m2 = [e for e in mv if not (imask >> e[0] | imask >> e[1]) & 1]
    wmask = _mask(x for e in m1 for x in e) & ~imask
    m20, m21, m22 = [], [], []
    for a, b in m2:
        da = (adj[a] & wmask).bit_count()
        db = (adj[b] & wmask).bit_count()
        if da == 0 and db == 0:
            m20.append((a, b))
        elif da <= 1 and db <= 1:
            m21.append((a, b))
        else:
            m22.append((a, b))
    tprime = _mask(x for e in m21 + m22 for x in e)
    tdouble = _mask(x for e in m20 for x in e)
    tw: dict[int, frozenset[int]] = {}
    for w in iter_bits(wmask):
        acc = 1 << w
        for a, b in m21:
            if (adj[a] | adj[b]) >> w & 1:
                acc |= (1 << a) | (1 << b)
        tw[w] = _set(acc)
    wprime = frozenset(w for w, t in tw.items() if len(t) >= 3)
    return Decomposition(
        v=v,
        I=_set(imask),
        Mv=mv,
        M1=Matching(m1),
        M2=Matching(m2),
        W=_set(wmask),
        Tprime=_set(tprime),
        Tdoubleprime=_set(tdouble),
        M20=Matching(m20),
        M21=Matching(m21),
        M22=Matching(m22),
        Tw=tw,
        Wprime=wprime,
    )


def structural_violations(g: Graph, d: Decomposition) -> list[str]:
    """Invariants every decomposition satisfies by construction; empty when sound."""
    out = []
    imask, wmask = _mask(d.I), _mask(d.W)
    tp, tpp = _mask(d.Tprime), _mask(d.Tdoubleprime)
    if not is_independent_mask(g, imask) or len(d.I) != alpha(g):
        out.append("I is not a maximum independent set")
    if d.v not in d.I:
        out.append("v not in I")
    if d.Mv.mask != g.vertex_mask & ~(1 << d.v):
        out.append("Mv is not a perfect matching of G - v")
    parts = [imask, wmask, tp, tpp]
    union = 0
    for p in parts:
        if union & p:
            out.append("I, W, T', T'' overlap")
        union |= p
    if union != g.vertex_mask:
        out.append("I, W, T', T'' do not cover V")
    if len(d.W) != len(d.I) - 1:
        out.append("|W| != |I| - 1")
    if sorted(d.M20.edges + d.M21.edges + d.M22.edges) != list(d.M2.edges):
        out.append("M20, M21, M22 do not partition M2")
    for w, t in d.Tw.items():
        if len(t) % 2 == 0:
            out.append(f"|T_{w}| is even")
        if not is_connected_mask(g, _mask(t)):
            out.append(f"T_{w} does not induce a connected subgraph")
    return out


# -- audit records -------------------------------------------------------------


@dataclass
class CheckResult:
    check_id: str
    citation: str
    status: str
    witness: Optional[object] = None
    sampled: bool = False

    def to_json(self) -> dict:
        out = {"check_id": self.check_id, "citation": self.citation, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.sampled:
            out["sampled"] = True
        return out


@dataclass
class AuditReport:
    checks: list[CheckResult] = field(default_factory=list)
    context: dict = field(default_factory=dict)

    def add(self, check_id: str, status: str, witness: object = None, sampled: bool = False) -> None:
        self.checks.append(CheckResult(check_id, CITATIONS[check_id], status, witness, sampled))

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def status_of(self, check_id: str) -> Optional[str]:
        for c in self.checks:
            if c.check_id == check_id:
                return c.status
        return None

    def json_lines(self) -> Iterator[str]:
        for c in self.checks:
            rec = dict(self.context)
            rec.update(c.to_json())
            yield json.dumps(rec, sort_keys=True)


# The citation field states the claim being checked in one line.
CITATIONS = {
    "class-membership": "connected, r-regular with even r >= 6, odd order, alpha >= 3, equimatchable",
    "alpha-and-maximal-size": "alpha <= (n-1)/2 and every maximal matching has (n-1)/2 edges",
    "remainder-alpha-bound": "alpha(G - V(M)) <= (n - |V(M)| + 1)/2; bipartite remainders are balanced within 1",
    "no-perfect-matching-with-two-w": "G[X] has no perfect matching when V-(I+W) <= X <= V-I and |X & W| >= 2",
    "w-no-augmenting-path": "W independent, no M2-augmenting path between W vertices, no path w1 u1 u2 w2",
    "tw-separated": "E(T_w, W - w) is empty; the T_w are pairwise disjoint",
    "tw-structure": "G[T_w] connected, alpha <= 2, equimatchable, factor-critical when 2-connected",
    "one-w-heavy-vertex": "at most one u outside I+W has two or more W-neighbours; |M22| <= 1",
    "sees-i": "every vertex outside I has a neighbour in I",
    "unreached-clique": "V(M2) - N(W) is a clique and |T''| <= r",
    "tprime-nonempty": "T' is non-empty",
    "tw-pairs-no-perfect-matching": "G[T_w1 + T_w2 + T''] and G[T_w1 + T_w2] have no perfect matching",
    "tw-cliques-nonadjacent": "clique T_w1, T_w2 have no edges between them",
    "tw-alpha-with-t2": "alpha(G[T_w + T'']) <= 2, and alpha(G[T_w]) = 2 for at most one w",
    "tw-cut-vertex-split": "a cut vertex u of G[T_w + T''] leaves two components O1, O2 with O1+u and O2 cliques",
    "heavy-edge-mate-avoids-w": "for uu' in M2 with |N(u) & W| >= 2: N(u') & W is empty",
    "heavy-edge-mate-clique": "T'' + u' is a clique",
    "heavy-edge-tw-cliques": "each T_w with w in W' is a clique missing N(u')",
    "heavy-edge-t2-neighbourhood": "neighbours of T'' outside T'' lie in I + {u, u'}",
    "odd-clique-obstruction": "no odd clique X >= 3 in G - (I + u) with |X & I'| = 1 and N(X) <= X + I + u",
    "apex-balanced-bipartition": "G is F_r iff some G - u splits into two equal independent sets",
}


# -- class membership ----------------------------------------------------------


def class_membership(g: Graph) -> tuple[bool, list[str]]:
    """Whether ``g`` is in the target class, with the list of failed conditions."""
    failed = []
    r = regularity(g)
    if not is_connected(g):
        failed.append("not connected")
    if r is None:
        failed.append("not regular")
    elif r % 2 or r < 6:
        failed.append(f"degree {r} is not even and >= 6")
    if g.n % 2 == 0:
        failed.append("even order")
    if alpha(g) < 3:
        failed.append("independence number < 3")
    if not failed and not is_equimatchable(g).equimatchable:
        failed.append("not equimatchable")
    return not failed, failed


# -- helpers for individual checks ---------------------------------------------


def random_maximal_matching(g: Graph, rng: random.Random) -> Matching:
    edges = g.edges()
    rng.shuffle(edges)
    used = 0
    out = []
    for u, v in edges:
        e = (1 << u) | (1 << v)
        if not used & e:
            used |= e
            out.append((u, v))
    return Matching(out)


def random_matching(g: Graph, rng: random.Random) -> Matching:
    """A greedy random matching stopped at a uniformly random size."""
    full = random_maximal_matching(g, rng)
    keep = rng.randint(0, len(full))
    edges = list(full.edges)
    rng.shuffle(edges)
    return Matching(edges[:keep])


def _max_bipartite_imbalance(g: Graph, within: int) -> Optional[int]:
    """Largest ``|A| - |B|`` over all bipartitions of ``g[within]``; None if not bipartite."""
    total = 0
    for comp in components(g, within):
        bp = bipartition(g, comp)
        if bp is None:
            return None
        total += abs(bp[0].bit_count() - bp[1].bit_count())
    return total


def _has_perfect_matching_mask(g: Graph, within: int) -> bool:
    if within.bit_count() % 2:
        return False
    sub, _ = induced_subgraph(g, iter_bits(within))
    return 2 * len(maximum_matching(sub)) == sub.n


def _alpha_le(g: Graph, within: int, k: int) -> bool:
    return alpha(g, within) <= k


def _subgraph_equimatchable(g: Graph, within: int) -> bool:
    sub, _ = induced_subgraph(g, iter_bits(within))
    nu = len(maximum_matching(sub))
    return find_small_maximal_matching(sub, nu) is None


# -- the decomposition audit ---------------------------------------------------


def audit_decomposition(
    g: Graph,
    d: Decomposition,
    samples: int = 1000,
    seed: int = 0,
    graph_level: bool = True,
    membership: Optional[tuple[bool, list[str]]] = None,
) -> AuditReport:
    """Run every instance check against ``d``; ``graph_level=False`` skips the
    checks that depend only on ``g`` (useful when auditing many decompositions
    of one graph). ``membership`` may carry a precomputed ``class_membership(g)``."""
    bad = structural_violations(g, d)
    if bad:
        raise DecompositionError("decomposition does not match the graph: " + "; ".join(bad))
    rng = random.Random(seed)
    report = AuditReport(context={"v": d.v, "I": sorted(d.I)})
    member, why = membership if membership is not None else class_membership(g)
    report.add("class-membership", PASS if member else FAIL, None if member else why)
    gate = PASS if member else SKIPPED

    n = g.n
    adj = g.adj
    r = regularity(g)
    imask, wmask = _mask(d.I), _mask(d.W)
    m2mask = d.M2.mask
    tpp = _mask(d.Tdoubleprime)
    outside = g.vertex_mask & ~(imask | wmask)

    def skipped(cid: str) -> None:
        report.add(cid, SKIPPED)

    if graph_level:
        _check_alpha_and_maximal_size(g, report, rng, samples, member)
        _check_remainder_alpha(g, report, rng, samples, member)

    # no perfect matching once two W vertices join everything outside I + W
    if member:
        wlist = sorted(d.W)
        subsets = [s for k in range(2, len(wlist) + 1) for s in combinations(wlist, k)]
        sampled = len(subsets) > samples
        if sampled:
            picked = {tuple(wlist), tuple(wlist[:2])}
            while len(picked) < samples:
                k = rng.randint(2, len(wlist))
                picked.add(tuple(sorted(rng.sample(wlist, k))))
            subsets = sorted(picked)
        witness = None
        for s in subsets:
            x = outside | _mask(s)
            if _has_perfect_matching_mask(g, x):
                witness = sorted(iter_bits(x))
                break
        report.add("no-perfect-matching-with-two-w", FAIL if witness else PASS, witness, sampled)
    else:
        skipped("no-perfect-matching-with-two-w")

    if member:
        witness = None
        if not is_independent_mask(g, wmask):
            witness = {"adjacent_in_W": True}
        else:
            for w1, w2 in combinations(sorted(d.W), 2):
                for a, b in d.M2:
                    for x, y in ((a, b), (b, a)):
                        if adj[w1] >> x & 1 and adj[w2] >> y & 1:
                            witness = {"path": [w1, x, y, w2]}
                if witness is None:
                    p = find_augmenting_path(g, d.M2, [w1], [w2])
                    if p is not None:
                        witness = {"augmenting_path": list(p.vertices)}
                if witness:
                    break
        report.add("w-no-augmenting-path", FAIL if witness else PASS, witness)
    else:
        skipped("w-no-augmenting-path")

    tw_masks = {w: _mask(t) for w, t in d.Tw.items()}
    if member:
        witness = None
        for w, t in tw_masks.items():
            others = wmask & ~(1 << w)
            hit = [x for x in iter_bits(t) if adj[x] & others]
            if hit:
                witness = {"w": w, "T_w_vertices_touching_W": hit}
                break
        if witness is None:
            for (w1, t1), (w2, t2) in combinations(sorted(tw_masks.items()), 2):
                if t1 & t2:
                    witness = {"overlap": [w1, w2]}
                    break
        report.add("tw-separated", FAIL if witness else PASS, witness)
    else:
        skipped("tw-separated")

    if member:
        witness = None
        for w, t in sorted(tw_masks.items()):
            problems = []
            if not is_connected_mask(g, t):
                problems.append("disconnected")
            if not _alpha_le(g, t, 2):
                problems.append("alpha > 2")
            elif not _subgraph_equimatchable(g, t):
                problems.append("not equimatchable")
            if is_biconnected_mask(g, t):
                sub, _ = induced_subgraph(g, iter_bits(t))
                if not is_factor_critical(sub):
                    problems.append("2-connected but not factor-critical")
            if problems:
                witness = {"w": w, "problems": problems}
                break
        report.add("tw-structure", FAIL if witness else PASS, witness)
    else:
        skipped("tw-structure")

    if member:
        heavy = [u for u in iter_bits(outside) if (adj[u] & wmask).bit_count() >= 2]
        ok = len(heavy) <= 1 and len(d.M22) <= 1
        report.add("one-w-heavy-vertex", PASS if ok else FAIL, None if ok else {"heavy": heavy})
    else:
        skipped("one-w-heavy-vertex")

    if member:
        blind = [u for u in iter_bits(g.vertex_mask & ~imask) if not adj[u] & imask]
        report.add("sees-i", FAIL if blind else PASS, {"vertices": blind} if blind else None)
    else:
        skipped("sees-i")

    if member:
        nw = 0
        for w in iter_bits(wmask):
            nw |= adj[w]
        v0 = m2mask & ~nw
        ok = is_clique_mask(g, v0) and tpp.bit_count() <= r
        report.add("unreached-clique", PASS if ok else FAIL, None if ok else {"set": sorted(iter_bits(v0))})
    else:
        skipped("unreached-clique")

    if member:
        report.add("tprime-nonempty", PASS if d.Tprime else FAIL)
    else:
        skipped("tprime-nonempty")

    light = member and all((adj[u] & wmask).bit_count() <= 1 for u in iter_bits(outside))
    _check_light_case(g, d, report, tw_masks, tpp, light)

    heavy_edges = [
        (u, up)
        for a, b in d.M2
        for u, up in ((a, b), (b, a))
        if (adj[u] & wmask).bit_count() >= 2
    ]
    _check_heavy_case(g, d, report, tw_masks, tpp, heavy_edges if member else [])
    return report


def _check_alpha_and_maximal_size(g, report, rng, samples, member) -> None:
    if not member:
        report.add("alpha-and-maximal-size", SKIPPED)
        return
    half = (g.n - 1) // 2
    witness = None
    if alpha(g) > half:
        witness = {"alpha": alpha(g)}
    else:
        for _ in range(samples):
            m = random_maximal_matching(g, rng)
            if len(m) != half:
                witness = {"maximal_matching": [list(e) for e in m]}
                break
    report.add("alpha-and-maximal-size", FAIL if witness else PASS, witness, sampled=True)


def _check_remainder_alpha(g, report, rng, samples, member) -> None:
    if not member:
        report.add("remainder-alpha-bound", SKIPPED)
        return
    n = g.n
    pool = [Matching(), maximum_matching(g)]
    pool += [random_matching(g, rng) for _ in range(samples)]
    witness = None
    for m in pool:
        rest = g.vertex_mask & ~m.mask
        k = rest.bit_count()
        if 2 * alpha(g, rest) > k + 1:
            witness = {"matching": [list(e) for e in m], "reason": "alpha bound"}
            break
        imb = _max_bipartite_imbalance(g, rest)
        if imb is not None and imb > 1:
            witness = {"matching": [list(e) for e in m], "reason": "unbalanced bipartite remainder"}
            break
    report.add("remainder-alpha-bound", FAIL if witness else PASS, witness, sampled=True)


def _check_light_case(g, d, report, tw_masks, tpp, applies: bool) -> None:
    ids = ("tw-pairs-no-perfect-matching", "tw-cliques-nonadjacent", "tw-alpha-with-t2", "tw-cut-vertex-split")
    if not applies:
        for cid in ids:
            report.add(cid, SKIPPED)
        return
    adj = g.adj
    witness = None
    for (w1, t1), (w2, t2) in combinations(sorted(tw_masks.items()), 2):
        if _has_perfect_matching_mask(g, t1 | t2 | tpp) or _has_perfect_matching_mask(g, t1 | t2):
            witness = {"w": [w1, w2]}
            break
    report.add(ids[0], FAIL if witness else PASS, witness)

    witness = None
    for (w1, t1), (w2, t2) in combinations(sorted(tw_masks.items()), 2):
        if is_clique_mask(g, t1) and is_clique_mask(g, t2):
            if any(adj[x] & t2 for x in iter_bits(t1)):
                witness = {"w": [w1, w2]}
                break
    report.add(ids[1], FAIL if witness else PASS, witness)

    witness = None
    two = [w for w, t in tw_masks.items() if alpha(g, t) == 2]
    bad = [w for w, t in tw_masks.items() if alpha(g, t | tpp) > 2]
    if bad:
        witness = {"alpha_above_two": bad}
    elif len(two) > 1:
        witness = {"alpha_two": two}
    report.add(ids[2], FAIL if witness else PASS, witness)

    witness = None
    for w, t in sorted(tw_masks.items()):
        x = t | tpp
        if not is_connected_mask(g, x) or is_biconnected_mask(g, x) or x.bit_count() < 3:
            continue
        for u in cut_vertices(g, x):
            comps = components(g, x & ~(1 << u))
            ok = len(comps) == 2 and any(
                is_clique_mask(g, a | (1 << u)) and is_clique_mask(g, b)
                for a, b in (comps, comps[::-1])
            )
            if not ok:
                witness = {"w": w, "cut_vertex": u}
                break
        if witness:
            break
    report.add(ids[3], FAIL if witness else PASS, witness)


def _check_heavy_case(g, d, report, tw_masks, tpp, heavy_edges) -> None:
    ids = (
        "heavy-edge-mate-avoids-w",
        "heavy-edge-mate-clique",
        "heavy-edge-tw-cliques",
        "heavy-edge-t2-neighbourhood",
        "odd-clique-obstruction",
    )
    if not heavy_edges:
        for cid in ids:
            report.add(cid, SKIPPED)
        return
    adj = g.adj
    imask, wmask = _mask(d.I), _mask(d.W)
    results = {cid: None for cid in ids}
    obstruction_status = SKIPPED
    for u, up in heavy_edges:
        if adj[up] & wmask and results[ids[0]] is None:
            results[ids[0]] = {"u": u, "u_prime": up}
        if not is_clique_mask(g, tpp | (1 << up)) and results[ids[1]] is None:
            results[ids[1]] = {"u": u, "u_prime": up}
        for w in sorted(d.Wprime):
            t = tw_masks[w]
            if (not is_clique_mask(g, t) or adj[up] & t) and results[ids[2]] is None:
                results[ids[2]] = {"u": u, "u_prime": up, "w": w}
        nbh = 0
        for z in iter_bits(tpp):
            nbh |= adj[z]
        nbh &= ~tpp
        if nbh & ~(imask | (1 << u) | (1 << up)) and results[ids[3]] is None:
            results[ids[3]] = {"u": u, "u_prime": up}
        iprime = wmask | (1 << up)
        if is_independent_mask(g, iprime) and iprime.bit_count() == imask.bit_count():
            res = odd_clique_obstruction_search(g, d.I, iter_bits(iprime), u, (True, []))
            if res.hypotheses_hold:
                if res.clique is not None:
                    obstruction_status = FAIL
                    results[ids[4]] = {"u": u, "clique": sorted(res.clique)}
                elif obstruction_status != FAIL:
                    obstruction_status = PASS
    for cid in ids[:4]:
        report.add(cid, FAIL if results[cid] else PASS, results[cid])
    report.add(ids[4], obstruction_status, results[ids[4]])


# -- odd clique obstruction ------------------------------------------------------


@dataclass(frozen=True)
class ObstructionResult:
    clique: Optional[frozenset[int]]
    hypotheses_hold: bool
    unmet: tuple[str, ...] = ()


def odd_clique_obstruction_search(
    g: Graph,
    I: Iterable[int],
    Iprime: Iterable[int],
    u: int,
    membership: Optional[tuple[bool, list[str]]] = None,
) -> ObstructionResult:
    """Look for an odd clique ``X`` of ``G - (I + u)`` with ``|X| >= 3``,
    ``|X & I'| = 1`` and ``N(X) <= {u} + X + I``.

    Such an ``X`` is closed under taking neighbours outside ``I + u``, so
    for each ``x`` in ``I'`` the only candidate is the closure of ``{x}``;
    checking those candidates is therefore exhaustive.
    """
    imask = g.mask_of(I)
    ipmask = g.mask_of(Iprime)
    a = alpha(g)
    if imask & ipmask:
        raise ValueError("I and I' must be disjoint")
    if not (is_independent_mask(g, imask) and is_independent_mask(g, ipmask)):
        raise ValueError("I and I' must be independent")
    if imask.bit_count() != a or ipmask.bit_count() != a:
        raise ValueError("I and I' must both be maximum independent sets")
    if (imask | ipmask) >> u & 1:
        raise ValueError("u must lie outside I and I'")
    adj = g.adj
    blocked = imask | (1 << u)
    unmet = []
    member, why = membership if membership is not None else class_membership(g)
    if not member:
        unmet.append("graph not in target class: " + ", ".join(why))
    rest = g.vertex_mask & ~(imask | ipmask | (1 << u))
    if not _has_perfect_matching_mask(g, rest):
        unmet.append("G - (I + I' + u) has no perfect matching")
    if any((adj[x] & ipmask).bit_count() > 1 for x in iter_bits(rest)):
        unmet.append("some vertex outside I + I' + u has two neighbours in I'")
    found = None
    for x0 in iter_bits(ipmask):
        closure = 1 << x0
        frontier = closure
        while frontier:
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= adj[x]
            nxt &= ~blocked & ~closure
            closure |= nxt
            frontier = nxt
        size = closure.bit_count()
        if (
            size >= 3
            and size % 2 == 1
            and (closure & ipmask).bit_count() == 1
            and is_clique_mask(g, closure)
        ):
            found = _set(closure)
            break
    return ObstructionResult(found, not unmet, tuple(unmet))


def obstruction_instances(g: Graph, cap: int = 50) -> Iterator[tuple[frozenset[int], frozenset[int], int]]:
    """All ``(I, I', u)`` with ``I``, ``I'`` disjoint maximum independent sets and ``u`` outside both."""
    sets = []
    for k, m in enumerate(iter_maximum_independent_sets(g)):
        if k >= cap:
            break
        sets.append(m)
    for a in sets:
        for b in sets:
            if a != b and not a & b:
                for u in iter_bits(g.vertex_mask & ~(a | b)):
                    yield _set(a), _set(b), u


# -- balanced bipartition after removing one vertex --------------------------------


@dataclass(frozen=True)
class BalancedSplit:
    found: Optional[tuple[int, frozenset[int], frozenset[int]]]
    hypotheses_hold: bool
    is_f_graph: Optional[bool] = None


def balanced_split_hypotheses(g: Graph) -> bool:
    r = regularity(g)
    return (
        r is not None
        and r >= 6
        and r % 2 == 0
        and is_connected(g)
        and is_equimatchable(g).equimatchable
    )


def balanced_split_search(g: Graph) -> BalancedSplit:
    """Find the lowest ``u`` such that ``G - u`` splits into two independent sets
    of equal size. Under the hypotheses (connected, equimatchable, r-regular,
    even r >= 6) success must coincide with ``G`` being ``F_r``; a mismatch
    raises ``AssertionError``.
    """
    found = None
    if g.n % 2 == 1:
        for u in range(g.n):
            split = _balanced_split(g, g.vertex_mask & ~(1 << u))
            if split is not None:
                found = (u, _set(split[0]), _set(split[1]))
                break
    hyp = balanced_split_hypotheses(g)
    is_f = None
    if hyp:
        r = regularity(g)
        is_f = recognize_family(g) == FamilySpec("F", (r,))
        if is_f != (found is not None):
            raise AssertionError("balanced split existence disagrees with F_r recognition")
    return BalancedSplit(found, hyp, is_f)


def _balanced_split(g: Graph, within: int) -> Optional[tuple[int, int]]:
    comps = []
    for comp in components(g, within):
        bp = bipartition(g, comp)
        if bp is None:
            return None
        comps.append(bp)
    total = within.bit_count()
    if total % 2:
        return None
    # subset-sum over component orientations
    reach: dict[int, tuple[int, int]] = {0: (0, 0)}
    for s0, s1 in comps:
        nxt: dict[int, tuple[int, int]] = {}
        for size, (xa, ya) in reach.items():
            for a, b in ((s0, s1), (s1, s0)):
                key = size + a.bit_count()
                if key not in nxt:
                    nxt[key] = (xa | a, ya | b)
        reach = nxt
    return reach.get(total // 2)


# -- orchestration ---------------------------------------------------------------


@dataclass
class FullAudit:
    reports: list[AuditReport]
    obstruction: list[tuple[tuple, ObstructionResult]]
    partition: BalancedSplit
    decompositions: int

    @property
    def failures(self) -> list[CheckResult]:
        return [c for rep in self.reports for c in rep.failures]

    @property
    def obstruction_failures(self) -> list[tuple]:
        return [inst for inst, res in self.obstruction if res.hypotheses_hold and res.clique is not None]


def audit_graph(
    g: Graph,
    set_cap: int = 50,
    matchings_per_vertex: int = 20,
    samples: int = 1000,
    seed: int = 0,
) -> FullAudit:
    """Audit every decomposition over maximum independent sets (up to ``set_cap``),
    every ``v`` in each, and up to ``matchings_per_vertex`` perfect matchings of
    ``G - v``; then run the odd-clique search over disjoint pairs of maximum
    independent sets and the balanced-split search.
    """
    rng = random.Random(seed)
    membership = class_membership(g)
    reports = []
    first = True
    count = 0
    for k, imask in enumerate(iter_maximum_independent_sets(g)):
        if k >= set_cap:
            break
        for v in iter_bits(imask):
            rest = g.vertex_mask & ~(1 << v)
            mvs = sample_perfect_matchings(g, rest, matchings_per_vertex, rng)
            if not mvs:
                raise NoPerfectMatchingError(f"G - {v} has no perfect matching")
            for mv in mvs:
                d = build_decomposition(g, iter_bits(imask), v, mv)
                reports.append(audit_decomposition(g, d, samples, seed, graph_level=first, membership=membership))
                first = False
                count += 1
    obstruction = [
        ((sorted(a), sorted(b), u), odd_clique_obstruction_search(g, a, b, u, membership))
        for a, b, u in obstruction_instances(g, set_cap)
    ]
    return FullAudit(reports, obstruction, balanced_split_search(g), count)
