"""Equimatchability decisions and structural classification of equimatchable graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .canon import canonicalize
from .families import cycle, f_graph
from .graph import (
    Graph,
    bipartition,
    complement,
    is_biconnected,
    is_connected,
    regularity,
    remove_vertices,
)
from .matching import (
    Matching,
    find_small_maximal_matching,
    is_factor_critical,
    iter_minimal_isolating,
    maximum_matching,
)


class ClassificationError(AssertionError):
    """A structural shortcut disagreed with the exact equimatchability search."""


@dataclass(frozen=True)
class EqmVerdict:
    equimatchable: bool
    nu: int
    witness: Optional[Matching] = None


def is_equimatchable(g: Graph) -> EqmVerdict:
    """Decide whether every maximal matching of ``g`` is maximum.

    When the answer is no, ``witness`` is a maximal matching smaller than ``nu``.
    """
    nu = len(maximum_matching(g))
    small = find_small_maximal_matching(g, nu)
    return EqmVerdict(small is None, nu, small)


# -- 2-connected equimatchable trichotomy --------------------------------------


class TwoConnectedClass(str, Enum):
    BIPARTITE = "Bipartite"
    FACTOR_CRITICAL = "FactorCritical"
    COMPLETE_EVEN = "CompleteEven"
    NOT_APPLICABLE = "NotApplicable"


def _is_complete(g: Graph) -> bool:
    return g.num_edges() == g.n * (g.n - 1) // 2


def classify_2connected_equimatchable(g: Graph) -> TwoConnectedClass:
    if not is_biconnected(g) or not is_equimatchable(g).equimatchable:
        return TwoConnectedClass.NOT_APPLICABLE
    if _is_complete(g) and g.n % 2 == 0:
        return TwoConnectedClass.COMPLETE_EVEN
    if bipartition(g) is not None:
        return TwoConnectedClass.BIPARTITE
    if is_factor_critical(g):
        return TwoConnectedClass.FACTOR_CRITICAL
    raise ClassificationError(
        "2-connected equimatchable graph is neither bipartite, factor-critical nor K_2t"
    )


# -- shape of the graph left after isolating a vertex ------------------------


@dataclass(frozen=True)
class RemainderShape:
    shape: str  # "CompleteEven", "BalancedCompleteBipartite" or "Other"
    t: int = 0

    def __str__(self) -> str:
        return self.shape if self.shape == "Other" else f"{self.shape}({self.t})"


def remainder_shape(g: Graph) -> RemainderShape:
    """Recognise ``K_2t`` (the null graph is ``K_0``) or ``K_{t,t}``; anything else is Other."""
    n = g.n
    if n % 2 == 0 and _is_complete(g):
        return RemainderShape("CompleteEven", n // 2)
    bp = bipartition(g)
    if bp is not None:
        a, b = bp[0].bit_count(), bp[1].bit_count()
        if a == b and g.num_edges() == a * b:
            return RemainderShape("BalancedCompleteBipartite", a)
    return RemainderShape("Other")


@dataclass
class RemainderAuditReport:
    """Outcome of checking every minimal isolating matching of every vertex."""

    order: int
    matchings_checked: int = 0
    empty_remainders: int = 0
    truncated_vertices: list[int] = field(default_factory=list)
    counterexamples: list[tuple[int, Matching, RemainderShape]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def audit_isolation_remainders(g: Graph, per_vertex_cap: Optional[int] = 200) -> RemainderAuditReport:
    """For each vertex ``v`` and minimal matching ``M`` isolating it, check that
    ``g - (V(M) + v)`` is ``K_2t`` or ``K_{t,t}``.

    Requires ``g`` to be 2-connected, factor-critical and equimatchable. An
    empty remainder counts as ``K_0`` and is tallied in ``empty_remainders``.
    """
    if not is_biconnected(g):
        raise ValueError("graph is not 2-connected")
    if not is_factor_critical(g):
        raise ValueError("graph is not factor-critical")
    if not is_equimatchable(g).equimatchable:
        raise ValueError("graph is not equimatchable")
    report = RemainderAuditReport(order=g.n)
    for v in range(g.n):
        for k, m in enumerate(iter_minimal_isolating(g, v)):
            if per_vertex_cap is not None and k >= per_vertex_cap:
                report.truncated_vertices.append(v)
                break
            rest, _ = remove_vertices(g, list(m.covered) + [v])
            shape = remainder_shape(rest)
            report.matchings_checked += 1
            if rest.n == 0:
                report.empty_remainders += 1
            if shape.shape == "Other":
                report.counterexamples.append((v, m, shape))
    return report


# -- regular graphs ------------------------------------------------------------


@dataclass(frozen=True)
class RegularClass:
    """Family verdict for a graph; ``param`` carries r or the exceptional graph's name."""

    tag: str
    param: object = None
    equimatchable: Optional[bool] = None

    def __str__(self) -> str:
        return self.tag if self.param is None else f"{self.tag}({self.param})"


EQUIMATCHABLE_TAGS = frozenset(
    {"CompleteKr1", "CompleteBipartiteKrr", "FourRegularExceptional", "FGraph", "EquimatchableOther"}
)

_FOUR_REGULAR_EXCEPTIONS = {
    "complement_C7": lambda: complement(cycle(7)),
    "complement_F4": lambda: complement(f_graph(4)),
}


def _named_regular_family(g: Graph, r: int) -> Optional[RegularClass]:
    n = g.n
    if n == r + 1 and _is_complete(g):
        return RegularClass("CompleteKr1", r)
    if n == 2 * r and r >= 1:
        bp = bipartition(g)
        if bp is not None and bp[0].bit_count() == r and g.num_edges() == r * r:
            return RegularClass("CompleteBipartiteKrr", r)
    if r >= 2 and r % 2 == 0 and n == 2 * r + 1:
        if canonicalize(g) == canonicalize(f_graph(r)):
            return RegularClass("FGraph", r)
    if r == 4:
        cert = canonicalize(g)
        for name, build in _FOUR_REGULAR_EXCEPTIONS.items():
            if build().n == n and canonicalize(build()) == cert:
                return RegularClass("FourRegularExceptional", name)
    return None


def classify_regular(g: Graph) -> RegularClass:
    """Tag a graph against the known equimatchable regular families.

    Named families are recognised by isomorphism and then confirmed by the
    exact equimatchability search; a disagreement raises ``ClassificationError``.
    Connected regular graphs outside the named families are tagged
    ``EquimatchableOther`` or ``NotEquimatchable`` from the search alone.
    """
    r = regularity(g)
    if r is None:
        return RegularClass("NotRegular")
    verdict = is_equimatchable(g).equimatchable
    if not is_connected(g):
        return RegularClass("Disconnected", None, verdict)
    named = _named_regular_family(g, r)
    if named is not None:
        if not verdict:
            raise ClassificationError(f"{named} recognised but exact search says not equimatchable")
        return RegularClass(named.tag, named.param, True)
    return RegularClass("EquimatchableOther" if verdict else "NotEquimatchable", None, verdict)


def even_regular_dichotomy_holds(g: Graph) -> bool:
    """Connected equimatchable even-regular graphs are K_{r,r} or factor-critical."""
    r = regularity(g)
    if r is None or r % 2 or not is_connected(g) or not is_equimatchable(g).equimatchable:
        return True
    n = g.n
    if n == 2 * r and g.num_edges() == r * r and bipartition(g) is not None:
        return True
    return is_factor_critical(g)


__all__ = [
    "ClassificationError",
    "EqmVerdict",
    "RegularClass",
    "RemainderAuditReport",
    "RemainderShape",
    "TwoConnectedClass",
    "audit_isolation_remainders",
    "classify_2connected_equimatchable",
    "classify_regular",
    "even_regular_dichotomy_holds",
    "is_equimatchable",
    "remainder_shape",
]
