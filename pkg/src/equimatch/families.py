"""Named graph families: complete, complete bipartite, cycles, paths, the
apex-extended bipartite graphs F_r, their complements, and two cubic
negative controls (Petersen graph and triangular prism).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canon import canonicalize
from .graph import Graph, bipartition, build_graph, complement, is_connected, regularity

KINDS = (
    "complete",
    "complete_bipartite",
    "cycle",
    "path",
    "complement_cycle",
    "F",
    "complement_F",
    "petersen",
    "prism",
)

_PARAMS = {
    "complete": ("n",),
    "complete_bipartite": ("a", "b"),
    "cycle": ("n",),
    "path": ("n",),
    "complement_cycle": ("n",),
    "F": ("r",),
    "complement_F": ("r",),
    "petersen": (),
    "prism": (),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in _PARAMS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")
        if len(self.params) != len(_PARAMS[self.kind]):
            names = ", ".join(_PARAMS[self.kind]) or "no parameters"
            raise ValueError(f"family {self.kind!r} takes {names}")

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        args = ",".join(f"{k}={v}" for k, v in zip(_PARAMS[self.kind], self.params))
        return f"{self.kind}({args})"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``family=F,r=6`` (or ``F,r=6``) style strings."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError("empty family spec")
        head = parts[0]
        kind = head.split("=", 1)[1] if head.startswith("family=") else head
        kind = _ALIASES.get(kind, kind)
        given: dict[str, int] = {}
        for p in parts[1:]:
            key, sep, val = p.partition("=")
            if not sep:
                raise ValueError(f"expected key=value, got {p!r}")
            given[key.strip()] = int(val)
        if kind not in _PARAMS:
            raise ValueError(f"unknown family {kind!r}")
        missing = [k for k in _PARAMS[kind] if k not in given]
        extra = [k for k in given if k not in _PARAMS[kind]]
        if missing or extra:
            raise ValueError(f"family {kind!r} needs exactly: {', '.join(_PARAMS[kind]) or 'nothing'}")
        return cls(kind, tuple(given[k] for k in _PARAMS[kind]))


_ALIASES = {
    "K": "complete",
    "Kab": "complete_bipartite",
    "C": "cycle",
    "P": "path",
    "Cbar": "complement_cycle",
    "Fbar": "complement_F",
}


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def f_graph(r: int) -> Graph:
    """K_{r,r} minus a matching of size r/2, plus an apex joined to that matching's ends.

    Labels: ``x_i -> i - 1``, ``y_i -> r + i - 1`` for ``i = 1..r``, apex ``2r``;
    the deleted matching is ``{x_i y_i : i <= r/2}``.
    """
    if r < 2 or r % 2:
        raise ValueError(f"F requires even r >= 2, got r={r}")
    half = r // 2
    apex = 2 * r
    edges = [(i, r + j) for i in range(r) for j in range(r) if not (i == j and i < half)]
    edges += [(apex, i) for i in range(half)] + [(apex, r + i) for i in range(half)]
    g = build_graph(2 * r + 1, edges)
    assert all(d == r for d in g.degrees())
    return g


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def prism() -> Graph:
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def build_family(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "complete":
        return complete(p[0])
    if k == "complete_bipartite":
        return complete_bipartite(*p)
    if k == "cycle":
        return cycle(p[0])
    if k == "path":
        return path(p[0])
    if k == "complement_cycle":
        return complement(cycle(p[0]))
    if k == "F":
        return f_graph(p[0])
    if k == "complement_F":
        return complement(f_graph(p[0]))
    if k == "petersen":
        return petersen()
    return prism()


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and regularity(g) == 2 and is_connected(g)


def recognize_family(g: Graph) -> Optional[FamilySpec]:
    """Name the characterisation family ``g`` belongs to, up to isomorphism.

    Only complete, complete bipartite, F, cycle and complement families are
    recognised; the negative controls (Petersen, prism, paths) are built but
    never named. Families overlap (``C_3 = K_3``, ``C_5 = F_2``, the prism is
    the complement of ``C_6``), so the first match in the order complete,
    complete bipartite, F, cycle, complement of F, complement of a cycle wins.
    """
    n, m = g.n, g.num_edges()
    if n >= 1 and m == n * (n - 1) // 2:
        return FamilySpec("complete", (n,))
    bp = bipartition(g)
    if bp is not None and m > 0:
        a, b = bp[0].bit_count(), bp[1].bit_count()
        if m == a * b:
            return FamilySpec("complete_bipartite", (min(a, b), max(a, b)))
    r = regularity(g)
    if r is not None and r >= 2 and r % 2 == 0 and n == 2 * r + 1:
        if canonicalize(g) == canonicalize(f_graph(r)):
            return FamilySpec("F", (r,))
    if _is_cycle(g):
        return FamilySpec("cycle", (n,))
    if r is not None and n % 2 == 1 and n >= 5:
        rc = n - 1 - r
        if rc >= 2 and rc % 2 == 0 and n == 2 * rc + 1:
            if canonicalize(g) == canonicalize(complement(f_graph(rc))):
                return FamilySpec("complement_F", (rc,))
    if n >= 3 and _is_cycle(complement(g)):
        return FamilySpec("complement_cycle", (n,))
    return None
