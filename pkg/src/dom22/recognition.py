"""Recognisers for minimal (2,2)-dominated graphs and subdivision graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .domination import KLPair, is_kl_dominated
from .errors import NotMinimalError, PreconditionError, TooLargeError
from .multigraph import MultiGraph

ORACLE_MAX_VERTICES = 16


@dataclass(frozen=True)
class DegreeSplit:
    a2: frozenset
    a3: frozenset
    b2: frozenset
    b3: frozenset

    @property
    def measure(self) -> int:
        return min(len(self.a3), len(self.b3))


def structural_failure(g: MultiGraph) -> Optional[str]:
    """Why ``g`` fails the three structural properties, or ``None`` if it passes."""
    if g.n == 0:
        return "empty graph"
    degrees = g.degrees()
    if min(degrees) < 2:
        v = degrees.index(min(degrees))
        return f"minimum degree < 2 (vertex {v} has degree {degrees[v]})"
    if g.bipartition() is None:
        return "not bipartite"
    for u, v, _ in g.edges():
        if degrees[u] != 2 and degrees[v] != 2:
            return f"edge with both endpoints of degree >= 3 ({u}-{v})"
    return None


def is_minimal_22_structural(g: MultiGraph) -> bool:
    return structural_failure(g) is None


def is_minimal_22_oracle(g: MultiGraph, max_vertices: int = ORACLE_MAX_VERTICES) -> bool:
    """Brute force: (2,2)-dominated, and no single edge copy can be dropped.

    Single deletions suffice because (2,2)-domination survives adding edges.
    """
    if g.n > max_vertices:
        raise TooLargeError(f"{g.n} vertices exceeds the oracle bound of {max_vertices}")
    if not is_kl_dominated(g, 2, 2, max_vertices):
        return False
    for u, v, _ in g.edges():
        if is_kl_dominated(g.delete_edge(u, v), 2, 2, max_vertices):
            return False
    for v, _ in g.loop_items():
        if is_kl_dominated(g.delete_edge(v, v), 2, 2, max_vertices):
            return False
    return True


def extract_partition_pair(g: MultiGraph) -> KLPair:
    reason = structural_failure(g)
    if reason is not None:
        raise NotMinimalError(reason)
    a, b = g.bipartition()
    return KLPair(a, b, 2, 2)


def degree_split(g: MultiGraph, sides: Optional[tuple[frozenset, frozenset]] = None) -> DegreeSplit:
    if sides is None:
        sides = g.bipartition()
        if sides is None:
            raise PreconditionError("graph is not bipartite")
    a, b = sides
    if g.min_degree() < 2:
        raise PreconditionError("minimum degree below 2")
    deg = g.degrees()
    return DegreeSplit(
        a2=frozenset(x for x in a if deg[x] == 2),
        a3=frozenset(x for x in a if deg[x] != 2),
        b2=frozenset(x for x in b if deg[x] == 2),
        b3=frozenset(x for x in b if deg[x] != 2),
    )


def is_subdivision_graph(g: MultiGraph) -> Optional[MultiGraph]:
    """Return the pre-image H with ``S(H) = g``, or ``None``.

    The kept side is renumbered in increasing order. If both sides consist of
    degree-2 vertices the larger one is contracted, ties going to the second.
    """
    if not g.is_connected():
        return None
    sides = g.bipartition()
    if sides is None:
        return None
    a, b = sides
    deg = g.degrees()
    a_ok = all(deg[x] == 2 for x in a)
    b_ok = all(deg[x] == 2 for x in b)
    if b_ok and (not a_ok or len(b) >= len(a)):
        middle, kept = b, a
    elif a_ok:
        middle, kept = a, b
    else:
        return None
    index = {v: i for i, v in enumerate(sorted(kept))}
    edges = []
    for x in sorted(middle):
        ends = []
        for y, m in g.adjacency(x).items():
            ends += [y] * m
        edges.append((index[ends[0]], index[ends[1]]))
    return MultiGraph.from_edges(len(kept), edges)
