"""Subdivision, P-contraction, and decomposition of minimal (2,2)-dominated graphs.

Vertex numbering conventions
----------------------------
``p_contraction`` sends every block ``S`` to the id ``min(S)``, deletes the
other members of ``S`` and closes the gaps, so surviving vertices keep their
relative order. A singleton partition is therefore the identity.

``expand`` reuses the id of the split vertex for the first new vertex and
appends the others at the end. With these two rules, contracting the
expanded graph by the recorded step reproduces the original graph exactly,
not just up to isomorphism, and a certificate replays label for label.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import (CertificateError, ContractibilityError, NotMinimalError,
                     PartitionError, PreconditionError)
from .multigraph import MultiGraph
from .recognition import degree_split, is_subdivision_graph, structural_failure


def _block_key(block: frozenset):
    return len(block), sorted(block)


@dataclass(frozen=True)
class Partition:
    """A partition of the neighbourhood of ``center``; blocks are kept smallest first."""
    center: int
    blocks: tuple

    def __init__(self, center: int, blocks: Iterable[Iterable[int]]):
        object.__setattr__(self, "center", center)
        frozen = [frozenset(b) for b in blocks]
        object.__setattr__(self, "blocks", tuple(sorted(frozen, key=_block_key)))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def removed(self) -> frozenset:
        out: set[int] = set()
        for b in self.blocks:
            out |= b - {min(b)}
        return frozenset(out)

    def name_map(self) -> dict:
        """Block -> id of the merged vertex in the contracted graph."""
        gone = sorted(self.removed())
        out = {}
        for b in self.blocks:
            r = min(b)
            out[b] = r - sum(1 for x in gone if x < r)
        return out


# A contraction step carries nothing beyond its partition: the ids of the
# merged vertices follow from the numbering convention (see ``name_map``).
ContractionStep = Partition


@dataclass(frozen=True)
class ExpansionRecord:
    split_vertex: int
    anchor: int
    parallel_pairs: tuple
    singles: tuple
    new_vertices: tuple


@dataclass(frozen=True)
class Certificate:
    seed: MultiGraph
    steps: tuple = field(default_factory=tuple)


# -- subdivision --------------------------------------------------------

def subdivide(h: MultiGraph) -> MultiGraph:
    """Insert a vertex into every edge copy and every loop of ``h``.

    New vertices are numbered from ``h.n`` on, edge copies first in sorted
    pair order, then loops by vertex.
    """
    edges = []
    nxt = h.n
    for u, v, m in h.edges():
        for _ in range(m):
            edges += [(u, nxt), (nxt, v)]
            nxt += 1
    for v, c in h.loop_items():
        for _ in range(c):
            edges += [(v, nxt), (v, nxt)]
            nxt += 1
    return MultiGraph.from_edges(nxt, edges)


# -- P-contraction ------------------------------------------------------

def is_contractible(g: MultiGraph, v: int) -> bool:
    return not g.has_multi_edge_at(v)


def check_partition(g: MultiGraph, p: Partition) -> None:
    """Raise unless ``p`` is a well-formed partition at a contractible centre."""
    v = p.center
    g.multiplicity(v, v)
    if not is_contractible(g, v):
        raise ContractibilityError(f"vertex {v} is incident with a multi-edge or loop")
    if not p.blocks or any(not b for b in p.blocks):
        raise PartitionError("blocks must be nonempty")
    seen: set[int] = set()
    for b in p.blocks:
        if seen & b:
            raise PartitionError(f"blocks overlap on {sorted(seen & b)}")
        seen |= b
    if seen != g.neighborhood(v):
        raise PartitionError(
            f"blocks cover {sorted(seen)} but N({v}) = {sorted(g.neighborhood(v))}")


def p_contraction(g: MultiGraph, p: Partition) -> MultiGraph:
    check_partition(g, p)
    if not g.is_bipartite():
        raise PreconditionError("P-contraction is defined on bipartite graphs")
    v = p.center
    rep = {x: min(b) for b in p.blocks for x in b}
    removed = p.removed()
    index = {}
    for x in range(g.n):
        if x not in removed:
            index[x] = len(index)
    mult: dict[tuple[int, int], int] = {}
    for x, y, m in g.edges():
        if x == v or y == v:
            continue
        key = (index[rep.get(x, x)], index[rep.get(y, y)])
        mult[key] = mult.get(key, 0) + m
    for b in p.blocks:
        mult[(index[v], index[min(b)])] = 1
    loops = [0] * len(index)
    for x, c in g.loop_items():
        loops[index[x]] = c
    return MultiGraph(len(index), mult, loops)


def validate_partition(g: MultiGraph, p: Partition) -> bool:
    """Whether contracting a minimal graph by ``p`` keeps it minimal."""
    reason = structural_failure(g)
    if reason is not None:
        raise NotMinimalError(reason)
    check_partition(g, p)
    v = p.center
    if p.k == len(g.neighborhood(v)):
        return True
    if p.k != 2:
        return False
    for b in p.blocks:
        if len(b) >= 2:
            if any(g.degree(x) != 2 for x in g.neighborhood_of_set(b) - {v}):
                return False
    return True


def is_closure_step(g: MultiGraph, p: Partition) -> bool:
    """The restricted contraction that generates the family from subdivision graphs:
    centre of degree >= 3, two blocks, a singleton first block, and degree 2
    everywhere in the second block's neighbourhood apart from the centre."""
    v = p.center
    if g.degree(v) < 3 or p.k != 2 or len(p.blocks[0]) != 1:
        return False
    return all(g.degree(x) == 2 for x in g.neighborhood_of_set(p.blocks[1]) - {v})


def closure_steps(g: MultiGraph) -> list[Partition]:
    """Every restricted contraction available in ``g``, in deterministic order."""
    out = []
    for v in g.vertices():
        if g.degree(v) < 3 or not is_contractible(g, v):
            continue
        nb = sorted(g.neighborhood(v))
        for w in nb:
            p = Partition(v, [[w], [x for x in nb if x != w]])
            if is_closure_step(g, p):
                out.append(p)
    return out


# -- expansion and decomposition ----------------------------------------

def _require_minimal_connected(g: MultiGraph) -> None:
    reason = structural_failure(g)
    if reason is not None:
        raise NotMinimalError(reason)
    if not g.is_connected():
        raise PreconditionError("graph is disconnected")


def expand_detailed(g: MultiGraph) -> Optional[tuple[MultiGraph, Partition, ExpansionRecord]]:
    _require_minimal_connected(g)
    a, b = g.bipartition()
    split = degree_split(g, (a, b))
    if split.measure == 0:
        return None
    a3, b3 = split.a3, split.b3
    if len(a3) < len(b3) or (len(a3) == len(b3) and min(a3) < min(b3)):
        a3, b3 = b3, a3

    best = None
    for v in sorted(b3):
        dist = g.distances_from(v)
        for u in sorted(a3):
            if dist[u] is not None and (best is None or dist[u] < best[0]):
                best = (dist[u], v, u, dist)
    _, v, u, dist = best
    path = [u]
    while path[-1] != v:
        x = path[-1]
        path.append(min(y for y in g.adjacency(x) if dist[y] == dist[x] - 1))
    path.reverse()
    v1, v2 = path[1], path[2]

    parallel = []
    singles = []
    for x in sorted(g.adjacency(v)):
        if x == v1:
            continue
        m = g.multiplicity(v, x)
        if m == 2:
            parallel.append(x)
        elif m == 1:
            singles.append(x)
        else:
            raise PreconditionError(f"multiplicity {m} on {v}-{x} in a minimal graph")
    attached = [p for p in parallel for _ in range(2)] + singles
    new_ids = [v] + list(range(g.n, g.n + len(attached) - 1))

    edges = []
    for x, y, m in g.edges():
        if v not in (x, y):
            edges += [(x, y)] * m
    for w, t in zip(new_ids, attached):
        edges += [(v1, w), (w, t)]
    g2 = MultiGraph.from_edges(g.n + len(attached) - 1, edges)
    step = Partition(v1, [[v2], new_ids])
    record = ExpansionRecord(v, v1, tuple(parallel), tuple(singles), tuple(new_ids))
    return g2, step, record


def expand(g: MultiGraph) -> Optional[tuple[MultiGraph, Partition]]:
    out = expand_detailed(g)
    return None if out is None else out[:2]


def decompose(g: MultiGraph) -> Certificate:
    """Peel ``g`` down to a subdivision graph, recording contraction steps."""
    _require_minimal_connected(g)
    steps = []
    current = g
    while True:
        out = expand(current)
        if out is None:
            break
        current, step = out
        steps.append(step)
    assert is_subdivision_graph(current) is not None
    return Certificate(current, tuple(reversed(steps)))


def replay(c: Certificate) -> MultiGraph:
    g = c.seed
    reason = structural_failure(g)
    if reason is not None:
        raise CertificateError(f"seed is not minimal: {reason}")
    if not g.is_connected() or is_subdivision_graph(g) is None:
        raise CertificateError("seed is not a connected subdivision graph")
    for i, step in enumerate(c.steps):
        try:
            ok = validate_partition(g, step)
        except PreconditionError as exc:
            raise CertificateError(f"step {i}: {exc}", step_index=i) from exc
        if not ok:
            raise CertificateError(f"step {i}: partition at {step.center} breaks minimality",
                                   step_index=i)
        g = p_contraction(g, step)
        if structural_failure(g) is not None:
            raise CertificateError(f"step {i}: result is not minimal", step_index=i)
    return g
