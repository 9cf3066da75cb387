"""Immutable multigraphs with parallel edges and loops.

Vertices are the integers ``0..n-1``. An edge is stored once per unordered
pair ``(u, v)`` with ``u < v`` together with its multiplicity; loops are kept
as a per-vertex count. Every "mutation" returns a new graph.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping, Optional

from .errors import InvalidVertexError, MissingEdgeError, PreconditionError

VertexSet = frozenset


class MultiGraph:
    __slots__ = ("n", "_mult", "_loops", "_adj", "_hash")

    def __init__(self, n: int, mult: Optional[Mapping[tuple[int, int], int]] = None,
                 loops: Optional[Iterable[int]] = None):
        if n < 0:
            raise InvalidVertexError(f"negative vertex count {n}")
        self.n = n
        clean: dict[tuple[int, int], int] = {}
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        for (u, v), m in (mult or {}).items():
            if m == 0:
                continue
            if m < 0:
                raise ValueError(f"negative multiplicity on {u}-{v}")
            if u == v:
                raise ValueError("loops go in the loops argument")
            self._check(u)
            self._check(v)
            key = (u, v) if u < v else (v, u)
            clean[key] = clean.get(key, 0) + m
        for (u, v), m in clean.items():
            adj[u][v] = m
            adj[v][u] = m
        loop_counts = tuple(loops) if loops is not None else (0,) * n
        if len(loop_counts) != n or any(c < 0 for c in loop_counts):
            raise ValueError("loops must give one nonnegative count per vertex")
        self._mult = clean
        self._loops = loop_counts
        self._adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "MultiGraph":
        """Build from an edge list; repeated pairs add multiplicity, ``(v, v)`` is a loop."""
        mult: dict[tuple[int, int], int] = {}
        loops = [0] * n
        for u, v in edges:
            if u == v:
                if not 0 <= u < n:
                    raise InvalidVertexError(f"vertex {u} out of range 0..{n - 1}")
                loops[u] += 1
            else:
                key = (u, v) if u < v else (v, u)
                mult[key] = mult.get(key, 0) + 1
        return cls(n, mult, loops)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidVertexError(f"vertex {v} out of range 0..{self.n - 1}")

    # -- basic queries -------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def multiplicity(self, u: int, v: int) -> int:
        self._check(u)
        self._check(v)
        if u == v:
            return self._loops[u]
        return self._adj[u].get(v, 0)

    def loops(self, v: int) -> int:
        self._check(v)
        return self._loops[v]

    def adjacency(self, v: int) -> Mapping[int, int]:
        """Neighbor -> multiplicity, loops excluded. Do not mutate."""
        self._check(v)
        return self._adj[v]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, multiplicity)`` with ``u < v``, sorted."""
        for (u, v) in sorted(self._mult):
            yield u, v, self._mult[(u, v)]

    def loop_items(self) -> Iterator[tuple[int, int]]:
        for v, c in enumerate(self._loops):
            if c:
                yield v, c

    @property
    def edge_count(self) -> int:
        return sum(self._mult.values()) + sum(self._loops)

    def degree(self, v: int) -> int:
        self._check(v)
        return sum(self._adj[v].values()) + 2 * self._loops[v]

    def degrees(self) -> list[int]:
        return [sum(self._adj[v].values()) + 2 * self._loops[v] for v in range(self.n)]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighborhood(self, v: int) -> frozenset:
        self._check(v)
        nb = set(self._adj[v])
        if self._loops[v]:
            nb.add(v)
        return frozenset(nb)

    def closed_neighborhood(self, v: int) -> frozenset:
        return self.neighborhood(v) | {v}

    def neighborhood_of_set(self, xs: Iterable[int]) -> frozenset:
        out: set[int] = set()
        for x in xs:
            out |= self.neighborhood(x)
        return frozenset(out)

    def distances_from(self, v: int) -> list[Optional[int]]:
        """BFS distances ignoring multiplicity; ``None`` marks unreachable vertices."""
        self._check(v)
        dist: list[Optional[int]] = [None] * self.n
        dist[v] = 0
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in sorted(self._adj[x]):
                if dist[y] is None:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def neighborhood_2(self, v: int) -> frozenset:
        dist = self.distances_from(v)
        return frozenset(u for u, d in enumerate(dist) if d == 2)

    def edges_between(self, a: Iterable[int], b: Iterable[int]) -> int:
        a, b = frozenset(a), frozenset(b)
        for x in a | b:
            self._check(x)
        if a & b:
            raise PreconditionError(f"sets overlap on {sorted(a & b)}")
        small, other = (a, b) if len(a) <= len(b) else (b, a)
        return sum(m for x in small for y, m in self._adj[x].items() if y in other)

    def has_multi_edge_at(self, v: int) -> bool:
        self._check(v)
        return self._loops[v] > 0 or any(m >= 2 for m in self._adj[v].values())

    def is_simple(self) -> bool:
        return not any(self._loops) and all(m == 1 for m in self._mult.values())

    # -- structure ------------------------------------------------------

    def bipartition(self) -> Optional[tuple[frozenset, frozenset]]:
        """2-colour by BFS; ``None`` on an odd cycle or any loop.

        Components are coloured in order of their smallest vertex, which is
        always placed on the first side.
        """
        if any(self._loops):
            return None
        colour: list[int] = [-1] * self.n
        for s in range(self.n):
            if colour[s] != -1:
                continue
            colour[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if colour[y] == -1:
                        colour[y] = 1 - colour[x]
                        queue.append(y)
                    elif colour[y] == colour[x]:
                        return None
        a = frozenset(v for v in range(self.n) if colour[v] == 0)
        b = frozenset(v for v in range(self.n) if colour[v] == 1)
        return a, b

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def components(self) -> list[frozenset]:
        seen: set[int] = set()
        out = []
        for s in range(self.n):
            if s not in seen:
                comp = frozenset(u for u, d in enumerate(self.distances_from(s)) if d is not None)
                seen |= comp
                out.append(comp)
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d is not None for d in self.distances_from(0))

    # -- derived graphs -------------------------------------------------

    def delete_edge(self, u: int, v: int) -> "MultiGraph":
        self._check(u)
        self._check(v)
        if u == v:
            if not self._loops[u]:
                raise MissingEdgeError(f"no loop at {u}")
            loops = list(self._loops)
            loops[u] -= 1
            return MultiGraph(self.n, self._mult, loops)
        key = (u, v) if u < v else (v, u)
        if key not in self._mult:
            raise MissingEdgeError(f"no edge {u}-{v}")
        mult = dict(self._mult)
        mult[key] -= 1
        return MultiGraph(self.n, mult, self._loops)

    def add_edge(self, u: int, v: int, count: int = 1) -> "MultiGraph":
        self._check(u)
        self._check(v)
        if u == v:
            loops = list(self._loops)
            loops[u] += count
            return MultiGraph(self.n, self._mult, loops)
        key = (u, v) if u < v else (v, u)
        mult = dict(self._mult)
        mult[key] = mult.get(key, 0) + count
        return MultiGraph(self.n, mult, self._loops)

    def relabel(self, perm: Mapping[int, int] | list[int]) -> "MultiGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]`` (a bijection)."""
        mult = {(perm[u], perm[v]): m for (u, v), m in self._mult.items()}
        loops = [0] * self.n
        for v, c in enumerate(self._loops):
            loops[perm[v]] = c
        return MultiGraph(self.n, mult, loops)

    def underlying_simple(self) -> "MultiGraph":
        return MultiGraph(self.n, {e: 1 for e in self._mult})

    def induced(self, keep: Iterable[int]) -> "MultiGraph":
        """Induced subgraph on ``keep``, renumbered in increasing order."""
        order = sorted(set(keep))
        index = {v: i for i, v in enumerate(order)}
        mult = {(index[u], index[v]): m for (u, v), m in self._mult.items()
                if u in index and v in index}
        return MultiGraph(len(order), mult, [self._loops[v] for v in order])

    # -- dunder ---------------------------------------------------------

    def _key(self):
        return self.n, tuple(sorted(self._mult.items())), self._loops

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        parts = [f"{u}-{v}" + (f"x{m}" if m > 1 else "") for u, v, m in self.edges()]
        parts += [f"loop{v}" + (f"x{c}" if c > 1 else "") for v, c in self.loop_items()]
        return f"MultiGraph(n={self.n}, [{', '.join(parts)}])"


def disjoint_union(graphs) -> MultiGraph:
    mult: dict[tuple[int, int], int] = {}
    loops: list[int] = []
    offset = 0
    for g in graphs:
        for u, v, m in g.edges():
            mult[(u + offset, v + offset)] = m
        loops += [g.loops(v) for v in g.vertices()]
        offset += g.n
    return MultiGraph(offset, mult, loops)


# Functional aliases, one per library operation.

def degree(g: MultiGraph, v: int) -> int:
    return g.degree(v)


def neighborhood(g: MultiGraph, v: int) -> frozenset:
    return g.neighborhood(v)


def neighborhood_2(g: MultiGraph, v: int) -> frozenset:
    return g.neighborhood_2(v)


def edges_between(g: MultiGraph, a, b) -> int:
    return g.edges_between(a, b)


def bipartition(g: MultiGraph):
    return g.bipartition()


def delete_edge(g: MultiGraph, u: int, v: int) -> MultiGraph:
    return g.delete_edge(u, v)


def is_connected(g: MultiGraph) -> bool:
    return g.is_connected()
