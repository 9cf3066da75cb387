"""Named families, products, random multigraphs, and small-graph enumeration."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import InvalidParameterError, PreconditionError, TooLargeError, UnsupportedError
from .isomorphism import are_isomorphic, automorphism_generators, invariant, orbit_representatives
from .multigraph import MultiGraph
from .transform import Certificate, closure_steps, p_contraction, subdivide

SIMPLE_ENUM_MAX = 8
MULTI_ENUM_MAX = 6


def _positive(**sizes):
    for name, value in sizes.items():
        if value < 1:
            raise InvalidParameterError(f"{name} must be positive, got {value}")


def cycle(n: int) -> MultiGraph:
    """C_n; C_2 is a double edge and C_1 a single loop."""
    _positive(n=n)
    return MultiGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MultiGraph:
    _positive(n=n)
    return MultiGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> MultiGraph:
    _positive(n=n)
    return MultiGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> MultiGraph:
    """K_{m,n} with the m-side on ids ``0..m-1``."""
    _positive(m=m, n=n)
    return MultiGraph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def theta(lengths=(3, 3, 3)) -> MultiGraph:
    """Internally disjoint paths of the given lengths between vertices 0 and 1."""
    edges = []
    nxt = 2
    for length in lengths:
        _positive(length=length)
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return MultiGraph.from_edges(nxt, edges)


def cartesian_product(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    """G x H on ids ``a * h.n + x``."""
    if not (g.is_simple() and h.is_simple()):
        raise UnsupportedError("Cartesian product is only defined here for simple graphs")
    edges = []
    for a in g.vertices():
        for x, y, _ in h.edges():
            edges.append((a * h.n + x, a * h.n + y))
    for a, b, _ in g.edges():
        for x in h.vertices():
            edges.append((a * h.n + x, b * h.n + x))
    return MultiGraph.from_edges(g.n * h.n, edges)


def random_multigraph(n: int, max_mult: int = 1, loop_prob: float = 0.0, seed: int = 0,
                      edge_prob: float = 0.5, min_degree: Optional[int] = None,
                      connected: bool = False, max_tries: int = 10_000) -> MultiGraph:
    """Reproducible random multigraph, optionally rejection-filtered.

    Each pair is an edge with probability ``edge_prob`` and multiplicity
    uniform in ``1..max_mult``; each vertex carries ``1..max_mult`` loops with
    probability ``loop_prob``.
    """
    _positive(n=n, max_mult=max_mult)
    rng = random.Random(seed)
    for _ in range(max_tries):
        mult = {}
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < edge_prob:
                    mult[(i, j)] = rng.randint(1, max_mult)
        loops = [rng.randint(1, max_mult) if rng.random() < loop_prob else 0 for _ in range(n)]
        g = MultiGraph(n, mult, loops)
        if min_degree is not None and g.min_degree() < min_degree:
            continue
        if connected and not g.is_connected():
            continue
        return g
    raise InvalidParameterError(f"no graph passed the filters in {max_tries} tries")


def random_F_graph(h: MultiGraph, steps: int, seed: int = 0) -> tuple[MultiGraph, Certificate]:
    """S(h) followed by up to ``steps`` random restricted contractions."""
    if h.n == 0 or not h.is_connected() or h.min_degree() < 2:
        raise PreconditionError("H must be connected with minimum degree >= 2")
    rng = random.Random(seed)
    seed_graph = subdivide(h)
    g = seed_graph
    done = []
    for _ in range(steps):
        options = closure_steps(g)
        if not options:
            break
        p = rng.choice(options)
        g = p_contraction(g, p)
        done.append(p)
    return g, Certificate(seed_graph, tuple(done))


def random_minimal_graph(branches: int = 3, extra_edges: int = 2, seed: int = 0,
                         max_vertices: int = 14, max_tries: int = 10_000) -> MultiGraph:
    """Random connected minimal (2,2)-dominated graph.

    Branch vertices get random sides; a random connected multigraph on them
    (loops allowed) has each edge replaced by a path of length >= 2 whose
    parity keeps the result bipartite. Every non-branch vertex then has
    degree 2, and branch vertices are never adjacent.
    """
    _positive(branches=branches)
    rng = random.Random(seed)
    for _ in range(max_tries):
        side = [rng.randrange(2) for _ in range(branches)]
        links = [(rng.randrange(i), i) for i in range(1, branches)]
        links += [(rng.randrange(branches), rng.randrange(branches)) for _ in range(extra_edges)]
        link_degree = [0] * branches
        for u, w in links:
            link_degree[u] += 1
            link_degree[w] += 1
        for u in range(branches):
            if link_degree[u] < 2:
                w = rng.randrange(branches)
                links.append((u, w))
                link_degree[u] += 1
                link_degree[w] += 1
        edges = []
        nxt = branches
        for u, w in links:
            length = 3 if side[u] != side[w] else 2
            length += 2 * rng.randint(0, 1)
            prev = u
            for _ in range(length - 1):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, w))
        g = MultiGraph.from_edges(nxt, edges)
        if g.n <= max_vertices and g.min_degree() >= 2:
            return g
    raise InvalidParameterError(f"no graph within {max_vertices} vertices in {max_tries} tries")


def _add_vertex(parent: MultiGraph, mask: int) -> MultiGraph:
    n = parent.n
    mult = {(u, v): m for u, v, m in parent.edges()}
    for u in range(n):
        if mask >> u & 1:
            mult[(u, n)] = 1
    return MultiGraph(n + 1, mult)


class _IsoStore:
    """First-seen representatives bucketed by a refinement invariant."""

    def __init__(self):
        self.buckets: dict = {}

    def add(self, g: MultiGraph) -> bool:
        bucket = self.buckets.setdefault(invariant(g), [])
        if any(are_isomorphic(g, h) for h in bucket):
            return False
        bucket.append(g)
        return True


def _simple_levels(n_max: int) -> Iterator[list[MultiGraph]]:
    level = [MultiGraph(1)]
    yield level
    for n in range(2, n_max + 1):
        store = _IsoStore()
        nxt = []
        for parent in level:
            gens = automorphism_generators(parent)
            for mask in orbit_representatives(parent.n, gens):
                if mask == 0:
                    continue
                child = _add_vertex(parent, mask)
                if store.add(child):
                    nxt.append(child)
        level = nxt
        yield level


def _multi_variants(g: MultiGraph, max_mult: int) -> Iterator[MultiGraph]:
    """One multigraph per isomorphism class with underlying simple graph ``g``."""
    edges = [(u, v) for u, v, _ in g.edges()]
    where = {e: i for i, e in enumerate(edges)}
    perms = []
    for perm in automorphism_generators(g):
        perms.append([where[tuple(sorted((perm[u], perm[v])))] for u, v in edges])
    for mask in orbit_representatives(len(edges), perms):
        yield MultiGraph(g.n, {e: 2 if mask >> i & 1 else 1 for i, e in enumerate(edges)})


def enumerate_connected(n_max: int, max_mult: int = 1) -> Iterator[MultiGraph]:
    """Yield one connected loopless multigraph per isomorphism class on
    ``1..n_max`` vertices with multiplicities at most ``max_mult``.

    Simple graphs grow one vertex at a time (every connected graph has a
    vertex whose removal keeps it connected); multigraphs are the orbits of
    doubled-edge patterns under the automorphisms of their underlying graph.
    """
    _positive(n_max=n_max, max_mult=max_mult)
    if max_mult > 2:
        raise UnsupportedError("enumeration supports multiplicities up to 2")
    bound = SIMPLE_ENUM_MAX if max_mult == 1 else MULTI_ENUM_MAX
    if n_max > bound:
        raise TooLargeError(f"n_max={n_max} exceeds the enumeration bound {bound}")
    for level in _simple_levels(n_max):
        for g in level:
            if max_mult == 1:
                yield g
            else:
                yield from _multi_variants(g, max_mult)


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0


FAMILIES = ("cycle", "path", "complete", "complete_bipartite", "theta",
            "cartesian_product", "random_multigraph", "random_F")


def build(spec: GenSpec) -> tuple[MultiGraph, Optional[Certificate]]:
    """Construct the graph named by ``spec``; random_F also returns its certificate."""
    p = dict(spec.params)
    fam = spec.family
    if fam == "cycle":
        return cycle(p["n"]), None
    if fam == "path":
        return path(p["n"]), None
    if fam == "complete":
        return complete(p["n"]), None
    if fam == "complete_bipartite":
        return complete_bipartite(p["m"], p["n"]), None
    if fam == "theta":
        return theta(tuple(p.get("lengths", (3, 3, 3)))), None
    if fam == "cartesian_product":
        left, _ = build(GenSpec(p["left"], p.get("left_params", {}), spec.seed))
        right, _ = build(GenSpec(p["right"], p.get("right_params", {}), spec.seed))
        return cartesian_product(left, right), None
    if fam == "random_multigraph":
        return random_multigraph(seed=spec.seed, **p), None
    if fam == "random_F":
        h = random_multigraph(p.get("n", 4), p.get("max_mult", 2), p.get("loop_prob", 0.2),
                              spec.seed, p.get("edge_prob", 0.5), min_degree=2, connected=True)
        return random_F_graph(h, p.get("steps", 2), spec.seed)
    raise InvalidParameterError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
