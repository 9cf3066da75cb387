"""Cross-validation suites: each function checks one law over a corpus and
returns a :class:`CheckResult`. Shared by the test suite and ``dom22 selftest``."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .domination import find_kl_pair, is_kl_dominated, is_kl_pair
from .generate import (complete, complete_bipartite, cartesian_product, cycle,
                       enumerate_connected, random_F_graph, random_minimal_graph,
                       random_multigraph)
from .errors import InvalidParameterError
from .isomorphism import are_isomorphic
from .multigraph import MultiGraph, disjoint_union
from .recognition import (degree_split, is_minimal_22_oracle, is_minimal_22_structural,
                          is_subdivision_graph)
from .transform import (Partition, decompose, is_contractible, p_contraction, replay,
                        subdivide, validate_partition)


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def record(self, ok: bool, detail=None) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", first failure: {self.failures[0]!r}" if self.failures else ""
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failed{extra}"


# -- corpora ------------------------------------------------------------

def enumeration_corpus(simple_max: int = 8, multi_max: int = 6) -> list[MultiGraph]:
    graphs = list(enumerate_connected(simple_max, 1))
    graphs += [g for g in enumerate_connected(multi_max, 2) if not g.is_simple()]
    return graphs


def random_h(rng: random.Random, n_range=(1, 5), max_mult: int = 3,
             loop_prob: float = 0.25) -> MultiGraph:
    """Connected H with minimum degree >= 2: half dense random multigraphs,
    half cycles with a few extra edges or loops (these leave the degree-2
    vertices that restricted contractions need)."""
    if rng.random() < 0.3:
        n = rng.randint(*n_range)
        return random_multigraph(n, max_mult, loop_prob, rng.getrandbits(32),
                                 edge_prob=rng.uniform(0.3, 0.8), min_degree=2, connected=True)
    n = rng.randint(3, 7)
    edges = [(i, (i + 1) % n) for i in range(n)]
    for _ in range(rng.randint(1, 3)):
        u = rng.randrange(n)
        edges.append((u, u if rng.random() < 0.1 else rng.randrange(n)))
    return MultiGraph.from_edges(n, edges)


def random_F_corpus(count: int, seed: int = 0, max_vertices: int = 14,
                    max_steps: int = 4) -> list[MultiGraph]:
    """Outputs of random_F_graph with at most ``max_vertices`` vertices."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        h = random_h(rng)
        g, _ = random_F_graph(h, rng.randint(0, max_steps), rng.getrandbits(32))
        if g.n <= max_vertices:
            out.append(g)
    return out


def random_minimal_corpus(count: int, seed: int = 0, max_vertices: int = 14) -> list[MultiGraph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        try:
            out.append(random_minimal_graph(rng.randint(1, 5), rng.randint(0, 3),
                                            rng.getrandbits(32), max_vertices, max_tries=200))
        except InvalidParameterError:
            continue
    return out


def random_partition(rng: random.Random, members: Iterable[int], k: Optional[int] = None) -> list[list[int]]:
    members = sorted(members)
    k = k or rng.randint(1, len(members))
    labels = [rng.randrange(k) for _ in members]
    blocks = [[x for x, lab in zip(members, labels) if lab == i] for i in range(k)]
    return [b for b in blocks if b]


def partitions_up_to_two(members: Iterable[int]) -> list[list[list[int]]]:
    """The one-block partition and every two-block partition of ``members``."""
    members = sorted(members)
    first, rest = members[0], members[1:]
    out = [[members]]
    for r in range(len(rest)):
        for extra in itertools.combinations(rest, r):
            s1 = [first, *extra]
            s2 = [x for x in members if x not in s1]
            out.append([s1, s2])
    return out


# -- the checks ---------------------------------------------------------

def recognizer_equivalence(graphs: Iterable[MultiGraph]) -> CheckResult:
    res = CheckResult("structural recogniser agrees with brute-force minimality oracle")
    for g in graphs:
        s, o = is_minimal_22_structural(g), is_minimal_22_oracle(g)
        res.record(s == o, (g, s, o))
    return res


def closed_form_laws() -> CheckResult:
    res = CheckResult("complete, cycle and complete bipartite laws")
    for n in range(2, 9):
        kn = complete(n)
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                res.record(is_kl_dominated(kn, k, l) == (k + l <= n), ("K", n, k, l))
    for n in range(3, 13):
        cn = cycle(n)
        res.record(is_kl_dominated(cn, 2, 2) == (n % 2 == 0), ("C", n, 2, 2))
        if n % 2:
            res.record(is_kl_dominated(cn, 1, 2), ("C", n, 1, 2))
    for m in range(1, 5):
        for n in range(1, 5):
            g = complete_bipartite(m, n)
            p = find_kl_pair(g, m, n)
            res.record(p is not None and is_kl_pair(g, p), ("K", m, n))
    return res


def product_examples() -> CheckResult:
    res = CheckResult("prism K2xC5 and K2xK4 domination")
    k2 = complete(2)
    prism = cartesian_product(k2, cycle(5))
    cube4 = cartesian_product(k2, complete(4))
    res.record(is_kl_dominated(prism, 2, 2), "K2xC5 (2,2)")
    res.record(is_kl_dominated(cube4, 3, 3), "K2xK4 (3,3)")
    res.record(is_kl_dominated(cube4, 1, 4), "K2xK4 (1,4)")
    res.record(not is_kl_dominated(cube4, 3, 4), "K2xK4 not (3,4)")
    return res


def cartesian_products(max_n: int = 4) -> CheckResult:
    res = CheckResult("Cartesian products of graphs without isolated vertices are (2,2)-dominated")
    factors = [g for g in enumerate_connected(max_n, 1) if g.n >= 2]
    for g in factors:
        for h in factors:
            prod = cartesian_product(g, h)
            p = find_kl_pair(prod, 2, 2)
            res.record(p is not None and is_kl_pair(prod, p), (g, h))
    return res


def small_multigraphs(n_max: int = 3, max_mult: int = 3, max_loops: int = 3):
    """Every labelled multigraph on 1..n_max vertices within the given bounds."""
    for n in range(1, n_max + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for ms in itertools.product(range(max_mult + 1), repeat=len(pairs)):
            for ls in itertools.product(range(max_loops + 1), repeat=n):
                yield MultiGraph(n, dict(zip(pairs, ms)), ls)


def subdivision_roundtrip(hs: Iterable[MultiGraph]) -> CheckResult:
    res = CheckResult("S(H) is minimal and recognised back to H")
    for h in hs:
        if h.min_degree() < 2:
            continue
        s = subdivide(h)
        ok = is_minimal_22_structural(s)
        # recognition is defined on connected graphs, so go component by component
        parts = [is_subdivision_graph(s.induced(c)) for c in s.components()]
        ok = ok and None not in parts and are_isomorphic(disjoint_union(parts), h)
        res.record(ok, h)
    return res


def subdivision_corpus(seed: int = 0, samples: int = 2000) -> list[MultiGraph]:
    """All labelled multigraphs up to 3 vertices plus random ones on 4..6."""
    out = [h for h in small_multigraphs(3) if h.min_degree() >= 2]
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(4, 6)
        out.append(random_multigraph(n, 3, rng.uniform(0, 0.5), rng.getrandbits(32),
                                     edge_prob=rng.uniform(0.2, 0.9), min_degree=2))
    return out


def contraction_rules(samples: int = 1000, seed: int = 0) -> CheckResult:
    res = CheckResult("P-contraction degree and structure rules")
    rng = random.Random(seed)
    corpus = []
    for g in random_F_corpus(max(50, samples // 10), seed):
        centres = [v for v in g.vertices() if is_contractible(g, v)]
        if centres:
            corpus.append((g, centres))
    while res.checked < samples:
        g, centres = rng.choice(corpus)
        v = rng.choice(centres)
        nb = g.neighborhood(v)
        singleton = rng.random() < 0.1
        blocks = [[x] for x in sorted(nb)] if singleton else random_partition(rng, nb)
        res.record(_contraction_rules_hold(g, Partition(v, blocks)), (g, v, blocks))
    return res


def _contraction_rules_hold(g: MultiGraph, p: Partition) -> bool:
    h = p_contraction(g, p)
    names = p.name_map()
    removed = p.removed()
    index = {}
    for x in g.vertices():
        if x not in removed:
            index[x] = len(index)
    v = p.center
    if not h.is_bipartite() or h.degree(index[v]) != p.k:
        return False
    for b in p.blocks:
        if h.degree(names[b]) != 1 + sum(g.degree(u) - 1 for u in b):
            return False
    near = g.closed_neighborhood(v) | g.neighborhood_2(v)
    if any(h.degree(index[x]) != g.degree(x) for x in index if x not in near):
        return False
    if h.edge_count != g.edge_count - g.degree(v) + p.k:
        return False
    if p.k == len(g.neighborhood(v)) and not are_isomorphic(h, g):
        return False
    return True


def partition_validity(graphs: Iterable[MultiGraph]) -> CheckResult:
    res = CheckResult("partition validity matches minimality of the contraction")
    for g in graphs:
        if not is_minimal_22_structural(g):
            continue
        for v in g.vertices():
            if not is_contractible(g, v):
                continue
            for blocks in partitions_up_to_two(g.neighborhood(v)):
                p = Partition(v, blocks)
                lhs = validate_partition(g, p)
                rhs = is_minimal_22_structural(p_contraction(g, p))
                res.record(lhs == rhs, (g, v, blocks))
    return res


def decomposition_roundtrip(graphs: Iterable[MultiGraph]) -> CheckResult:
    res = CheckResult("decompose then replay reproduces every minimal connected graph")
    for g in graphs:
        if not (is_minimal_22_structural(g) and g.is_connected()):
            continue
        try:
            cert = decompose(g)
            back = replay(cert)
        except Exception as exc:  # any failure is a counterexample
            res.record(False, (g, repr(exc)))
            continue
        ok = (is_subdivision_graph(cert.seed) is not None
              and len(cert.steps) == degree_split(g).measure
              and are_isomorphic(back, g))
        res.record(ok, g)
    return res
