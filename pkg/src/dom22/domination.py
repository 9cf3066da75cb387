"""k-dominating sets and disjoint (k, l)-pairs on multigraphs.

The exact search relies on one fact: k-domination is closed under taking
supersets. So if ``D1`` is part of some (k, l)-pair, the complement
``V - D1`` also works as the partner, and it is enough to scan candidate
``D1`` sets and test their complements.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InvalidParameterError, PreconditionError, TooLargeError
from .multigraph import MultiGraph

DEFAULT_MAX_VERTICES = 24


@dataclass(frozen=True)
class KLPair:
    d1: frozenset
    d2: frozenset
    k: int
    l: int

    def __post_init__(self):
        object.__setattr__(self, "d1", frozenset(self.d1))
        object.__setattr__(self, "d2", frozenset(self.d2))
        if self.k < 1 or self.l < 1:
            raise InvalidParameterError("k and l must be positive")
        if self.d1 & self.d2:
            raise PreconditionError(f"D1 and D2 overlap on {sorted(self.d1 & self.d2)}")

    def sides(self) -> tuple[list[int], list[int]]:
        return sorted(self.d1), sorted(self.d2)


def is_k_dominating(g: MultiGraph, d: Iterable[int], k: int) -> bool:
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    d = frozenset(d)
    for x in d:
        g.multiplicity(x, x)  # range check
    for v in g.vertices():
        if v in d:
            continue
        if sum(m for u, m in g.adjacency(v).items() if u in d) < k:
            return False
    return True


def is_kl_pair(g: MultiGraph, p: KLPair) -> bool:
    everything = frozenset(g.vertices())
    for s in (p.d1, p.d2):
        if not s or s == everything or not s <= everything:
            return False
    if p.d1 & p.d2:
        return False
    return is_k_dominating(g, p.d1, p.k) and is_k_dominating(g, p.d2, p.l)


class _Weights:
    """Per-vertex bitmask layers: layer j holds neighbours of multiplicity > j."""

    def __init__(self, g: MultiGraph, cap: int):
        self.layers = []
        for v in g.vertices():
            masks = []
            for j in range(cap):
                mask = 0
                for u, m in g.adjacency(v).items():
                    if m > j:
                        mask |= 1 << u
                if not mask:
                    break
                masks.append(mask)
            self.layers.append(masks)

    def dominates(self, mask: int, k: int, outside: int) -> bool:
        layers = self.layers
        rest = outside
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            total = 0
            for layer in layers[v]:
                total += (layer & mask).bit_count()
                if total >= k:
                    break
            else:
                return False
        return True


def _check_scale(g: MultiGraph, max_vertices: int) -> None:
    if g.n > max_vertices:
        raise TooLargeError(f"{g.n} vertices exceeds the exact-search bound of {max_vertices}")


def find_kl_pair(g: MultiGraph, k: int, l: int,
                 max_vertices: int = DEFAULT_MAX_VERTICES) -> Optional[KLPair]:
    """Lowest-bitmask ``D1`` such that ``(D1, V - D1)`` is a (k, l)-pair.

    Depth-first over vertices from the highest id down, trying "not in D1"
    first, so the first complete assignment found is the smallest bitmask.
    A branch dies as soon as some vertex cannot reach its quota even if
    every undecided neighbour joined the right side.
    """
    if k < 1 or l < 1:
        raise InvalidParameterError("k and l must be positive")
    _check_scale(g, max_vertices)
    n = g.n
    if n < 2:
        return None
    adj = [list(g.adjacency(v).items()) for v in range(n)]
    into = [[0] * n, [0] * n]          # into[s][w]: edges from w to decided side-s vertices
    rest = [sum(m for _, m in a) for a in adj]
    side = [-1] * n                    # 1: D1, 0: D2
    need = (k, l)                      # a D2 vertex needs k edges into D1, a D1 vertex l into D2

    def viable(w):
        s = side[w]
        if s == -1:
            return into[1][w] + rest[w] >= k or into[0][w] + rest[w] >= l
        return into[1 - s][w] + rest[w] >= need[s]

    def search(v, count1):
        if v < 0:
            return 0 < count1 < n
        for s in (0, 1):
            side[v] = s
            for w, m in adj[v]:
                into[s][w] += m
                rest[w] -= m
            if viable(v) and all(viable(w) for w, _ in adj[v]) and search(v - 1, count1 + s):
                return True
            for w, m in adj[v]:
                into[s][w] -= m
                rest[w] += m
        side[v] = -1
        return False

    if not search(n - 1, 0):
        return None
    d1 = frozenset(v for v in range(n) if side[v] == 1)
    return KLPair(d1, frozenset(range(n)) - d1, k, l)


def scan_kl_pair(g: MultiGraph, k: int, l: int) -> Optional[KLPair]:
    """Reference search: scan ``D1`` bitmasks in increasing order."""
    n = g.n
    if n < 2:
        return None
    full = (1 << n) - 1
    weights = _Weights(g, max(k, l))
    for d1 in range(1, full):
        d2 = full ^ d1
        if weights.dominates(d1, k, d2) and weights.dominates(d2, l, d1):
            return KLPair(_members(d1), _members(d2), k, l)
    return None


def _members(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def is_kl_dominated(g: MultiGraph, k: int, l: int,
                    max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    return find_kl_pair(g, k, l, max_vertices) is not None
