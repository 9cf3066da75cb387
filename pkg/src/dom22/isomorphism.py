"""Isomorphism testing by colour refinement plus individualisation.

Colours are plain ints whose meaning is fixed by the sorted list of vertex
signatures of each refinement round (the *trace*). Two graphs refined from
compatible colourings can be compared colour-for-colour exactly when their
traces agree, which is what makes the pairwise search below sound.
"""
from __future__ import annotations

from collections import Counter
from typing import Optional

from .multigraph import MultiGraph


def refine(g: MultiGraph, colours: list[int]) -> tuple[list[int], tuple]:
    """Iterate 1-dimensional Weisfeiler-Leman to a stable colouring."""
    adj = [g.adjacency(v) for v in range(g.n)]
    loops = [g.loops(v) for v in range(g.n)]
    trace = []
    n_classes = len(set(colours))
    while True:
        sigs = [
            (colours[v], loops[v], tuple(sorted((colours[u], m) for u, m in adj[v].items())))
            for v in range(g.n)
        ]
        counts = Counter(sigs)
        palette = sorted(counts)
        trace.append(tuple((s, counts[s]) for s in palette))
        index = {s: i for i, s in enumerate(palette)}
        colours = [index[s] for s in sigs]
        if len(palette) == n_classes:
            return colours, tuple(trace)
        n_classes = len(palette)


def invariant(g: MultiGraph) -> tuple:
    """Isomorphism invariant: vertex/edge counts plus the refinement trace."""
    _, trace = refine(g, [0] * g.n)
    return g.n, g.edge_count, trace


def _cells(colours: list[int]) -> dict[int, list[int]]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    return cells


def _target_cell(colours: list[int]) -> Optional[int]:
    cells = _cells(colours)
    big = [c for c, vs in cells.items() if len(vs) > 1]
    return min(big) if big else None


def _individualise(colours: list[int], v: int) -> list[int]:
    out = list(colours)
    out[v] = max(colours) + 1
    return out


def _find_mapping(g: MultiGraph, cg: list[int], h: MultiGraph, ch: list[int]) -> Optional[list[int]]:
    """Search for an isomorphism g -> h respecting compatible stable colourings."""
    target = _target_cell(cg)
    if target is None:
        where = {c: v for v, c in enumerate(ch)}
        perm = [where[c] for c in cg]
        return perm if g.relabel(perm) == h else None
    x = min(v for v, c in enumerate(cg) if c == target)
    cg2, tg = refine(g, _individualise(cg, x))
    for y in (v for v, c in enumerate(ch) if c == target):
        ch2, th = refine(h, _individualise(ch, y))
        if tg != th:
            continue
        perm = _find_mapping(g, cg2, h, ch2)
        if perm is not None:
            return perm
    return None


def _quick_reject(g: MultiGraph, h: MultiGraph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return True
    if sorted(g.degrees()) != sorted(h.degrees()):
        return True
    return sorted(g.loops(v) for v in g.vertices()) != sorted(h.loops(v) for v in h.vertices())


def find_isomorphism(g: MultiGraph, h: MultiGraph) -> Optional[list[int]]:
    """Return ``perm`` with ``g.relabel(perm) == h``, or ``None``."""
    if _quick_reject(g, h):
        return None
    cg, tg = refine(g, [0] * g.n)
    ch, th = refine(h, [0] * h.n)
    if tg != th:
        return None
    return _find_mapping(g, cg, h, ch)


def are_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    return find_isomorphism(g, h) is not None


def automorphism_generators(g: MultiGraph) -> list[list[int]]:
    """A generating set of Aut(g), built from coset representatives along one
    path of the individualisation tree (a stabiliser chain)."""
    gens: list[list[int]] = []
    colours, _ = refine(g, [0] * g.n)
    while True:
        target = _target_cell(colours)
        if target is None:
            return gens
        cell = [v for v, c in enumerate(colours) if c == target]
        x = cell[0]
        fixed, tx = refine(g, _individualise(colours, x))
        for y in cell[1:]:
            cy, ty = refine(g, _individualise(colours, y))
            if ty != tx:
                continue
            perm = _find_mapping(g, fixed, g, cy)
            if perm is not None:
                gens.append(perm)
        colours = fixed


def orbit_representatives(size: int, perms: list[list[int]]) -> list[int]:
    """Smallest element of each orbit of the group generated by ``perms``
    acting on bitmasks over ``size`` positions."""
    seen = bytearray(1 << size)
    reps = []

    def apply(perm, mask):
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << perm[low.bit_length() - 1]
            mask ^= low
        return out

    for mask in range(1 << size):
        if seen[mask]:
            continue
        reps.append(mask)
        seen[mask] = 1
        stack = [mask]
        while stack:
            m = stack.pop()
            for p in perms:
                image = apply(p, m)
                if not seen[image]:
                    seen[image] = 1
                    stack.append(image)
    return reps
