"""Line-oriented text formats for graphs and certificates, plus DOT export.

Graph format::

    n <vertex_count>
    e <u> <v> [mult]
    loop <v> [count]

Certificate format::

    SEED
    <graph lines>
    END
    step <center> | <block> ; <block>
"""
from __future__ import annotations

from typing import Iterable

from .errors import ParseError
from .multigraph import MultiGraph
from .transform import Certificate, Partition


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph_lines(lines: Iterable[tuple[int, str]]) -> MultiGraph:
    n = None
    mult: dict[tuple[int, int], int] = {}
    loops: dict[int, int] = {}
    for lineno, raw in lines:
        toks = _strip(raw).split()
        if not toks:
            continue
        head, args = toks[0], [_int(t, lineno) for t in toks[1:]]
        if head == "n":
            if n is not None:
                raise ParseError("duplicate 'n' line", lineno)
            if len(args) != 1 or args[0] < 0:
                raise ParseError("'n' takes one nonnegative count", lineno)
            n = args[0]
            continue
        if n is None:
            raise ParseError(f"'{head}' before 'n'", lineno)
        if head == "e":
            if len(args) not in (2, 3):
                raise ParseError("usage: e <u> <v> [mult]", lineno)
            u, v = args[0], args[1]
            m = args[2] if len(args) == 3 else 1
            if u == v:
                raise ParseError("use 'loop' for self-edges", lineno)
            targets = (u, v)
        elif head == "loop":
            if len(args) not in (1, 2):
                raise ParseError("usage: loop <v> [count]", lineno)
            u = args[0]
            m = args[1] if len(args) == 2 else 1
            targets = (u,)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
        for x in targets:
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} out of range 0..{n - 1}", lineno)
        if m <= 0:
            raise ParseError("multiplicity must be positive", lineno)
        if head == "e":
            key = (min(u, v), max(u, v))
            mult[key] = mult.get(key, 0) + m
        else:
            loops[u] = loops.get(u, 0) + m
    if n is None:
        raise ParseError("missing 'n' line")
    return MultiGraph(n, mult, [loops.get(v, 0) for v in range(n)])


def parse_graph(text: str) -> MultiGraph:
    return parse_graph_lines(enumerate(text.splitlines(), start=1))


def format_graph(g: MultiGraph) -> str:
    items = [((u, v), f"e {u} {v}" + (f" {m}" if m > 1 else "")) for u, v, m in g.edges()]
    items += [((v, v), f"loop {v}" + (f" {c}" if c > 1 else "")) for v, c in g.loop_items()]
    items.sort()
    return "\n".join([f"n {g.n}"] + [line for _, line in items]) + "\n"


def to_dot(g: MultiGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    out += [f"  {v};" for v in g.vertices()]
    items = [(u, v, m) for u, v, m in g.edges()] + [(v, v, c) for v, c in g.loop_items()]
    for u, v, m in sorted(items):
        out += [f"  {u} -- {v};"] * m
    out.append("}")
    return "\n".join(out) + "\n"


def format_certificate(c: Certificate) -> str:
    lines = ["SEED", format_graph(c.seed).rstrip("\n"), "END"]
    for step in c.steps:
        blocks = " ; ".join(" ".join(map(str, sorted(b))) for b in step.blocks)
        lines.append(f"step {step.center} | {blocks}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = list(enumerate(text.splitlines(), start=1))
    body = [(i, _strip(l)) for i, l in lines if _strip(l)]
    if not body or body[0][1] != "SEED":
        raise ParseError("certificate must start with SEED", body[0][0] if body else None)
    try:
        end = next(j for j, (_, l) in enumerate(body) if l == "END")
    except StopIteration:
        raise ParseError("missing END after seed graph") from None
    seed = parse_graph_lines(body[1:end])
    steps = []
    for lineno, line in body[end + 1:]:
        if not line.startswith("step ") or "|" not in line:
            raise ParseError("expected 'step <center> | <block> ; ...'", lineno)
        left, right = line[5:].split("|", 1)
        center = _int(left.strip(), lineno)
        blocks = []
        for chunk in right.split(";"):
            members = [_int(t, lineno) for t in chunk.split()]
            if not members:
                raise ParseError("empty block", lineno)
            blocks.append(members)
        steps.append(Partition(center, blocks))
    return Certificate(seed, tuple(steps))
