"""Command-line front end.

Exit codes: 0 the property holds, 1 it fails, 2 input or usage error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import crosscheck
from .domination import find_kl_pair
from .errors import CertificateError, GraphError, NotMinimalError, PreconditionError
from .generate import FAMILIES, GenSpec, build
from .isomorphism import are_isomorphic
from .multigraph import MultiGraph
from .recognition import is_minimal_22_oracle, structural_failure
from .textio import format_certificate, format_graph, parse_certificate, parse_graph, to_dot
from .transform import Partition, decompose, p_contraction, replay, subdivide

OK, FAIL, USAGE = 0, 1, 2


@dataclass
class Verdict:
    graph_summary: str
    checks: list = field(default_factory=list)  # (name, passed, detail)
    exit_code: int = OK

    def render(self) -> str:
        lines = [self.graph_summary]
        for name, passed, detail in self.checks:
            word = "yes" if passed else "no"
            lines.append(f"{name}: {word}" + (f" ({detail})" if detail else ""))
        return "\n".join(lines) + "\n"


def summary(g: MultiGraph) -> str:
    return (f"graph: n={g.n} m={g.edge_count} "
            f"degree {g.min_degree()}..{g.max_degree()}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit_graph(g: MultiGraph, fmt: str) -> None:
    sys.stdout.write(to_dot(g) if fmt == "dot" else format_graph(g))


def cmd_check(args) -> int:
    g = parse_graph(_read(args.file))
    pair = find_kl_pair(g, args.k, args.l, max_vertices=args.max_n)
    v = Verdict(summary(g))
    v.checks.append((f"({args.k},{args.l})-dominated", pair is not None, None))
    out = v.render()
    if pair is not None:
        d1, d2 = pair.sides()
        out += "D1: " + " ".join(map(str, d1)) + "\nD2: " + " ".join(map(str, d2)) + "\n"
    sys.stdout.write(out)
    return OK if pair is not None else FAIL


def cmd_minimal(args) -> int:
    g = parse_graph(_read(args.file))
    v = Verdict(summary(g))
    reason = structural_failure(g)
    structural = reason is None
    v.checks.append(("structural", structural, reason))
    connected = g.is_connected()
    if structural and not connected:
        v.checks.append(("connected", False, "structurally-minimal but disconnected"))
    code = OK if structural and connected else FAIL
    if args.oracle:
        oracle = is_minimal_22_oracle(g, max_vertices=args.max_n)
        v.checks.append(("oracle", oracle, None))
        v.checks.append(("agreement", oracle == structural, None))
        if oracle != structural:
            code = USAGE
    sys.stdout.write(v.render())
    return code


def cmd_decompose(args) -> int:
    g = parse_graph(_read(args.file))
    try:
        cert = decompose(g)
    except NotMinimalError as exc:
        sys.stdout.write(Verdict(summary(g), [("minimal", False, str(exc))]).render())
        return FAIL
    except PreconditionError as exc:
        sys.stdout.write(Verdict(summary(g), [("connected", False, str(exc))]).render())
        return FAIL
    if not are_isomorphic(replay(cert), g):
        sys.stderr.write("internal error: replayed certificate does not match input\n")
        return USAGE
    text = format_certificate(cert)
    report = (f"seed: n={cert.seed.n} m={cert.seed.edge_count}\n"
              f"steps: {len(cert.steps)}\nreplay: isomorphic\n")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        sys.stdout.write(report)
    else:
        sys.stderr.write(report)
        sys.stdout.write(text)
    return OK


def cmd_subdivide(args) -> int:
    _emit_graph(subdivide(parse_graph(_read(args.file))), args.format)
    return OK


def _parse_blocks(text: str) -> list[list[int]]:
    blocks = []
    for chunk in text.split(";"):
        members = [int(t) for t in chunk.replace(",", " ").split()]
        if not members:
            raise PreconditionError("empty block in --blocks")
        blocks.append(members)
    return blocks


def cmd_contract(args) -> int:
    g = parse_graph(_read(args.file))
    try:
        blocks = _parse_blocks(args.blocks)
    except ValueError:
        raise PreconditionError(f"could not parse --blocks {args.blocks!r}") from None
    _emit_graph(p_contraction(g, Partition(args.center, blocks)), args.format)
    return OK


def cmd_replay(args) -> int:
    cert = parse_certificate(_read(args.cert))
    try:
        g = replay(cert)
    except CertificateError as exc:
        sys.stdout.write(f"certificate invalid: {exc}\n")
        return FAIL
    _emit_graph(g, args.format)
    return OK


def _factor(text: str) -> tuple[str, dict]:
    name, _, rest = text.partition(":")
    sizes = [int(t) for t in rest.split(",") if t]
    return name, _size_params(name, sizes)


def _size_params(family: str, sizes: list[int]) -> dict:
    if family in ("cycle", "path", "complete"):
        return {"n": sizes[0]}
    if family == "complete_bipartite":
        return {"m": sizes[0], "n": sizes[1]}
    if family == "theta":
        return {"lengths": sizes or [3, 3, 3]}
    raise PreconditionError(f"unknown factor family {family!r}")


def cmd_generate(args) -> int:
    fam = args.family
    try:
        if fam == "cartesian_product":
            (ln, lp), (rn, rp) = map(_factor, args.params)
            params = {"left": ln, "left_params": lp, "right": rn, "right_params": rp}
        elif fam == "random_multigraph":
            params = {"n": int(args.params[0]), "max_mult": args.max_mult,
                      "loop_prob": args.loop_prob, "edge_prob": args.edge_prob}
            if args.min_degree is not None:
                params["min_degree"] = args.min_degree
        elif fam == "random_F":
            params = {"n": int(args.params[0]) if args.params else 4, "steps": args.steps,
                      "max_mult": args.max_mult, "loop_prob": args.loop_prob,
                      "edge_prob": args.edge_prob}
        else:
            params = _size_params(fam, [int(t) for t in args.params])
    except (ValueError, IndexError):
        raise PreconditionError(f"bad parameters {args.params!r} for {fam}") from None
    g, cert = build(GenSpec(fam, params, args.seed))
    _emit_graph(g, args.format)
    if cert is not None and args.cert_out:
        with open(args.cert_out, "w") as fh:
            fh.write(format_certificate(cert))
    return OK


def cmd_export_dot(args) -> int:
    sys.stdout.write(to_dot(parse_graph(_read(args.file))))
    return OK


def cmd_selftest(args) -> int:
    n = args.max_n
    enum = crosscheck.enumeration_corpus(min(n, 8), min(n, 6))
    minimal = [g for g in enum if structural_failure(g) is None and g.is_connected()]
    family = crosscheck.random_F_corpus(100, args.seed, 14)
    family += crosscheck.random_minimal_corpus(100, args.seed, 14)
    results = [
        crosscheck.recognizer_equivalence(enum),
        crosscheck.closed_form_laws(),
        crosscheck.product_examples(),
        crosscheck.cartesian_products(min(n, 4)),
        crosscheck.subdivision_roundtrip(crosscheck.subdivision_corpus(args.seed, 300)),
        crosscheck.contraction_rules(1000, args.seed),
        crosscheck.partition_validity(minimal + [g for g in family if g.n <= 12]),
        crosscheck.decomposition_roundtrip(minimal + family),
    ]
    for r in results:
        sys.stdout.write(r.line() + "\n")
    return OK if all(r.passed for r in results) else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dom22",
                                     description="Disjoint 2-dominating sets in multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text, fmt=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph file, or - for standard input")
        if fmt:
            p.add_argument("--format", choices=("text", "dot"), default="text")
        p.set_defaults(func=func)
        return p

    p = graph_cmd("check", cmd_check, "exact (k,l)-pair search")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--l", type=int, default=2)
    p.add_argument("--max-n", type=int, default=24, help="refuse larger graphs")

    p = graph_cmd("minimal", cmd_minimal, "minimal (2,2)-dominated recognition")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force check")
    p.add_argument("--max-n", type=int, default=16, help="oracle size bound")

    p = graph_cmd("decompose", cmd_decompose, "certificate of membership in the family")
    p.add_argument("--out", help="write the certificate here instead of standard output")

    graph_cmd("subdivide", cmd_subdivide, "subdivision graph S(H)", fmt=True)

    p = graph_cmd("contract", cmd_contract, "P-contraction at a centre", fmt=True)
    p.add_argument("--center", type=int, required=True)
    p.add_argument("--blocks", required=True, help='e.g. "2; 4 6"')

    p = sub.add_parser("replay", help="rebuild a graph from a certificate")
    p.add_argument("cert", help="certificate file, or -")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("generate", help="emit a named or random graph")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*",
                   help="sizes, e.g. 'cycle 6', 'complete_bipartite 2 3', "
                        "'cartesian_product complete:2 cycle:5', 'random_F 4'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=2, help="contractions for random_F")
    p.add_argument("--max-mult", type=int, default=2)
    p.add_argument("--loop-prob", type=float, default=0.0)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--cert-out", help="random_F: also write the construction certificate")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.set_defaults(func=cmd_generate)

    graph_cmd("export-dot", cmd_export_dot, "Graphviz rendering")

    p = sub.add_parser("selftest", help="run the cross-validation suites")
    p.add_argument("--max-n", type=int, default=6, help="enumeration size bound")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
