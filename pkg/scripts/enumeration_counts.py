"""Tabulate the enumerator's class counts and how many classes are minimal.

Columns: vertices, connected classes, minimal (2,2)-dominated classes among
them, and classes that are already subdivision graphs.
"""
import argparse
from dataclasses import dataclass

from dom22.generate import enumerate_connected
from dom22.recognition import is_minimal_22_structural, is_subdivision_graph


@dataclass
class Config:
    n_max: int = 7
    max_mult: int = 1


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=Config.n_max)
    parser.add_argument("--max-mult", type=int, default=Config.max_mult, choices=(1, 2))
    cfg = Config(**vars(parser.parse_args()))
    rows: dict[int, list[int]] = {}
    for g in enumerate_connected(cfg.n_max, cfg.max_mult):
        row = rows.setdefault(g.n, [0, 0, 0])
        row[0] += 1
        if is_minimal_22_structural(g):
            row[1] += 1
            row[2] += is_subdivision_graph(g) is not None
    print(f"{'n':>3} {'classes':>8} {'minimal':>8} {'S(H)':>6}")
    for n in sorted(rows):
        print(f"{n:>3} {rows[n][0]:>8} {rows[n][1]:>8} {rows[n][2]:>6}")


if __name__ == "__main__":
    main()
