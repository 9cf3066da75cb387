"""Run every cross-validation suite at full size and print one line per suite.

    python scripts/cross_validate.py --seed 3 --family-samples 500
"""
import argparse
import dataclasses
import sys
import time
from dataclasses import dataclass

from dom22 import crosscheck


@dataclass
class Config:
    simple_max: int = 8          # enumeration bound, simple graphs
    multi_max: int = 6           # enumeration bound, multiplicity <= 2
    family_samples: int = 300    # per random family corpus
    family_max_vertices: int = 14
    partition_max_vertices: int = 12
    subdivision_samples: int = 2000
    contraction_samples: int = 1000
    seed: int = 0


def parse_config(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in dataclasses.fields(Config):
        parser.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    return Config(**vars(parser.parse_args(argv)))


def main(argv=None) -> int:
    cfg = parse_config(argv)
    t0 = time.perf_counter()
    enum = crosscheck.enumeration_corpus(cfg.simple_max, cfg.multi_max)
    minimal = [g for g in enum if crosscheck.is_minimal_22_structural(g) and g.is_connected()]
    family = crosscheck.random_F_corpus(cfg.family_samples, cfg.seed, cfg.family_max_vertices)
    family += crosscheck.random_minimal_corpus(cfg.family_samples, cfg.seed + 1,
                                               cfg.family_max_vertices)
    print(f"corpora: {len(enum)} enumerated, {len(minimal)} minimal, {len(family)} family "
          f"[{time.perf_counter() - t0:.1f}s]")
    subdivision = crosscheck.subdivision_corpus(cfg.seed, cfg.subdivision_samples)
    subdivision += [g for g in enum if g.n <= 6 and g.min_degree() >= 2]
    suites = [
        lambda: crosscheck.recognizer_equivalence(enum),
        crosscheck.closed_form_laws,
        crosscheck.product_examples,
        lambda: crosscheck.cartesian_products(4),
        lambda: crosscheck.subdivision_roundtrip(subdivision),
        lambda: crosscheck.contraction_rules(cfg.contraction_samples, cfg.seed),
        lambda: crosscheck.partition_validity(
            [g for g in minimal + family if g.n <= cfg.partition_max_vertices]),
        lambda: crosscheck.decomposition_roundtrip(minimal + family),
    ]
    ok = True
    for run in suites:
        t = time.perf_counter()
        res = run()
        ok &= res.passed
        print(f"{res.line()} [{time.perf_counter() - t:.1f}s]")
    print(f"total {time.perf_counter() - t0:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
