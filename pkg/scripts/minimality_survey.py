"""Enumerate allowable cycles m <= Z + slack on random rational trees and
check that the fundamental cycle Z is the unique minimizer of
(page genus, genus + binding).  Prints one line per tree and a tally."""
from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from singlink.cycle import fundamental_cycle, is_rational
from singlink.graph import PlumbingGraph
from singlink.lattice import intersection_matrix, is_negative_definite
from singlink.openbook import milnor_openbook, valid_cycles


@dataclass
class Config:
    trees: int = 30
    max_vertices: int = 7
    min_weight: int = -4
    slack: int = 2
    seed: int = 0


def random_rational_tree(rng: random.Random, cfg: Config) -> PlumbingGraph:
    while True:
        size = rng.randint(2, cfg.max_vertices)
        ids = [f"v{i}" for i in range(size)]
        edges = [(ids[rng.randrange(i)], ids[i]) for i in range(1, size)]
        g = PlumbingGraph.from_lists([(i, rng.randint(cfg.min_weight, -2)) for i in ids], edges)
        if is_negative_definite(intersection_matrix(g)) and is_rational(g).rational:
            return g


def survey(cfg: Config) -> tuple[int, int]:
    rng = random.Random(cfg.seed)
    unique = 0
    for t in range(cfg.trees):
        g = random_rational_tree(rng, cfg)
        z = fundamental_cycle(g)
        books = [milnor_openbook(g, m) for m in valid_cycles(g, [x + cfg.slack for x in z])]
        key = lambda ob: (ob.page_genus, ob.page_genus + ob.binding_count)
        best = min(map(key, books))
        winners = [ob.m for ob in books if key(ob) == best]
        ok = winners == [z]
        unique += ok
        print(f"tree {t:3d}  weights {g.weights}  Z {z}  cycles {len(books):5d}  "
              f"best {best}  {'unique' if ok else 'NOT UNIQUE: ' + str(winners)}")
    return unique, cfg.trees


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = Config(**vars(ap.parse_args()))
    unique, total = survey(cfg)
    print(f"fundamental cycle unique minimizer on {unique}/{total} trees")


if __name__ == "__main__":
    main()
