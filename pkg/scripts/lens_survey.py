"""Lens-space table: continued fraction, Milnor binding/norm and the
Heegaard-genus bound coming from the minimal Milnor open book.

Whether the binding and norm of the minimal Milnor open book equal the
binding number and support norm of the canonical structure is open; both
columns are printed and nothing is asserted.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from singlink.graph import hj_expansion, lens_chain
from singlink.openbook import heegaard_bounds, planar_invariants
from singlink.report import format_table


@dataclass
class Config:
    max_p: int = 12


def rows(cfg: Config) -> list[list]:
    out = []
    for p in range(2, cfg.max_p + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            a = hj_expansion(Fraction(-p, q))
            inv = planar_invariants(lens_chain(p, q))
            hb = heegaard_bounds(inv.genus, inv.binding)
            out.append([f"L({p},{q})", ",".join(map(str, a)), inv.binding, inv.norm,
                        2 - 2 * len(a) - sum(a), hb.heegaard_upper])
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=12)
    cfg = Config(ap.parse_args().max_p)
    print(format_table(["space", "cf", "Mb", "Mn", "2-2n-sum(a)", "Heegaard<="], rows(cfg)), end="")


if __name__ == "__main__":
    main()
