"""Print the invariant table for the star families over a parameter range.

    python3 scripts/family_table.py --families N M Gamma P --start 2 --stop 8
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from singlink.corpus import gamma_family, m_family, n_family, p_family
from singlink.report import TABLE_COLUMNS, build_report, format_table, table_row

BUILDERS = {"N": n_family, "M": m_family, "Gamma": gamma_family, "P": p_family}


@dataclass
class Config:
    families: list[str] = field(default_factory=lambda: list(BUILDERS))
    start: int = 2
    stop: int = 7


def run(cfg: Config) -> str:
    rows = []
    for fam in cfg.families:
        for k in range(cfg.start, cfg.stop):
            rows.append(table_row(f"{fam}_{k}", build_report(BUILDERS[fam](k))))
    return format_table(TABLE_COLUMNS, rows)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--families", nargs="+", choices=sorted(BUILDERS), default=list(BUILDERS))
    ap.add_argument("--start", type=int, default=2)
    ap.add_argument("--stop", type=int, default=7, help="exclusive upper bound")
    a = ap.parse_args()
    print(run(Config(a.families, a.start, a.stop)), end="")


if __name__ == "__main__":
    main()
