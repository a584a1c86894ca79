"""Regenerate the shipped plumbing corpus and derivation scripts under
src/singlink/data/."""
from __future__ import annotations

import argparse
from pathlib import Path

from singlink.corpus import corpus, corpus_file_text, data_dir
from singlink.mcg.derivations import (alpha_beta_identity, corrupt, phi_k, phi_n, phi_p,
                                      reduction, square_k, square_n)
from singlink.mcg.script import Script, derivation_script, serialize_script


def scripts() -> dict[str, tuple[Script, str]]:
    out = {}
    for n in (2, 3, 4):
        out[f"phi-n{n}"] = (derivation_script(phi_n(n)), f"monodromy of N_{n}")
    for k in (0, 1, 2):
        out[f"phi-k{k}"] = (derivation_script(phi_k(k)), f"monodromy of M_{k}")
    for p in (2, 3):
        out[f"phi-p{p}"] = (derivation_script(phi_p(p)), f"monodromy of Gamma_{p}")
    out["square-n3"] = (derivation_script(square_n(3)), "square of the N_3 monodromy")
    out["square-k2-s1"] = (derivation_script(square_k(2, 1)), "square of the M_2 root, s = 1")
    out["reduction-k2-s1"] = (derivation_script(reduction(2, 1)), "braid reduction, k = 2, s = 1")
    out["alpha-beta"] = (derivation_script(alpha_beta_identity()), "(a^2 b)^2 = (a b)^3")

    d = phi_n(3)
    milestones = d.milestone_words()
    out["phi-n3-search"] = (Script(d.surface, tuple(milestones), ("search",) * (len(milestones) - 1)),
                            "milestone lines of the N_3 derivation, gaps filled by search")
    d = phi_n(3)
    out["corrupted-phi-n3"] = (Script(d.surface, tuple(corrupt(d.words, 3, 2)), tuple(d.claims)),
                               "negative control: one twist deleted from step 3")
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=data_dir())
    args = ap.parse_args()
    cdir = args.out / "corpus"
    sdir = args.out / "scripts"
    for d in (cdir, sdir):
        d.mkdir(parents=True, exist_ok=True)
        for old in d.iterdir():
            old.unlink()
    for e in corpus():
        (cdir / f"{e.name}.plb").write_text(corpus_file_text(e))
    for name, (s, comment) in scripts().items():
        (sdir / f"{name}.mcg").write_text(serialize_script(s, comment))
    print(f"wrote {len(corpus())} plumbing files and {len(scripts())} scripts under {args.out}")


if __name__ == "__main__":
    main()
