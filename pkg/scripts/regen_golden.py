"""Rewrite the golden CLI outputs under tests/golden/ from the current code.

Run only after an intentional change to the report format; the test suite
byte-compares against these files.
"""
from __future__ import annotations

import contextlib
import io
from pathlib import Path

from singlink.cli import main
from singlink.corpus import data_dir

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"

# (golden file name, argv)
EXTRA = [
    ("openbook-d4-2211.json", ["openbook", "{corpus}/d4.plb", "--m", "2,2,1,1"]),
    ("diagram-lens-17-10.json", ["diagram", "{corpus}/lens-17-10.plb"]),
    ("classify-gamma-family-3.json", ["classify", "{corpus}/gamma-family-3.plb"]),
    ("cycle-e8.json", ["cycle", "{corpus}/e8.plb"]),
    ("mcg-phi-p2.json", ["mcg", "verify", "{scripts}/phi-p2.mcg"]),
    ("mcg-corrupted-phi-n3.json", ["mcg", "verify", "{scripts}/corrupted-phi-n3.mcg"]),
    ("batch-corpus.txt", ["batch", "{corpus}", "--table"]),
]


def golden_cases() -> list[tuple[str, list[str]]]:
    corpus = data_dir() / "corpus"
    cases = [(f"invariants-{p.stem}.json", ["invariants", str(p)])
             for p in sorted(corpus.glob("*.plb"))]
    subst = {"corpus": str(corpus), "scripts": str(data_dir() / "scripts")}
    cases += [(name, [a.format(**subst) for a in argv]) for name, argv in EXTRA]
    return cases


def run(argv: list[str]) -> tuple[int, str]:
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main(argv)
    return code, out.getvalue()


def main_() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in golden_cases():
        _, text = run(argv)
        (GOLDEN / name).write_text(text)
    print(f"wrote {len(golden_cases())} golden files to {GOLDEN}")


if __name__ == "__main__":
    main_()
