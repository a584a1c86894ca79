"""Named plumbing graphs: the star families N_n, M_k, Gamma_p, P_n, the
E/D-type stars, lens chains and a few negative examples.

Family graphs are listed in a fixed vertex order so that cycle tuples can be
compared entrywise:

* ``N_n``: leaf -2, centre, leaf -2, leaf -n;
* ``M_k``: the first -3 leaf, centre, the long leg outward, the other -3 leaf;
* ``Gamma_p``: the -2 chain of length p from its far end in to the centre,
  then the (-2, -2) leg outward, then the -3 leaf;
* ``P_n``: one -2 chain from its far end in, centre, the other -2 chain
  outward, then the -(n+1) leaf.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from pathlib import Path

from .graph import PlumbingGraph, SeifertData, lens_chain, seifert_to_plumbing, serialize_plumbing


@dataclass(frozen=True)
class Entry:
    name: str
    family: str
    graph: PlumbingGraph
    param: int | None = None


def star(e0: int, r1, r2, r3) -> PlumbingGraph:
    return seifert_to_plumbing(SeifertData(e0, F(r1), F(r2), F(r3)))


def _leg(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def n_family(n: int) -> PlumbingGraph:
    """Y(-2; 1/2, 1/2, 1/n), the D_{n+2}-type star (n >= 2)."""
    if n < 2:
        raise ValueError("N_n needs n >= 2")
    return star(-2, F(1, 2), F(1, 2), F(1, n)).reordered(["a1", "c", "b1", "d1"])


def m_family(k: int) -> PlumbingGraph:
    """Y(-2; 1/3, 1/3, (2k+1)/(2k+3)); the long leg is k (-2)'s then a -3."""
    if k < 0:
        raise ValueError("M_k needs k >= 0")
    g = star(-2, F(1, 3), F(1, 3), F(2 * k + 1, 2 * k + 3))
    return g.reordered(["a1", "c"] + _leg("d", k + 1) + ["b1"])


def gamma_family(p: int) -> PlumbingGraph:
    """Y(-2; 1/3, 2/3, p/(p+1))."""
    if p < 1:
        raise ValueError("Gamma_p needs p >= 1")
    g = star(-2, F(1, 3), F(2, 3), F(p, p + 1))
    return g.reordered(_leg("d", p)[::-1] + ["c", "b1", "b2", "a1"])


def p_family(n: int) -> PlumbingGraph:
    """Y(-2; 1/(n+1), n/(n+1), n/(n+1))."""
    if n < 1:
        raise ValueError("P_n needs n >= 1")
    g = star(-2, F(1, n + 1), F(n, n + 1), F(n, n + 1))
    return g.reordered(_leg("b", n)[::-1] + ["c"] + _leg("d", n) + ["a1"])


def e_type(k: int) -> PlumbingGraph:
    third = {6: F(2, 3), 7: F(3, 4), 8: F(4, 5)}[k]
    return star(-2, F(1, 2), F(2, 3), third)


def d4() -> PlumbingGraph:
    return n_family(2)


# Y(-2; 1/2, 2/3, 5/6): the intersection form is degenerate.
def degenerate_star() -> PlumbingGraph:
    return star(-2, F(1, 2), F(2, 3), F(5, 6))


# Y(-2; 1/2, 2/3, 9/11): negative definite but minimally elliptic.
def elliptic_star() -> PlumbingGraph:
    return star(-2, F(1, 2), F(2, 3), F(9, 11))


PLANAR_STARS = [
    (-3, F(1, 2), F(1, 2), F(1, 2)),
    (-3, F(1, 2), F(2, 3), F(3, 4)),
    (-3, F(2, 3), F(2, 3), F(2, 3)),
    (-4, F(1, 3), F(2, 5), F(3, 7)),
    (-5, F(4, 5), F(4, 5), F(4, 5)),
]

LENS = [(5, 2), (7, 3), (11, 4), (13, 5), (17, 10)]


def corpus() -> list[Entry]:
    """The shipped corpus, sorted by name."""
    out = [Entry("d4", "D4", d4()), Entry("degenerate-star", "degenerate", degenerate_star()),
           Entry("elliptic-star", "non-rational", elliptic_star())]
    out += [Entry(f"e{k}", f"E{k}", e_type(k), k) for k in (6, 7, 8)]
    out += [Entry(f"n-family-{n}", "N", n_family(n), n) for n in range(2, 7)]
    out += [Entry(f"m-family-{k}", "M", m_family(k), k) for k in range(0, 7)]
    out += [Entry(f"gamma-family-{p}", "Gamma", gamma_family(p), p) for p in range(2, 9)]
    out += [Entry(f"p-family-{n}", "P", p_family(n), n) for n in range(2, 7)]
    for i, (e0, *rs) in enumerate(PLANAR_STARS, 1):
        out.append(Entry(f"planar-star-{i}", "planar", star(e0, *rs)))
    out += [Entry(f"lens-{p}-{q}", "lens", lens_chain(p, q)) for p, q in LENS]
    return sorted(out, key=lambda e: e.name)


def entry(name: str) -> Entry:
    for e in corpus():
        if e.name == name:
            return e
    raise KeyError(name)


# families whose vertex order differs from the Seifert-line order
ORDERED_FAMILIES = {"D4", "N", "M", "Gamma", "P"}


def corpus_file_text(e: Entry) -> str:
    """Seifert-line form when it reproduces the graph exactly, else vertex/edge lines."""
    s = e.graph.seifert
    if s is not None and e.family not in ORDERED_FAMILIES:
        r = " ".join(f"{x.numerator}/{x.denominator}" for x in s.ratios)
        return f"# {e.name}\nseifert {s.e0} {r}\n"
    header = [f"# {e.name}"] + ([f"# {s}"] if s is not None else [])
    return "\n".join(header) + "\n" + serialize_plumbing(e.graph)


def data_dir() -> Path:
    return Path(__file__).parent / "data"
