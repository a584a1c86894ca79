"""Weighted plumbing graphs, Seifert data and Hirzebruch-Jung expansions.

A plumbing graph is kept as an ordered tuple of vertices plus a set of
undirected edges.  Vertex order matters: it fixes the row order of the
intersection matrix and the order of every cycle tuple computed from it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class PlumbingError(ValueError):
    """Raised for malformed plumbing input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphShapeError(ValueError):
    """A graph is valid but has the wrong shape for an operation
    (disconnected, contains a cycle, positive-genus vertex)."""


@dataclass(frozen=True)
class Vertex:
    id: str
    weight: int
    genus: int = 0


@dataclass(frozen=True)
class SeifertData:
    """Small Seifert fibred space Y(e0; r1, r2, r3)."""

    e0: int
    r1: Fraction
    r2: Fraction
    r3: Fraction

    def __post_init__(self):
        for name in ("r1", "r2", "r3"):
            r = Fraction(getattr(self, name))
            if not 0 < r < 1:
                raise PlumbingError(f"{name}={r} must lie strictly between 0 and 1")
            object.__setattr__(self, name, r)

    @property
    def ratios(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.r1, self.r2, self.r3)

    def __str__(self):
        return f"Y({self.e0}; {self.r1}, {self.r2}, {self.r3})"


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple[Vertex, ...]
    edges: frozenset[frozenset[str]] = frozenset()
    # provenance only; two graphs with the same vertices and edges are equal
    seifert: SeifertData | None = field(default=None, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        object.__setattr__(self, "vertices", vertices)
        ids = [v.id for v in vertices]
        seen = set()
        for i in ids:
            if i in seen:
                raise PlumbingError(f"duplicate vertex id {i}")
            seen.add(i)
        edges = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise PlumbingError(f"self-loop at {next(iter(e))}")
            for end in sorted(e):
                if end not in seen:
                    raise PlumbingError(f"dangling endpoint {end}")
            edges.add(e)
        object.__setattr__(self, "edges", frozenset(edges))
        for v in vertices:
            if v.genus < 0:
                raise PlumbingError(f"negative genus at {v.id}")

    @classmethod
    def from_lists(cls, vertices: Iterable[tuple], edges: Iterable[tuple[str, str]] = (),
                   seifert: SeifertData | None = None) -> "PlumbingGraph":
        """Build from ``(id, weight)`` or ``(id, weight, genus)`` tuples."""
        vs = tuple(Vertex(*v) for v in vertices)
        es = []
        for a, b in edges:
            if a == b:
                raise PlumbingError(f"self-loop at {a}")
            e = frozenset((a, b))
            if e in es:
                raise PlumbingError(f"duplicate edge {a} {b}")
            es.append(e)
        return cls(vs, frozenset(es), seifert)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(v.weight for v in self.vertices)

    def __len__(self):
        return len(self.vertices)

    def index(self) -> dict[str, int]:
        return {v.id: i for i, v in enumerate(self.vertices)}

    def neighbours(self) -> list[list[int]]:
        idx = self.index()
        adj: list[list[int]] = [[] for _ in self.vertices]
        for e in self.edges:
            a, b = sorted(e)
            adj[idx[a]].append(idx[b])
            adj[idx[b]].append(idx[a])
        for row in adj:
            row.sort()
        return adj

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def permuted(self, order: Sequence[int]) -> "PlumbingGraph":
        """Same graph with vertices listed as ``[vertices[i] for i in order]``."""
        if sorted(order) != list(range(len(self.vertices))):
            raise ValueError("order must be a permutation of the vertex indices")
        return PlumbingGraph(tuple(self.vertices[i] for i in order), self.edges, self.seifert)

    def reordered(self, ids: Sequence[str]) -> "PlumbingGraph":
        idx = self.index()
        return self.permuted([idx[i] for i in ids])

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = self.neighbours()
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.vertices)

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.vertices) - 1

    def require_plumbing_tree(self) -> None:
        """Checks shared by the cycle/open-book operations."""
        if not self.is_connected():
            raise GraphShapeError("graph is disconnected")
        if len(self.edges) != len(self.vertices) - 1:
            raise GraphShapeError("graph contains a cycle; plumbing operations need a tree")
        bad = [v.id for v in self.vertices if v.genus != 0]
        if bad:
            raise GraphShapeError(f"vertices of positive genus not supported: {', '.join(bad)}")


def vertex_degrees(g: PlumbingGraph) -> list[int]:
    return [len(nb) for nb in g.neighbours()]


# -- continued fractions ---------------------------------------------------

def hj_expansion(x: Fraction | int) -> list[int]:
    """Expand ``x < -1`` as ``a1 - 1/(a2 - 1/(...))`` with every ``ai <= -2``."""
    x = Fraction(x)
    if x >= -1:
        raise ValueError(f"Hirzebruch-Jung expansion needs x < -1, got {x}")
    terms = []
    while True:
        # a = floor(x) unless x is already an integer
        a = x.numerator // x.denominator
        if a == x:
            terms.append(int(a))
            return terms
        terms.append(int(a))
        x = 1 / (a - x)


def evaluate_cf(terms: Sequence[int]) -> Fraction:
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a - 1 / value
    return value


def seifert_to_plumbing(s: SeifertData) -> PlumbingGraph:
    """Star-shaped plumbing tree of ``Y(e0; r1, r2, r3)``.

    Vertex order: the centre ``c``, then leg 1 from the vertex next to the
    centre outward (``a1, a2, ...``), then leg 2 (``b*``), then leg 3 (``c*``
    would clash with the centre, so ``d*``).
    """
    vertices = [Vertex("c", s.e0)]
    edges = []
    for prefix, r in zip("abd", s.ratios):
        prev = "c"
        for k, a in enumerate(hj_expansion(-1 / r), start=1):
            vid = f"{prefix}{k}"
            vertices.append(Vertex(vid, a))
            edges.append(frozenset((prev, vid)))
            prev = vid
    return PlumbingGraph(tuple(vertices), frozenset(edges), s)


def lens_chain(p: int, q: int) -> PlumbingGraph:
    """Linear plumbing of L(p, q), weights the expansion of ``-p/q``."""
    terms = hj_expansion(Fraction(-p, q))
    ids = [f"v{i + 1}" for i in range(len(terms))]
    return PlumbingGraph.from_lists(zip(ids, terms), zip(ids, ids[1:]))


# -- text format -----------------------------------------------------------

_ID = re.compile(r"^[A-Za-z0-9_.\-]+$")
_RATIO = re.compile(r"^(-?\d+)/(\d+)$")


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise PlumbingError(f"expected integer {what}, got {token!r}", lineno) from None


def parse_plumbing(text: str) -> PlumbingGraph:
    vertices: list[Vertex] = []
    edges: list[tuple[str, str, int]] = []
    seifert: SeifertData | None = None
    ids: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kw = tok[0]
        if kw == "vertex":
            if len(tok) not in (3, 5) or (len(tok) == 5 and tok[3] != "genus"):
                raise PlumbingError("expected 'vertex <id> <weight> [genus <g>]'", lineno)
            vid = tok[1]
            if not _ID.match(vid):
                raise PlumbingError(f"bad vertex id {vid!r}", lineno)
            if vid in ids:
                raise PlumbingError(f"duplicate vertex id {vid}", lineno)
            genus = _int(tok[4], lineno, "genus") if len(tok) == 5 else 0
            if genus < 0:
                raise PlumbingError("genus must be nonnegative", lineno)
            ids.add(vid)
            vertices.append(Vertex(vid, _int(tok[2], lineno, "weight"), genus))
        elif kw == "edge":
            if len(tok) != 3:
                raise PlumbingError("expected 'edge <id> <id>'", lineno)
            if tok[1] == tok[2]:
                raise PlumbingError(f"self-loop at {tok[1]}", lineno)
            edges.append((tok[1], tok[2], lineno))
        elif kw == "seifert":
            if len(tok) != 5:
                raise PlumbingError("expected 'seifert <e0> <p1>/<q1> <p2>/<q2> <p3>/<q3>'", lineno)
            if seifert is not None:
                raise PlumbingError("more than one seifert line", lineno)
            rs = []
            for t in tok[2:]:
                m = _RATIO.match(t)
                if not m or int(m.group(2)) == 0:
                    raise PlumbingError(f"bad ratio {t!r}", lineno)
                rs.append(Fraction(int(m.group(1)), int(m.group(2))))
            try:
                seifert = SeifertData(_int(tok[1], lineno, "e0"), *rs)
            except PlumbingError as exc:
                raise PlumbingError(str(exc), lineno) from None
        else:
            raise PlumbingError(f"unknown statement {kw!r}", lineno)

    if seifert is not None:
        if vertices or edges:
            raise PlumbingError("a seifert line cannot be mixed with vertex/edge lines")
        return seifert_to_plumbing(seifert)

    seen_edges = set()
    for a, b, lineno in edges:
        for end in (a, b):
            if end not in ids:
                raise PlumbingError(f"dangling endpoint {end}", lineno)
        e = frozenset((a, b))
        if e in seen_edges:
            raise PlumbingError(f"duplicate edge {a} {b}", lineno)
        seen_edges.add(e)
    if not vertices:
        raise PlumbingError("no vertices")
    return PlumbingGraph(tuple(vertices), frozenset(seen_edges))


def serialize_plumbing(g: PlumbingGraph) -> str:
    lines = []
    for v in g.vertices:
        line = f"vertex {v.id} {v.weight}"
        if v.genus:
            line += f" genus {v.genus}"
        lines.append(line)
    lines.extend(f"edge {a} {b}" for a, b in g.sorted_edges())
    return "\n".join(lines) + "\n"
