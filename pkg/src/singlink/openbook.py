"""Milnor open books from cycles on a plumbing graph.

For a cycle ``m`` with ``I m = -n`` (``n >= 0``, ``n != 0``) the horizontal
open book has binding ``sum(n)`` components and page genus

    1 + sum(((d_i - 2) m_i + (m_i - 1) n_i) / 2)

with ``d_i`` the valence of vertex ``i``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cycle import DEFAULT_COEFF_CAP, bad_vertices, fundamental_cycle, is_rational
from .graph import PlumbingGraph, vertex_degrees
from .lattice import intersection_matrix, matvec


class InvalidCycle(ValueError):
    """The tuple m is not an allowable divisor class (some n_i < 0, or n = 0)."""

    def __init__(self, message: str, n: Sequence[int] = ()):
        super().__init__(message)
        self.n = tuple(n)


class NotRational(ValueError):
    pass


class BadVertexPresent(ValueError):
    pass


class ConsistencyError(AssertionError):
    """Two independent routes to the same invariant disagreed."""


@dataclass(frozen=True)
class MilnorOpenBook:
    m: tuple[int, ...]
    n: tuple[int, ...]
    page_genus: int
    binding_count: int

    @property
    def norm(self) -> int:
        return 2 * self.page_genus - 2 + self.binding_count

    def as_dict(self) -> dict:
        return {"m": list(self.m), "n": list(self.n), "genus": self.page_genus,
                "binding": self.binding_count, "norm": self.norm}


def binding_vector(g: PlumbingGraph, m: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in matvec(intersection_matrix(g), m))


def page_genus(degrees: Sequence[int], m: Sequence[int], n: Sequence[int]) -> int:
    total = sum((d - 2) * mi + (mi - 1) * ni for d, mi, ni in zip(degrees, m, n))
    if total % 2:
        raise ConsistencyError(f"genus numerator {total} is odd")
    return 1 + total // 2


def milnor_openbook(g: PlumbingGraph, m: Sequence[int]) -> MilnorOpenBook:
    m = tuple(int(x) for x in m)
    if len(m) != len(g):
        raise InvalidCycle(f"m has {len(m)} entries, graph has {len(g)} vertices")
    if any(x < 1 for x in m):
        raise InvalidCycle("m must consist of positive integers")
    n = binding_vector(g, m)
    negative = [(g.vertices[i].id, x) for i, x in enumerate(n) if x < 0]
    if negative:
        desc = ", ".join(f"n[{vid}]={x}" for vid, x in negative)
        raise InvalidCycle(f"m is not allowable: {desc}", n)
    if not any(n):
        raise InvalidCycle("m is not allowable: n = 0", n)
    genus = page_genus(vertex_degrees(g), m, n)
    if genus < 0:
        raise ConsistencyError(f"negative page genus {genus}")
    return MilnorOpenBook(m, n, genus, sum(n))


def _require_rational(g: PlumbingGraph, coeff_cap: int) -> tuple[int, ...]:
    cert = is_rational(g, coeff_cap)
    if not cert.rational:
        raise NotRational(f"not rational: Artin sum {cert.artin_sum} != -2")
    return cert.cycle


def minimal_milnor_openbook(g: PlumbingGraph, coeff_cap: int = DEFAULT_COEFF_CAP) -> MilnorOpenBook:
    return milnor_openbook(g, _require_rational(g, coeff_cap))


@dataclass(frozen=True)
class PlanarInvariants:
    genus: int
    binding: int
    norm: int


def planar_invariants(g: PlumbingGraph) -> PlanarInvariants:
    """Closed form for trees without bad vertices, cross-checked against the
    minimal Milnor open book."""
    bad = bad_vertices(g)
    if bad:
        raise BadVertexPresent(f"bad vertices: {', '.join(bad)}")
    mb = -sum(v.weight + d for v, d in zip(g.vertices, vertex_degrees(g)))
    inv = PlanarInvariants(0, mb, mb - 2)
    ob = minimal_milnor_openbook(g)
    if ob.m != (1,) * len(g):
        raise ConsistencyError(f"fundamental cycle {ob.m} is not all ones")
    if (ob.page_genus, ob.binding_count, ob.norm) != (inv.genus, inv.binding, inv.norm):
        raise ConsistencyError(f"closed form {inv} disagrees with open book {ob}")
    return inv


class SupportKind(enum.Enum):
    PLANAR = "planar"
    ELLIPTIC = "elliptic"
    HIGHER = "higher"


@dataclass(frozen=True)
class SupportClass:
    kind: SupportKind
    genus: int

    def __str__(self):
        if self.kind is SupportKind.HIGHER:
            return f"higher({self.genus})"
        return self.kind.value


def classify_support(g: PlumbingGraph, coeff_cap: int = DEFAULT_COEFF_CAP) -> SupportClass:
    genus = minimal_milnor_openbook(g, coeff_cap).page_genus
    kind = (SupportKind.PLANAR if genus == 0 else
            SupportKind.ELLIPTIC if genus == 1 else SupportKind.HIGHER)
    if g.seifert is not None and (kind is SupportKind.PLANAR) != (g.seifert.e0 <= -3):
        raise ConsistencyError(
            f"{g.seifert}: Milnor genus {genus} contradicts planar iff e0 <= -3")
    return SupportClass(kind, genus)


@dataclass(frozen=True)
class HeegaardBounds:
    heegaard_upper: int
    page_norm: int
    # rank(pi_1) <= Hg <= 1 + sn, filled in when a Heegaard genus is known
    chain: tuple[str, ...] = ()


def heegaard_bounds(page_genus: int, binding_count: int,
                    heegaard_genus: int | None = None) -> HeegaardBounds:
    """Gluing two pages along the binding gives a Heegaard surface of genus
    2g + r - 1; the page has -chi = 2g + r - 2."""
    if page_genus < 0 or binding_count < 1:
        raise ValueError("need page_genus >= 0 and binding_count >= 1")
    upper = 2 * page_genus + binding_count - 1
    norm = upper - 1
    chain: tuple[str, ...] = ()
    if heegaard_genus is not None:
        if heegaard_genus > upper:
            raise ConsistencyError(f"Heegaard genus {heegaard_genus} exceeds bound {upper}")
        chain = (f"rank(pi1) <= {heegaard_genus}", f"{heegaard_genus} <= 1 + sn",
                 f"sn >= {heegaard_genus - 1}")
    return HeegaardBounds(upper, norm, chain)


def valid_cycles(g: PlumbingGraph, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All m with 1 <= m_i <= bounds[i] and -I m >= 0, n != 0.

    Vertices are assigned in vertex order; the sign of n_i is checked as soon
    as vertex i and all its neighbours have values.
    """
    mat = intersection_matrix(g)
    adj = g.neighbours()
    r = len(g)
    # vertex i is decidable once every index in adj[i] + [i] has been assigned
    ready_at: list[list[int]] = [[] for _ in range(r)]
    for i in range(r):
        ready_at[max([i] + adj[i])].append(i)
    m = [0] * r

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == r:
            if any(matvec(mat, m)):
                yield tuple(m)
            return
        for val in range(1, bounds[k] + 1):
            m[k] = val
            if all(sum(mat[i][j] * m[j] for j in adj[i] + [i]) <= 0 for i in ready_at[k]):
                yield from rec(k + 1)
        m[k] = 0

    yield from rec(0)
