"""Fundamental cycle (Laufer's algorithm), Artin's rationality test and
bad vertices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import PlumbingGraph, vertex_degrees
from .lattice import intersection_matrix, is_negative_definite, matvec

DEFAULT_COEFF_CAP = 10**6


class NotNegativeDefinite(ValueError):
    pass


class CoefficientCapExceeded(RuntimeError):
    pass


def pairings(g: PlumbingGraph, z: Sequence[int]) -> list[int]:
    """The products Z.E_i for Z = sum z_i E_i, in vertex order."""
    return matvec(intersection_matrix(g), z)


def self_intersection(g: PlumbingGraph, z: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(z, pairings(g, z)))


def _check_preconditions(g: PlumbingGraph) -> None:
    g.require_plumbing_tree()
    if not is_negative_definite(intersection_matrix(g)):
        raise NotNegativeDefinite("intersection matrix is not negative definite")


def fundamental_cycle(g: PlumbingGraph, coeff_cap: int = DEFAULT_COEFF_CAP,
                      order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Laufer's algorithm.

    Start from Z = (1, ..., 1); while some E_i has Z.E_i > 0 raise z_i by one.
    Vertices are scanned in ``order`` (default: vertex order) and the scan
    restarts after every increment.
    """
    _check_preconditions(g)
    m = intersection_matrix(g)
    scan = list(range(len(g))) if order is None else list(order)
    z = [1] * len(g)
    prod = matvec(m, z)
    while True:
        for i in scan:
            if prod[i] > 0:
                z[i] += 1
                if z[i] > coeff_cap:
                    raise CoefficientCapExceeded(
                        f"coefficient of {g.vertices[i].id} exceeded {coeff_cap}")
                for j, row in enumerate(m):
                    prod[j] += row[i]
                break
        else:
            return tuple(z)


@dataclass(frozen=True)
class RationalityCertificate:
    rational: bool
    cycle: tuple[int, ...]
    z_squared: int
    # Z.Z + sum z_i(-e_i - 2); equals -2 exactly for rational singularities
    artin_sum: int

    def __bool__(self):
        return self.rational


def is_rational(g: PlumbingGraph, coeff_cap: int = DEFAULT_COEFF_CAP) -> RationalityCertificate:
    z = fundamental_cycle(g, coeff_cap)
    zz = self_intersection(g, z)
    total = zz + sum(zi * (-v.weight - 2) for zi, v in zip(z, g.vertices))
    return RationalityCertificate(total == -2, z, zz, total)


def bad_vertices(g: PlumbingGraph) -> list[str]:
    return [v.id for v, d in zip(g.vertices, vertex_degrees(g)) if v.weight + d > 0]
