"""Legendrian surgery diagrams for star-shaped and linear plumbings.

Each vertex of weight ``e <= -2`` becomes a Legendrian unknot with
``tb = e + 1``; its ``-e - 2`` extra zigzags all sit on one side, which in
the front means one down cusp and ``-2e - 3`` up cusps.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal

from .graph import PlumbingGraph

Side = Literal["all-up", "all-down"]


class NotRealizable(ValueError):
    pass


@dataclass(frozen=True)
class FrontData:
    writhe: int
    cusps_down: int
    cusps_up: int

    def __post_init__(self):
        if self.cusps_down < 0 or self.cusps_up < 0:
            raise ValueError("cusp counts must be nonnegative")
        total = self.cusps_down + self.cusps_up
        if total % 2 or total < 2:
            raise ValueError(f"a front needs an even number (>= 2) of cusps, got {total}")


def front_invariants(f: FrontData) -> tuple[int, int]:
    """(tb, rot) = (w - c/2, (c_down - c_up)/2)."""
    tb = f.writhe - (f.cusps_down + f.cusps_up) // 2
    rot = (f.cusps_down - f.cusps_up) // 2
    return tb, rot


@dataclass(frozen=True)
class LegendrianComponent:
    vertex: str
    weight: int
    tb: int
    rot: int
    cusps_up: int
    cusps_down: int
    writhe: int = 0

    @property
    def surgery(self) -> int:
        return self.tb - 1

    def front(self) -> FrontData:
        return FrontData(self.writhe, self.cusps_down, self.cusps_up)

    def as_dict(self) -> dict:
        return {"vertex": self.vertex, "weight": self.weight, "tb": self.tb, "rot": self.rot,
                "surgery": self.surgery, "cusps_up": self.cusps_up,
                "cusps_down": self.cusps_down}


@dataclass(frozen=True)
class LegendrianDiagram:
    components: tuple[LegendrianComponent, ...]
    orientation_side: Side = "all-up"
    # adjacency of the plumbing, drawn as clasps; not used in any invariant
    clasps: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        for c in self.components:
            if c.tb > -1 or abs(c.rot) > -c.tb - 1 or (c.rot - c.tb - 1) % 2:
                raise NotRealizable(
                    f"{c.vertex}: (tb, rot) = ({c.tb}, {c.rot}) is not a Legendrian unknot")

    def component(self, vertex: str) -> LegendrianComponent:
        for c in self.components:
            if c.vertex == vertex:
                return c
        raise KeyError(vertex)


def canonical_surgery_diagram(g: PlumbingGraph) -> LegendrianDiagram:
    comps = []
    for v in g.vertices:
        if v.weight > -2:
            raise NotRealizable(
                f"vertex {v.id} has weight {v.weight} >= -1; only all-weights <= -2 plumbings "
                "are handled (the e0 = -2 rolled-up diagrams are not constructed)")
        comps.append(LegendrianComponent(v.id, v.weight, tb=v.weight + 1, rot=v.weight + 2,
                                         cusps_up=-2 * v.weight - 3, cusps_down=1))
    return LegendrianDiagram(tuple(comps), "all-up", tuple(g.sorted_edges()))


def flip_zigzag(d: LegendrianDiagram, vertex: str) -> LegendrianDiagram:
    """Move one extra zigzag of ``vertex`` to the other side (rot changes by 2)."""
    comps = []
    for c in d.components:
        if c.vertex == vertex:
            step = 1 if d.orientation_side == "all-up" else -1
            up, down = (c.cusps_up, c.cusps_down) if step == 1 else (c.cusps_down, c.cusps_up)
            if up < 2 or up + down < 4:
                raise ValueError(f"{vertex} has no extra zigzag on that side")
            up, down = up - 2, down + 2
            if step == -1:
                up, down = down, up
            c = replace(c, cusps_up=up, cusps_down=down, rot=c.rot + 2 * step)
        comps.append(c)
    return replace(d, components=tuple(comps))


def reverse_orientation(d: LegendrianDiagram) -> LegendrianDiagram:
    """Reverse every component: up and down cusps swap, rot changes sign."""
    comps = tuple(replace(c, rot=-c.rot, cusps_up=c.cusps_down, cusps_down=c.cusps_up)
                  for c in d.components)
    side: Side = "all-down" if d.orientation_side == "all-up" else "all-up"
    return replace(d, components=comps, orientation_side=side)


@dataclass(frozen=True)
class AdjunctionReport:
    ok: bool
    # vertex -> (<c1, S>, S.S + 2) for every vertex where they differ
    failures: dict

    def __bool__(self):
        return self.ok


def adjunction_check(d: LegendrianDiagram, g: PlumbingGraph) -> AdjunctionReport:
    """Compare <c1(J), [S_j]> = rot_j with S_j^2 + 2 = tb_j + 1 on each vertex."""
    if [c.vertex for c in d.components] != list(g.ids):
        raise ValueError("diagram and graph have different vertex sets")
    failures = {}
    for c, v in zip(d.components, g.vertices):
        if c.surgery != v.weight:
            raise ValueError(f"{v.id}: surgery coefficient {c.surgery} != weight {v.weight}")
        square = c.tb - 1
        if c.rot != square + 2:
            failures[c.vertex] = (c.rot, square + 2)
    return AdjunctionReport(not failures, failures)


def chern_evaluation(d: LegendrianDiagram) -> tuple[int, ...]:
    return tuple(c.rot for c in d.components)
