"""Full invariant report for one plumbing graph, and its JSON/table forms.

JSON schema (keys sorted on output; integers with ``|x| >= 2**53`` are
written as decimal strings):

``input``               vertices ``[{id, weight}]``, edges ``[[a, b]]``, seifert or null
``negative_definite``   bool (Milnor fillable iff true)
``intersection_matrix`` row-major array of decimal strings
``determinant``         det of the intersection matrix
``h1``                  ``{invariant_factors, free_rank, order}`` (order null if infinite);
                        null when not negative definite
``rational``            bool, null when not negative definite
``certificate``         ``{cycle, z_squared, artin_sum}`` or null
``fundamental_cycle``   list or null
``openbook``            ``{m, n, genus, binding, norm}`` or null
``support``             ``planar`` / ``elliptic`` / ``higher(g)`` or null
``diagram``             canonical Legendrian diagram with adjunction verdict, or null
``warnings``            list of strings
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .cycle import DEFAULT_COEFF_CAP, CoefficientCapExceeded, is_rational
from .graph import PlumbingGraph
from .lattice import determinant, intersection_matrix, is_negative_definite, smith_normal_form
from .legendrian import NotRealizable, adjunction_check, canonical_surgery_diagram
from .openbook import ConsistencyError, classify_support, milnor_openbook

JSON_SAFE = 2 ** 53


class PreconditionFailed(Exception):
    """A mathematical precondition of a command does not hold (exit code 2)."""


def jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return x if abs(x) < JSON_SAFE else str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def graph_echo(g: PlumbingGraph) -> dict:
    return {
        "vertices": [{"id": v.id, "weight": v.weight} for v in g.vertices],
        "edges": [list(e) for e in g.sorted_edges()],
        "seifert": str(g.seifert) if g.seifert is not None else None,
    }


def diagram_dict(g: PlumbingGraph) -> dict:
    d = canonical_surgery_diagram(g)
    cert = adjunction_check(d, g)
    return {
        "components": [c.as_dict() for c in d.components],
        "orientation_side": d.orientation_side,
        "clasps": [list(c) for c in d.clasps],
        "adjunction_ok": cert.ok,
    }


@dataclass
class Report:
    graph: PlumbingGraph
    negative_definite: bool
    determinant: int
    h1: dict | None = None
    rational: bool | None = None
    certificate: dict | None = None
    fundamental_cycle: tuple[int, ...] | None = None
    openbook: dict | None = None
    support: str | None = None
    diagram: dict | None = None
    warnings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "input": graph_echo(self.graph),
            "negative_definite": self.negative_definite,
            "intersection_matrix": [[str(x) for x in row] for row in intersection_matrix(self.graph)],
            "determinant": self.determinant,
            "h1": self.h1,
            "rational": self.rational,
            "certificate": self.certificate,
            "fundamental_cycle": list(self.fundamental_cycle) if self.fundamental_cycle else None,
            "openbook": self.openbook,
            "support": self.support,
            "diagram": self.diagram,
            "warnings": list(self.warnings),
        }

    def check_consistency(self) -> None:
        ob = self.openbook
        if ob is not None and ob["norm"] != 2 * ob["genus"] - 2 + ob["binding"]:
            raise ConsistencyError("Mn != 2 Mg - 2 + Mb")
        if self.h1 is not None and self.h1["order"] != abs(self.determinant):
            raise ConsistencyError("|H1| != |det|")


def build_report(g: PlumbingGraph, coeff_cap: int = DEFAULT_COEFF_CAP) -> Report:
    """Raises :class:`PreconditionFailed` only for a cycle exceeding ``coeff_cap``;
    a graph that is not negative definite yields a report with the later
    fields suppressed."""
    g.require_plumbing_tree()
    mat = intersection_matrix(g)
    det = determinant(mat)
    nd = is_negative_definite(mat)
    rep = Report(g, nd, det)
    if not nd:
        rep.warnings.append("intersection form is not negative definite: not Milnor fillable")
        return rep
    h = smith_normal_form(mat)
    rep.h1 = {"invariant_factors": list(h.invariant_factors), "free_rank": h.rank,
              "order": h.order if h.rank == 0 else None}
    try:
        cert = is_rational(g, coeff_cap)
    except CoefficientCapExceeded as exc:
        raise PreconditionFailed(str(exc)) from None
    rep.rational = cert.rational
    rep.certificate = {"cycle": list(cert.cycle), "z_squared": cert.z_squared,
                       "artin_sum": cert.artin_sum}
    rep.fundamental_cycle = cert.cycle
    if cert.rational:
        rep.openbook = milnor_openbook(g, cert.cycle).as_dict()
        rep.support = str(classify_support(g, coeff_cap))
    else:
        rep.warnings.append(
            f"not rational (Artin sum {cert.artin_sum} != -2): Milnor open book suppressed")
    try:
        rep.diagram = diagram_dict(g)
    except NotRealizable as exc:
        rep.warnings.append(f"no canonical diagram: {exc}")
    rep.check_consistency()
    return rep


TABLE_COLUMNS = ("name", "det", "neg-def", "rational", "cycle", "Mg", "Mb", "Mn", "support", "H1")


def table_row(name: str, rep: Report) -> list[str]:
    ob = rep.openbook or {}
    h1 = rep.h1
    h1s = "-" if h1 is None else (" + ".join(f"Z/{d}" for d in h1["invariant_factors"]) or "0")

    def cell(x):
        return "-" if x is None else str(x)

    cyc = ",".join(map(str, rep.fundamental_cycle)) if rep.fundamental_cycle else None
    return [name, str(rep.determinant), cell(rep.negative_definite), cell(rep.rational), cell(cyc),
            cell(ob.get("genus")), cell(ob.get("binding")), cell(ob.get("norm")),
            cell(rep.support), h1s]


def format_table(header, rows) -> str:
    rows = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"
