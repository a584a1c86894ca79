"""Curve systems on the pages that occur for the N_n, M_k and Y_p families,
plus the disk, the three-holed sphere and the one-holed torus.

Homology basis on a torus with b boundary circles: ``a, b, c1, ..., c_{b-1}``
with ``<a, b> = 1`` and ``c_i`` the class of the i-th puncture.  The last
boundary circle (the outer one) has class ``-(c1 + ... + c_{b-1})``.

Coordinates of curves not pinned by the boundary are fixed by the
relations the derivations use, e.g. ``gamma beta = beta alpha1`` forces
``gamma = T_beta(alpha1) = a + b``.
"""
from __future__ import annotations

import re
from functools import lru_cache

from .surface import Relation, SurfaceModel
from .words import parse_word


def _rel(name: str, left: str, right: str) -> Relation:
    return Relation(name, parse_word(left), parse_word(right))


def braid(x: str, y: str) -> Relation:
    return _rel(f"braid-{x}-{y}", f"{x} {y} {x}", f"{y} {x} {y}")


def _torus(name: str, holes: int, curves: dict, boundary: dict, disjoint, relations) -> SurfaceModel:
    """Torus with ``holes`` boundary circles; ``curves`` values are
    ``(a, b, [c1, ..., c_{holes-1}])`` coefficient triples."""
    k = holes - 1
    basis = ("a", "b") + tuple(f"c{i}" for i in range(1, holes))
    r = len(basis)
    form = [[0] * r for _ in range(r)]
    form[0][1], form[1][0] = 1, -1
    vecs = {}
    for cname, (ca, cb, cs) in curves.items():
        cs = list(cs) + [0] * (k - len(cs))
        vecs[cname] = (ca, cb, *cs)
    bclasses = [tuple(int(j == i + 2) for j in range(r)) for i in range(k)]
    bclasses.append((0, 0) + (-1,) * k)
    return SurfaceModel(name=name, genus=1, boundary_count=holes, basis=basis,
                        form=tuple(map(tuple, form)), curves=vecs,
                        boundary_classes=tuple(bclasses), boundary=boundary,
                        disjoint=frozenset(frozenset(p) for p in disjoint),
                        relations=tuple(relations))


def disk() -> SurfaceModel:
    return SurfaceModel("disk", 0, 1, (), (), {}, ((),))


def one_holed_torus() -> SurfaceModel:
    curves = {"alpha": (1, 0, []), "beta": (0, 1, []), "delta": (0, 0, [])}
    return _torus("one-holed-torus", 1, curves, {"delta": 0}, [], [
        braid("alpha", "beta"),
        _rel("one-holed-torus", "alpha beta " * 6, "delta"),
    ])


def three_holed_sphere() -> SurfaceModel:
    """Planar page with boundary twists tau1, tau2, tau3."""
    form = ((0, 0), (0, 0))
    curves = {"tau1": (1, 0), "tau2": (0, 1), "tau3": (-1, -1)}
    return SurfaceModel("three-holed-sphere", 0, 3, ("c1", "c2"), form, curves,
                        ((1, 0), (0, 1), (-1, -1)), {"tau1": 0, "tau2": 1, "tau3": 2})


def dihedral_torus(n: int) -> SurfaceModel:
    """Page for N_n: torus with n - 1 boundary circles.

    ``delta1 .. delta_{n-2}`` surround the punctures, ``delta_{n-1}`` is the
    outer circle, ``x`` encloses all punctures, and ``alpha1``, ``alpha2``
    cobound the punctured annulus (for n = 2 they coincide).
    """
    if n < 2:
        raise ValueError("N_n needs n >= 2")
    k = n - 2
    allc = [1] * k
    curves = {
        "alpha1": (1, 0, []),
        "alpha2": (1, 0, allc),
        "beta": (0, 1, []),
        "gamma": (1, 1, []),
    }
    boundary = {}
    for i in range(1, k + 1):
        curves[f"delta{i}"] = (0, 0, [int(j == i - 1) for j in range(k)])
        boundary[f"delta{i}"] = i - 1
    curves[f"delta{n - 1}"] = (0, 0, [-1] * k)
    boundary[f"delta{n - 1}"] = k
    disjoint = [("alpha1", "alpha2")]
    chain_right = f"delta{n - 1}"
    if k:
        curves["x"] = (0, 0, allc)
        disjoint += [("x", "alpha1"), ("x", "alpha2")]
        chain_right += " x"
    relations = [
        braid("alpha1", "beta"), braid("alpha2", "beta"),
        _rel("slide-gamma", "gamma beta", "beta alpha1"),
        _rel("two-holed-torus", "alpha1 alpha2 beta " * 4, chain_right),
    ]
    return _torus(f"N{n}", n - 1, curves, boundary, disjoint, relations)


def two_holed_torus() -> SurfaceModel:
    """Page of the genus-one open book for Y_p; ``delta`` surrounds the
    puncture, ``delta0`` is the outer circle."""
    curves = {
        "alpha1": (1, 0, []),
        "alpha2": (1, 0, [1]),
        "beta": (0, 1, []),
        "gamma": (1, 1, []),
        "delta": (0, 0, [1]),
        "delta0": (0, 0, [-1]),
    }
    return _torus("two-holed-torus", 2, curves, {"delta": 0, "delta0": 1},
                  [("alpha1", "alpha2")], [
                      braid("alpha1", "beta"), braid("alpha2", "beta"),
                      _rel("slide-gamma", "gamma beta", "beta alpha1"),
                      _rel("two-holed-torus", "alpha1 alpha2 beta " * 4, "delta delta0"),
                  ])


def four_holed_torus() -> SurfaceModel:
    """Page for M_k.  ``alpha1 .. alpha4`` are parallel nonseparating curves in
    cyclic order, consecutive ones cobounding an annulus around one puncture;
    ``gamma1 = T_beta(alpha3)``, ``gamma2 = T_beta(alpha4)`` and
    ``beta1 = T_alpha2 T_alpha3^-1 (beta)``."""
    curves = {
        "alpha1": (1, 0, []),
        "alpha2": (1, 0, [1]),
        "alpha3": (1, 0, [1, 1]),
        "alpha4": (1, 0, [1, 1, 1]),
        "beta": (0, 1, []),
        "gamma1": (1, 1, [1, 1]),
        "gamma2": (1, 1, [1, 1, 1]),
        "beta1": (0, 1, [0, 1]),
        "delta1": (0, 0, [1]),
        "delta2": (0, 0, [0, 1]),
        "delta3": (0, 0, [0, 0, 1]),
        "delta4": (0, 0, [-1, -1, -1]),
    }
    alphas = ["alpha1", "alpha2", "alpha3", "alpha4"]
    disjoint = [(x, y) for i, x in enumerate(alphas) for y in alphas[i + 1:]]
    disjoint.append(("beta", "beta1"))
    relations = [braid(a, "beta") for a in alphas] + [
        _rel("slide-gamma1", "gamma1 beta", "beta alpha3"),
        _rel("slide-gamma2", "gamma2 beta", "beta alpha4"),
        _rel("slide-beta1", "beta1 alpha2 alpha3^-1", "alpha2 alpha3^-1 beta"),
        _rel("four-holed-torus", "alpha1 alpha3 beta alpha2 alpha4 beta " * 2,
             "delta1 delta2 delta3 delta4"),
    ]
    return _torus("four-holed-torus", 4, curves,
                  {"delta1": 0, "delta2": 1, "delta3": 2, "delta4": 3}, disjoint, relations)


_FIXED = {
    "disk": disk,
    "one-holed-torus": one_holed_torus,
    "two-holed-torus": two_holed_torus,
    "four-holed-torus": four_holed_torus,
    "three-holed-sphere": three_holed_sphere,
}


@lru_cache(maxsize=None)
def surface_model(name: str) -> SurfaceModel:
    """Look up a model by name: the fixed names above or ``N<n>``."""
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"N(\d+)", name)
    if m and int(m.group(1)) >= 2:
        return dihedral_torus(int(m.group(1)))
    raise KeyError(f"unknown surface model {name!r}")


def model_names() -> list[str]:
    return sorted(_FIXED) + ["N<n>"]
