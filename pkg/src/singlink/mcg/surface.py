"""Surface models with homology coordinates, and the transvection action of
Dehn twists on first homology."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from ..lattice import Matrix, identity, matmul
from .words import Word, curves, format_word


class UnknownCurve(KeyError):
    pass


@dataclass(frozen=True)
class Relation:
    name: str
    left: Word
    right: Word

    @property
    def curves(self) -> set[str]:
        return curves(self.left) | curves(self.right)

    def __str__(self):
        return f"{self.name}: {format_word(self.left)} = {format_word(self.right)}"


@dataclass(frozen=True)
class SurfaceModel:
    """Compact oriented surface of genus ``genus`` with ``boundary_count``
    boundary circles, described through H_1 of rank 2g + b - 1.

    ``form[i][j]`` is the algebraic intersection of basis classes i and j.
    ``boundary_classes`` lists the class of each boundary circle (they sum
    to zero).  ``boundary`` maps boundary-parallel curve names to the index
    of the circle they are parallel to; such curves are disjoint from every
    other curve.  Other disjoint pairs are listed explicitly.
    """

    name: str
    genus: int
    boundary_count: int
    basis: tuple[str, ...]
    form: Matrix
    curves: Mapping[str, tuple[int, ...]]
    boundary_classes: tuple[tuple[int, ...], ...]
    boundary: Mapping[str, int] = field(default_factory=dict)
    disjoint: frozenset[frozenset[str]] = frozenset()
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        r = len(self.basis)
        if self.genus < 0 or self.boundary_count < 1:
            raise ValueError("need genus >= 0 and at least one boundary component")
        if r != 2 * self.genus + self.boundary_count - 1:
            raise ValueError(f"{self.name}: basis rank {r} != 2g + b - 1")
        f = self.form
        if len(f) != r or any(len(row) != r for row in f):
            raise ValueError(f"{self.name}: form has wrong shape")
        if any(f[i][j] != -f[j][i] for i in range(r) for j in range(r)):
            raise ValueError(f"{self.name}: intersection form is not skew-symmetric")
        for name, v in self.curves.items():
            if len(v) != r:
                raise ValueError(f"{self.name}: curve {name} has {len(v)} coordinates")
        if len(self.boundary_classes) != self.boundary_count:
            raise ValueError(f"{self.name}: need one class per boundary circle")
        if any(sum(col) for col in zip(*self.boundary_classes)):
            raise ValueError(f"{self.name}: boundary classes must sum to zero")
        for name, k in self.boundary.items():
            if tuple(self.curves[name]) != tuple(self.boundary_classes[k]):
                raise ValueError(f"{self.name}: {name} is not parallel to boundary {k}")
        for cls in self.boundary_classes:
            if any(self.pair(cls, e) for e in identity(r)):
                raise ValueError(f"{self.name}: boundary class pairs nontrivially")
        for pair in self.disjoint:
            a, b = sorted(pair)
            if self.pair(self.vector(a), self.vector(b)):
                raise ValueError(f"{self.name}: {a} and {b} declared disjoint but intersect")
        for rel in self.relations:
            for name in rel.curves:
                self.vector(name)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count

    def vector(self, name: str) -> tuple[int, ...]:
        try:
            return tuple(self.curves[name])
        except KeyError:
            raise UnknownCurve(f"curve {name!r} is not defined on surface {self.name}") from None

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * self.form[i][j] * y[j]
                   for i in range(self.rank) for j in range(self.rank) if x[i] and y[j])

    def disjoint_curves(self, a: str, b: str) -> bool:
        return a == b or a in self.boundary or b in self.boundary or frozenset((a, b)) in self.disjoint

    def relation(self, name: str) -> Relation:
        for rel in self.relations:
            if rel.name == name:
                return rel
        raise KeyError(f"surface {self.name} has no relation {name!r}")


def transvection(s: SurfaceModel, name: str, sign: int = 1) -> Matrix:
    """Matrix of x -> x + sign <x, c> c acting on column vectors."""
    c = s.vector(name)
    fc = [sum(s.form[j][k] * c[k] for k in range(s.rank)) for j in range(s.rank)]
    return tuple(tuple(int(i == j) + sign * c[i] * fc[j] for j in range(s.rank))
                 for i in range(s.rank))


def homology_action(w: Word, s: SurfaceModel) -> Matrix:
    """Product of transvections, the rightmost twist acting first."""
    out = identity(s.rank)
    cache: dict = {}
    for letter in w:
        if letter not in cache:
            cache[letter] = transvection(s, *letter)
        out = matmul(out, cache[letter])
    return out


class HomologyVerdict(str, enum.Enum):
    EQUAL = "equal-on-homology"
    DISTINCT = "distinct-on-homology"


def verify_relation(r: Relation, s: SurfaceModel) -> HomologyVerdict:
    """Homology is not faithful (boundary twists act trivially), so EQUAL is
    a necessary condition for the relation, not a proof of it."""
    same = homology_action(r.left, s) == homology_action(r.right, s)
    return HomologyVerdict.EQUAL if same else HomologyVerdict.DISTINCT


@dataclass(frozen=True)
class AbstractOpenBook:
    surface: SurfaceModel
    monodromy: Word

    def __post_init__(self):
        for name, _ in self.monodromy:
            self.surface.vector(name)

    @property
    def page_genus(self) -> int:
        return self.surface.genus

    @property
    def binding_count(self) -> int:
        return self.surface.boundary_count


def positive_stabilization(ob: AbstractOpenBook, curve: str, ends: tuple[int, int] = (0, 0),
                           through: Sequence[int] | None = None,
                           handle_pairing: Sequence[int] | None = None) -> AbstractOpenBook:
    """Attach a 1-handle with feet on boundary circles ``ends`` and compose the
    monodromy with a right twist along a new curve ``curve`` that runs over
    the handle once.

    The new homology class ``h`` is the core of the handle closed up by an
    arc in the old page.  ``curve`` has class ``through + h`` where
    ``through`` is an old class (default 0).  When the feet lie on two
    different circles the handle adds genus, and ``handle_pairing`` must give
    ``<h, e_k>`` for every old basis class ``e_k``.
    """
    s = ob.surface
    if curve in s.curves:
        raise ValueError(f"curve {curve!r} already exists")
    i, j = ends
    if not (0 <= i < s.boundary_count and 0 <= j < s.boundary_count):
        raise ValueError(f"boundary indices {ends} out of range")
    through = tuple(through) if through is not None else (0,) * s.rank
    if len(through) != s.rank:
        raise ValueError("'through' has the wrong number of coordinates")
    r = s.rank
    if i == j:
        if handle_pairing is not None and any(handle_pairing):
            raise ValueError("a handle on a single boundary circle pairs trivially")
        row = [0] * r
        genus, bcount = s.genus, s.boundary_count + 1
    else:
        if handle_pairing is None:
            raise ValueError("handle_pairing is required when the feet lie on different circles")
        row = list(handle_pairing)
        if len(row) != r:
            raise ValueError("handle_pairing has the wrong number of coordinates")
        for k, cls in enumerate(s.boundary_classes):
            want = (k == i) - (k == j)
            got = sum(a * b for a, b in zip(row, cls))
            if got != want:
                raise ValueError(f"handle must pair {want} with boundary {k}, pairs {got}")
        genus, bcount = s.genus + 1, s.boundary_count - 1

    # new form: <h, e_k> = row[k]
    form = [list(rw) + [-row[k]] for k, rw in enumerate(s.form)]
    form.append(row + [0])
    ext = {name: tuple(v) + (0,) for name, v in s.curves.items()}
    ext[curve] = through + (1,)
    h = (0,) * r + (1,)
    old_b = [tuple(v) + (0,) for v in s.boundary_classes]
    if i == j:
        split = tuple(a - b for a, b in zip(old_b[i], h))
        bclasses = old_b[:i] + [split] + old_b[i + 1:] + [h]
    else:
        merged = tuple(a + b for a, b in zip(old_b[i], old_b[j]))
        keep = [v for k, v in enumerate(old_b) if k not in (i, j)]
        bclasses = keep + [merged]
    # curves parallel to a circle that received a foot stop being boundary-parallel
    touched = {i, j}
    boundary = {}
    disjoint = set(s.disjoint)
    for name, k in s.boundary.items():
        if k in touched:
            disjoint.update(frozenset((name, other)) for other in s.curves if other != name)
            continue
        pos = bclasses.index(ext[name])
        boundary[name] = pos
    new = SurfaceModel(
        name=f"{s.name}+{curve}", genus=genus, boundary_count=bcount,
        basis=s.basis + (f"h_{curve}",), form=tuple(tuple(rw) for rw in form),
        curves=ext, boundary_classes=tuple(bclasses), boundary=boundary,
        disjoint=frozenset(disjoint), relations=s.relations)
    return AbstractOpenBook(new, ob.monodromy + ((curve, 1),))


def with_relations(s: SurfaceModel, relations: Sequence[Relation]) -> SurfaceModel:
    return replace(s, relations=tuple(s.relations) + tuple(relations))
