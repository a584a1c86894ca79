"""Single-step moves between twist words, derivation checking and bounded
search.

A move is one of

* ``rule``: replace an occurrence of one side of a registered relation by
  the other side (either direction, and the mirrored form obtained by
  inverting both sides);
* ``commute``: swap two adjacent letters on disjoint curves;
* ``rotate``: cyclic rotation ``uv -> vu`` (overall conjugation by ``u``);
* ``free``: insert or delete an adjacent pair ``x x^-1``.

Only ``rotate`` changes the mapping class, and only up to conjugation.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ..lattice import matmul
from .surface import Relation, SurfaceModel, homology_action
from .words import Word, format_word, inverse

DEFAULT_REWRITE_DEPTH = 6

ROTATE = "rotate"
COMMUTE = "commute"
FREE = "free"
BUILTIN_MOVES = (ROTATE, COMMUTE, FREE)


@dataclass(frozen=True)
class Move:
    kind: str  # "rule" or one of BUILTIN_MOVES
    name: str  # relation name for rules, else the kind
    position: int

    def __str__(self):
        return f"{self.name}@{self.position}"


def rule_patterns(rules: Iterable[Relation]) -> list[tuple[str, Word, Word]]:
    """Every rewrite l -> r a relation licenses: both directions, and both
    directions of the inverted relation."""
    out = []
    for rel in rules:
        seen = set()
        for a, b in ((rel.left, rel.right), (rel.right, rel.left),
                     (inverse(rel.left), inverse(rel.right)),
                     (inverse(rel.right), inverse(rel.left))):
            if (a, b) not in seen and a != b:
                seen.add((a, b))
                out.append((rel.name, a, b))
    return out


def _occurrences(w: Word, pattern: Word) -> Iterator[int]:
    k = len(pattern)
    if k == 0:
        yield from range(len(w) + 1)
        return
    for i in range(len(w) - k + 1):
        if w[i:i + k] == pattern:
            yield i


def connecting_moves(w1: Word, w2: Word, s: SurfaceModel,
                     rules: Sequence[Relation] | None = None) -> list[Move]:
    """All single moves taking ``w1`` to ``w2``."""
    rules = s.relations if rules is None else rules
    found: list[Move] = []
    for name, left, right in rule_patterns(rules):
        if len(w1) - len(left) + len(right) != len(w2):
            continue
        for i in _occurrences(w1, left):
            if w1[:i] + right + w1[i + len(left):] == w2:
                found.append(Move("rule", name, i))
    if len(w1) == len(w2) and w1 != w2:
        diff = [i for i in range(len(w1)) if w1[i] != w2[i]]
        if (len(diff) == 2 and diff[1] == diff[0] + 1
                and w1[diff[0]] == w2[diff[1]] and w1[diff[1]] == w2[diff[0]]
                and s.disjoint_curves(w1[diff[0]][0], w1[diff[1]][0])):
            found.append(Move("commute", COMMUTE, diff[0]))
        for k in range(1, len(w1)):
            if w1[k:] + w1[:k] == w2:
                found.append(Move("rotate", ROTATE, k))
    for longer, shorter in ((w1, w2), (w2, w1)):
        if len(longer) == len(shorter) + 2:
            for i in range(len(longer) - 1):
                a, b = longer[i], longer[i + 1]
                if a[0] == b[0] and a[1] == -b[1] and longer[:i] + longer[i + 2:] == shorter:
                    found.append(Move("free", FREE, i))
                    break
    return found


def neighbours(w: Word, s: SurfaceModel, rules: Sequence[Relation] | None = None,
               rotations: bool = False) -> Iterator[tuple[Move, Word]]:
    """Length-preserving-or-shrinking moves out of ``w`` (no free insertion)."""
    rules = s.relations if rules is None else rules
    for name, left, right in rule_patterns(rules):
        for i in _occurrences(w, left):
            if left:
                yield Move("rule", name, i), w[:i] + right + w[i + len(left):]
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if a != b and s.disjoint_curves(a[0], b[0]):
            yield Move("commute", COMMUTE, i), w[:i] + (b, a) + w[i + 2:]
        if a[0] == b[0] and a[1] == -b[1]:
            yield Move("free", FREE, i), w[:i] + w[i + 2:]
    if rotations:
        for k in range(1, len(w)):
            yield Move("rotate", ROTATE, k), w[k:] + w[:k]


@dataclass(frozen=True)
class DerivationVerdict:
    valid: bool
    # index i of the failing transition steps[i] -> steps[i+1]
    failing_index: int | None = None
    reason: str = ""
    moves: tuple[Move, ...] = ()

    def __bool__(self):
        return self.valid


def verify_derivation(steps: Sequence[Word], s: SurfaceModel,
                      rules: Sequence[Relation] | None = None,
                      claims: Sequence[str | None] | None = None) -> DerivationVerdict:
    """Check that consecutive words differ by exactly one move.

    ``claims[i]``, when given, names the move expected between ``steps[i]``
    and ``steps[i+1]`` (a relation name, ``rotate``, ``commute`` or ``free``);
    ``None`` or ``"auto"`` accepts any move.  Each transition is also checked
    on homology: equal actions, or conjugate actions for a rotation.
    """
    if len(steps) < 2:
        raise ValueError("a derivation needs at least two steps")
    if claims is not None and len(claims) != len(steps) - 1:
        raise ValueError("need one claimed move per transition")
    for w in steps:
        for name, _ in w:
            s.vector(name)
    used = []
    for i, (w1, w2) in enumerate(zip(steps, steps[1:])):
        moves = connecting_moves(w1, w2, s, rules)
        claim = claims[i] if claims is not None else None
        if claim not in (None, "auto"):
            moves = [m for m in moves if m.name == claim]
        if not moves:
            what = f"move {claim!r}" if claim not in (None, "auto") else "registered move"
            return DerivationVerdict(False, i, f"no {what} takes {format_word(w1)} to "
                                     f"{format_word(w2)}", tuple(used))
        move = moves[0]
        a1, a2 = homology_action(w1, s), homology_action(w2, s)
        if move.kind == "rotate":
            u = w1[:move.position]
            au, au_inv = homology_action(u, s), homology_action(inverse(u), s)
            ok = matmul(matmul(au_inv, a1), au) == a2
        else:
            ok = a1 == a2
        if not ok:
            return DerivationVerdict(False, i, f"step {i} -> {i + 1} changes the homology action "
                                     f"(move {move}); a relation is inconsistent with the model",
                                     tuple(used))
        used.append(move)
    return DerivationVerdict(True, None, "", tuple(used))


def search_derivation(start: Word, goal: Word, s: SurfaceModel,
                      rules: Sequence[Relation] | None = None,
                      depth: int = DEFAULT_REWRITE_DEPTH, rotations: bool = False,
                      max_states: int = 2_000_000) -> list[Word] | None:
    """Bidirectional breadth-first search for a chain of at most ``depth``
    moves from ``start`` to ``goal``; returns the words or ``None``.

    Free insertions are not generated (the search only ever shortens or
    preserves length from either end), so this is a bounded, incomplete
    decision procedure.
    """
    if start == goal:
        return [start]
    parents = [{start: None}, {goal: None}]
    frontiers = [[start], [goal]]
    radius = [0, 0]
    states = 2
    while radius[0] + radius[1] < depth and (frontiers[0] or frontiers[1]):
        side = 0 if (len(frontiers[0]) <= len(frontiers[1]) and frontiers[0]) or not frontiers[1] else 1
        nxt = []
        mine, other = parents[side], parents[1 - side]
        for w in frontiers[side]:
            for _, v in neighbours(w, s, rules, rotations):
                if v in mine:
                    continue
                mine[v] = w
                states += 1
                if v in other:
                    return _join(v, parents)
                nxt.append(v)
            if states > max_states:
                return None
        frontiers[side] = nxt
        radius[side] += 1
    return None


def _join(meet: Word, parents: list[dict]) -> list[Word]:
    left = []
    w = meet
    while w is not None:
        left.append(w)
        w = parents[0][w]
    right = []
    w = parents[1][meet]
    while w is not None:
        right.append(w)
        w = parents[1][w]
    return left[::-1] + right


@dataclass(frozen=True)
class SquareVerdict:
    homology_equal: bool
    script: DerivationVerdict | None = None

    @property
    def valid(self) -> bool:
        return self.homology_equal and (self.script is None or self.script.valid)

    def __bool__(self):
        return self.valid


def check_square_identity(w: Word, target: Word, s: SurfaceModel,
                          script: Sequence[Word] | None = None,
                          rules: Sequence[Relation] | None = None,
                          claims: Sequence[str | None] | None = None) -> SquareVerdict:
    """Check ``w^2 = target`` on homology, and through ``script`` when given
    (its first word must be ``w w`` and its last ``target``)."""
    ww = w + w
    equal = homology_action(ww, s) == homology_action(target, s)
    verdict = None
    if script is not None:
        script = list(script)
        if script[0] != ww or script[-1] != target:
            verdict = DerivationVerdict(False, 0, "script does not run from w.w to the target")
        elif ww == target:
            verdict = DerivationVerdict(True)
        else:
            verdict = verify_derivation(script, s, rules, claims)
    return SquareVerdict(equal, verdict)
