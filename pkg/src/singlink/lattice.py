"""Exact integer linear algebra on intersection lattices.

Matrices are tuples of tuples of Python ints; nothing here touches floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .graph import PlumbingGraph

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if any(len(row) != len(m) for row in m):
        raise ValueError("matrix must be square")
    return m


def intersection_matrix(g: PlumbingGraph) -> Matrix:
    idx = g.index()
    rows = [[0] * len(g) for _ in g.vertices]
    for i, v in enumerate(g.vertices):
        rows[i][i] = v.weight
    for e in g.edges:
        a, b = (idx[x] for x in e)
        rows[a][b] += 1
        rows[b][a] += 1
    return as_matrix(rows)


def matvec(m: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in m]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def is_symmetric(m: Sequence[Sequence[int]]) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; the 0x0 determinant is 1."""
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def leading_minors(m: Sequence[Sequence[int]]) -> list[int]:
    return [determinant([row[:k] for row in m[:k]]) for k in range(1, len(m) + 1)]


def is_negative_definite(m: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion applied to ``-m``."""
    if not is_symmetric(m):
        raise ValueError("definiteness test needs a symmetric matrix")
    return all((-1) ** k * d > 0 for k, d in enumerate(leading_minors(m), start=1))


@dataclass(frozen=True)
class HomologyStructure:
    """Finitely generated abelian group Z^rank + sum Z/d_i."""

    rank: int
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return 0 if self.rank else prod(self.invariant_factors)

    def __str__(self):
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"


def smith_diagonal(m: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form, nonnegative, divisibility chain."""
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        # pivot on the smallest nonzero entry of the trailing block
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # p must divide the rest of the block, else fold a row in
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # remainders are smaller than |p|; move the smallest into the pivot
            entries = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            entries += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            _, pi, pj = min(entries)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
    return diag


def smith_normal_form(m: Sequence[Sequence[int]]) -> HomologyStructure:
    """Cokernel of ``m`` as an abelian group (H_1 of the link for plumbings)."""
    diag = smith_diagonal(m)
    rank = len(m) - len(diag)
    factors = tuple(d for d in diag if d != 1)
    return HomologyStructure(rank=rank, invariant_factors=factors)


def three_holed_linking_matrix(q: int, r: int, s: int) -> Matrix:
    """Surgery linking matrix of the open book on the three-holed sphere with
    monodromy tau1^q tau2^r tau3^s: a 0-framed unknot meridional to three
    unknots framed q, r, s."""
    return ((0, 1, 1, 1), (1, q, 0, 0), (1, 0, r, 0), (1, 0, 0, s))


def h1_order_three_holed(q: int, r: int, s: int) -> int:
    order = q * r + q * s + r * s
    check = abs(determinant(three_holed_linking_matrix(q, r, s)))
    if check != order:
        raise ArithmeticError(f"|det| {check} disagrees with qr+qs+rs = {order}")
    return order
