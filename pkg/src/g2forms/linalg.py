"""Exact dense linear algebra over Q(√2).

Matrices are lists of rows of :class:`RealScalar`.  Rank, determinant and
null spaces clear denominators row by row and then run fraction-free
(Bareiss) elimination in the ring Z[√2], where every division performed is
exact.  Elements of Z[√2] are plain ``(a, b)`` integer pairs in here.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .scalar import ONE, ZERO, RealScalar, as_real

Matrix = list  # list[list[RealScalar]]


class InexactDivision(ArithmeticError):
    """Bareiss invariant violated; signals a bug, never bad input."""


def _zdiv(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    a, b = x
    c, d = y
    if d == 0:
        if c == 1:
            return x
        qa, ra = divmod(a, c)
        qb, rb = divmod(b, c)
        if ra or rb:
            raise InexactDivision(f"{x} / {y}")
        return (qa, qb)
    n = c * c - 2 * d * d
    qa, ra = divmod(a * c - 2 * b * d, n)
    qb, rb = divmod(b * c - a * d, n)
    if ra or rb:
        raise InexactDivision(f"{x} / {y}")
    return (qa, qb)


def _integer_rows(rows: Sequence[Sequence]) -> list[list[tuple[int, int]]]:
    out = []
    for row in rows:
        row = [as_real(x) for x in row]
        den = 1
        for x in row:
            den = lcm(den, x.a.denominator, x.b.denominator)
        out.append([(int(x.a * den), int(x.b * den)) for x in row])
    return out


def _gauss_jordan(M: list[list[tuple[int, int]]], full: bool):
    """Fraction-free elimination in place.

    With ``full`` the rows above each pivot are cleared too, and on return
    every pivot entry equals the last pivot ``D``.  Returns
    ``(pivots, D, swaps)``.
    """
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    prev = (1, 0)
    pivots: list[int] = []
    swaps = 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c] != (0, 0)), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
            swaps += 1
        pa, pb = M[r][c]
        rowr = M[r]
        targets = range(nrows) if full else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            rowi = M[i]
            fa, fb = rowi[c]
            jstart = 0 if full else c
            if fa == 0 and fb == 0:
                if prev == (pa, pb):
                    continue
                for j in range(jstart, ncols):
                    xa, xb = rowi[j]
                    if xa or xb:
                        rowi[j] = _zdiv((pa * xa + 2 * pb * xb, pa * xb + pb * xa), prev)
                continue
            for j in range(jstart, ncols):
                xa, xb = rowi[j]
                ya, yb = rowr[j]
                na = pa * xa + 2 * pb * xb - (fa * ya + 2 * fb * yb)
                nb = pa * xb + pb * xa - (fa * yb + fb * ya)
                rowi[j] = _zdiv((na, nb), prev) if (na or nb) else (0, 0)
        prev = (pa, pb)
        pivots.append(c)
        r += 1
    return pivots, prev, swaps


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    M = _integer_rows(rows)
    pivots, _, _ = _gauss_jordan(M, full=False)
    return len(pivots)


def det(rows: Sequence[Sequence]) -> RealScalar:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    rows = [[as_real(x) for x in r] for r in rows]
    scale = Fraction(1)
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, x.a.denominator, x.b.denominator)
        scale *= den
    M = _integer_rows(rows)
    pivots, D, swaps = _gauss_jordan(M, full=False)
    if len(pivots) < n:
        return ZERO
    sgn = -1 if swaps % 2 else 1
    return RealScalar(Fraction(D[0]), Fraction(D[1])) * sgn / scale


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[RealScalar]]:
    """Basis of ``{x : rows @ x = 0}`` in reduced form.

    Each basis vector has a 1 in one free column and 0 in the others.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    M = _integer_rows(rows)
    pivots, D, _ = _gauss_jordan(M, full=True)
    Dinv = RealScalar(D[0], D[1]).inverse()
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for i, pc in enumerate(pivots):
            xa, xb = M[i][f]
            if xa or xb:
                v[pc] = -RealScalar(xa, xb) * Dinv
        basis.append(v)
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> list[RealScalar]:
    """Unique solution of ``A x = b``; ValueError if none or not unique."""
    n = len(A[0])
    aug = [list(row) + [as_real(bi)] for row, bi in zip(A, b)]
    M = _integer_rows(aug)
    pivots, D, _ = _gauss_jordan(M, full=True)
    if pivots and pivots[-1] == n:
        raise ValueError("inconsistent linear system")
    if len(pivots) != n:
        raise ValueError("linear system has no unique solution")
    Dinv = RealScalar(D[0], D[1]).inverse()
    x = [ZERO] * n
    for i, pc in enumerate(pivots):
        xa, xb = M[i][n]
        x[pc] = RealScalar(xa, xb) * Dinv
    return x


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    Bt = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(A: Sequence[Sequence], x: Sequence) -> list:
    out = []
    for row in A:
        acc = ZERO
        for a, b in zip(row, x):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def transpose(A: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*A)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[as_real(x) for x in row] for row in rows]
