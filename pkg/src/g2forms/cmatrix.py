"""Small dense matrices over Q(√2, i)."""

from __future__ import annotations

from typing import Sequence

from .scalar import ComplexScalar, as_complex

CMatrix = list  # list[list[ComplexScalar]]

_CZERO = ComplexScalar(0, 0)
_CONE = ComplexScalar(1, 0)


def cmat(rows: Sequence[Sequence]) -> CMatrix:
    return [[as_complex(x) for x in row] for row in rows]


def unit(n: int, i: int, j: int, value=1) -> CMatrix:
    """``value * e_ij`` with 1-based ``i, j``."""
    m = [[_CZERO] * n for _ in range(n)]
    m[i - 1][j - 1] = as_complex(value)
    return m


def ceye(n: int) -> CMatrix:
    return [[_CONE if i == j else _CZERO for j in range(n)] for i in range(n)]


def czeros(n: int) -> CMatrix:
    return [[_CZERO] * n for _ in range(n)]


def cadd(A, B) -> CMatrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def csub(A, B) -> CMatrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def cscale(s, A) -> CMatrix:
    s = as_complex(s)
    return [[s * a for a in row] for row in A]


def cmul(A, B) -> CMatrix:
    n, m = len(B), len(B[0])
    out = []
    for row in A:
        out_row = []
        for j in range(m):
            acc = _CZERO
            for k in range(n):
                a, b = row[k], B[k][j]
                if a and b:
                    acc = acc + a * b
            out_row.append(acc)
        out.append(out_row)
    return out


def commutator(A, B) -> CMatrix:
    return csub(cmul(A, B), cmul(B, A))


def adjoint(A) -> CMatrix:
    """Conjugate transpose."""
    return [[A[j][i].conjugate() for j in range(len(A))] for i in range(len(A[0]))]


def trace(A) -> ComplexScalar:
    acc = _CZERO
    for i in range(len(A)):
        acc = acc + A[i][i]
    return acc


def det3(A) -> ComplexScalar:
    (a, b, c), (d, e, f), (g, h, k) = A
    return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)


def is_zero(A) -> bool:
    return not any(x for row in A for x in row)


def realify(A) -> list:
    """Real coordinates (re, im of each entry, row-major) of a complex matrix."""
    out = []
    for row in A:
        for z in row:
            out.append(z.re)
            out.append(z.im)
    return out


def to_text(A) -> list[list[str]]:
    return [[str(z) for z in row] for row in A]
