"""Real Lie algebras given by structure constants over Q(√2).

Basis indices are 0-based inside Python objects and 1-based in the JSON
file format (matching the form files).
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Mapping, Sequence

from . import cmatrix as cm
from . import linalg
from .exterior import KForm
from .scalar import ZERO, ComplexScalar, RealScalar, SQRT2, as_real

__all__ = [
    "LieAlgebra",
    "LieAlgebraError",
    "bracket",
    "jacobi_check",
    "killing_form",
    "is_ad_invariant",
    "is_semisimple",
    "negative_trace_form",
    "cartan_3form",
    "ce_differential",
    "abelian",
    "direct_sum",
    "su3_matrices",
    "build_su2",
    "build_su3",
    "SU3_LABELS",
]


class LieAlgebraError(ValueError):
    """Structure constants that do not define a Lie algebra, or bad files."""


class LieAlgebra:
    """Finite-dimensional real Lie algebra.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to the coordinate vector of
    ``[e_i, e_j]``; omitted pairs bracket to zero.  ``matrices``, when given,
    is a faithful matrix realization whose commutators match the table.
    """

    def __init__(
        self,
        dim: int,
        brackets: Mapping[tuple[int, int], Sequence] | None = None,
        labels: Sequence[str] | None = None,
        matrices: Sequence | None = None,
    ):
        self.dim = dim
        table = {}
        for (i, j), vec in (brackets or {}).items():
            if not 0 <= i < j < dim:
                raise LieAlgebraError(f"bracket index pair {(i, j)} must satisfy 0 <= i < j < {dim}")
            vec = tuple(as_real(x) for x in vec)
            if len(vec) != dim:
                raise LieAlgebraError(f"bracket [{i}, {j}] has {len(vec)} coordinates, expected {dim}")
            if any(vec):
                table[(i, j)] = vec
        self._table = table
        self.labels = tuple(labels) if labels else tuple(f"e{k + 1}" for k in range(dim))
        self.matrices = [cm.cmat(m) for m in matrices] if matrices is not None else None
        self._zero = (ZERO,) * dim

    def structure(self, i: int, j: int) -> tuple[RealScalar, ...]:
        """Coordinates of ``[e_i, e_j]``."""
        if i == j:
            return self._zero
        if i < j:
            return self._table.get((i, j), self._zero)
        return tuple(-x for x in self._table.get((j, i), self._zero))

    def nonzero_brackets(self):
        return sorted(self._table.items())

    def ad(self, x: Sequence) -> list[list[RealScalar]]:
        """Matrix of ``ad x`` (column j = [x, e_j])."""
        cols = [bracket(self, x, _unit(self.dim, j)) for j in range(self.dim)]
        return linalg.transpose(cols)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def basis(self, label: str) -> list[RealScalar]:
        return _unit(self.dim, self.index(label))

    # -- construction from matrices ------------------------------------------

    @classmethod
    def from_matrices(cls, matrices: Sequence, labels: Sequence[str] | None = None) -> LieAlgebra:
        mats = [cm.cmat(m) for m in matrices]
        dim = len(mats)
        real_cols = [cm.realify(m) for m in mats]
        A = linalg.transpose(real_cols)
        if linalg.rank(A) != dim:
            raise LieAlgebraError("matrices are linearly dependent over R")
        table = {}
        for i, j in combinations(range(dim), 2):
            c = cm.commutator(mats[i], mats[j])
            if cm.is_zero(c):
                continue
            try:
                table[(i, j)] = linalg.solve(A, cm.realify(c))
            except ValueError:
                raise LieAlgebraError(f"span of the matrices is not closed under [{i}, {j}]") from None
        return cls(dim, table, labels, mats)

    def coordinates(self, matrix) -> list[RealScalar]:
        """Coordinates of a matrix in the realization basis."""
        if self.matrices is None:
            raise LieAlgebraError("algebra has no matrix realization")
        A = linalg.transpose([cm.realify(m) for m in self.matrices])
        return linalg.solve(A, cm.realify(cm.cmat(matrix)))

    def element(self, coords: Sequence) -> list:
        """Matrix of the element with the given coordinates."""
        if self.matrices is None:
            raise LieAlgebraError("algebra has no matrix realization")
        n = len(self.matrices[0])
        acc = cm.czeros(n)
        for c, m in zip(coords, self.matrices):
            c = as_real(c)
            if c:
                acc = cm.cadd(acc, cm.cscale(ComplexScalar(c, 0), m))
        return acc

    # -- file format --------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "brackets": [
                {"i": i + 1, "j": j + 1, "coeffs": [str(x) for x in vec]}
                for (i, j), vec in self.nonzero_brackets()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> LieAlgebra:
        try:
            dim, entries = data["dim"], data["brackets"]
        except (KeyError, TypeError):
            raise LieAlgebraError("algebra object needs 'dim' and 'brackets'") from None
        if not isinstance(dim, int) or dim < 0 or not isinstance(entries, list):
            raise LieAlgebraError("'dim' must be a non-negative integer and 'brackets' a list")
        table = {}
        for k, entry in enumerate(entries):
            try:
                i, j, coeffs = entry["i"], entry["j"], entry["coeffs"]
            except (KeyError, TypeError):
                raise LieAlgebraError(f"bracket #{k}: expected keys 'i', 'j', 'coeffs'") from None
            if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= dim):
                raise LieAlgebraError(f"bracket #{k}: need integers 1 <= i < j <= {dim}")
            if (i - 1, j - 1) in table:
                raise LieAlgebraError(f"bracket #{k}: duplicate pair ({i}, {j})")
            if not isinstance(coeffs, list) or len(coeffs) != dim:
                raise LieAlgebraError(f"bracket #{k}: 'coeffs' must list {dim} scalars")
            try:
                table[(i - 1, j - 1)] = [RealScalar.parse(str(c)) for c in coeffs]
            except ValueError as exc:
                raise LieAlgebraError(f"bracket #{k}: {exc}") from None
        g = cls(dim, table)
        if not jacobi_check(g):
            raise LieAlgebraError("structure constants violate the Jacobi identity")
        return g

    @classmethod
    def from_json(cls, text: str) -> LieAlgebra:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LieAlgebraError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, labels={self.labels})"


def _unit(n: int, j: int) -> list[RealScalar]:
    v = [ZERO] * n
    v[j] = RealScalar(1)
    return v


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> list[RealScalar]:
    if len(x) != g.dim or len(y) != g.dim:
        raise ValueError(f"vectors of length {len(x)}, {len(y)} in a {g.dim}-dimensional algebra")
    out = [ZERO] * g.dim
    for (i, j), vec in g.nonzero_brackets():
        c = as_real(x[i]) * as_real(y[j]) - as_real(x[j]) * as_real(y[i])
        if not c:
            continue
        for k, v in enumerate(vec):
            if v:
                out[k] = out[k] + c * v
    return out


def jacobi_check(g: LieAlgebra) -> bool:
    n = g.dim
    for a, b, c in combinations(range(n), 3):
        total = [ZERO] * n
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            inner = g.structure(y, z)
            for k, w in enumerate(inner):
                if not w:
                    continue
                outer = g.structure(x, k)
                for m, u in enumerate(outer):
                    if u:
                        total[m] = total[m] + w * u
        if any(total):
            return False
    return True


def killing_form(g: LieAlgebra) -> list[list[RealScalar]]:
    """``κ(x, y) = trace(ad x ∘ ad y)`` on basis pairs."""
    n = g.dim
    ads = [g.ad(_unit(n, i)) for i in range(n)]
    K = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            acc = ZERO
            A, B = ads[i], ads[j]
            for r in range(n):
                for s in range(n):
                    if A[r][s] and B[s][r]:
                        acc = acc + A[r][s] * B[s][r]
            K[i][j] = K[j][i] = acc
    return K


def is_ad_invariant(g: LieAlgebra, m: Sequence[Sequence]) -> bool:
    """``m([z, x], y) + m(x, [z, y]) = 0`` for all basis z, x, y."""
    n = g.dim
    m = [[as_real(v) for v in row] for row in m]
    for z in range(n):
        for x in range(n):
            zx = g.structure(z, x)
            for y in range(n):
                zy = g.structure(z, y)
                acc = ZERO
                for k in range(n):
                    if zx[k] and m[k][y]:
                        acc = acc + zx[k] * m[k][y]
                    if zy[k] and m[x][k]:
                        acc = acc + m[x][k] * zy[k]
                if acc:
                    return False
    return True


def is_semisimple(g: LieAlgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    return linalg.rank(killing_form(g)) == g.dim


def negative_trace_form(g: LieAlgebra) -> list[list[RealScalar]]:
    """``<x, y> = -Re trace(xy)`` on the matrix realization."""
    if g.matrices is None:
        raise LieAlgebraError("trace form needs a matrix realization")
    n = g.dim
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = cm.trace(cm.cmul(g.matrices[i], g.matrices[j]))
            out[i][j] = out[j][i] = -t.re
    return out


def cartan_3form(g: LieAlgebra, metric: Sequence[Sequence] | None = None) -> KForm:
    """The 3-form ``(x, y, z) -> <x, [y, z]>``.

    Without ``metric``, uses the negative trace form when a matrix
    realization exists and the Killing form otherwise.
    """
    if metric is None:
        metric = negative_trace_form(g) if g.matrices is not None else killing_form(g)
    m = [[as_real(v) for v in row] for row in metric]
    n = g.dim
    if len(m) != n or any(len(r) != n for r in m):
        raise ValueError(f"metric must be {n} x {n}")
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
        raise ValueError("metric is not symmetric")
    if not is_ad_invariant(g, m):
        raise ValueError("metric is not ad-invariant")

    def phi(a, b, c):
        s = g.structure(b, c)
        acc = ZERO
        for d in range(n):
            if s[d] and m[a][d]:
                acc = acc + m[a][d] * s[d]
        return acc

    coeffs = {}
    for a, b, c in combinations(range(n), 3):
        v = phi(a, b, c)
        if phi(b, a, c) != -v or phi(a, c, b) != -v:
            raise ArithmeticError(f"<x,[y,z]> not alternating on basis triple {(a, b, c)}")
        if v:
            coeffs[(1 << a) | (1 << b) | (1 << c)] = v
    return KForm(n, 3, coeffs)


def ce_differential(g: LieAlgebra, omega: KForm) -> KForm:
    """Chevalley–Eilenberg differential on left-invariant forms.

    ``dω(x0, ..., xk) = Σ_{i<j} (-1)^{i+j} ω([xi, xj], x0, ..., x̂i, ..., x̂j, ..., xk)``.
    """
    n, k = g.dim, omega.degree
    if omega.dim != n:
        raise ValueError(f"form on R^{omega.dim} over a {n}-dimensional algebra")
    if k >= n:
        raise ValueError(f"cannot differentiate a {k}-form on a {n}-dimensional algebra")
    coeffs = {}
    for idx in combinations(range(n), k + 1):
        total = ZERO
        for i, j in combinations(range(k + 1), 2):
            br = g.structure(idx[i], idx[j])
            if not any(br):
                continue
            rest = [idx[t] + 1 for t in range(k + 1) if t != i and t != j]
            sgn = -1 if (i + j) % 2 else 1
            for d, c in enumerate(br):
                if c:
                    w = omega.coefficient([d + 1] + rest)
                    if w:
                        total = total + sgn * c * w
        if total:
            coeffs[sum(1 << t for t in idx)] = total
    return KForm(n, k + 1, coeffs)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {})


def direct_sum(g: LieAlgebra, h: LieAlgebra) -> LieAlgebra:
    n = g.dim + h.dim
    table = {}
    for (i, j), vec in g.nonzero_brackets():
        table[(i, j)] = list(vec) + [ZERO] * h.dim
    for (i, j), vec in h.nonzero_brackets():
        table[(i + g.dim, j + g.dim)] = [ZERO] * g.dim + list(vec)
    return LieAlgebra(n, table, g.labels + h.labels)


SU3_LABELS = ("d1", "d2", "d3", "f1", "f2", "f3", "f4", "xi")


def su3_matrices() -> dict[str, list]:
    """The basis (δ1, δ2, δ3, f1, f2, f3, f4, ξ') of su(3) as 3x3 matrices.

    ξ' = i(2e11 - e22 - e33) is left unnormalized (its unit multiple
    involves √6).
    """
    i_ = ComplexScalar(0, 1)
    r = ComplexScalar(SQRT2.inverse(), 0)  # 1/√2
    ir = i_ * r
    e = lambda a, b, v: cm.unit(3, a, b, v)  # noqa: E731
    return {
        "d1": cm.cadd(e(2, 2, ir), e(3, 3, -ir)),
        "d2": cm.cadd(e(2, 3, r), e(3, 2, -r)),
        "d3": cm.cadd(e(2, 3, ir), e(3, 2, ir)),
        "f1": cm.cadd(e(1, 2, r), e(2, 1, -r)),
        "f2": cm.cadd(e(1, 2, ir), e(2, 1, ir)),
        "f3": cm.cadd(e(1, 3, r), e(3, 1, -r)),
        "f4": cm.cadd(e(1, 3, ir), e(3, 1, ir)),
        "xi": cm.cadd(cm.cadd(e(1, 1, 2 * i_), e(2, 2, -i_)), e(3, 3, -i_)),
    }


def build_su3() -> LieAlgebra:
    mats = su3_matrices()
    return LieAlgebra.from_matrices([mats[k] for k in SU3_LABELS], SU3_LABELS)


def build_su2() -> LieAlgebra:
    """su(2) as the span of δ1, δ2, δ3 (the stabilizer of e1 in su(3))."""
    mats = su3_matrices()
    labels = ("d1", "d2", "d3")
    return LieAlgebra.from_matrices([mats[k] for k in labels], labels)
