"""GL(7)-orbit type of a 3-form on R^7.

The invariant used is the symmetric pairing

    B(x, y) = coefficient of e1∧...∧e7 in (x⌟ω) ∧ (y⌟ω) ∧ ω.

A nondegenerate B means ω lies in one of the two open orbits: definite B
(signature {7, 0}) is the compact G2 type, signature {4, 3} the split type.
Independently, the stabilizer algebra {A ∈ gl(7) : A·ω = 0} has dimension
exactly 14 on the open orbits and more than 14 elsewhere; every call to
:func:`classify` checks the two computations agree.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Sequence

from . import linalg
from .exterior import KForm, _contract_basis, wedge
from .scalar import ZERO, RealScalar, as_real

__all__ = [
    "Verdict",
    "TypeReport",
    "ConsistencyError",
    "b_matrix",
    "signature",
    "stabilizer_system",
    "stabilizer",
    "stabilizer_dim",
    "derivation_action",
    "classify",
]

STABLE_STABILIZER_DIM = 14


class Verdict(str, enum.Enum):
    DEFINITE_STABLE = "DefiniteStable"
    SPLIT_STABLE = "SplitStable"
    NOT_STABLE = "NotStable"


class ConsistencyError(RuntimeError):
    """The signature verdict and the stabilizer dimension disagree."""


@dataclass(frozen=True)
class TypeReport:
    verdict: Verdict
    signature: tuple[int, int]  # (p, q) with p >= q
    stabilizer_dim: int
    b_rank: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        d["signature"] = list(self.signature)
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> TypeReport:
        return cls(Verdict(d["verdict"]), tuple(d["signature"]), d["stabilizer_dim"], d["b_rank"])


def _require_7_3(omega: KForm):
    if omega.dim != 7 or omega.degree != 3:
        raise ValueError(f"expected a 3-form on R^7, got a {omega.degree}-form on R^{omega.dim}")


def b_matrix(omega: KForm) -> list[list[RealScalar]]:
    _require_7_3(omega)
    contractions = [KForm(7, 2, _contract_basis(j, omega)) for j in range(1, 8)]
    top = (1 << 7) - 1
    B = [[ZERO] * 7 for _ in range(7)]
    for i in range(7):
        for j in range(i, 7):
            val = wedge(wedge(contractions[i], contractions[j]), omega)
            c = dict(val.mask_items()).get(top, ZERO)
            B[i][j] = B[j][i] = c
    return B


def signature(m: Sequence[Sequence]) -> tuple[int, int, int]:
    """Inertia ``(p, q, z)`` of a symmetric matrix by congruence diagonalization."""
    A = [[as_real(x) for x in row] for row in m]
    n = len(A)
    for i in range(n):
        if len(A[i]) != n:
            raise ValueError("signature of a non-square matrix")
        for j in range(i):
            if A[i][j] != A[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i}, {j})")
    active = list(range(n))
    p = q = 0
    while active:
        piv = next((i for i in active if A[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and A[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # x_i -> x_i + x_j turns the hyperbolic pair into a nonzero diagonal
            for k in active:
                A[i][k] = A[i][k] + A[j][k]
            for k in active:
                A[k][i] = A[k][i] + A[k][j]
            piv = i
        d = A[piv][piv]
        if d.sign() > 0:
            p += 1
        else:
            q += 1
        active.remove(piv)
        dinv = d.inverse()
        row = A[piv]
        for r in active:
            f = A[r][piv]
            if not f:
                continue
            f = f * dinv
            Ar = A[r]
            for c in active:
                if row[c]:
                    Ar[c] = Ar[c] - f * row[c]
    return p, q, n - p - q


def stabilizer_system(omega: KForm) -> list[list[RealScalar]]:
    """The 35 x 49 matrix of ``A -> A·ω``; column ``7p+q`` is the entry A[p][q]."""
    _require_7_3(omega)
    rows = []
    for abc in combinations(range(1, 8), 3):
        row = [ZERO] * 49
        for slot in range(3):
            q = abc[slot]
            for p in range(1, 8):
                args = list(abc)
                args[slot] = p
                c = omega.coefficient(args)
                if c:
                    col = 7 * (p - 1) + (q - 1)
                    row[col] = row[col] + c
        rows.append(row)
    return rows


def stabilizer_dim(omega: KForm) -> int:
    return 49 - linalg.rank(stabilizer_system(omega))


def stabilizer(omega: KForm) -> list[list[list[RealScalar]]]:
    """Basis of the stabilizer subalgebra as 7 x 7 matrices."""
    basis = linalg.nullspace(stabilizer_system(omega), 49)
    return [[v[7 * r : 7 * r + 7] for r in range(7)] for v in basis]


def derivation_action(A: Sequence[Sequence], omega: KForm) -> KForm:
    """``(A·ω)(x, y, z) = ω(Ax, y, z) + ω(x, Ay, z) + ω(x, y, Az)`` for any degree."""
    n, k = omega.dim, omega.degree
    acc = {}
    for idx in combinations(range(1, n + 1), k):
        total = ZERO
        for slot in range(k):
            q = idx[slot]
            for p in range(1, n + 1):
                a = A[p - 1][q - 1]
                if not a:
                    continue
                args = list(idx)
                args[slot] = p
                c = omega.coefficient(args)
                if c:
                    total = total + a * c
        if total:
            acc[sum(1 << (i - 1) for i in idx)] = total
    return KForm(n, k, acc)


def classify(omega: KForm) -> TypeReport:
    _require_7_3(omega)
    p, q, _ = signature(b_matrix(omega))
    sig = (max(p, q), min(p, q))
    b_rank = p + q
    stab = stabilizer_dim(omega)
    if b_rank < 7:
        verdict = Verdict.NOT_STABLE
    elif sig == (7, 0):
        verdict = Verdict.DEFINITE_STABLE
    elif sig == (4, 3):
        verdict = Verdict.SPLIT_STABLE
    else:
        raise ConsistencyError(f"nondegenerate B with impossible signature {sig}")
    stable = verdict is not Verdict.NOT_STABLE
    if stable != (stab == STABLE_STABILIZER_DIM):
        raise ConsistencyError(
            f"B has signature {sig} (rank {b_rank}) but the stabilizer has dimension {stab}"
        )
    return TypeReport(verdict, sig, stab, b_rank)
