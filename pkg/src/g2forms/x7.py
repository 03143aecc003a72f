"""Exact points of SU(3) and of the level set X7 = {g in SU(3) : Im g11 = 0}.

Tangent spaces of X7 are carried left-translated to the identity, as
subspaces of su(3) written in the coordinates of :func:`liealg.build_su3`
(basis δ1, δ2, δ3, f1, f2, f3, f4, ξ').  Since the Cartan 3-form is
bi-invariant its value on T_g X7 equals its value at e on that subspace.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import cmatrix as cm
from . import linalg
from .classify import TypeReport, classify
from .exterior import KForm, pullback
from .liealg import LieAlgebra, build_su3, cartan_3form
from .scalar import ZERO, ComplexScalar, ExactnessError, RealScalar, as_complex, rational_sqrt

__all__ = [
    "SU3Element",
    "RationalQuaternion",
    "CirclePoint",
    "TangentFrame",
    "NotInX7",
    "SingularPoint",
    "embed_su2",
    "so2_1",
    "in_x7",
    "sample_point",
    "first_column",
    "factor_point",
    "tangent_functional",
    "tangent_frame",
    "restrict_cartan",
    "verify_at",
    "translate_check",
    "invariance_check",
    "step2_inclusions",
    "cayley_quaternion",
    "circle_point",
    "SampleParams",
    "sample_parameters",
    "FIXED_CIRCLE_POINTS",
]


class NotInX7(ValueError):
    pass


class SingularPoint(ArithmeticError):
    """The defining functional of X7 vanishes identically at this point."""


def _F(x) -> Fraction:
    return Fraction(x)


class SU3Element:
    """A 3x3 matrix over Q(√2, i) with g^H g = I and det g = 1 (both checked)."""

    __slots__ = ("m",)

    def __init__(self, rows: Sequence[Sequence]):
        m = cm.cmat(rows)
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("SU(3) elements are 3x3")
        if cm.cmul(cm.adjoint(m), m) != cm.ceye(3):
            raise ValueError("matrix is not unitary")
        if cm.det3(m) != 1:
            raise ValueError("matrix does not have determinant 1")
        self.m = m

    @classmethod
    def _trusted(cls, m) -> SU3Element:
        obj = object.__new__(cls)
        obj.m = m
        return obj

    @classmethod
    def identity(cls) -> SU3Element:
        return cls._trusted(cm.ceye(3))

    def __matmul__(self, other: SU3Element) -> SU3Element:
        return SU3Element(cm.cmul(self.m, other.m))

    def inverse(self) -> SU3Element:
        return SU3Element._trusted(cm.adjoint(self.m))

    def __getitem__(self, ij) -> ComplexScalar:
        i, j = ij
        return self.m[i][j]

    def __eq__(self, other):
        return isinstance(other, SU3Element) and self.m == other.m

    def __repr__(self):
        return f"SU3Element({cm.to_text(self.m)})"


@dataclass(frozen=True)
class RationalQuaternion:
    """Unit quaternion a + bi + cj + dk with rational components."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _F(getattr(self, name)))
        if self.a**2 + self.b**2 + self.c**2 + self.d**2 != 1:
            raise ValueError(f"quaternion {self.as_list()} is not a unit")

    @classmethod
    def one(cls) -> RationalQuaternion:
        return cls(1, 0, 0, 0)

    def __mul__(self, o: RationalQuaternion) -> RationalQuaternion:
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return RationalQuaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def as_list(self) -> list[str]:
        return [str(x) for x in (self.a, self.b, self.c, self.d)]


@dataclass(frozen=True)
class CirclePoint:
    """(cos α, sin α) with rational coordinates."""

    c: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", _F(self.c))
        object.__setattr__(self, "s", _F(self.s))
        if self.c**2 + self.s**2 != 1:
            raise ValueError(f"({self.c}, {self.s}) is not on the unit circle")

    def as_list(self) -> list[str]:
        return [str(self.c), str(self.s)]


def _su2_block(q: RationalQuaternion) -> list:
    C = ComplexScalar
    return [[C(q.a, q.b), C(q.c, q.d)], [C(-q.c, q.d), C(q.a, -q.b)]]


def embed_su2(q: RationalQuaternion) -> SU3Element:
    """``diag(1, U(q))``, the element of the SU(2) fixing e1."""
    u = _su2_block(q)
    one, zero = ComplexScalar(1), ComplexScalar(0)
    return SU3Element(
        [[one, zero, zero], [zero, u[0][0], u[0][1]], [zero, u[1][0], u[1][1]]]
    )


def so2_1(p: CirclePoint) -> SU3Element:
    """Rotation by α in the real plane spanned by e1, e2."""
    return SU3Element([[p.c, -p.s, 0], [p.s, p.c, 0], [0, 0, 1]])


def in_x7(g: SU3Element) -> bool:
    return not g[0, 0].im


def sample_point(q1: RationalQuaternion, p: CirclePoint, q2: RationalQuaternion) -> SU3Element:
    """``g1 · α · g2`` with g1, g2 in SU(2) and α in SO(2)^1."""
    return embed_su2(q1) @ so2_1(p) @ embed_su2(q2)


def first_column(g: SU3Element) -> tuple[ComplexScalar, ComplexScalar, ComplexScalar]:
    """Image of e1, i.e. the projection SU(3) -> S^5."""
    return (g[0, 0], g[1, 0], g[2, 0])


def factor_point(v: Sequence) -> tuple[RationalQuaternion, CirclePoint]:
    """Write a point v = (c, z2, z3) of S^4 as the first column of U(q)·α.

    Requires c, Re/Im z2, Re/Im z3 rational and s = sqrt(1 - c²) rational.
    """
    c, z2, z3 = (as_complex(x) for x in v)
    for z in (c, z2, z3):
        if z.re.b or z.im.b:
            raise ExactnessError(f"coordinate {z} is not in Q(i)")
    if c.im:
        raise ValueError(f"first coordinate {c} is not real, so v is not on S^4")
    cr = c.re.a
    if cr * cr + z2.abs2().a + z3.abs2().a != 1:
        raise ValueError("v is not a unit vector")
    s = rational_sqrt(1 - cr * cr)
    if s == 0:
        if z2 or z3:
            raise ValueError("degenerate point")  # unreachable for unit v
        q = RationalQuaternion.one()
    else:
        # U(q) has first column (a + bi, -c + di); it must send (s, 0) to (z2, z3)
        w2, w3 = z2.re.a / s, z2.im.a / s
        w5, w6 = z3.re.a / s, z3.im.a / s
        q = RationalQuaternion(w2, w3, -w5, w6)
    p = CirclePoint(cr, s)
    got = first_column(embed_su2(q) @ so2_1(p))
    if got != (c, z2, z3):
        raise ArithmeticError(f"factorization postcondition failed: {got} != {(c, z2, z3)}")
    return q, p


@lru_cache(maxsize=1)
def _su3() -> LieAlgebra:
    return build_su3()


@lru_cache(maxsize=1)
def _su3_cartan() -> KForm:
    return cartan_3form(_su3())


def tangent_functional(g: SU3Element) -> list[RealScalar]:
    """Coefficients of ``v -> Im((g v)_11)`` on the su(3) basis."""
    row = g.m[0]
    out = []
    for X in _su3().matrices:
        acc = ComplexScalar(0)
        for k in range(3):
            if row[k] and X[k][0]:
                acc = acc + row[k] * X[k][0]
        out.append(acc.im)
    return out


@dataclass(frozen=True)
class TangentFrame:
    """Seven su(3) coordinate vectors spanning T_g X7 translated to e."""

    point: SU3Element
    vectors: tuple[tuple[RealScalar, ...], ...]
    functional: tuple[RealScalar, ...]

    def matrix(self) -> list[list[RealScalar]]:
        """The 8 x 7 matrix whose columns are the frame vectors."""
        return linalg.transpose(self.vectors)

    def rank(self) -> int:
        return linalg.rank(self.vectors)


def tangent_frame(g: SU3Element) -> TangentFrame:
    """Null space of the X7 functional, pivoting on its last nonzero coordinate.

    At the identity the functional only sees ξ', and the frame is exactly
    (δ1, δ2, δ3, f1, f2, f3, f4).
    """
    if not in_x7(g):
        raise NotInX7(f"Im g11 = {g[0, 0].im} != 0")
    lam = tangent_functional(g)
    piv = next((k for k in reversed(range(8)) if lam[k]), None)
    if piv is None:
        raise SingularPoint(f"defining functional vanishes at {g!r}")
    inv = lam[piv].inverse()
    vectors = []
    for k in range(8):
        if k == piv:
            continue
        v = [ZERO] * 8
        v[k] = RealScalar(1)
        v[piv] = -lam[k] * inv
        vectors.append(tuple(v))
    frame = TangentFrame(g, tuple(vectors), tuple(lam))
    for v in frame.vectors:
        if sum((a * b for a, b in zip(lam, v)), ZERO):
            raise ArithmeticError("frame vector violates the tangent equation")
    if frame.rank() != 7:
        raise ArithmeticError("tangent frame is not of rank 7")
    return frame


def restrict_cartan(g: SU3Element, frame: TangentFrame | None = None) -> KForm:
    """The Cartan 3-form of su(3) on T_g X7, in the coordinates of ``frame``."""
    if frame is None:
        frame = tangent_frame(g)
    return pullback(frame.matrix(), _su3_cartan())


def verify_at(g: SU3Element) -> TypeReport:
    return classify(restrict_cartan(g))


def translate_check(p: CirclePoint) -> bool:
    """T_α X7 translated back to e equals T_e X7, for α in SO(2)^1."""
    a = tangent_frame(so2_1(p)).vectors
    e = tangent_frame(SU3Element.identity()).vectors
    return linalg.rank(list(a) + list(e)) == 7


def step2_inclusions(p: CirclePoint) -> dict[str, bool]:
    """Which of the subspaces used to reconstruct T_e X7 lie in T_α X7 translated to e.

    ``su2``: span(δ1, δ2, δ3); ``so3_pair``: span(f1, f3); ``ad_su2``:
    Ad(α^{-1}) su(2); ``f2``, ``f4``: the two remaining directions.
    """
    frame = tangent_frame(so2_1(p))
    lam = frame.functional
    su3 = _su3()

    def inside(coords) -> bool:
        return not sum((a * b for a, b in zip(lam, coords)), ZERO)

    def unit(label):
        return [RealScalar(1) if l == label else ZERO for l in su3.labels]

    alpha = so2_1(p)
    ad_su2 = [
        su3.coordinates(cm.cmul(cm.cmul(alpha.inverse().m, su3.matrices[su3.index(l)]), alpha.m))
        for l in ("d1", "d2", "d3")
    ]
    return {
        "su2": all(inside(unit(l)) for l in ("d1", "d2", "d3")),
        "so3_pair": inside(unit("f1")) and inside(unit("f3")),
        "ad_su2": all(inside(v) for v in ad_su2),
        "f2": inside(unit("f2")),
        "f4": inside(unit("f4")),
    }


def invariance_check(g: SU3Element, q1: RationalQuaternion, q2: RationalQuaternion) -> bool:
    return in_x7(embed_su2(q1) @ g @ embed_su2(q2))


# -- exact sampling ---------------------------------------------------------------

BOUND = 50


def cayley_quaternion(x: Fraction, y: Fraction, z: Fraction) -> RationalQuaternion:
    """``(1 + u)(1 - u)^{-1}`` for the pure quaternion u = xi + yj + zk."""
    n = x * x + y * y + z * z
    d = 1 + n
    return RationalQuaternion((1 - n) / d, 2 * x / d, 2 * y / d, 2 * z / d)


def circle_point(t: Fraction) -> CirclePoint:
    d = 1 + t * t
    return CirclePoint((1 - t * t) / d, 2 * t / d)


FIXED_CIRCLE_POINTS = (
    CirclePoint(Fraction(3, 5), Fraction(4, 5)),
    CirclePoint(Fraction(5, 13), Fraction(12, 13)),
    CirclePoint(Fraction(0), Fraction(1)),
)


@dataclass(frozen=True)
class SampleParams:
    q1: RationalQuaternion
    p: CirclePoint
    q2: RationalQuaternion

    def point(self) -> SU3Element:
        return sample_point(self.q1, self.p, self.q2)

    def to_dict(self) -> dict:
        return {"q1": self.q1.as_list(), "p": self.p.as_list(), "q2": self.q2.as_list()}


def _rand_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-BOUND, BOUND), rng.randint(1, BOUND))


def random_quaternion(rng: random.Random) -> RationalQuaternion:
    return cayley_quaternion(_rand_rational(rng), _rand_rational(rng), _rand_rational(rng))


def random_circle_point(rng: random.Random) -> CirclePoint:
    return circle_point(_rand_rational(rng))


def sample_parameters(count: int, seed: int) -> list[SampleParams]:
    """Deterministic Cayley-parameterized samples.

    Seed 0 starts with the identity and the fixed SO(2)^1 points.
    """
    out: list[SampleParams] = []
    one = RationalQuaternion.one()
    if seed == 0:
        out.append(SampleParams(one, CirclePoint(1, 0), one))
        out.extend(SampleParams(one, p, one) for p in FIXED_CIRCLE_POINTS)
    rng = random.Random(seed)
    while len(out) < count:
        out.append(SampleParams(random_quaternion(rng), random_circle_point(rng), random_quaternion(rng)))
    return out[:count]


def circle_samples(count: int, seed: int) -> list[CirclePoint]:
    """Seeded points of SO(2)^1 other than the identity."""
    rng = random.Random(seed)
    out: list[CirclePoint] = []
    while len(out) < count:
        p = random_circle_point(rng)
        if p.s or p.c != 1:
            out.append(p)
    return out
