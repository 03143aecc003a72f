import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from g2forms import cmatrix as cm
from g2forms.classify import Verdict, classify
from g2forms.cli import identity_golden
from g2forms.exterior import KForm, canonical_split_g2, wedge
from g2forms.liealg import build_su3
from g2forms.scalar import SQRT2, ComplexScalar, ExactnessError, RealScalar
from g2forms.x7 import (
    FIXED_CIRCLE_POINTS,
    CirclePoint,
    NotInX7,
    RationalQuaternion,
    SU3Element,
    cayley_quaternion,
    circle_point,
    circle_samples,
    embed_su2,
    factor_point,
    first_column,
    in_x7,
    invariance_check,
    restrict_cartan,
    sample_parameters,
    sample_point,
    so2_1,
    step2_inclusions,
    tangent_frame,
    tangent_functional,
    translate_check,
    verify_at,
)

from float_oracle import inertia, restricted_b

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=50)
quaternions = st.builds(cayley_quaternion, rationals, rationals, rationals)
circle = st.builds(circle_point, rationals)
E = SU3Element.identity()


def to_numpy(g):
    return np.array([[complex(float(z.re), float(z.im)) for z in row] for row in g.m])


def rotation_sum(p, r):
    return CirclePoint(p.c * r.c - p.s * r.s, p.s * r.c + p.c * r.s)


# -- group structure ----------------------------------------------------------------

@given(quaternions, quaternions)
def test_embed_is_homomorphism(q1, q2):
    assert embed_su2(q1 * q2) == embed_su2(q1) @ embed_su2(q2)


@given(circle, circle)
def test_so2_is_homomorphism(p, r):
    assert so2_1(p) @ so2_1(r) == so2_1(rotation_sum(p, r))


def test_su3_element_validation():
    with pytest.raises(ValueError):
        SU3Element([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    with pytest.raises(ValueError):
        SU3Element([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])  # det -1
    with pytest.raises(ValueError):
        RationalQuaternion(1, 1, 0, 0)
    with pytest.raises(ValueError):
        CirclePoint(1, 1)


@settings(max_examples=30, deadline=None)
@given(quaternions, circle, quaternions)
def test_sample_points_lie_in_x7(q1, p, q2):
    g = sample_point(q1, p, q2)
    assert in_x7(g)
    assert g[0, 0] == p.c
    assert g @ g.inverse() == E


@settings(max_examples=20, deadline=None)
@given(quaternions, circle, quaternions, quaternions, quaternions)
def test_invariance_under_su2_on_both_sides(q1, p, q2, h1, h2):
    assert invariance_check(sample_point(q1, p, q2), h1, h2)


def test_not_every_su3_point_is_in_x7():
    # diag(i, -i, 1) has Im g11 = 1
    g = SU3Element([[ComplexScalar(0, 1), 0, 0], [0, ComplexScalar(0, -1), 0], [0, 0, 1]])
    assert not in_x7(g)
    with pytest.raises(NotInX7):
        tangent_frame(g)


# -- factorization ------------------------------------------------------------------

@settings(max_examples=50, deadline=None)
@given(quaternions, circle)
def test_factor_point_reconstructs(q, p):
    v = first_column(embed_su2(q) @ so2_1(p))
    q2, p2 = factor_point(v)
    assert first_column(embed_su2(q2) @ so2_1(p2)) == v
    assert p2.s >= 0


def test_factor_point_poles_and_errors():
    q, p = factor_point((1, 0, 0))
    assert p == CirclePoint(1, 0)
    q, p = factor_point((-1, 0, 0))
    assert p == CirclePoint(-1, 0)
    with pytest.raises(ValueError):
        factor_point((1, 1, 0))
    with pytest.raises(ExactnessError):
        factor_point((Fraction(1, 2), Fraction(1, 2), ComplexScalar(Fraction(1, 2), Fraction(1, 2))))  # s = √3/2
    with pytest.raises(ExactnessError):
        factor_point((0, SQRT2 * Fraction(1, 2), SQRT2 * Fraction(1, 2)))


# -- tangent spaces -----------------------------------------------------------------

def test_identity_frame_is_the_standard_basis():
    frame = tangent_frame(E)
    M = frame.matrix()
    assert all(M[i][j] == (1 if i == j else 0) for i in range(8) for j in range(7))
    assert frame.functional == tuple(RealScalar(x) for x in (0, 0, 0, 0, 0, 0, 0, 2))


@pytest.mark.parametrize("k", range(6))
def test_frame_vectors_are_tangent(k):
    sp = sample_parameters(6, 3)[k]
    g = sp.point()
    frame = tangent_frame(g)
    assert frame.rank() == 7
    alg = build_su3()
    for v in frame.vectors:
        X = alg.element(v)
        # Im of the (1,1) entry of g·X, computed straight from the matrices
        assert not cm.cmul(g.m, X)[0][0].im


@pytest.mark.parametrize("p", FIXED_CIRCLE_POINTS + (CirclePoint(Fraction(-7, 25), Fraction(24, 25)),))
def test_translated_functional_formula(p):
    lam = tangent_functional(so2_1(p))
    h = RealScalar(0, Fraction(1, 2))
    # c·Im v11 - s·Im v21 on the basis: only f2 (Im v21 = 1/√2) and ξ' (Im v11 = 2) contribute
    expected = [0, 0, 0, 0, -h * p.s, 0, 0, 2 * p.c]
    assert lam == [RealScalar(x) if not isinstance(x, RealScalar) else x for x in expected]


# -- the restricted form ------------------------------------------------------------

def omega_expansion():
    """√2 δ123 + (ω1∧δ1 + ω2∧δ2 + ω3∧δ3)/√2 from the 2-form definitions."""
    d1, d2, d3 = (KForm.monomial(7, (i,)) for i in (1, 2, 3))
    # e12 - e21 = √2 f1, i(e12 + e21) = √2 f2, e13 - e31 = √2 f3, i(e13 + e31) = √2 f4
    F1, F2, F3, F4 = (KForm.monomial(7, (i,), SQRT2) for i in (4, 5, 6, 7))
    half = RealScalar(Fraction(1, 2))
    w1 = (-wedge(F1, F2) + wedge(F3, F4)) * half
    w2 = (-wedge(F1, F3) - wedge(F2, F4)) * half
    w3 = (-wedge(F1, F4) + wedge(F2, F3)) * half
    inv = SQRT2.inverse()
    return wedge(wedge(d1, d2), d3) * SQRT2 + (wedge(w1, d1) + wedge(w2, d2) + wedge(w3, d3)) * inv


def test_identity_restriction_matches_omega_expansion():
    phi = restrict_cartan(E)
    assert phi == omega_expansion()
    assert phi == identity_golden()
    assert len(phi.terms()) == 7


def test_omega_expansion_same_type_as_canonical_split():
    a, b = classify(omega_expansion()), classify(canonical_split_g2())
    assert a == b
    assert a.verdict is Verdict.SPLIT_STABLE and a.signature == (4, 3) and a.stabilizer_dim == 14


def test_restriction_at_identity_matches_float_oracle():
    p, q, z = inertia(restricted_b(np.eye(3, dtype=complex)))
    assert {p, q} == {4, 3} and z == 0


@pytest.mark.parametrize("k", range(12))
def test_verdict_matches_float_oracle(k):
    sp = sample_parameters(12, 0)[k]
    g = sp.point()
    rep = verify_at(g)
    p, q, z = inertia(restricted_b(to_numpy(g)))
    assert p + q == rep.b_rank
    if rep.b_rank == 7:
        assert (max(p, q), min(p, q)) == rep.signature


def test_split_stable_exactly_off_g11_zero():
    """The form is SplitStable where g11 != 0 and degenerates where g11 = 0."""
    zero_hits = 0
    for sp in sample_parameters(40, 0):
        g = sp.point()
        rep = verify_at(g)
        if g[0, 0]:
            assert rep.verdict is Verdict.SPLIT_STABLE
            assert rep.signature == (4, 3) and rep.stabilizer_dim == 14
        else:
            zero_hits += 1
            assert rep.verdict is Verdict.NOT_STABLE
            assert rep.b_rank == 4 and rep.stabilizer_dim > 14
    assert zero_hits >= 1


@pytest.mark.parametrize("c", [1e-4, -1e-4, 1e-3])
def test_float_oracle_smallest_eigenvalue_vanishes_linearly(c):
    # along SO(2)^1 the smallest |eigenvalue| of B behaves like 6|g11| near g11 = 0
    s = np.sqrt(1 - c * c)
    g = np.array([[c, -s, 0], [s, c, 0], [0, 0, 1]], dtype=complex)
    ev = np.abs(np.linalg.eigvalsh(restricted_b(g)))
    assert ev.min() / abs(c) == pytest.approx(6, rel=1e-3)


def test_float_oracle_rank_four_at_g11_zero():
    g = np.array([[0, -1, 0], [1, 0, 0], [0, 0, 1]], dtype=complex)
    p, q, z = inertia(restricted_b(g))
    assert (p, q, z) == (2, 2, 3)
    rep = verify_at(so2_1(CirclePoint(0, 1)))
    assert rep.b_rank == 4 and rep.verdict is Verdict.NOT_STABLE


# -- the translation step ------------------------------------------------------------

@pytest.mark.parametrize("p", FIXED_CIRCLE_POINTS)
def test_step2_inclusions(p):
    res = step2_inclusions(p)
    assert res["su2"] and res["so3_pair"] and res["ad_su2"] and res["f4"]
    assert not res["f2"]


def test_translate_check_holds_only_for_s_zero():
    assert translate_check(CirclePoint(1, 0))
    assert translate_check(CirclePoint(-1, 0))
    for p in FIXED_CIRCLE_POINTS:
        assert not translate_check(p)
    assert all(all(step2_inclusions(CirclePoint(c, 0)).values()) for c in (1, -1))


# -- sampling -----------------------------------------------------------------------

def test_sampling_is_deterministic_and_bounded():
    a, b = sample_parameters(30, 11), sample_parameters(30, 11)
    assert a == b
    assert sample_parameters(30, 12) != a
    for sp in a:
        for x in (sp.q1.a, sp.q2.b, sp.p.c):
            assert abs(x) <= 1
    assert circle_samples(5, 2) == circle_samples(5, 2)


def test_seed_zero_starts_with_fixed_points():
    head = sample_parameters(4, 0)
    assert head[0].p == CirclePoint(1, 0)
    assert tuple(sp.p for sp in head[1:]) == FIXED_CIRCLE_POINTS


def test_functional_never_vanishes_on_samples():
    rng = random.Random(0)
    for sp in sample_parameters(50, rng.randint(1, 1000)):
        assert any(tangent_functional(sp.point()))
