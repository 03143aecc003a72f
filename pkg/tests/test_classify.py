import random
import sys
from fractions import Fraction

import numpy as np
import pytest

from g2forms import linalg
from g2forms.classify import (
    ConsistencyError,
    TypeReport,
    Verdict,
    b_matrix,
    classify,
    derivation_action,
    signature,
    stabilizer,
    stabilizer_dim,
)
from g2forms.exterior import KForm, canonical_g2, canonical_split_g2, pullback
from g2forms.scalar import SQRT2, RealScalar

from float_oracle import float_b


def random_invertible(rng, n=7):
    while True:
        g = [[RealScalar(Fraction(rng.randint(-2, 2)), rng.choice([0, 0, 0, 1])) for _ in range(n)] for _ in range(n)]
        if linalg.det(g):
            return g


def test_split_b_matrix():
    B = b_matrix(canonical_split_g2())
    assert [B[i][i] for i in range(7)] == [6, 6, 6, -6, -6, -6, -6]
    assert all(B[i][j] == 0 for i in range(7) for j in range(7) if i != j)


@pytest.mark.parametrize("form", [canonical_split_g2(), canonical_g2(), KForm.monomial(7, (1, 2, 3))])
def test_b_matrix_against_float_tensor(form):
    exact = np.array([[float(x) for x in row] for row in b_matrix(form)])
    assert np.allclose(exact, float_b(form))


def test_b_matrix_random_form_against_float_tensor():
    rng = random.Random(3)
    g = random_invertible(rng)
    w = pullback(g, canonical_split_g2())
    exact = np.array([[float(x) for x in row] for row in b_matrix(w)])
    assert np.allclose(exact, float_b(w), rtol=1e-9, atol=1e-6)


@pytest.mark.parametrize(
    "m, expected",
    [
        ([[0, 1], [1, 0]], (1, 1, 0)),
        ([[1, 0], [0, 1]], (2, 0, 0)),
        ([[0, 0], [0, 0]], (0, 0, 2)),
        ([[1, 1], [1, 1]], (1, 0, 1)),
        ([[0, 1, 0], [1, 0, 0], [0, 0, -2]], (1, 2, 0)),
        ([[1, SQRT2], [SQRT2, 1]], (1, 1, 0)),
        ([[3, SQRT2], [SQRT2, 1]], (2, 0, 0)),
    ],
)
def test_signature_examples(m, expected):
    assert signature(m) == expected


@pytest.mark.parametrize("seed", range(10))
def test_signature_against_eigenvalues(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    A = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
    r = rng.randint(0, n)
    # S = A D A^T with a known diagonal
    D = [rng.choice([-1, 1]) * rng.randint(1, 3) if i < r else 0 for i in range(n)]
    S = [[sum(A[i][k] * D[k] * A[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    ev = np.linalg.eigvalsh(np.array(S, dtype=float))
    tol = 1e-8 * max(1.0, float(np.abs(ev).max()))
    p, q = int((ev > tol).sum()), int((ev < -tol).sum())
    assert signature(S) == (p, q, n - p - q)


def test_signature_rejects_asymmetric():
    with pytest.raises(ValueError):
        signature([[1, 2], [3, 4]])


def test_classify_canonical_forms():
    assert classify(canonical_split_g2()) == TypeReport(Verdict.SPLIT_STABLE, (4, 3), 14, 7)
    assert classify(canonical_g2()) == TypeReport(Verdict.DEFINITE_STABLE, (7, 0), 14, 7)


def test_classify_degenerate_forms():
    r = classify(KForm.monomial(7, (1, 2, 3)))
    assert r.verdict is Verdict.NOT_STABLE and r.stabilizer_dim == 36
    z = classify(KForm.zero(7, 3))
    assert z.verdict is Verdict.NOT_STABLE and z.stabilizer_dim == 49 and z.b_rank == 0


def test_classify_rejects_wrong_shape():
    with pytest.raises(ValueError):
        classify(KForm.monomial(6, (1, 2, 3)))


@pytest.mark.parametrize("seed", range(5))
def test_stabilizer_basis_annihilates_and_closes(seed):
    rng = random.Random(seed)
    w = canonical_split_g2() if seed == 0 else pullback(random_invertible(rng), canonical_split_g2())
    basis = stabilizer(w)
    assert len(basis) == 14 == stabilizer_dim(w)
    for A in basis:
        assert not derivation_action(A, w)
    # closure under the commutator: [A, B] lies in the span again
    flat = [[x for row in A for x in row] for A in basis]
    for A, B in [(basis[0], basis[1]), (basis[2], basis[7]), (basis[5], basis[13])]:
        C = linalg.matmul(A, B)
        D = linalg.matmul(B, A)
        comm = [C[i][j] - D[i][j] for i in range(7) for j in range(7)]
        assert not derivation_action([comm[7 * r : 7 * r + 7] for r in range(7)], w)
        assert linalg.rank(flat + [comm]) == 14


@pytest.mark.parametrize("seed", range(6))
def test_classify_pullback_invariant(seed):
    rng = random.Random(100 + seed)
    g = random_invertible(rng)
    for w in (canonical_split_g2(), canonical_g2()):
        assert classify(pullback(g, w)).verdict == classify(w).verdict


@pytest.mark.parametrize("s", [RealScalar(-1), RealScalar(Fraction(1, 3)), SQRT2, RealScalar(2, -1)])
def test_scaling_preserves_type(s):
    for w in (canonical_split_g2(), canonical_g2()):
        assert classify(w * s).verdict == classify(w).verdict


def test_negative_scaling_keeps_definite():
    # -ω is the pullback of ω by -1, so type cannot change
    assert classify(canonical_g2() * -1).signature == (7, 0)


def test_report_roundtrip():
    r = classify(canonical_split_g2())
    assert TypeReport.from_dict(r.to_dict()) == r
    assert r.to_dict() == {"verdict": "SplitStable", "signature": [4, 3], "stabilizer_dim": 14, "b_rank": 7}


def test_consistency_error_is_raised_on_disagreement(monkeypatch):
    mod = sys.modules["g2forms.classify"]
    monkeypatch.setattr(mod, "stabilizer_dim", lambda w: 15)
    with pytest.raises(ConsistencyError):
        mod.classify(canonical_split_g2())
