"""Alternating forms on R^n with exact coefficients.

A :class:`KForm` stores its coefficients sparsely, keyed by a bitmask of the
basis covectors it involves (bit ``i-1`` for index ``i``).  Index tuples in
the public API are 1-based and strictly increasing.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import linalg
from .scalar import ONE, ZERO, RealScalar, as_real

__all__ = [
    "MAX_DIM",
    "KForm",
    "FormFormatError",
    "basis_vector",
    "wedge",
    "contract",
    "interior_matrix",
    "is_multisymplectic",
    "pullback",
    "evaluate",
    "canonical_split_g2",
    "canonical_g2",
]

MAX_DIM = 12


class FormFormatError(ValueError):
    """Malformed form data (bad indices, duplicate terms, bad literals)."""


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def _indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _merge_sign(a: int, b: int) -> int:
    """Sign of the shuffle putting the indices of ``a`` then ``b`` in order."""
    inversions = 0
    while b:
        low = b & -b
        inversions += bin(a & ~((low << 1) - 1)).count("1")
        b ^= low
    return -1 if inversions & 1 else 1


def _sort_sign(indices: Sequence[int]) -> int:
    inv = 0
    for x in range(len(indices)):
        for y in range(x + 1, len(indices)):
            if indices[x] > indices[y]:
                inv += 1
    return -1 if inv & 1 else 1


class KForm:
    """A k-form on an n-dimensional space.

    >>> w = KForm.monomial(7, (1, 2, 3))
    >>> w.coefficient((2, 1, 3))
    RealScalar(-1)
    """

    __slots__ = ("dim", "degree", "_coeffs")

    def __init__(self, dim: int, degree: int, coeffs: Mapping[int, RealScalar] | None = None):
        if not 0 <= dim <= MAX_DIM:
            raise ValueError(f"dimension {dim} outside 0..{MAX_DIM}")
        if not 0 <= degree <= dim:
            raise ValueError(f"degree {degree} outside 0..{dim}")
        self.dim = dim
        self.degree = degree
        clean = {}
        for m, c in (coeffs or {}).items():
            c = as_real(c)
            if c:
                if bin(m).count("1") != degree or m >> dim:
                    raise ValueError(f"index set {_indices(m)} incompatible with a {degree}-form on R^{dim}")
                clean[m] = c
        self._coeffs = clean

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, degree: int) -> KForm:
        return cls(dim, degree)

    @classmethod
    def monomial(cls, dim: int, indices: Sequence[int], coeff=1) -> KForm:
        """``coeff * e^{i1} ∧ ... ∧ e^{ik}``; unsorted indices pick up a sign."""
        if len(set(indices)) != len(indices):
            return cls(dim, len(indices))
        if any(not 1 <= i <= dim for i in indices):
            raise ValueError(f"indices {tuple(indices)} out of range 1..{dim}")
        c = as_real(coeff) * _sort_sign(indices)
        return cls(dim, len(indices), {_mask(indices): c})

    @classmethod
    def from_terms(cls, dim: int, degree: int, terms: Iterable[tuple[Sequence[int], object]]) -> KForm:
        acc: dict[int, RealScalar] = {}
        for idx, c in terms:
            mono = cls.monomial(dim, idx, c)
            if mono.degree != degree:
                raise ValueError(f"term {tuple(idx)} has degree {len(idx)}, expected {degree}")
            for m, v in mono._coeffs.items():
                acc[m] = acc.get(m, ZERO) + v
        return cls(dim, degree, acc)

    # -- access ---------------------------------------------------------------

    def coefficient(self, indices: Sequence[int]) -> RealScalar:
        if len(indices) != self.degree or len(set(indices)) != len(indices):
            return ZERO
        return self._coeffs.get(_mask(indices), ZERO) * _sort_sign(indices)

    def terms(self) -> list[tuple[tuple[int, ...], RealScalar]]:
        """Nonzero terms sorted lexicographically by index tuple."""
        return sorted((_indices(m), c) for m, c in self._coeffs.items())

    def mask_items(self):
        return self._coeffs.items()

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    # -- vector space structure ----------------------------------------------------

    def _check_same(self, other: KForm):
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError(
                f"shape mismatch: {self.degree}-form on R^{self.dim} vs {other.degree}-form on R^{other.dim}"
            )

    def __add__(self, other: KForm) -> KForm:
        if not isinstance(other, KForm):
            return NotImplemented
        self._check_same(other)
        acc = dict(self._coeffs)
        for m, c in other._coeffs.items():
            acc[m] = acc.get(m, ZERO) + c
        return KForm(self.dim, self.degree, acc)

    def __neg__(self) -> KForm:
        return KForm(self.dim, self.degree, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other: KForm) -> KForm:
        if not isinstance(other, KForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> KForm:
        if isinstance(scalar, KForm):
            return NotImplemented
        s = as_real(scalar)
        return KForm(self.dim, self.degree, {m: c * s for m, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __xor__(self, other: KForm) -> KForm:
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self.dim == other.dim and self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self._coeffs.items())))

    def __repr__(self):
        body = " + ".join(f"({c})e{''.join(map(str, idx))}" for idx, c in self.terms()) or "0"
        return f"KForm(dim={self.dim}, degree={self.degree}: {body})"

    # -- serialization --------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "degree": self.degree,
            "terms": [{"indices": list(idx), "coeff": str(c)} for idx, c in self.terms()],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: Mapping) -> KForm:
        try:
            dim, degree, terms = data["dim"], data["degree"], data["terms"]
        except (KeyError, TypeError) as exc:
            raise FormFormatError(f"form object needs 'dim', 'degree' and 'terms': missing {exc}") from None
        if not isinstance(dim, int) or not isinstance(degree, int) or not isinstance(terms, list):
            raise FormFormatError("'dim' and 'degree' must be integers and 'terms' a list")
        if not 0 <= dim <= MAX_DIM or not 0 <= degree <= dim:
            raise FormFormatError(f"unsupported shape: degree {degree} on R^{dim}")
        coeffs: dict[int, RealScalar] = {}
        for k, term in enumerate(terms):
            where = f"term #{k}"
            try:
                idx, text = term["indices"], term["coeff"]
            except (KeyError, TypeError):
                raise FormFormatError(f"{where}: expected {{'indices': [...], 'coeff': '...'}}") from None
            where = f"term #{k} {idx!r}"
            if not isinstance(idx, list) or not all(isinstance(i, int) for i in idx):
                raise FormFormatError(f"{where}: indices must be a list of integers")
            if len(idx) != degree:
                raise FormFormatError(f"{where}: expected {degree} indices")
            if any(not 1 <= i <= dim for i in idx):
                raise FormFormatError(f"{where}: index out of range 1..{dim}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise FormFormatError(f"{where}: indices must be strictly increasing")
            m = _mask(idx)
            if m in coeffs:
                raise FormFormatError(f"{where}: duplicate index tuple")
            try:
                coeffs[m] = RealScalar.parse(str(text))
            except (ValueError, ZeroDivisionError):
                raise FormFormatError(f"{where}: bad coefficient {text!r}") from None
        return cls(dim, degree, coeffs)

    @classmethod
    def from_json(cls, text: str) -> KForm:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormFormatError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


def basis_vector(n: int, j: int) -> list[RealScalar]:
    """The standard basis vector e_j (1-based) of R^n."""
    return [ONE if i == j - 1 else ZERO for i in range(n)]


def wedge(omega: KForm, eta: KForm) -> KForm:
    if omega.dim != eta.dim:
        raise ValueError(f"dimension mismatch: {omega.dim} vs {eta.dim}")
    degree = omega.degree + eta.degree
    if degree > omega.dim:
        raise ValueError(f"degree {degree} exceeds dimension {omega.dim}")
    acc: dict[int, RealScalar] = {}
    for ma, ca in omega.mask_items():
        for mb, cb in eta.mask_items():
            if ma & mb:
                continue
            m = ma | mb
            v = ca * cb
            if _merge_sign(ma, mb) < 0:
                v = -v
            acc[m] = acc.get(m, ZERO) + v
    return KForm(omega.dim, degree, acc)


def _contract_basis(j: int, omega: KForm) -> dict[int, RealScalar]:
    bit = 1 << (j - 1)
    below = bit - 1
    out = {}
    for m, c in omega.mask_items():
        if m & bit:
            out[m ^ bit] = -c if bin(m & below).count("1") & 1 else c
    return out


def contract(x: Sequence, omega: KForm) -> KForm:
    """Interior product ``x ⌟ omega``, i.e. ``omega(x, ...)``."""
    if len(x) != omega.dim:
        raise ValueError(f"vector of length {len(x)} on R^{omega.dim}")
    if omega.degree < 1:
        raise ValueError("cannot contract a 0-form")
    acc: dict[int, RealScalar] = {}
    for j, xj in enumerate(x, start=1):
        xj = as_real(xj)
        if not xj:
            continue
        for m, c in _contract_basis(j, omega).items():
            acc[m] = acc.get(m, ZERO) + xj * c
    return KForm(omega.dim, omega.degree - 1, acc)


def interior_matrix(omega: KForm) -> list[list[RealScalar]]:
    """Matrix of ``x -> x ⌟ omega`` in the lexicographic (k-1)-tuple basis."""
    if omega.degree < 1:
        raise ValueError("interior matrix of a 0-form is undefined")
    n = omega.dim
    rows = [_mask(t) for t in combinations(range(1, n + 1), omega.degree - 1)]
    row_of = {m: r for r, m in enumerate(rows)}
    M = [[ZERO] * n for _ in rows]
    for j in range(1, n + 1):
        for m, c in _contract_basis(j, omega).items():
            M[row_of[m]][j - 1] = c
    return M


def is_multisymplectic(omega: KForm) -> bool:
    """True iff ``x -> x ⌟ omega`` is injective."""
    return linalg.rank(interior_matrix(omega)) == omega.dim


def _minor(g: Sequence[Sequence[RealScalar]], rows: Sequence[int], cols: Sequence[int]) -> RealScalar:
    k = len(rows)
    if k == 0:
        return ONE
    if k == 1:
        return g[rows[0]][cols[0]]
    if k == 2:
        r0, r1 = g[rows[0]], g[rows[1]]
        c0, c1 = cols
        return r0[c0] * r1[c1] - r0[c1] * r1[c0]
    if k == 3:
        r0, r1, r2 = (g[r] for r in rows)
        a, b, c = cols
        return (
            r0[a] * (r1[b] * r2[c] - r1[c] * r2[b])
            - r0[b] * (r1[a] * r2[c] - r1[c] * r2[a])
            + r0[c] * (r1[a] * r2[b] - r1[b] * r2[a])
        )
    return linalg.det([[g[r][c] for c in cols] for r in rows])


def pullback(g: Sequence[Sequence], omega: KForm) -> KForm:
    """``(g* omega)(x1, ..., xk) = omega(g x1, ..., g xk)``.

    ``g`` is an ``n x m`` matrix with ``n = omega.dim``; the result lives on
    R^m.  Square ``g`` is the usual GL(n) action.
    """
    g = [[as_real(x) for x in row] for row in g]
    if len(g) != omega.dim:
        raise ValueError(f"map with {len(g)} rows cannot pull back a form on R^{omega.dim}")
    m = len(g[0]) if g else 0
    k = omega.degree
    if k > m:
        raise ValueError(f"a {k}-form cannot be pulled back to R^{m}")
    terms = [(tuple(i - 1 for i in idx), c) for idx, c in omega.terms()]
    acc = {}
    for cols in combinations(range(m), k):
        total = ZERO
        for rows, c in terms:
            d = _minor(g, rows, cols)
            if d:
                total = total + c * d
        if total:
            acc[_mask(i + 1 for i in cols)] = total
    return KForm(m, k, acc)


def evaluate(omega: KForm, *vectors: Sequence) -> RealScalar:
    """``omega(x1, ..., xk)`` as a sum over index sets of minors."""
    if len(vectors) != omega.degree:
        raise ValueError(f"{omega.degree}-form evaluated on {len(vectors)} vectors")
    for v in vectors:
        if len(v) != omega.dim:
            raise ValueError(f"vector of length {len(v)} on R^{omega.dim}")
    X = [[as_real(v[i]) for v in vectors] for i in range(omega.dim)]
    cols = tuple(range(omega.degree))
    total = ZERO
    for idx, c in omega.terms():
        d = _minor(X, [i - 1 for i in idx], cols)
        if d:
            total = total + c * d
    return total


def canonical_split_g2() -> KForm:
    """The split 3-form ``θ1θ2θ3 + α1θ1 + α2θ2 + α3θ3`` on R^7.

    Basis order is (θ1, θ2, θ3, y1, y2, y3, y4) = (e1, ..., e7) with
    ``α1 = y1y2 + y3y4``, ``α2 = y1y3 - y2y4``, ``α3 = y1y4 + y2y3``.
    """
    e = lambda *idx: KForm.monomial(7, idx)  # noqa: E731
    th1, th2, th3 = e(1), e(2), e(3)
    y1, y2, y3, y4 = e(4), e(5), e(6), e(7)
    a1 = wedge(y1, y2) + wedge(y3, y4)
    a2 = wedge(y1, y3) - wedge(y2, y4)
    a3 = wedge(y1, y4) + wedge(y2, y3)
    return wedge(wedge(th1, th2), th3) + wedge(a1, th1) + wedge(a2, th2) + wedge(a3, th3)


def canonical_g2() -> KForm:
    """A definite (compact-type) 3-form on R^7, used as a classifier control."""
    return KForm.from_terms(
        7, 3, [((1, 2, 3), 1), ((1, 4, 5), 1), ((1, 6, 7), 1), ((2, 4, 6), 1),
               ((2, 5, 7), -1), ((3, 4, 7), -1), ((3, 5, 6), -1)]
    )
