"""Expected su(3) brackets, written out as 3x3 matrices from scratch."""

from fractions import Fraction

from g2forms import cmatrix as cm
from g2forms.scalar import SQRT2, ComplexScalar, RealScalar

R = RealScalar(0, Fraction(1, 2))  # 1/√2
i_ = ComplexScalar(0, 1)


def E(a, b, v=1):
    return cm.unit(3, a, b, v)


def basis():
    r = ComplexScalar(R)
    ir = i_ * r
    return {
        "d1": cm.cadd(E(2, 2, ir), E(3, 3, -ir)),
        "d2": cm.cadd(E(2, 3, r), E(3, 2, -r)),
        "d3": cm.cadd(E(2, 3, ir), E(3, 2, ir)),
        "f1": cm.cadd(E(1, 2, r), E(2, 1, -r)),
        "f2": cm.cadd(E(1, 2, ir), E(2, 1, ir)),
        "f3": cm.cadd(E(1, 3, r), E(3, 1, -r)),
        "f4": cm.cadd(E(1, 3, ir), E(3, 1, ir)),
    }


def expected_brackets():
    """(x, y, [x, y]) for the nine listed identities.

    The [f1, f4] entry is read as -δ3/√2.
    """
    b = basis()
    s2 = ComplexScalar(SQRT2)
    inv = ComplexScalar(R)
    return [
        ("d2", "d3", cm.cscale(s2, b["d1"])),
        ("d1", "d2", cm.cscale(s2, b["d3"])),
        ("d1", "d3", cm.cscale(-s2, b["d2"])),
        ("f1", "f2", cm.cadd(E(1, 1, i_), E(2, 2, -i_))),
        ("f1", "f3", cm.cscale(-inv, b["d2"])),
        ("f1", "f4", cm.cscale(-inv, b["d3"])),
        ("f2", "f3", cm.cscale(inv, b["d3"])),
        ("f2", "f4", cm.cscale(-inv, b["d2"])),
        ("f3", "f4", cm.cadd(E(1, 1, i_), E(3, 3, -i_))),
    ]
