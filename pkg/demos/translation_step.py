"""
Tangent spaces of X7 along SO(2)^1
==================================

Left translation by α^{-1} carries T_α X7 to a hyperplane of su(3).  At α = e
it is {Im v11 = 0}; at α = (c, s) it is {c·Im v11 - s·Im v21 = 0}.
"""

from fractions import Fraction

from g2forms.x7 import CirclePoint, so2_1, step2_inclusions, tangent_functional, translate_check

for p in (CirclePoint(1, 0), CirclePoint(Fraction(3, 5), Fraction(4, 5)), CirclePoint(0, 1)):
    lam = tangent_functional(so2_1(p))
    print("α =", p.as_list())
    print("  functional on (d1..f4, ξ'):", [str(x) for x in lam])
    print("  subspaces inside:", step2_inclusions(p))
    print("  equals T_e X7:", translate_check(p))
