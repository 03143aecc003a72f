"""
The restricted Cartan form on X7
================================

X7 is the level set Im g11 = 0 in SU(3).  We restrict the Cartan form to
tangent spaces at exact points and classify it.  Away from g11 = 0 the form is
of split type; on the hypersurface g11 = 0 it degenerates.
"""

from fractions import Fraction

from g2forms import CirclePoint, SU3Element, classify, restrict_cartan, so2_1
from g2forms.scalar import rational_sqrt
from g2forms.x7 import sample_parameters

# at the identity, in the frame (δ1, δ2, δ3, f1, f2, f3, f4)
phi_e = restrict_cartan(SU3Element.identity())
print(phi_e)
print(classify(phi_e))

# a handful of seeded points g1·α·g2
for sp in sample_parameters(5, 7):
    g = sp.point()
    print("g11 =", g[0, 0], "->", classify(restrict_cartan(g)).verdict.value)

# walking along SO(2)^1 towards the quarter turn
for c in (Fraction(3, 5), Fraction(7, 25), Fraction(0)):
    s = rational_sqrt(1 - c * c)
    rep = classify(restrict_cartan(so2_1(CirclePoint(c, s))))
    print(f"α = ({c}, {s}):", rep.verdict.value, "b_rank", rep.b_rank, "stabilizer", rep.stabilizer_dim)
