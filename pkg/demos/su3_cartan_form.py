"""
The Cartan 3-form of su(3)
==========================

Structure constants come from an exact matrix realization; the metric is
-Re tr(xy), for which the seven tangent directions of X7 are orthonormal.
"""

from g2forms import build_su3, cartan_3form, ce_differential, is_multisymplectic, killing_form
from g2forms import cmatrix as cm

su3 = build_su3()

# a few brackets straight from the matrices
m = dict(zip(su3.labels, su3.matrices))
print("[f1, f3] =", cm.to_text(cm.commutator(m["f1"], m["f3"])))
print("[d2, d3] =", cm.to_text(cm.commutator(m["d2"], m["d3"])))

# the Killing form is -6 on the tangent directions and -36 on ξ'
K = killing_form(su3)
print("Killing diagonal:", [str(K[i][i]) for i in range(8)])

phi = cartan_3form(su3)
for idx, c in phi.terms():
    print(" ", idx, c)

# closed, and multisymplectic because su(3) is semisimple
print("dφ = 0:", not ce_differential(su3, phi))
print("multisymplectic:", is_multisymplectic(phi))
