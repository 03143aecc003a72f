"""
Orbit types of 3-forms on R^7
=============================

Every computation below is exact; signs of elements of Q(sqrt2) are decided
without floating point.
"""

from fractions import Fraction

from g2forms import KForm, canonical_g2, canonical_split_g2, classify, pullback
from g2forms.classify import b_matrix

# the split form and its pairing B(x, y) = (x ⌟ ω) ∧ (y ⌟ ω) ∧ ω
split = canonical_split_g2()
print("split form:", split)
print("diagonal of B:", [str(b_matrix(split)[i][i]) for i in range(7)])
print(classify(split))

# the definite form has B of signature {7,0}
print(classify(canonical_g2()))

# a change of basis never changes the type
g = [[1 if i == j else 0 for j in range(7)] for i in range(7)]
g[0][4] = Fraction(3, 2)
g[6][1] = -2
print("after pullback:", classify(pullback(g, split)).verdict.value)

# degenerate forms: a single monomial has a 36-dimensional stabilizer
print(classify(KForm.monomial(7, (1, 2, 3))))
