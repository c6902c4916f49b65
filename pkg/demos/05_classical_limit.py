# Classical limit: the exterior algebra with its Poisson bracket
#
# With the all-zero signature the invariants are computed with the Poisson
# bracket {x_i, x_j} = -2 delta_ij, and the quotient carries the induced
# bracket.

from hamred import Element, Signature, classical_reduce, poisson_bracket
from hamred.catalog import spin3_action, spin3_elements

g4 = Signature.grassmann(4)
x1, x2 = Element.generator(g4, 1), Element.generator(g4, 2)
print("{x1, x1} =", poisson_bracket(x1, x1), "  {x1, x2} =", poisson_bracket(x1, x2))

cres = classical_reduce(spin3_action("-", g4))
B = cres.quotient
print("quotient dims", B.dims)
cls = {k: cres.reduction.project(v) for k, v in spin3_elements("+", g4).items()}
print("a b =", [str(c) for c in B.mul(cls["a"], cls["b"])])
print("{a, b} == 2c:", list(cres.bracket(cls["a"], cls["b"])) == list(2 * cls["c"]))
