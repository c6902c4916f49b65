# Reducing Cliff(4) by one of its two commuting Spin(3) actions
#
# The pipeline: left ideal generated by the comoment images, invariant
# subalgebra (kernel of ad), their intersection, and the quotient with exact
# structure constants. The quotient is then recognized from its relations.

from hamred import identify
from hamred.catalog import spin3_action, spin3_elements
from hamred.reduction import reduce

spec = spin3_action("-")
res = reduce(spec)
for k, v in res.dims().items():
    print(f"{k:>14}: {v}")

# The commuting action supplies natural quaternion units.
plus = spin3_elements("+")
hints = [res.project(plus[k]) for k in "abc"]
tag, witness = identify(res.quotient, hints)
print("quotient is", tag)
for rel, ok in witness.relations:
    print(f"   {'ok ' if ok else 'BAD'} {rel}")

# Classes multiply like i, j, k.
i, j = hints[0], hints[1]
print("a+ b+ =", res.lift(res.quotient.mul(i, j)), "(mod the intersection)")
