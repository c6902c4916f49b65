# G2 on Cliff(7) and Spin(7) on Cliff(8)
#
# G2 generators come from the 3-form epsilon and are cross-checked against
# the differences of monomials of its odd derivatives. Spin(7) generators
# are enumerated from the 4-form phi.

import time

from hamred import Element, identify, reduce
from hamred.catalog import g2_action, g2_data, spin7_action, spin7_alphas, spin7_data

t = time.perf_counter()
g2 = reduce(g2_action())
print("G2:", g2.dims(), f"({time.perf_counter() - t:.2f}s)")
print("   tag:", identify(g2.quotient)[0])
d = g2_data()
print("   7 theta + epsilon in ideal:", g2.in_ideal(7 * d["theta"] + d["epsilon"]))
print("   1 in ideal:", g2.in_ideal(Element.scalar(d["theta"].signature)))

alphas = spin7_alphas()
print("Spin(7): raw alphas", len(alphas))
s7 = reduce(spin7_action())
print("   dims:", s7.dims())
print("   tag:", identify(s7.quotient)[0])
phi, theta = spin7_data()["phi"], spin7_data()["theta"]
print("   phi^2 law:", phi * phi == 14 * theta + 14 - 12 * phi)
# The annihilated element: every alpha kills phi - 1 - theta.
print("   alpha (phi - 1 - theta) = 0 for all alphas:", all(not (a * (phi - 1 - theta)) for a in alphas))
print("   alpha (phi + 1 + theta) = 0 for any alpha:", any(not (a * (phi + 1 + theta)) for a in alphas))
