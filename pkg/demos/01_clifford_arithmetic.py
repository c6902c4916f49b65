# Clifford and Grassmann arithmetic on blades
#
# An element is a sparse map from blades (bitmasks) to rationals. The
# signature fixes what each generator squares to: -1, +1 or 0.

from hamred import Element, Signature, format_element, parse_element, supercommutator

c4 = Signature.clifford(4)      # x_i^2 = -1
g4 = Signature.grassmann(4)     # x_i^2 = 0

# Products reorder and contract letter by letter.
print(parse_element("x2 x1", c4))                 # -1 x1 x2
print(parse_element("x1 x2 x1", c4))              # 1 x2
print(parse_element("x1 x1", g4))                 # 0

# The Spin(3) generators with w, x, y, z written as x1..x4.
a_plus = parse_element("1/2 x1 x2 + 1/2 x3 x4", c4)
b_plus = parse_element("1/2 x1 x3 + 1/2 x4 x2", c4)
c_plus = parse_element("1/2 x1 x4 + 1/2 x2 x3", c4)
theta = Element.monomial(c4, (1, 2, 3, 4))

# Casimir: a+^2 = (theta - 1)/2
print(a_plus * a_plus == (theta - 1) / 2)

# Supercommutators use the parity sign rule; generators anticommute.
print(supercommutator(a_plus, b_plus) == 2 * c_plus)
x1 = Element.generator(c4, 1)
print(format_element(supercommutator(x1, x1)))    # -2
