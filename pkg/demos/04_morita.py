# The cyclic module M = A / I as a Morita bimodule
#
# End_A(M) is computed as the commutant of the generator actions and
# compared with the reduced algebra acting on the right.

from hamred import identify, morita_check, reduce
from hamred.catalog import entry, lagrangian_example
from hamred.reduction import cyclic_module, endomorphism_algebra

for name in ("spin3minus", "g2", "spin7"):
    spec = entry(name).spec
    res = reduce(spec)
    m = morita_check(spec, res)
    print(f"{name:>10}: dim M = {m.dim_module}, dim A = {m.dim_A}, dim B = {m.dim_B}, "
          f"End_A(M) = {identify(m.end_A)[0]}, pass = {m.passed}")

# The split-form example: an isotropic odd vector gives the (1|1) module.
M = cyclic_module(lagrangian_example())
print("Lagrangian module:", M.dim, "End:", identify(endomorphism_algebra(M))[0])

# Sign convention for odd endomorphisms (see README): the signed variant
# turns the G2 answer into its opposite Clifford algebra.
g2 = entry("g2").spec
M = cyclic_module(g2, reduce(g2))
print("G2 End_A(M), plain:", identify(endomorphism_algebra(M))[0],
      " signed:", identify(endomorphism_algebra(M, signed=True))[0])
