# Randomized law checks
#
# Set HAMRED_SEED to reproduce a run. The same checks back
# `hamred verify all --fuzz N`.

import random

from hamred.catalog import entry
from hamred.fuzz import (
    check_associativity,
    check_ideal_absorption,
    check_representative_independence,
    check_super_jacobi,
    default_seed,
)
from hamred.reduction import reduce

rng = random.Random(default_seed())
for r in (check_associativity(rng, 2000), check_super_jacobi(rng, 500)):
    print(f"{r.name:<22} {r.trials:>5} trials  {'pass' if r.passed else r.failures[:1]}")

res = reduce(entry("spin3minus").spec)
for r in (check_ideal_absorption(res, rng, 500), check_representative_independence(res, rng, 20)):
    print(f"{r.name:<40} {r.trials:>5} trials  {'pass' if r.passed else r.failures[:1]}")
