# The cyclic family on 4 x 4: sampling its grid and refining the best point.
#
# Run: python3 demos/04_four_by_four_cyclic.py

import numpy as np

from ptneg import CyclicFamilyParams, SeedSpec, build_cyclic_family
from ptneg.analysis import cyclic4_sample_spec, histogram, search_max_neg, sweep
from ptneg.families import characteristic_factors
from ptneg.linalg import hermitian_eigvals
from ptneg.states import partial_transpose

# The full grid {0.2, ..., 1.0}^12 has about 2.4e8 points, so we sample it.
seed = SeedSpec(7)
records = list(sweep(cyclic4_sample_spec(20000), seed))
print("histogram of 20000 sampled points:", histogram(records))

# Each PT splits into four 4x4 blocks. A recurring observation is that every
# quartic factor has at least two positive roots; we count how often that holds.
# It does not always: some blocks have three negative roots and one positive.
rng = seed.generator(1)
held, total = 0, 0
for _ in range(500):
    rho = build_cyclic_family(CyclicFamilyParams(4, rng.choice(np.linspace(0.2, 1.0, 5), size=(4, 3))))
    pt = partial_transpose(rho)
    for f in characteristic_factors(pt):
        roots = hermitian_eigvals(pt[np.ix_(f.indices, f.indices)])
        held += np.sum(roots > 1e-12) >= 2
        total += 1
print(f"quartic factors with >= 2 positive roots: {held} of {total}")

# Local refinement of the family weights.
res = search_max_neg((4, 4), "local-refine", 20000, seed)
print(f"\nlocal-refine: best {res.best_count} negatives (bound 9), negativity {res.best_negativity:.4f}")
print("weights:", np.round(res.best_params, 3))
