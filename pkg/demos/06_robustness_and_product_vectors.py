# Two consequences of the count bound.
#
# Run: python3 demos/06_robustness_and_product_vectors.py

import numpy as np

from ptneg import RhoAParams, SeedSpec, build_rho_a
from ptneg.analysis import find_product_vector, npt_robustness_check
from ptneg.sampling import haar_unitary

# If the PT has K + 1 negative eigenvalues, adding any K product projectors
# cannot remove all of them.
rep = npt_robustness_check(build_rho_a(RhoAParams(3, 0.8)), trials=500, s=SeedSpec(0))
print(f"K = {rep.K}: {rep.npt_trials}/{rep.trials} mixtures remain NPT, "
      f"weakest min eigenvalue {rep.weakest_min_eig:.2e}")
print(f"with K + 1 projectors, PPT mixtures found: {rep.converse_ppt_found}/{rep.converse_trials}")

# The bound comes from the fact that any subspace of dimension (m-1)(n-1) + 1
# contains a product vector. Alternating maximization finds one.
m, n = 3, 3
k = (m - 1) * (n - 1) + 1
U = haar_unitary(m * n, SeedSpec(4))
res = find_product_vector(U[:, :k], (m, n), s=SeedSpec(4))
print(f"\nsubspace of dim {k}: success {res.success}, overlap {res.overlap:.12f}, restarts {res.restarts_used}")

# One dimension less and a generic subspace contains no product vector.
res = find_product_vector(U[:, :k - 1], (m, n), s=SeedSpec(4))
print(f"subspace of dim {k - 1}: success {res.success}, best overlap {res.overlap:.6f}")

# The singlet alone: best overlap is its largest squared Schmidt coefficient.
res = find_product_vector(np.array([0, 1, -1, 0]) / np.sqrt(2), (2, 2))
print(f"singlet: best overlap {res.overlap:.12f}")
