# Sweeping the three-qutrit family over the grid {0, 1/4, 1/2, 3/4, 1}^6.
#
# Run: python3 demos/03_three_qutrit_sweep.py

import time

import numpy as np

from ptneg import ThreeQutritParams, build_three_qutrit, pt_spectrum
from ptneg.analysis import three_qutrit_grid_spec, histogram, sweep
from ptneg.families import characteristic_factors, cubic_factor_coeffs
from ptneg.linalg import cubic_real_roots, two_negative_roots_rule
from ptneg.states import partial_transpose

# The PT of every member splits into three 3x3 blocks, so its characteristic
# polynomial is a product of three cubics.
p = ThreeQutritParams(a1=0.25, a2=1.0, b1=1 / 3, b2=1 / 3, c1=0.5, c2=1.0)
rho = build_three_qutrit(p)
for f in characteristic_factors(partial_transpose(rho)):
    print("factor coefficients:", np.round(f.coefficients, 6))

# One factor has a closed form in the parameters. Two negative roots occur
# exactly when its linear and constant coefficients are both negative.
c = cubic_factor_coeffs(p)
print("cubic", c, "roots", np.round(cubic_real_roots(c), 6), "two negative:", two_negative_roots_rule(c))
print("negatives in the full PT:", pt_spectrum(rho).neg_count)

# Full grid, 15625 points.
t0 = time.perf_counter()
records = list(sweep(three_qutrit_grid_spec()))
print(f"\n{len(records)} grid points in {time.perf_counter() - t0:.2f}s")
h = histogram(records)
for k, v in h.items():
    print(f"  {k} negatives: {v:6d} {'#' * max(1, v // 250)}")
