# The one-parameter family rho_a and its closed-form PT spectrum.
#
# Run: python3 demos/02_rho_a_family.py

import numpy as np

from ptneg import RhoAParams, build_rho_a, pt_spectrum
from ptneg.families import rho_a_spectrum_closed_form

# rho_a is the unnormalized sum of three rank-one terms on n x n, with trace
# n + 2 + 2 a**2. For a in (1/sqrt 2, 1) its PT has n(n-1)/2 + 1 negative
# eigenvalues, which reaches the bound (n-1)**2 at n = 3.
for n in (3, 4, 5):
    print(f"n = {n}, bound {(n - 1) ** 2}")
    for a in (0.0, 0.5, 0.72, 0.8, 0.9, 0.99, 1.1):
        p = RhoAParams(n, a)
        closed = rho_a_spectrum_closed_form(p)
        numeric = pt_spectrum(build_rho_a(p))
        dev = np.abs(closed.eigenvalues - numeric.eigenvalues).max()
        print(f"  a = {a:4.2f}  negatives {numeric.neg_count:2d}  closed-form dev {dev:.1e}")

# The n = 3, a = 0.8 spectrum, rounded.
print("\nn = 3, a = 0.8:", np.round(rho_a_spectrum_closed_form(RhoAParams(3, 0.8)).eigenvalues, 6))
