# Partial transposes and negative eigenvalues on small examples.
#
# Run: python3 demos/01_partial_transpose_basics.py

import numpy as np

from ptneg import PureState, partial_transpose, pt_spectrum
from ptneg.analysis import bound_report
from ptneg.states import pure_pt_spectrum_closed_form, schmidt

# A Bell pair. Its partial transpose is the swap operator divided by two,
# so it has a single eigenvalue -1/2.
bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2))
rho = bell.density()
print("Bell PT:\n", partial_transpose(rho).real)
print("eigenvalues:", pt_spectrum(rho).eigenvalues)

# Transposing either side gives the same spectrum.
print("T_B spectrum equal:", np.allclose(pt_spectrum(rho, "B").eigenvalues, pt_spectrum(rho).eigenvalues))

# For a pure state the PT spectrum comes straight from the Schmidt
# coefficients: c_i**2 and +-c_i c_j for i < j.
rng = np.random.default_rng(1)
psi = PureState(rng.standard_normal(16) + 1j * rng.standard_normal(16), (4, 4)).normalized()
sv = schmidt(psi)
print("\nSchmidt coefficients:", np.round(sv.coefficients, 4))
closed = pure_pt_spectrum_closed_form(sv, (4, 4))
numeric = pt_spectrum(psi.density())
print("closed form vs numeric max deviation:", np.abs(closed.eigenvalues - numeric.eigenvalues).max())
print("negative eigenvalues:", numeric.neg_count, "of at most", (4 - 1) * (4 - 1))

# The bound report checks both limits at once: the count bound (m-1)(n-1)
# and the range [-1/2, 1].
rep = bound_report(psi.density())
print("\nmin, max PT eigenvalue: %.4f %.4f  within bounds: %s" % (rep.min_eig, rep.max_eig, rep.within_bounds))
