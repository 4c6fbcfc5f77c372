# Checking both spectral bounds on random states, and states that reach them.
#
# Run: python3 demos/05_bounds_and_witnesses.py

from ptneg import ExtremalParams, SeedSpec, build_max_witness, build_min_witness, pt_spectrum
from ptneg.analysis import bound_suite
from ptneg.families import min_witness_eigenvalue

# Ginibre states with random rank, 5000 per dimension pair.
out = bound_suite([(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)], 5000, SeedSpec(3))
for d in out["dims"]:
    print(f"{d['m']}x{d['n']}: max negatives {d['max_neg_count']} (bound {d['bound']}), "
          f"range [{d['min_eig']:.3f}, {d['max_eig']:.3f}], violations {d['count_violations'] + d['range_violations']}")

# The lower end -1/2 is approached by a pure state close to a Bell pair.
print()
for eps in (0.0, 1e-3, 0.1, 0.3):
    ev = pt_spectrum(build_min_witness(ExtremalParams(3, eps)).density()).eigenvalues
    print(f"eps = {eps:<6} min PT eigenvalue {ev[0]:.10f}  expected {min_witness_eigenvalue(eps):.10f}")

# The upper end 1 is approached by a separable diagonal state.
for eps in (0.0, 0.1, 0.5):
    ev = pt_spectrum(build_max_witness(ExtremalParams(3, eps))).eigenvalues
    print(f"eps = {eps:<6} max PT eigenvalue {ev[-1]:.12f}")
