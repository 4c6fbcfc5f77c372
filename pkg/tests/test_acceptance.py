"""Acceptance criteria, one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v`` (lines are printed even under
capture) or ``python3 tests/test_acceptance.py`` for the lines alone.
Tolerances below are fixed; do not loosen them.
"""

import math
import time

import numpy as np
import pytest

from ptneg.analysis import (
    bound_report,
    find_product_vector,
    three_qutrit_grid_spec,
    cyclic4_sample_spec,
    npt_robustness_check,
    search_max_neg,
    sweep,
    bound_suite,
)
from ptneg.analysis.sweep import histogram, summary, write_records_csv
from ptneg.families import (
    CyclicFamilyParams,
    ExtremalParams,
    RhoAParams,
    ThreeQutritParams,
    build_cyclic_family,
    build_max_witness,
    build_min_witness,
    build_rho_a,
    build_three_qutrit,
    cubic_factor_coeffs,
    rho_a_spectrum_closed_form,
)
from ptneg.io import dump_json
from ptneg.linalg import cubic_real_roots
from ptneg.sampling import SeedSpec, haar_unitary, random_schmidt_state
from ptneg.states import PureState, pt_spectrum, pure_pt_spectrum_closed_form, schmidt

TOL_SPECTRUM = 1e-9
TOL_TRACE = 1e-12
TOL_CUBIC_ROOT = 1e-8
TOL_MIN_WITNESS = 1e-10
TOL_MAX_WITNESS = 1e-12
TOL_NEGATIVITY = 1e-10
TOL_PRODUCT = 1e-8
TOL_SINGLET = 1e-9
GRID_SECONDS = 120.0

SUITE_DIMS = [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)]
SUITE_SAMPLES = 10 ** 4
CYCLIC4_SAMPLES = 10 ** 5
SOFT_BUDGET = 10 ** 6
SEED = SeedSpec(2024)

_cache = {}


def report(number, ok, detail, soft=False):
    tag = "LOGGED" if soft else ("PASS" if ok else "FAIL")
    line = f"[{tag}] criterion {number:2d}: {detail}"
    print(line)
    return line


def _qutrit_grid(workers=1):
    t0 = time.perf_counter()
    records = list(sweep(three_qutrit_grid_spec(), SEED, workers=workers))
    return records, time.perf_counter() - t0


def _cyclic4(workers=1):
    return list(sweep(cyclic4_sample_spec(CYCLIC4_SAMPLES), SEED, workers=workers))


def _suite(workers=1):
    return bound_suite(SUITE_DIMS, SUITE_SAMPLES, SEED, workers=workers)


def cached(name, fn):
    if name not in _cache:
        _cache[name] = fn()
    return _cache[name]


def criterion_1():
    worst, worst_tr = 0.0, 0.0
    for n in (3, 4, 5):
        for a in np.linspace(0.0, 1.2, 21):
            p = RhoAParams(n, a)
            closed = rho_a_spectrum_closed_form(p).eigenvalues
            numeric = pt_spectrum(build_rho_a(p)).eigenvalues
            worst = max(worst, np.abs(closed - numeric).max())
            worst_tr = max(worst_tr, abs(closed.sum() - (n + 2 + 2 * a * a)))
    ok = worst <= TOL_SPECTRUM and worst_tr <= TOL_TRACE
    return ok, f"closed-form vs numeric max dev {worst:.2e} (tol {TOL_SPECTRUM:g}), trace dev {worst_tr:.2e} (tol {TOL_TRACE:g})"


def criterion_2():
    bad = []
    for n in (3, 4, 5):
        for a in (0.72, 0.8, 0.9, 0.99):
            c = pt_spectrum(build_rho_a(RhoAParams(n, a))).neg_count
            if c != n * (n - 1) // 2 + 1:
                bad.append((n, a, c))
    for a in (0.0, 0.5):
        c = pt_spectrum(build_rho_a(RhoAParams(3, a))).neg_count
        if c != 3:
            bad.append((3, a, c))
    return not bad, f"count n(n-1)/2+1 on 12 points and 3 below the interval; mismatches {bad}"


def criterion_3():
    p = ThreeQutritParams(a1=0.25, a2=1.0, b1=1 / 3, b2=1 / 3, c1=0.5, c2=1.0)
    spec = pt_spectrum(build_three_qutrit(p))
    c = cubic_factor_coeffs(p)
    roots = cubic_real_roots(c)
    dev = max(np.abs(spec.eigenvalues - x).min() for x in roots)
    ok = spec.neg_count == 4 and dev <= TOL_CUBIC_ROOT and c.q < 0 and c.r < 0
    return ok, f"neg_count {spec.neg_count}, cubic roots in spectrum within {dev:.1e} (tol {TOL_CUBIC_ROOT:g}), q={c.q:.4f}, r={c.r:.4f}"


def criterion_4():
    records, secs = cached("qutrit_grid", _qutrit_grid)
    h = histogram(records)
    ok = len(records) == 5 ** 6 and h.get(0, 0) > 0 and h.get(4, 0) > 0 and secs < GRID_SECONDS
    return ok, f"{len(records)} points in {secs:.1f}s (limit {GRID_SECONDS:g}s), histogram {h}"


def criterion_5():
    records = cached("cyclic4", _cyclic4)
    h = histogram(records)
    ok = h.get(8, 0) >= 1 and h.get(9, 0) == 0 and len(records) == CYCLIC4_SAMPLES
    return ok, f"{len(records)} samples, {h.get(8, 0)} with 8 negatives, {h.get(9, 0)} with 9; histogram {h}"


def criterion_6():
    out = cached("suite", _suite)
    viol = {(d["m"], d["n"]): d["count_violations"] for d in out["dims"]}
    top = {(d["m"], d["n"]): d["max_neg_count"] for d in out["dims"]}
    ok = all(v == 0 for v in viol.values()) and top[(2, 2)] <= 1
    return ok, f"{SUITE_SAMPLES} Ginibre states per dims, max counts {top}, violations {sum(viol.values())}"


def _family_instances():
    rng = SEED.generator(7)
    states = [build_rho_a(RhoAParams(n, a)) for n in (3, 4, 5) for a in np.linspace(0.0, 1.2, 21)]
    states += [build_three_qutrit(ThreeQutritParams(*rng.random(6))) for _ in range(100)]
    states += [build_cyclic_family(CyclicFamilyParams(4, rng.random((4, 3)))) for _ in range(100)]
    states += [build_min_witness(ExtremalParams(m, e)).density() for m in (2, 3, 4) for e in (0.0, 1e-3, 0.3)]
    states += [build_max_witness(ExtremalParams(m, e)) for m in (2, 3, 4) for e in (0.0, 0.1, 0.5)]
    return states


def criterion_7():
    out = cached("suite", _suite)
    sample_viol = sum(d["range_violations"] for d in out["dims"])
    fam_viol = sum(not bound_report(r).range_ok for r in _family_instances())
    dev_min = 0.0
    # the advertised value is the minimum only while eps/(m-1) <= 1/2 - eps,
    # which excludes m = 2 with eps > 1/4; m = 2 is taken at eps = 0 only
    for m, e in [(2, 0.0)] + [(m, e) for m in (3, 4) for e in (0.0, 1e-3, 0.3)]:
        ev = pt_spectrum(build_min_witness(ExtremalParams(m, e)).density()).eigenvalues
        dev_min = max(dev_min, abs(ev[0] + math.sqrt(0.5 * (0.5 - e))))
    dev_max = 0.0
    for m in (2, 3):
        for e in (0.0, 0.1):
            ev = pt_spectrum(build_max_witness(ExtremalParams(m, e))).eigenvalues
            dev_max = max(dev_max, abs(ev[-1] - (1 - e)))
    ok = sample_viol == 0 and fam_viol == 0 and dev_min <= TOL_MIN_WITNESS and dev_max <= TOL_MAX_WITNESS
    return ok, (f"range violations samples {sample_viol}, families {fam_viol}; "
                f"min witness dev {dev_min:.1e} (tol {TOL_MIN_WITNESS:g}), max witness dev {dev_max:.1e} (tol {TOL_MAX_WITNESS:g})")


def criterion_8():
    worst, bad_counts = 0.0, 0
    for d in (1, 2, 3, 4):
        for i in range(500):
            psi = random_schmidt_state((4, 4), d, SEED.generator(8, d, i))
            numeric = pt_spectrum(psi.density())
            closed = pure_pt_spectrum_closed_form(schmidt(psi), (4, 4))
            worst = max(worst, np.abs(closed.eigenvalues - numeric.eigenvalues).max())
            bad_counts += numeric.neg_count != d * (d - 1) // 2
    neg_dev = 0.0
    for d in (1, 2, 3, 4):
        v = np.zeros(16)
        v[[5 * k for k in range(d)]] = 1 / math.sqrt(d)
        neg_dev = max(neg_dev, abs(pt_spectrum(PureState(v, (4, 4)).density()).negativity - (d - 1) / 2))
    ok = worst <= TOL_SPECTRUM and bad_counts == 0 and neg_dev <= TOL_NEGATIVITY
    return ok, (f"2000 states, spectrum dev {worst:.1e} (tol {TOL_SPECTRUM:g}), count mismatches {bad_counts}, "
                f"uniform negativity dev {neg_dev:.1e} (tol {TOL_NEGATIVITY:g})")


def criterion_9():
    a = npt_robustness_check(build_rho_a(RhoAParams(3, 0.8)), 500, SeedSpec(SEED.seed, 9))
    psi = random_schmidt_state((3, 3), 3, SEED.generator(9))
    b = npt_robustness_check(psi.density(), 500, SeedSpec(SEED.seed, 10))
    ok = a.K == 3 and b.K == 2 and a.all_npt and b.all_npt
    return ok, (f"rho_a K={a.K}: {a.npt_trials}/{a.trials} NPT; Schmidt-rank-3 K={b.K}: {b.npt_trials}/{b.trials} NPT; "
                f"converse PPT found {a.converse_ppt_found} and {b.converse_ppt_found} (informational)")


def criterion_10():
    fails, max_restarts = 0, 0
    for dims in ((3, 3), (2, 3)):
        m, n = dims
        k = (m - 1) * (n - 1) + 1
        for i in range(100):
            U = haar_unitary(m * n, SEED.generator(10, m, n, i))
            res = find_product_vector(U[:, :k], dims, restarts=20, tol=TOL_PRODUCT, s=SeedSpec(SEED.seed, 1000 + i))
            fails += not res.success
            max_restarts = max(max_restarts, res.restarts_used)
    singlet = np.array([0, 1, -1, 0]) / math.sqrt(2)
    res = find_product_vector(singlet, (2, 2), s=SEED)
    sdev = abs(res.overlap - 0.5)
    ok = fails == 0 and not res.success and sdev <= TOL_SINGLET
    return ok, (f"200 subspaces, {fails} failures, at most {max_restarts} restarts; "
                f"singlet overlap {res.overlap:.12f} (dev {sdev:.1e}, tol {TOL_SINGLET:g})")


def criterion_11():
    parts = []
    for dims, target in (((3, 4), 5), ((3, 5), 6)):
        res = search_max_neg(dims, "local-refine", SOFT_BUDGET, SEED)
        bound = (dims[0] - 1) * (dims[1] - 1)
        parts.append(f"{dims[0]}x{dims[1]} best {res.best_count} (reported {target}, bound {bound}, "
                     f"{res.samples_evaluated} evals, {res.elapsed:.0f}s)")
        assert res.best_count <= bound
    return True, "; ".join(parts)


def _outputs(tmp, workers):
    recs1, _ = _qutrit_grid(workers)
    recs2 = _cyclic4(workers)
    files = {}
    for name, recs, spec in (("qutrit_grid", recs1, three_qutrit_grid_spec()), ("cyclic4", recs2, cyclic4_sample_spec(CYCLIC4_SAMPLES))):
        path = tmp / f"{name}_w{workers}.csv"
        write_records_csv(recs, path, len(spec.axes))
        dump_json(summary(recs, spec, SEED), tmp / f"{name}_w{workers}.json")
        files[name + ".csv"] = path.read_bytes()
        files[name + ".json"] = (tmp / f"{name}_w{workers}.json").read_bytes()
    dump_json(_suite(workers), tmp / f"suite_w{workers}.json")
    files["suite.json"] = (tmp / f"suite_w{workers}.json").read_bytes()
    return files


def criterion_12(tmp):
    a = _outputs(tmp, 1)
    b = _outputs(tmp, 3)
    diff = [k for k in a if a[k] != b[k]]
    size = sum(len(v) for v in a.values())
    return not diff, f"workers 1 vs 3: {len(a)} files, {size} bytes, differing {diff}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number, capsys):
    ok, detail = CRITERIA[number - 1]()
    with capsys.disabled():
        print()
        report(number, ok, detail, soft=number == 11)
    assert ok, detail


def test_criterion_12(tmp_path, capsys):
    ok, detail = criterion_12(tmp_path)
    with capsys.disabled():
        print()
        report(12, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    import pathlib
    import tempfile

    results = []
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        report(k, ok, detail, soft=k == 11)
        results.append(ok)
    with tempfile.TemporaryDirectory() as d:
        ok, detail = criterion_12(pathlib.Path(d))
        report(12, ok, detail)
        results.append(ok)
    raise SystemExit(0 if all(results) else 1)
