import math

import numpy as np
import pytest

from ptneg.analysis import bound_report
from ptneg.errors import BadDimension, BadEpsilon, ShapeMismatch
from ptneg.families import (
    CyclicFamilyParams,
    ExtremalParams,
    RhoAParams,
    ThreeQutritParams,
    build_cyclic_family,
    build_from_spec,
    build_max_witness,
    build_min_witness,
    build_rho_a,
    build_three_qutrit,
    characteristic_factors,
    cubic_factor_coeffs,
    min_witness_eigenvalue,
    rho_a_spectrum_closed_form,
    spectrum_from_spec,
)
from ptneg.linalg import CubicCoeffs, cubic_real_roots, two_negative_roots_rule
from ptneg.states import PureState, partial_transpose, pt_spectrum

TWO_NEGATIVE_POINT = ThreeQutritParams(a1=0.25, a2=1.0, b1=1 / 3, b2=1 / 3, c1=0.5, c2=1.0)
A_GRID = np.linspace(0.0, 1.2, 21)


def test_rho_a_at_zero():
    rho = build_rho_a(RhoAParams(3, 0.0))
    ghz = np.zeros(9)
    ghz[[0, 4, 8]] = 1
    expected = np.outer(ghz, ghz)
    expected[1, 1] += 1
    expected[2, 2] += 1
    np.testing.assert_array_equal(rho.mat, expected)
    assert rho.trace == 5.0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rho_a_trace_and_rank(n):
    for a in A_GRID:
        rho = build_rho_a(RhoAParams(n, a))
        assert rho.trace == pytest.approx(n + 2 + 2 * a * a, abs=1e-12)
        assert np.sum(np.linalg.eigvalsh(rho.mat) > 1e-10) <= 3
    assert build_rho_a(RhoAParams(3, 0.8)).trace == pytest.approx(6.28, abs=1e-12)


def test_rho_a_bad_dimension():
    with pytest.raises(BadDimension):
        build_rho_a(RhoAParams(2, 0.5))
    with pytest.raises(BadDimension):
        rho_a_spectrum_closed_form(RhoAParams(2, 0.5))


def test_table_one_values_n3_a08():
    spec = rho_a_spectrum_closed_form(RhoAParams(3, 0.8))
    expected = sorted([-1, 1, 1, 2.131371, -0.131371, 1.836071, 1.836071, -0.196071, -0.196071])
    np.testing.assert_allclose(spec.eigenvalues, expected, atol=1e-6)
    assert spec.neg_count == 4


def test_table_one_values_n3_a0():
    spec = rho_a_spectrum_closed_form(RhoAParams(3, 0.0))
    r5 = math.sqrt(5)
    expected = sorted([-1, 1, 1, 1, 1, (1 + r5) / 2, (1 + r5) / 2, (1 - r5) / 2, (1 - r5) / 2])
    np.testing.assert_allclose(spec.eigenvalues, expected, atol=1e-15)
    assert spec.neg_count == 3


@pytest.mark.parametrize("n", [3, 4, 5])
def test_closed_form_matches_numeric(n):
    for a in A_GRID:
        p = RhoAParams(n, a)
        closed = rho_a_spectrum_closed_form(p)
        numeric = pt_spectrum(build_rho_a(p))
        assert closed.eigenvalues.size == n * n
        assert closed.eigenvalues.sum() == pytest.approx(n + 2 + 2 * a * a, abs=1e-12)
        np.testing.assert_allclose(closed.eigenvalues, numeric.eigenvalues, atol=1e-9)


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("a", [0.72, 0.8, 0.9, 0.99])
def test_negative_count_law(n, a):
    assert pt_spectrum(build_rho_a(RhoAParams(n, a))).neg_count == n * (n - 1) // 2 + 1


def test_count_below_and_at_interval_ends():
    assert pt_spectrum(build_rho_a(RhoAParams(3, 0.0))).neg_count == 3
    assert pt_spectrum(build_rho_a(RhoAParams(3, 0.5))).neg_count == 3
    # at a = 1 the smaller quadratic-branch eigenvalue hits exactly 0
    spec = pt_spectrum(build_rho_a(RhoAParams(4, 1.0)))
    assert spec.neg_count == 5
    assert rho_a_spectrum_closed_form(RhoAParams(4, 1.0)).neg_count == 5
    assert rho_a_spectrum_closed_form(RhoAParams(5, 0.9)).neg_count == 11


def test_three_qutrit_zero_params():
    rho = build_three_qutrit(ThreeQutritParams())
    np.testing.assert_array_equal(rho.mat, np.diag([1, 1, 1, 0, 0, 0, 0, 0, 0]))
    assert pt_spectrum(rho).neg_count == 0
    c = cubic_factor_coeffs(ThreeQutritParams())
    assert c == CubicCoeffs(1.0, 0.0, 0.0)
    np.testing.assert_allclose(cubic_real_roots(c), [0, 0, 1], atol=1e-15)


def _contained(roots, spectrum, tol):
    pool = list(spectrum)
    for x in roots:
        j = int(np.argmin([abs(x - y) for y in pool]))
        if abs(pool[j] - x) > tol:
            return False
        pool.pop(j)
    return True


def test_two_negative_root_point():
    spec = pt_spectrum(build_three_qutrit(TWO_NEGATIVE_POINT))
    assert spec.neg_count == 4
    c = cubic_factor_coeffs(TWO_NEGATIVE_POINT)
    assert c.q < 0 and c.r < 0
    assert two_negative_roots_rule(c)
    roots = cubic_real_roots(c)
    assert sum(x < 0 for x in roots) == 2
    assert _contained(roots, spec.eigenvalues, 1e-8)


def test_cubic_factor_containment_random(rng):
    for _ in range(500):
        p = ThreeQutritParams(*rng.random(6))
        spec = pt_spectrum(build_three_qutrit(p))
        assert _contained(cubic_real_roots(cubic_factor_coeffs(p)), spec.eigenvalues, 1e-8)


def test_characteristic_factors_three_qutrit(rng):
    p = ThreeQutritParams(*rng.random(6))
    factors = characteristic_factors(partial_transpose(build_three_qutrit(p)))
    assert sorted(f.degree for f in factors) == [3, 3, 3]
    c = cubic_factor_coeffs(p)
    printed = np.array([1.0, -c.p_sq, c.q, c.r])
    assert any(np.allclose(f.coefficients, printed, atol=1e-10) for f in factors)


def test_all_ones_obeys_bound():
    rho = build_three_qutrit(ThreeQutritParams(1, 1, 1, 1, 1, 1))
    assert pt_spectrum(rho).neg_count <= 4
    assert bound_report(rho).within_bounds


def test_cyclic_reproduces_three_qutrit(rng):
    for _ in range(20):
        w = rng.random((3, 2)) + 1j * rng.random((3, 2))
        p = ThreeQutritParams(*w.reshape(-1))
        np.testing.assert_array_equal(build_cyclic_family(CyclicFamilyParams(3, w)).mat, build_three_qutrit(p).mat)


def test_cyclic_structure(rng):
    w = rng.random((4, 3))
    rho = build_cyclic_family(CyclicFamilyParams(4, w))
    assert np.sum(np.linalg.eigvalsh(rho.mat) > 1e-10) <= 4
    assert pt_spectrum(rho).neg_count <= 9
    factors = characteristic_factors(partial_transpose(rho))
    assert sorted(f.degree for f in factors) == [4, 4, 4, 4]
    with pytest.raises(ShapeMismatch):
        CyclicFamilyParams(4, np.ones((4, 2)))
    rect = build_cyclic_family(CyclicFamilyParams(4, rng.random((4, 2)), m=3))
    assert rect.dims.m == 3 and rect.dims.n == 4


@pytest.mark.parametrize(
    "m, eps, expected",
    [
        (2, 0.0, -0.5),
        (3, 1e-3, -math.sqrt(0.5 * 0.499)),
        (3, 0.3, -math.sqrt(0.5 * 0.2)),
    ],
)
def test_min_witness(m, eps, expected):
    psi = build_min_witness(ExtremalParams(m, eps))
    assert psi.norm == pytest.approx(1.0, abs=1e-15)
    assert pt_spectrum(psi.density()).eigenvalues[0] == pytest.approx(expected, abs=1e-10)


def test_min_witness_is_bell_at_zero(bell):
    psi = build_min_witness(ExtremalParams(2, 0.0))
    np.testing.assert_allclose(psi.amplitudes, bell.amplitudes, atol=1e-16)


def test_min_witness_grid():
    for m in (2, 3, 4, 5):
        for eps in np.linspace(0.0, 0.49, 25):
            ev = pt_spectrum(build_min_witness(ExtremalParams(m, eps)).density()).eigenvalues
            target = min_witness_eigenvalue(eps)
            assert np.abs(ev - target).min() < 1e-10
            if eps / (m - 1) <= 0.5 - eps:
                assert ev[0] == pytest.approx(target, abs=1e-10)
            else:
                assert ev[0] == pytest.approx(-math.sqrt(eps / (2 * (m - 1))), abs=1e-10)
    with pytest.raises(BadEpsilon):
        build_min_witness(ExtremalParams(3, 0.5))


@pytest.mark.parametrize("m, eps, expected", [(2, 0.0, 1.0), (3, 0.1, 0.9), (3, 1.0, 1 / 3)])
def test_max_witness(m, eps, expected):
    rho = build_max_witness(ExtremalParams(m, eps))
    assert rho.trace == pytest.approx(1.0, abs=1e-15)
    np.testing.assert_array_equal(partial_transpose(rho), rho.mat)
    spec = pt_spectrum(rho)
    assert spec.eigenvalues[-1] == pytest.approx(expected, abs=1e-12)
    assert spec.neg_count == 0


def test_max_witness_grid():
    for m in (2, 3, 4):
        for eps in np.linspace(0.0, m / (m + 1), 20):
            spec = pt_spectrum(build_max_witness(ExtremalParams(m, eps)))
            assert spec.eigenvalues[-1] == pytest.approx(1 - eps, abs=1e-12)
    with pytest.raises(BadEpsilon):
        build_max_witness(ExtremalParams(3, 1.5))


def test_product_state_saturates_max():
    rho = PureState(np.kron([0.6, 0.8], [1, 0, 0]), (2, 3)).density()
    assert pt_spectrum(rho).eigenvalues[-1] == pytest.approx(1.0, abs=1e-15)


def test_family_instances_within_bounds(rng):
    states = [build_rho_a(RhoAParams(n, a)) for n in (3, 4, 5) for a in A_GRID]
    states += [build_three_qutrit(ThreeQutritParams(*rng.random(6))) for _ in range(50)]
    states += [build_cyclic_family(CyclicFamilyParams(4, rng.random((4, 3)))) for _ in range(50)]
    states += [build_min_witness(ExtremalParams(3, e)).density() for e in (0.0, 0.1, 0.4)]
    states += [build_max_witness(ExtremalParams(3, e)) for e in (0.0, 0.1, 1.0)]
    for rho in states:
        assert bound_report(rho).within_bounds


@pytest.mark.parametrize(
    "spec, source",
    [
        ({"family": "rho_a", "params": {"n": 3, "a": 0.8}}, "closed_form"),
        ({"family": "three_qutrit", "params": {"a1": 0.25, "a2": 1, "b1": 0.3333, "b2": 0.3333, "c1": 0.5, "c2": 1}}, "numeric"),
        ({"family": "cyclic", "params": {"n": 3, "weights": [[0.25, 1], [0.3333, 0.3333], [0.5, 1]]}}, "numeric"),
        ({"family": "min_witness", "params": {"m": 3, "epsilon": 0.1}}, "closed_form"),
        ({"family": "max_witness", "params": {"m": 3, "epsilon": 0.1}}, "closed_form"),
    ],
)
def test_family_specs(spec, source):
    rho = build_from_spec(spec)
    closed, got_source = spectrum_from_spec(spec)
    assert got_source == source
    np.testing.assert_allclose(closed.eigenvalues, pt_spectrum(rho).eigenvalues, atol=1e-9)


def test_family_spec_complex_weights():
    spec = {"family": "cyclic", "params": {"n": 2, "weights": [[[0.5, 0.5]], [[1.0, -0.2]]]}}
    rho = build_from_spec(spec)
    assert rho.mat[0, 3] == pytest.approx(np.conj(0.5 + 0.5j))
