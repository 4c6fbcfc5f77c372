"""Explicit state families with many negative PT eigenvalues.

All families are returned unnormalized; counts of negative eigenvalues do
not depend on the normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import connected_components

from .errors import BadDimension, BadEpsilon, ShapeMismatch
from .linalg import CubicCoeffs
from .states import (
    BipartiteDims,
    DensityMatrix,
    PtSpectrum,
    PureState,
    partial_transpose,
    pt_spectrum,
    pure_pt_spectrum_closed_form,
    schmidt,
)


@dataclass(frozen=True)
class RhoAParams:
    n: int
    a: float


@dataclass(frozen=True)
class ThreeQutritParams:
    a1: complex = 0.0
    a2: complex = 0.0
    b1: complex = 0.0
    b2: complex = 0.0
    c1: complex = 0.0
    c2: complex = 0.0

    def weights(self):
        return np.array([[self.a1, self.a2], [self.b1, self.b2], [self.c1, self.c2]], dtype=complex)

    def as_tuple(self):
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)


@dataclass(frozen=True, eq=False)
class CyclicFamilyParams:
    """Weights for the shifted-diagonal family on ``C^m (x) C^n``.

    Vector ``k`` (``0 <= k < n``) is
    ``|0,k> + sum_{i=1}^{m-1} weights[k, i-1] |i, (i+k) mod n>``.
    ``m`` defaults to ``n``, which is the square family.
    """

    n: int
    weights: np.ndarray
    m: int | None = field(default=None)

    def __post_init__(self):
        m = self.n if self.m is None else self.m
        object.__setattr__(self, "m", int(m))
        w = np.asarray(self.weights, dtype=complex)
        if self.n < 2 or m < 2:
            raise BadDimension(f"cyclic family needs m, n >= 2, got {m}x{self.n}")
        if w.shape != (self.n, m - 1):
            raise ShapeMismatch(f"weights must have shape ({self.n}, {m - 1}), got {w.shape}")
        object.__setattr__(self, "weights", w)


@dataclass(frozen=True)
class ExtremalParams:
    m: int
    epsilon: float


def _ket(dims, i, j):
    v = np.zeros(dims.total, dtype=complex)
    v[i * dims.n + j] = 1.0
    return v


def _sum_projectors(vectors):
    V = np.asarray(vectors)
    return np.einsum("...ki,...kj->...ij", V, V.conj())


# -- one-parameter family -------------------------------------------------

def _check_rho_a(p):
    if p.n < 3:
        raise BadDimension(f"rho_a needs n >= 3, got {p.n}")


def rho_a_vectors(n, a):
    """The three generating vectors of ``rho_a``, shape ``(..., 3, n*n)``."""
    a = np.asarray(a, dtype=float)
    V = np.zeros(a.shape + (3, n * n), dtype=complex)
    for row, i in enumerate((1, 2)):
        V[..., row, i] = 1.0
        V[..., row, i * n] = -a
    V[..., 2, [i * (n + 1) for i in range(n)]] = 1.0
    return V


def build_rho_a(p):
    """``sum_k |psi_k><psi_k|`` with ``|0i> - a|i0>`` (i = 1, 2) and ``sum_i |ii>``."""
    _check_rho_a(p)
    return DensityMatrix(_sum_projectors(rho_a_vectors(p.n, p.a)), (p.n, p.n))


def rho_a_batch(n, a_values):
    return _sum_projectors(rho_a_vectors(n, a_values))


def rho_a_spectrum_closed_form(p):
    """Closed-form PT eigenvalues of the unnormalized ``rho_a``.

    ======================================  ====================
    eigenvalue                              multiplicity
    ======================================  ====================
    -1                                      n(n-1)/2 - 2
    1                                       n(n+1)/2 - 4
    1 + sqrt(2) a, 1 - sqrt(2) a            1 each
    (1 + a^2 +- sqrt(5 - 2a^2 + a^4)) / 2   2 each
    ======================================  ====================
    """
    _check_rho_a(p)
    n, a = p.n, float(p.a)
    root = math.sqrt(5.0 - 2.0 * a * a + a ** 4)
    ev = (
        [-1.0] * (n * (n - 1) // 2 - 2)
        + [1.0] * (n * (n + 1) // 2 - 4)
        + [1.0 + math.sqrt(2.0) * a, 1.0 - math.sqrt(2.0) * a]
        + [0.5 * (1.0 + a * a + root)] * 2
        + [0.5 * (1.0 + a * a - root)] * 2
    )
    return PtSpectrum.from_eigenvalues(ev, (n, n))


def rho_a_trace(n, a):
    return n + 2 + 2 * a * a


# -- cyclic constructions ---------------------------------------------------

def cyclic_vectors(weights, m, n):
    """Generating vectors of the cyclic family for a stack of weight arrays.

    ``weights`` has shape ``(..., n, m-1)``; the result ``(..., n, m*n)``.
    """
    W = np.asarray(weights, dtype=complex)
    if W.shape[-2:] != (n, m - 1):
        raise ShapeMismatch(f"weights must end in shape ({n}, {m - 1}), got {W.shape}")
    V = np.zeros(W.shape[:-2] + (n, m * n), dtype=complex)
    for k in range(n):
        V[..., k, k] = 1.0
        for i in range(1, m):
            V[..., k, i * n + (i + k) % n] += W[..., k, i - 1]
    return V


def cyclic_batch(weights, m, n):
    return _sum_projectors(cyclic_vectors(weights, m, n))


def build_cyclic_family(p):
    return DensityMatrix(cyclic_batch(p.weights, p.m, p.n), (p.m, p.n))


def build_three_qutrit(p):
    """Three-qutrit family spanned by
    ``|00> + a1|11> + a2|22>``, ``|01> + b1|12> + b2|20>``,
    ``|02> + c1|10> + c2|21>``.
    """
    return build_cyclic_family(CyclicFamilyParams(3, p.weights()))


def cubic_factor_coeffs(p):
    """One cubic factor of the characteristic polynomial of the family's PT.

    Real parameters only; imaginary parts are ignored.
    """
    a1, a2, b1, b2, c1, c2 = (float(np.real(x)) for x in p.as_tuple())
    p_sq = 1 + a1 ** 2 + b2 ** 2
    q = a1 ** 2 - a2 ** 2 - b1 ** 2 + b2 ** 2 + a1 ** 2 * b2 ** 2 - c1 ** 2 * c2 ** 2
    r = a1 ** 2 * a2 ** 2 + b1 ** 2 * b2 ** 2 + c1 ** 2 * c2 ** 2 - a1 ** 2 * b2 ** 2 - 2 * a2 * b1 * c1 * c2
    return CubicCoeffs(p_sq, q, r)


@dataclass(frozen=True, eq=False)
class CharacteristicFactor:
    indices: tuple
    coefficients: np.ndarray
    eigenvalues: np.ndarray

    @property
    def degree(self):
        return len(self.indices)


def characteristic_factors(mat, atol=0.0):
    """Split ``det(x I - mat)`` along the block structure of ``mat``.

    Basis indices are grouped into connected components of the graph with
    an edge wherever ``|mat[i, j]| > atol``. Each component gives one monic
    factor; ``coefficients`` are highest power first. The split is as fine
    as the sparsity pattern allows, and no finer.
    """
    mat = np.asarray(mat)
    _, labels = connected_components(np.abs(mat) > atol, directed=False)
    factors = []
    for lab in np.unique(labels):
        idx = np.flatnonzero(labels == lab)
        block = mat[np.ix_(idx, idx)]
        ev = np.linalg.eigvalsh((block + block.conj().T) / 2)
        factors.append(CharacteristicFactor(tuple(int(i) for i in idx), np.real(np.poly(ev)), ev))
    return factors


# -- extremal witnesses -----------------------------------------------------

def build_min_witness(p):
    """Pure state whose PT has eigenvalue ``-sqrt((1/2)(1/2 - eps))``.

    ``sqrt(1/2)|00> + sqrt(1/2 - eps)|11> + sqrt(eps/(m-1)) sum_{k=2}^{m} |kk>``.
    The tail needs labels up to ``m``, so for ``eps > 0`` the local dimension
    is ``m + 1``; for ``eps == 0`` the state lives in ``m (x) m``.
    """
    m, eps = int(p.m), float(p.epsilon)
    if m < 2:
        raise BadDimension(f"min witness needs m >= 2, got {m}")
    if not 0.0 <= eps < 0.5:
        raise BadEpsilon(f"epsilon must lie in [0, 1/2), got {eps}")
    d = m if eps == 0.0 else m + 1
    dims = BipartiteDims(d, d)
    v = math.sqrt(0.5) * _ket(dims, 0, 0) + math.sqrt(0.5 - eps) * _ket(dims, 1, 1)
    if eps > 0.0:
        w = math.sqrt(eps / (m - 1))
        for k in range(2, m + 1):
            v += w * _ket(dims, k, k)
    return PureState(v, dims)


def min_witness_eigenvalue(eps):
    """PT eigenvalue ``-sqrt((1/2)(1/2 - eps))`` carried by the min witness.

    It is the smallest PT eigenvalue while ``eps / (m-1) <= 1/2 - eps``;
    beyond that a tail pair ``-sqrt(eps/(2(m-1)))`` drops below it.
    """
    return -math.sqrt(0.5 * (0.5 - eps))


def build_max_witness(p):
    """Separable state ``(1-eps)|00><00| + (eps/m) sum_{k=1}^{m} |kk><kk|``.

    Built on local dimension ``m + 1`` (labels ``0..m``).
    """
    m, eps = int(p.m), float(p.epsilon)
    if m < 2:
        raise BadDimension(f"max witness needs m >= 2, got {m}")
    if not 0.0 <= eps <= 1.0:
        raise BadEpsilon(f"epsilon must lie in [0, 1], got {eps}")
    d = m + 1
    diag = np.zeros(d * d)
    diag[0] = 1.0 - eps
    for k in range(1, m + 1):
        diag[k * d + k] = eps / m
    return DensityMatrix(np.diag(diag), (d, d))


# -- JSON family specs ------------------------------------------------------

FAMILIES = ("rho_a", "three_qutrit", "cyclic", "min_witness", "max_witness")


def _complex_array(x):
    a = np.asarray(x, dtype=float)
    if a.ndim == 3 and a.shape[-1] == 2:
        return a[..., 0] + 1j * a[..., 1]
    return a.astype(complex)


def params_from_spec(spec):
    """Typed parameters from a ``{"family": ..., "params": {...}}`` mapping."""
    name = spec["family"]
    pr = dict(spec.get("params", {}))
    if name == "rho_a":
        return RhoAParams(int(pr["n"]), float(pr["a"]))
    if name == "three_qutrit":
        return ThreeQutritParams(**{k: complex(pr.get(k, 0.0)) for k in ("a1", "a2", "b1", "b2", "c1", "c2")})
    if name == "cyclic":
        w = _complex_array(pr["weights"])
        return CyclicFamilyParams(int(pr["n"]), w, pr.get("m"))
    if name in ("min_witness", "max_witness"):
        return ExtremalParams(int(pr["m"]), float(pr["epsilon"]))
    raise ValueError(f"unknown family {name!r}; expected one of {FAMILIES}")


_BUILDERS = {
    RhoAParams: build_rho_a,
    ThreeQutritParams: build_three_qutrit,
    CyclicFamilyParams: build_cyclic_family,
}


def build_from_spec(spec):
    """Density matrix (unnormalized except for the witnesses) for a family spec."""
    p = params_from_spec(spec)
    if spec["family"] == "min_witness":
        return build_min_witness(p).density()
    if spec["family"] == "max_witness":
        return build_max_witness(p)
    return _BUILDERS[type(p)](p)


def spectrum_from_spec(spec):
    """PT spectrum, in closed form where one exists.

    Returns ``(PtSpectrum, "closed_form" | "numeric")``.
    """
    p = params_from_spec(spec)
    if spec["family"] == "rho_a":
        return rho_a_spectrum_closed_form(p), "closed_form"
    if spec["family"] == "min_witness":
        psi = build_min_witness(p)
        return pure_pt_spectrum_closed_form(schmidt(psi), psi.dims), "closed_form"
    if spec["family"] == "max_witness":
        rho = build_max_witness(p)
        return PtSpectrum.from_eigenvalues(np.real(np.diag(partial_transpose(rho))), rho.dims), "closed_form"
    return pt_spectrum(build_from_spec(spec)), "numeric"
