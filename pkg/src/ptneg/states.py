"""Bipartite states, partial transposition and PT spectra.

Basis convention: ``|i>_A (x) |j>_B`` sits at flat index ``i*n + j``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotPositiveSemidefinite, ZeroVector
from .linalg import HERMITIAN_RTOL, hermitian_eigensystem, hermitian_eigvals, hermitize

EPS = np.finfo(float).eps
PSD_RTOL = 1e-10
SCHMIDT_CUTOFF = 1e-12


@dataclass(frozen=True)
class BipartiteDims:
    m: int
    n: int

    def __post_init__(self):
        if int(self.m) != self.m or int(self.n) != self.n or self.m < 1 or self.n < 1:
            raise DimensionMismatch(f"local dimensions must be positive integers, got {self.m}, {self.n}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))

    @property
    def total(self):
        return self.m * self.n

    @property
    def bound(self):
        """Maximum possible number of negative PT eigenvalues, (m-1)(n-1)."""
        return (self.m - 1) * (self.n - 1)

    def __iter__(self):
        yield self.m
        yield self.n


def as_dims(dims):
    if isinstance(dims, BipartiteDims):
        return dims
    m, n = dims
    return BipartiteDims(m, n)


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A positive semidefinite operator on ``C^m (x) C^n``.

    The trace is not forced to one; the state families are built
    unnormalized. Use :meth:`normalized` for the trace-one view.
    """

    dims: BipartiteDims
    mat: np.ndarray
    trace: float

    def __init__(self, mat, dims, check=True):
        dims = as_dims(dims)
        mat = np.asarray(mat, dtype=complex)
        if mat.shape != (dims.total, dims.total):
            raise DimensionMismatch(f"matrix shape {mat.shape} does not match {dims.m}x{dims.n}")
        if check:
            mat = hermitize(mat)
        tr = float(np.trace(mat).real)
        if check:
            if not tr > 0:
                raise NotPositiveSemidefinite(f"trace {tr} is not positive")
            lo = hermitian_eigvals(mat, check=False)[0]
            if lo < -PSD_RTOL * tr:
                raise NotPositiveSemidefinite(f"eigenvalue {lo:.3e} below -{PSD_RTOL:g}*trace")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mat", _frozen(mat))
        object.__setattr__(self, "trace", tr)

    @classmethod
    def from_pure(cls, psi):
        v = psi.amplitudes
        return cls(np.outer(v, v.conj()), psi.dims)

    def normalized(self):
        return DensityMatrix(self.mat / self.trace, self.dims, check=False)

    def __repr__(self):
        return f"DensityMatrix(dims={self.dims.m}x{self.dims.n}, trace={self.trace:.6g})"


@dataclass(frozen=True, eq=False)
class PureState:
    dims: BipartiteDims
    amplitudes: np.ndarray
    norm: float

    def __init__(self, amplitudes, dims):
        dims = as_dims(dims)
        v = np.asarray(amplitudes, dtype=complex).reshape(-1)
        if v.shape != (dims.total,):
            raise DimensionMismatch(f"{v.size} amplitudes do not match {dims.m}x{dims.n}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", _frozen(v))
        object.__setattr__(self, "norm", float(np.linalg.norm(v)))

    def normalized(self):
        if self.norm == 0:
            raise ZeroVector("cannot normalize the zero vector")
        return PureState(self.amplitudes / self.norm, self.dims)

    def density(self):
        return DensityMatrix.from_pure(self)

    def __repr__(self):
        return f"PureState(dims={self.dims.m}x{self.dims.n}, norm={self.norm:.6g})"


@dataclass(frozen=True, eq=False)
class SchmidtVector:
    """Schmidt coefficients (descending) and the matching local bases.

    ``basis_a[:, i]`` and ``basis_b[:, i]`` pair with ``coefficients[i]``.
    """

    coefficients: np.ndarray
    basis_a: np.ndarray | None = None
    basis_b: np.ndarray | None = None

    @property
    def rank(self):
        return len(self.coefficients)

    def state(self):
        """Reassemble ``sum_i c_i |a_i> (x) |b_i>`` as a flat amplitude vector."""
        return np.einsum("i,ai,bi->ab", self.coefficients, self.basis_a, self.basis_b).reshape(-1)


@dataclass(frozen=True, eq=False)
class PtSpectrum:
    """Sorted eigenvalues of a partial transpose with negativity bookkeeping.

    ``neg_count`` counts eigenvalues below ``-tolerance`` and ``negativity``
    is the magnitude of their sum. Neither is rescaled by the trace.
    """

    eigenvalues: np.ndarray
    neg_count: int
    negativity: float
    tolerance: float

    @classmethod
    def from_eigenvalues(cls, eigenvalues, dims=None, tolerance=None):
        ev = np.sort(np.asarray(eigenvalues, dtype=float))
        if tolerance is None:
            total = as_dims(dims).total if dims is not None else len(ev)
            tolerance = neg_tolerance(ev, total)
        neg = ev[ev < -tolerance]
        return cls(ev, int(neg.size), float(abs(neg.sum())), float(tolerance))


def neg_tolerance(eigenvalues, total):
    """Scale-aware threshold ``mn * eps * max(1, max|lambda|)``.

    Vectorized along the last axis.
    """
    ev = np.asarray(eigenvalues, dtype=float)
    top = np.abs(ev).max(axis=-1) if ev.size else np.zeros(ev.shape[:-1])
    return total * EPS * np.maximum(1.0, top)


def count_negative(eigenvalues, total):
    """Negative counts and negativities for a stack of ascending spectra.

    Returns ``(counts, negativities, tolerances)`` along the leading axes.
    """
    ev = np.asarray(eigenvalues, dtype=float)
    tau = neg_tolerance(ev, total)
    mask = ev < -tau[..., np.newaxis]
    return mask.sum(axis=-1), np.abs(np.where(mask, ev, 0.0).sum(axis=-1)), tau


def _check_subsystem(subsystem):
    if subsystem not in ("A", "B"):
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def partial_transpose(rho, subsystem="A", dims=None):
    """Partial transpose over one tensor factor.

    ``rho`` is a :class:`DensityMatrix` or a raw array (single or stacked)
    together with ``dims``. For subsystem A the ``(i, j)`` block of size
    ``n x n`` of the result is the ``(j, i)`` block of the input. The result
    is a plain array because it need not be positive.
    """
    _check_subsystem(subsystem)
    if isinstance(rho, DensityMatrix):
        dims = rho.dims if dims is None else as_dims(dims)
        mat = rho.mat
    else:
        if dims is None:
            raise DimensionMismatch("dims are required for a raw matrix")
        dims = as_dims(dims)
        mat = np.asarray(rho)
    m, n = dims
    N = m * n
    if mat.shape[-2:] != (N, N):
        raise DimensionMismatch(f"matrix shape {mat.shape} does not match {m}x{n}")
    lead = mat.shape[:-2]
    t = mat.reshape(lead + (m, n, m, n))
    axes = (-4, -2) if subsystem == "A" else (-3, -1)
    return np.swapaxes(t, *axes).reshape(lead + (N, N)).copy()


def pt_eigvals(mats, dims, subsystem="A"):
    """Ascending PT eigenvalues for a matrix or stack of matrices."""
    return hermitian_eigvals(partial_transpose(mats, subsystem, dims))


def pt_spectrum(rho, subsystem="A"):
    """Spectrum of the partial transpose of ``rho`` (not normalized)."""
    ev = pt_eigvals(rho.mat, rho.dims, subsystem)
    return PtSpectrum.from_eigenvalues(ev, rho.dims)


def negativity(rho):
    """Negativity of the trace-one state proportional to ``rho``."""
    return pt_spectrum(rho.normalized()).negativity


def trace_norm_negativity(rho):
    """``(||rho^Gamma||_1 - 1) / 2`` for the normalized state."""
    ev = pt_spectrum(rho.normalized()).eigenvalues
    return (np.abs(ev).sum() - 1.0) / 2.0


def _as_pure(psi, dims=None):
    if isinstance(psi, PureState):
        return psi
    return PureState(psi, dims)


def reduced_density(psi, keep="A", dims=None):
    """Reduced operator of ``|psi><psi|`` on the kept factor.

    Trace equals ``norm**2``; no normalization is applied.
    """
    _check_subsystem(keep)
    psi = _as_pure(psi, dims)
    if psi.norm == 0:
        raise ZeroVector("reduced state of the zero vector")
    M = psi.amplitudes.reshape(psi.dims.m, psi.dims.n)
    return M @ M.conj().T if keep == "A" else M.T @ M.conj()


def schmidt(psi, dims=None, cutoff=SCHMIDT_CUTOFF):
    """Schmidt decomposition of the normalized ``psi``.

    Computed from the eigendecomposition of the reduced state on A. Modes
    with coefficient at or below ``cutoff`` are dropped.
    """
    psi = _as_pure(psi, dims)
    if psi.norm == 0:
        raise ZeroVector("Schmidt decomposition of the zero vector")
    psi = psi.normalized()
    es = hermitian_eigensystem(reduced_density(psi, "A"))
    M = psi.amplitudes.reshape(psi.dims.m, psi.dims.n)
    # rows of proj are (<a_i| (x) I) psi = c_i <b_i*|; their norms give c_i
    # to absolute accuracy eps, unlike sqrt of the reduced eigenvalues
    proj = es.vectors.conj().T @ M
    coeffs = np.linalg.norm(proj, axis=1)
    order = np.argsort(-coeffs, kind="stable")
    coeffs, basis_a, proj = coeffs[order], es.vectors[:, order], proj[order]
    keep = coeffs > cutoff
    coeffs, basis_a, proj = coeffs[keep], basis_a[:, keep], proj[keep]
    basis_b = proj.T / coeffs
    # re-orthonormalize; round-off in near-degenerate modes
    q, rr = np.linalg.qr(basis_b)
    d = np.diag(rr)
    basis_b = q * (d / np.abs(d))
    return SchmidtVector(coeffs, basis_a, basis_b)


def pure_pt_spectrum_closed_form(s, dims=None):
    """PT spectrum of a pure state from its Schmidt coefficients.

    The eigenvalues are ``c_i**2`` for every i and ``+c_i c_j``, ``-c_i c_j``
    for every pair ``i < j``. With ``dims`` given the list is zero-padded to
    ``m*n`` entries.
    """
    c = np.asarray(s.coefficients if isinstance(s, SchmidtVector) else s, dtype=float)
    iu = np.triu_indices(len(c), k=1)
    cross = c[iu[0]] * c[iu[1]]
    ev = np.concatenate([c ** 2, cross, -cross])
    if dims is not None:
        total = as_dims(dims).total
        ev = np.concatenate([ev, np.zeros(total - ev.size)])
    ev = np.sort(ev)
    tol = neg_tolerance(ev, as_dims(dims).total if dims is not None else len(ev))
    return PtSpectrum(ev, int(cross.size), float(cross.sum()), float(tol))


def apply_local_unitaries(rho, U, V):
    """``(U (x) V) rho (U (x) V)^dagger``."""
    W = np.kron(U, V)
    return DensityMatrix(W @ rho.mat @ W.conj().T, rho.dims)


def is_hermitian(mat, rtol=HERMITIAN_RTOL):
    try:
        hermitize(mat, rtol)
    except NotHermitian:
        return False
    return True
