"""Dense Hermitian eigensolvers and real-cubic root utilities.

The default eigensolver delegates to LAPACK (``numpy.linalg.eigh``). A
cyclic complex Jacobi solver is kept alongside as an independent route,
used for cross-checking at small dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ComplexRootsDetected,
    ConvergenceFailure,
    NotHermitian,
    PreconditionViolated,
)

HERMITIAN_RTOL = 1e-12
DISCRIMINANT_RTOL = 1e-9


@dataclass(frozen=True)
class EigenSystem:
    """Ascending real eigenvalues with optional orthonormal eigenvectors.

    ``vectors[:, i]`` belongs to ``values[i]``. ``residual`` is
    ``max_i ||H v_i - values[i] v_i||`` and is ``nan`` when vectors were not
    requested.
    """

    values: np.ndarray
    vectors: np.ndarray | None
    residual: float


def max_abs(H):
    """Largest entry magnitude over the last two axes."""
    H = np.asarray(H)
    if H.size == 0:
        return np.zeros(H.shape[:-2])
    return np.abs(H).max(axis=(-2, -1))


def hermitize(H, rtol=HERMITIAN_RTOL):
    """Return ``(H + H^dagger) / 2`` after checking ``H`` is Hermitian.

    Works on a single matrix or a stack of shape ``(..., N, N)``.

    Raises
    ------
    NotHermitian
        If any matrix deviates from Hermitian by more than
        ``rtol * max|H_ij|``, or holds non-finite entries.
    """
    H = np.asarray(H)
    if H.ndim < 2 or H.shape[-1] != H.shape[-2] or H.shape[-1] < 1:
        raise NotHermitian(f"expected square matrix, got shape {H.shape}")
    if not np.all(np.isfinite(H)):
        raise NotHermitian("matrix has non-finite entries")
    Hd = np.conj(np.swapaxes(H, -1, -2))
    asym = max_abs(H - Hd)
    scale = max_abs(H)
    if np.any(asym > rtol * scale):
        worst = float(np.max(asym / np.where(scale > 0, scale, 1.0)))
        raise NotHermitian(f"relative asymmetry {worst:.3e} exceeds {rtol:.1e}")
    return (H + Hd) / 2


def hermitian_eigvals(H, check=True):
    """Ascending eigenvalues of a Hermitian matrix or stack of matrices."""
    Hs = hermitize(H) if check else np.asarray(H)
    try:
        return np.linalg.eigvalsh(Hs)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc


def _residual(H, values, vectors):
    r = H @ vectors - vectors * values[np.newaxis, :]
    return float(np.linalg.norm(r, axis=0).max())


def hermitian_eigensystem(H, want_vectors=True, method="lapack"):
    """Eigendecomposition of a single Hermitian matrix.

    Parameters
    ----------
    H : array_like, shape (N, N)
        Hermitian within ``1e-12 * max|H_ij|``; it is symmetrized before
        solving.
    want_vectors : bool
        Also compute eigenvectors and the eigen-residual.
    method : {"lapack", "jacobi"}
        ``"jacobi"`` runs the pure-numpy cyclic Jacobi solver.

    Returns
    -------
    EigenSystem
    """
    Hs = hermitize(H)
    if Hs.ndim != 2:
        raise NotHermitian(f"expected a single matrix, got shape {Hs.shape}")
    if method == "jacobi":
        values, vectors = jacobi_eigensystem(Hs)
    elif method == "lapack":
        try:
            if want_vectors:
                values, vectors = np.linalg.eigh(Hs)
            else:
                values, vectors = np.linalg.eigvalsh(Hs), None
        except np.linalg.LinAlgError as exc:
            raise ConvergenceFailure(str(exc)) from exc
    else:
        raise ValueError(f"unknown method {method!r}")
    if not want_vectors:
        return EigenSystem(values, None, float("nan"))
    return EigenSystem(values, vectors, _residual(Hs, values, vectors))


def jacobi_eigensystem(H, tol=1e-15, max_sweeps=60):
    """Cyclic Jacobi eigensolver for a complex Hermitian matrix.

    Each pivot first removes the phase of ``H[p, q]`` with a diagonal
    unitary, then applies a real Givens rotation. Returns ascending
    ``(values, vectors)``.
    """
    A = np.array(H, dtype=complex)
    N = A.shape[0]
    V = np.eye(N, dtype=complex)
    scale = np.linalg.norm(A)
    if N == 1 or scale == 0.0:
        return np.real(np.diag(A)).copy(), V
    off = 0.0
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off <= tol * scale:
            break
        for p in range(N - 1):
            for q in range(p + 1, N):
                beta = A[p, q]
                mag = abs(beta)
                if mag <= 1e-300:
                    continue
                phase = beta / mag
                alpha, gamma = A[p, p].real, A[q, q].real
                theta = (gamma - alpha) / (2.0 * mag)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                U = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                idx = [p, q]
                A[:, idx] = A[:, idx] @ U
                A[idx, :] = U.conj().T @ A[idx, :]
                V[:, idx] = V[:, idx] @ U
    else:
        raise ConvergenceFailure(f"Jacobi did not converge in {max_sweeps} sweeps", off / scale)
    values = np.real(np.diag(A))
    order = np.argsort(values, kind="stable")
    return values[order], V[:, order]


@dataclass(frozen=True)
class CubicCoeffs:
    """The monic cubic ``x**3 - p_sq*x**2 + q*x + r``.

    The leading quadratic coefficient is stored negated so that ``p_sq``
    equals the sum of the roots.
    """

    p_sq: float
    q: float
    r: float

    @classmethod
    def from_roots(cls, roots):
        a, b, c = (float(x) for x in roots)
        return cls(p_sq=a + b + c, q=a * b + b * c + c * a, r=-a * b * c)

    def __call__(self, x):
        return ((x - self.p_sq) * x + self.q) * x + self.r

    def derivative(self, x):
        return (3.0 * x - 2.0 * self.p_sq) * x + self.q


def _depressed(c):
    b = -c.p_sq
    P = c.q - b * b / 3.0
    Q = 2.0 * b ** 3 / 27.0 - b * c.q / 3.0 + c.r
    return b, P, Q


def cubic_discriminant(c):
    """Discriminant of the cubic; non-negative iff all roots are real."""
    _, P, Q = _depressed(c)
    return -(4.0 * P ** 3 + 27.0 * Q ** 2)


def cubic_real_roots(c):
    """Three real roots of ``c`` in ascending order.

    Uses the trigonometric form of Cardano's solution followed by one Newton
    step per root.

    Raises
    ------
    ComplexRootsDetected
        If the discriminant is below ``-1e-9 * R**6``, ``R`` being the root
        scale ``max(|p_sq|, |q|**(1/2), |r|**(1/3))``.
    """
    b, P, Q = _depressed(c)
    excess = 4.0 * P ** 3 + 27.0 * Q ** 2
    # the discriminant is homogeneous of degree 6 in the root scale
    scale = max(abs(c.p_sq), math.sqrt(abs(c.q)), abs(c.r) ** (1.0 / 3.0)) ** 6
    if excess > DISCRIMINANT_RTOL * scale:
        raise ComplexRootsDetected(f"discriminant {-excess:.6e} < 0 for {c}")
    shift = -b / 3.0
    if P < 0.0:
        amp = 2.0 * math.sqrt(-P / 3.0)
        arg = 3.0 * Q / (P * amp)
        theta = math.acos(min(1.0, max(-1.0, arg))) / 3.0
        ts = [amp * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
    else:
        # P >= 0 passes the check only when P and Q are negligible: a triple root.
        ts = [-math.copysign(abs(Q) ** (1.0 / 3.0), Q)] * 3
    roots = []
    for t in ts:
        x = t + shift
        d = c.derivative(x)
        if d != 0.0:
            x_new = x - c(x) / d
            if abs(c(x_new)) <= abs(c(x)):
                x = x_new
        roots.append(x)
    return sorted(roots)


def two_negative_roots_rule(c):
    """True iff exactly two roots are negative, decided by ``q < 0 and r < 0``.

    Valid for cubics with real roots and non-negative root sum (``p_sq >= 0``),
    which is the case for characteristic factors of positive-trace Hermitian
    blocks.
    """
    if c.p_sq < 0:
        raise PreconditionViolated(f"p_sq = {c.p_sq} < 0")
    try:
        cubic_real_roots(c)
    except ComplexRootsDetected as exc:
        raise PreconditionViolated(str(exc)) from exc
    return c.q < 0 and c.r < 0
