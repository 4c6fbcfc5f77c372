"""Finding a product vector inside a subspace by alternating maximization.

Every subspace of ``C^m (x) C^n`` with dimension above ``(m-1)(n-1)``
contains a product vector. The finder maximizes ``<e,f|P|e,f>`` over unit
``e, f``, where ``P`` projects onto the subspace: with ``f`` fixed the best
``e`` is the top eigenvector of ``(I (x) <f|) P (I (x) |f>)``, and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NonOrthonormalBasis
from ..sampling import as_seed, haar_vector
from ..states import as_dims

ORTHONORMAL_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class ProductVectorResult:
    success: bool
    overlap: float
    e: np.ndarray
    f: np.ndarray
    restarts_used: int
    iterations: int

    @property
    def residual(self):
        return 1.0 - self.overlap

    @property
    def vector(self):
        return np.kron(self.e, self.f)

    def to_dict(self):
        return {
            "success": self.success,
            "overlap": self.overlap,
            "residual": self.residual,
            "restarts_used": self.restarts_used,
            "iterations": self.iterations,
            "e": [[float(z.real), float(z.imag)] for z in self.e],
            "f": [[float(z.real), float(z.imag)] for z in self.f],
        }


def _as_basis(basis, total):
    B = np.asarray(basis, dtype=complex)
    if B.ndim == 1:
        B = B[:, np.newaxis]
    if B.shape[0] != total and B.shape[1] == total:
        B = B.T
    if B.shape[0] != total:
        raise NonOrthonormalBasis(f"basis vectors have length {B.shape[0]}, expected {total}")
    return B


def find_product_vector(basis, dims, restarts=20, iters=200, tol=1e-8, s=None):
    """Search the span of ``basis`` for a unit product vector ``e (x) f``.

    Parameters
    ----------
    basis : array_like
        Orthonormal vectors as the columns of an ``(m*n, k)`` array, or a
        list of ``k`` vectors.
    dims : BipartiteDims or (m, n)
    restarts, iters : int
        Random restarts and alternating sweeps per restart.
    tol : float
        Success means overlap ``||P (e (x) f)||^2 >= 1 - tol``.

    Returns
    -------
    ProductVectorResult
        On failure ``success`` is False and the best overlap found is kept.
        Failure is expected when the span has dimension at most
        ``(m-1)(n-1)``.
    """
    dims = as_dims(dims)
    m, n = dims
    B = _as_basis(basis, dims.total)
    gram = B.conj().T @ B
    if np.abs(gram - np.eye(B.shape[1])).max() > ORTHONORMAL_TOL:
        raise NonOrthonormalBasis("basis is not orthonormal within 1e-10")
    # P[a, b, c, d] = <a b| P |c d>
    P = (B @ B.conj().T).reshape(m, n, m, n)
    seed = as_seed(s)
    best = (-1.0, None, None, 0, 0)
    for r in range(restarts):
        f = haar_vector(n, seed.generator(r))
        e = None
        ov, prev, it = 0.0, -1.0, 0
        for it in range(1, iters + 1):
            Me = np.einsum("b,abcd,d->ac", f.conj(), P, f)
            _, vecs = np.linalg.eigh(Me)
            e = vecs[:, -1]
            Mf = np.einsum("a,abcd,c->bd", e.conj(), P, e)
            vals, vecs = np.linalg.eigh(Mf)
            f = vecs[:, -1]
            ov = float(vals[-1])
            if ov >= 1.0 - tol or ov - prev <= 1e-16:
                break
            prev = ov
        if ov > best[0]:
            best = (ov, e, f, r + 1, it)
        if ov >= 1.0 - tol:
            break
    ov, e, f, used, it = best
    return ProductVectorResult(ov >= 1.0 - tol, min(ov, 1.0), e, f, used, it)
