"""Seeded random ensembles of bipartite states.

Every sampler takes a :class:`SeedSpec`. Generators are Philox streams
keyed by ``(seed, stream, *subkeys)``, so parallel tasks can derive their
own stream from a task index without coordinating.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadRank
from .states import DensityMatrix, PureState, as_dims

UINT64_MAX = 2 ** 64 - 1


@dataclass(frozen=True)
class SeedSpec:
    seed: int = 0
    stream: int = 0

    def __post_init__(self):
        for name in ("seed", "stream"):
            v = getattr(self, name)
            if int(v) != v or not 0 <= v <= UINT64_MAX:
                raise ValueError(f"{name} must be an unsigned 64-bit integer, got {v!r}")

    def generator(self, *subkeys):
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream,) + tuple(int(k) for k in subkeys))
        return np.random.Generator(np.random.Philox(ss))

    def to_dict(self):
        return {"seed": self.seed, "stream": self.stream}


def as_seed(s):
    if s is None:
        return SeedSpec()
    if isinstance(s, SeedSpec):
        return s
    if isinstance(s, (int, np.integer)):
        return SeedSpec(int(s))
    if isinstance(s, tuple):
        return SeedSpec(*s)
    raise TypeError(f"expected a SeedSpec, int or (seed, stream) tuple, got {type(s).__name__}")


def _rng(s):
    if isinstance(s, np.random.Generator):
        return s
    return as_seed(s).generator()


def complex_normal(rng, shape):
    """Standard complex normals, ``E|z|^2 = 1``."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def haar_vector(dim, s=None):
    rng = _rng(s)
    v = complex_normal(rng, dim)
    return v / np.linalg.norm(v)


def haar_pure(dims, s=None):
    """Haar-random normalized pure state on ``C^m (x) C^n``."""
    dims = as_dims(dims)
    return PureState(haar_vector(dims.total, s), dims)


def haar_unitary(dim, s=None):
    """Haar-random unitary via QR of a Ginibre matrix with phase fix."""
    rng = _rng(s)
    Z = complex_normal(rng, (dim, dim))
    Q, R = np.linalg.qr(Z)
    d = np.diag(R)
    return Q * (d / np.abs(d))


def ginibre_batch(dims, count, rank=None, s=None):
    """``count`` trace-one matrices ``G G^dagger / tr`` stacked along axis 0.

    ``rank`` may be an integer or an integer array of length ``count``; the
    default ``m*n`` gives the Hilbert-Schmidt measure.
    """
    dims = as_dims(dims)
    N = dims.total
    rng = _rng(s)
    rank = N if rank is None else rank
    ranks = np.broadcast_to(np.asarray(rank), (count,))
    if np.any(ranks < 1) or np.any(ranks > N):
        raise BadRank(f"rank must lie in [1, {N}]")
    G = complex_normal(rng, (count, N, N))
    G = G * (np.arange(N)[np.newaxis, :] < ranks[:, np.newaxis])[:, np.newaxis, :]
    R = G @ np.conj(np.swapaxes(G, -1, -2))
    R = (R + np.conj(np.swapaxes(R, -1, -2))) / 2
    tr = np.trace(R, axis1=-2, axis2=-1).real
    return R / tr[:, np.newaxis, np.newaxis]


def ginibre_mixed(dims, rank=None, s=None):
    """Random density matrix of rank at most ``rank`` (default full)."""
    dims = as_dims(dims)
    if rank is not None and not 1 <= rank <= dims.total:
        raise BadRank(f"rank {rank} outside [1, {dims.total}]")
    return DensityMatrix(ginibre_batch(dims, 1, rank, s)[0], dims)


def random_product_state(dims, s=None):
    dims = as_dims(dims)
    rng = _rng(s)
    e = haar_vector(dims.m, rng)
    f = haar_vector(dims.n, rng)
    return PureState(np.kron(e, f), dims)


def random_schmidt_state(dims, rank, s=None):
    """Random pure state of exact Schmidt rank ``rank``.

    Coefficients are drawn uniformly on the positive part of the unit sphere
    (resampled if any falls below 1e-3), then rotated by Haar local
    unitaries.
    """
    dims = as_dims(dims)
    if not 1 <= rank <= min(dims.m, dims.n):
        raise BadRank(f"Schmidt rank {rank} outside [1, {min(dims.m, dims.n)}]")
    rng = _rng(s)
    while True:
        c = np.abs(rng.standard_normal(rank))
        c /= np.linalg.norm(c)
        if c.min() > 1e-3:
            break
    U = haar_unitary(dims.m, rng)
    V = haar_unitary(dims.n, rng)
    D = np.zeros((dims.m, dims.n))
    D[np.arange(rank), np.arange(rank)] = c
    return PureState((U @ D @ V.T).reshape(-1), dims)
