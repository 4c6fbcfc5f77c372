"""Checks of the two spectral bounds on partial transposes.

For any state on ``C^m (x) C^n`` the PT has at most ``(m-1)(n-1)`` negative
eigenvalues, and every PT eigenvalue of a trace-one state lies in
``[-1/2, 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import __version__
from ..errors import NotPositiveSemidefinite
from ..linalg import hermitian_eigvals
from ..sampling import as_seed, ginibre_batch
from ..states import PSD_RTOL, BipartiteDims, as_dims, count_negative, pt_eigvals
from ._parallel import map_tasks

MIN_EIG_BOUND = -0.5
MAX_EIG_BOUND = 1.0


@dataclass(frozen=True, eq=False)
class BoundReport:
    dims: BipartiteDims
    neg_count: int
    bound: int
    min_eig: float
    max_eig: float
    within_bounds: bool
    tolerance: float
    eigenvalues: np.ndarray

    @property
    def count_ok(self):
        return self.neg_count <= self.bound

    @property
    def range_ok(self):
        return self.min_eig >= MIN_EIG_BOUND - self.tolerance and self.max_eig <= MAX_EIG_BOUND + self.tolerance

    def to_dict(self):
        return {
            "m": self.dims.m,
            "n": self.dims.n,
            "neg_count": self.neg_count,
            "bound": self.bound,
            "min_eig": self.min_eig,
            "max_eig": self.max_eig,
            "within_bounds": self.within_bounds,
            "tolerance": self.tolerance,
            "eigenvalues": self.eigenvalues.tolist(),
        }


def bound_report(rho):
    """Normalize ``rho`` and evaluate both bounds on its PT spectrum.

    Raises
    ------
    NotPositiveSemidefinite
        If ``rho`` itself is not PSD within ``1e-10 * trace``; the bounds
        only apply to states.
    """
    mat = rho.mat
    tr = float(np.trace(mat).real)
    if not tr > 0:
        raise NotPositiveSemidefinite(f"trace {tr} is not positive")
    lo = hermitian_eigvals(mat)[0]
    if lo < -PSD_RTOL * tr:
        raise NotPositiveSemidefinite(f"eigenvalue {lo:.3e} below -{PSD_RTOL:g}*trace")
    dims = rho.dims
    ev = pt_eigvals(mat / tr, dims)
    count, _, tau = count_negative(ev, dims.total)
    count, tau = int(count), float(tau)
    min_eig, max_eig = float(ev[0]), float(ev[-1])
    ok = (
        count <= dims.bound
        and min_eig >= MIN_EIG_BOUND - tau
        and max_eig <= MAX_EIG_BOUND + tau
    )
    return BoundReport(dims, count, dims.bound, min_eig, max_eig, ok, tau, ev)


def verify_neg_count_bound(rho):
    """Bound report for ``rho``; ``neg_count <= (m-1)(n-1)`` must hold."""
    return bound_report(rho)


def verify_spectral_range(rho):
    """Bound report for ``rho``; PT eigenvalues must lie in ``[-1/2, 1]``."""
    return bound_report(rho)


def batch_bounds(mats, dims):
    """Vectorized bound check on a stack of trace-one matrices.

    Returns a dict of arrays: ``neg_count``, ``min_eig``, ``max_eig``,
    ``tolerance``, ``count_ok``, ``range_ok``.
    """
    dims = as_dims(dims)
    ev = pt_eigvals(mats, dims)
    count, _, tau = count_negative(ev, dims.total)
    min_eig, max_eig = ev[..., 0], ev[..., -1]
    return {
        "neg_count": count,
        "min_eig": min_eig,
        "max_eig": max_eig,
        "tolerance": tau,
        "count_ok": count <= dims.bound,
        "range_ok": (min_eig >= MIN_EIG_BOUND - tau) & (max_eig <= MAX_EIG_BOUND + tau),
    }


DEFAULT_CHUNK = 2000


def _suite_chunk(task):
    m, n, seed, start, size, rank_mode = task
    dims = BipartiteDims(m, n)
    rng = seed.generator(m, n, start)
    if rank_mode == "full":
        ranks = None
    else:
        ranks = rng.integers(1, dims.total + 1, size=size)
    mats = ginibre_batch(dims, size, ranks, rng)
    b = batch_bounds(mats, dims)
    return {
        "hist": np.bincount(b["neg_count"], minlength=dims.total + 1).tolist(),
        "count_violations": int((~b["count_ok"]).sum()),
        "range_violations": int((~b["range_ok"]).sum()),
        "min_eig": float(b["min_eig"].min()),
        "max_eig": float(b["max_eig"].max()),
        "tolerance_max": float(b["tolerance"].max()),
    }


def bound_suite(dims_list, samples, s=None, rank_mode="mixed", workers=1, chunk=DEFAULT_CHUNK):
    """Check both bounds on Ginibre samples for each dims in ``dims_list``.

    ``rank_mode="full"`` samples the Hilbert-Schmidt measure; ``"mixed"``
    draws the Ginibre rank uniformly from ``1..mn`` per sample, which reaches
    far more negative eigenvalues. The returned mapping is JSON-ready and
    depends only on the arguments, not on ``workers``.
    """
    seed = as_seed(s)
    out = {"tool_version": __version__, "seed": seed.to_dict(), "rank_mode": rank_mode,
           "samples": samples, "tolerance_rule": "mn*eps*max(1,max|lambda|)", "dims": []}
    for dims in dims_list:
        dims = as_dims(dims)
        tasks = [(dims.m, dims.n, seed, start, min(chunk, samples - start), rank_mode)
                 for start in range(0, samples, chunk)]
        parts = list(map_tasks(_suite_chunk, tasks, workers))
        hist = np.zeros(dims.total + 1, dtype=int)
        for p in parts:
            hist += np.asarray(p["hist"])
        nz = np.flatnonzero(hist)
        out["dims"].append({
            "m": dims.m,
            "n": dims.n,
            "bound": dims.bound,
            "max_neg_count": int(nz.max()) if nz.size else 0,
            "count_violations": sum(p["count_violations"] for p in parts),
            "range_violations": sum(p["range_violations"] for p in parts),
            "min_eig": min(p["min_eig"] for p in parts),
            "max_eig": max(p["max_eig"] for p in parts),
            "tolerance_max": max(p["tolerance_max"] for p in parts),
            "neg_count_histogram": {str(k): int(hist[k]) for k in range(hist.size) if hist[k]},
        })
    return out
