"""Adding product states to an NPT state whose PT has K+1 negative eigenvalues.

Mixing in any K product projectors with nonzero weights leaves the state
NPT. With K+1 projectors the result may become PPT.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InsufficientNegatives
from ..sampling import as_seed, complex_normal
from ..states import count_negative, pt_eigvals, pt_spectrum

WEIGHT_RANGE = (1e-3, 1e1)


@dataclass(frozen=True)
class RobustnessReport:
    K: int
    trials: int
    npt_trials: int
    min_neg_count: int
    weakest_min_eig: float
    converse_trials: int
    converse_ppt_found: int
    seed: dict

    @property
    def all_npt(self):
        return self.npt_trials == self.trials

    def to_dict(self):
        return {**self.__dict__, "all_npt": self.all_npt}


def _product_projectors(rng, trials, count, m, n):
    e = complex_normal(rng, (trials, count, m))
    f = complex_normal(rng, (trials, count, n))
    e /= np.linalg.norm(e, axis=-1, keepdims=True)
    f /= np.linalg.norm(f, axis=-1, keepdims=True)
    v = (e[..., :, np.newaxis] * f[..., np.newaxis, :]).reshape(trials, count, m * n)
    return v


def _mix(rho, rng, trials, count, weight_range):
    m, n = rho.dims
    v = _product_projectors(rng, trials, count, m, n)
    lo, hi = np.log(weight_range[0]), np.log(weight_range[1])
    w = np.exp(rng.uniform(lo, hi, size=(trials, count)))
    mats = rho.mat[np.newaxis] + np.einsum("tk,tki,tkj->tij", w, v, v.conj())
    tr = np.trace(mats, axis1=-2, axis2=-1).real
    mats = mats / tr[:, np.newaxis, np.newaxis]
    ev = pt_eigvals(mats, rho.dims)
    counts, _, _ = count_negative(ev, rho.dims.total)
    return counts, ev[:, 0]


def npt_robustness_check(rho, trials=500, s=None, weight_range=WEIGHT_RANGE, converse_trials=None):
    """Mix K random product states into ``rho`` and test that it stays NPT.

    ``K + 1`` is the number of negative PT eigenvalues of ``rho``. Weights
    are log-uniform on ``weight_range``. The converse experiment with
    ``K + 1`` product states is informational only.

    Raises
    ------
    InsufficientNegatives
        If the PT of ``rho`` has fewer than 2 negative eigenvalues.
    """
    seed = as_seed(s)
    rho = rho.normalized()
    k = pt_spectrum(rho).neg_count - 1
    if k < 1:
        raise InsufficientNegatives(f"PT has {k + 1} negative eigenvalue(s); need at least 2")
    rng = seed.generator(0)
    counts, mins = _mix(rho, rng, trials, k, weight_range)
    converse_trials = trials if converse_trials is None else converse_trials
    ppt = 0
    if converse_trials:
        c2, _ = _mix(rho, seed.generator(1), converse_trials, k + 1, weight_range)
        ppt = int((c2 == 0).sum())
    return RobustnessReport(
        K=k,
        trials=trials,
        npt_trials=int((counts >= 1).sum()),
        min_neg_count=int(counts.min()),
        weakest_min_eig=float(mins.max()),
        converse_trials=converse_trials,
        converse_ppt_found=ppt,
        seed=seed.to_dict(),
    )
