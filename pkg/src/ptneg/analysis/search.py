"""Search for states whose partial transpose has many negative eigenvalues.

Strategies
----------
random
    Ginibre states with the rank drawn uniformly from ``1..mn``.
family-grid
    Grid points of the cyclic family on ``C^m (x) C^n`` (for ``3 x 3`` this is
    the three-qutrit family). Enumerated when the grid fits in the budget,
    uniformly sampled otherwise.
local-refine
    A quarter of the budget on ``family-grid``, the rest on Gaussian
    perturbations of the incumbent weights with a geometrically shrinking
    step.

Candidates are ranked by ``(neg_count, negativity)`` and then by the lower
evaluation index, so the result does not depend on the worker count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .. import __version__
from ..io import state_to_dict
from ..sampling import as_seed, ginibre_batch
from ..states import BipartiteDims, DensityMatrix, as_dims, count_negative, pt_eigvals, pt_spectrum
from ._parallel import map_tasks
from .sweep import QUARTER_STEPS, TENTH_STEPS, SweepSpec, _chunk_points, family_matrices

STRATEGIES = ("random", "family-grid", "local-refine")
BATCH = 1024
RECT_VALUES = (-1.0, -0.5, 0.5, 1.0)


@dataclass(frozen=True, eq=False)
class SearchResult:
    dims: BipartiteDims
    strategy: str
    best_count: int
    best_negativity: float
    best_params: tuple | None
    best_state: DensityMatrix
    samples_evaluated: int
    seed: object
    elapsed: float

    def to_dict(self):
        return {
            "tool_version": __version__,
            "m": self.dims.m,
            "n": self.dims.n,
            "bound": self.dims.bound,
            "strategy": self.strategy,
            "best_count": self.best_count,
            "best_negativity": self.best_negativity,
            "best_params": None if self.best_params is None else list(self.best_params),
            "samples_evaluated": self.samples_evaluated,
            "seed": self.seed.to_dict(),
            "elapsed_seconds": self.elapsed,
            "tolerance_rule": "mn*eps*max(1,max|lambda|)",
            "best_state": state_to_dict(self.best_state),
        }


class _Incumbent:
    def __init__(self):
        self.key = (-1, -np.inf, 0)
        self.mat = None
        self.params = None

    def offer(self, mats, counts, negs, index0, params=None):
        if len(counts) == 0:
            return False
        order = np.lexsort((-negs, -counts))
        j = int(order[0])
        key = (int(counts[j]), float(negs[j]), -(index0 + j))
        if key > self.key:
            self.key = key
            self.mat = mats[j]
            self.params = None if params is None else params[j]
            return True
        return False


def _evaluate(mats, dims):
    tr = np.trace(mats, axis1=-2, axis2=-1).real
    counts, negs, _ = count_negative(pt_eigvals(mats, dims), dims.total)
    return counts, negs / tr


def _random_chunk(task):
    m, n, seed, c, size = task
    dims = BipartiteDims(m, n)
    rng = seed.generator(0, c)
    mats = ginibre_batch(dims, size, rng.integers(1, dims.total + 1, size=size), rng)
    counts, negs = _evaluate(mats, dims)
    inc = _Incumbent()
    inc.offer(mats, counts, negs, c * BATCH)
    return inc.key, inc.mat


def grid_spec_for(dims, budget):
    """Cyclic-family grid used by ``family-grid`` for these dims."""
    dims = as_dims(dims)
    if (dims.m, dims.n) == (3, 3):
        values = QUARTER_STEPS
    elif dims.m == dims.n:
        values = TENTH_STEPS
    else:
        values = RECT_VALUES
    fixed = {"n": dims.n, "m": dims.m}
    k = dims.n * (dims.m - 1)
    spec = SweepSpec("cyclic", [values] * k, fixed, chunk=BATCH)
    if spec.grid_size > budget:
        spec = SweepSpec("cyclic", [values] * k, fixed, samples=budget, chunk=BATCH)
    return spec


def _grid_chunk(task):
    spec, seed, c = task
    start, params = _chunk_points(spec, seed, c)
    mats = family_matrices(spec.family, spec.fixed, params)
    counts, negs = _evaluate(mats, spec.dims)
    inc = _Incumbent()
    inc.offer(mats, counts, negs, start, params)
    return inc.key, inc.mat, inc.params


def _merge(results, inc):
    for res in results:
        key, mat = res[0], res[1]
        if key > inc.key:
            inc.key, inc.mat = key, mat
            inc.params = res[2] if len(res) > 2 else None
    return inc


def _search_random(dims, budget, seed, workers):
    tasks = [(dims.m, dims.n, seed, c, min(BATCH, budget - c * BATCH)) for c in range(-(-budget // BATCH))]
    return _merge(map_tasks(_random_chunk, tasks, workers), _Incumbent()), budget


def _search_grid(dims, budget, seed, workers):
    spec = grid_spec_for(dims, budget)
    tasks = [(spec, seed, c) for c in range(-(-spec.n_points // spec.chunk))]
    return _merge(map_tasks(_grid_chunk, tasks, workers), _Incumbent()), spec.n_points


def _refine(inc, dims, budget, seed, step0=0.3, step1=1e-3):
    fixed = {"n": dims.n, "m": dims.m}
    rounds = max(1, -(-budget // BATCH))
    rng = seed.generator(2)
    used = 0
    for r in range(rounds):
        size = min(BATCH, budget - used)
        step = step0 * (step1 / step0) ** (r / max(1, rounds - 1))
        base = np.real(np.asarray(inc.params, dtype=float))
        params = base[np.newaxis, :] + step * rng.standard_normal((size, base.size))
        mats = family_matrices("cyclic", fixed, params)
        counts, negs = _evaluate(mats, dims)
        # later rounds carry larger indices, so ties keep the earlier incumbent
        inc.offer(mats, counts, negs, 10 ** 12 + used, params)
        used += size
    return inc, used


def search_max_neg(dims, strategy="random", budget=10 ** 4, s=None, workers=1):
    """Maximize the number of negative PT eigenvalues over a candidate pool.

    Returns a :class:`SearchResult` whose ``best_state`` is normalized and
    whose ``best_count`` is recomputed from that exact matrix, so reloading
    the serialized state reproduces it.
    """
    dims = as_dims(dims)
    seed = as_seed(s)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    budget = max(1, int(budget))
    t0 = time.perf_counter()
    use_family = min(dims.m, dims.n) >= 2
    if strategy == "random" or not use_family:
        inc, used = _search_random(dims, budget, seed, workers)
    elif strategy == "family-grid":
        inc, used = _search_grid(dims, budget, seed, workers)
    else:
        first = max(1, budget // 4)
        inc, used = _search_grid(dims, first, seed, workers)
        inc, more = _refine(inc, dims, budget - used, seed)
        used += more
    mat = inc.mat / np.trace(inc.mat).real
    state = DensityMatrix(mat, dims)
    spec = pt_spectrum(state)
    params = None if inc.params is None else tuple(float(x) for x in np.real(inc.params))
    return SearchResult(dims, strategy, spec.neg_count, spec.negativity, params, state, used, seed,
                        time.perf_counter() - t0)
