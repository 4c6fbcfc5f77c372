"""Grid sweeps over the parametric families.

A sweep either enumerates the full Cartesian grid or draws a declared number
of uniform samples from it. Work is split into fixed-size chunks; chunk ``c``
of a sampled sweep draws from ``seed.generator(c)``, so the record stream is
the same for any worker count.
"""

from __future__ import annotations

import csv
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .. import __version__
from ..errors import GridTooLarge
from ..families import cyclic_batch, rho_a_batch
from ..sampling import as_seed
from ..states import BipartiteDims, count_negative, pt_eigvals
from ._parallel import map_tasks

GRID_CAP = 10 ** 6
DEFAULT_CHUNK = 4096

QUARTER_STEPS = (0.0, 0.25, 0.5, 0.75, 1.0)
TENTH_STEPS = (0.2, 0.4, 0.6, 0.8, 1.0)


def family_dims(family, fixed):
    if family == "rho_a":
        n = int(fixed["n"])
        return BipartiteDims(n, n)
    if family == "three_qutrit":
        return BipartiteDims(3, 3)
    if family == "cyclic":
        n = int(fixed["n"])
        return BipartiteDims(int(fixed.get("m") or n), n)
    raise ValueError(f"family {family!r} cannot be swept")


def family_param_count(family, fixed):
    if family == "rho_a":
        return 1
    dims = family_dims(family, fixed)
    return dims.n * (dims.m - 1)


def family_matrices(family, fixed, params):
    """Stack of unnormalized family matrices for flat parameter rows.

    ``rho_a`` takes ``[a]``. ``three_qutrit`` takes ``[a1, a2, b1, b2, c1,
    c2]``. ``cyclic`` takes the weight array flattened row-major.
    """
    params = np.asarray(params)
    dims = family_dims(family, fixed)
    if family == "rho_a":
        return rho_a_batch(dims.n, params[:, 0])
    W = params.reshape(params.shape[0], dims.n, dims.m - 1)
    return cyclic_batch(W, dims.m, dims.n)


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep.

    ``axes`` holds the value list of every flat parameter. ``samples`` set to
    an integer switches from full enumeration to uniform sampling of grid
    points (with replacement).
    """

    family: str
    axes: tuple
    fixed: dict = field(default_factory=dict)
    samples: int | None = None
    keep_eigenvalues: bool = False
    chunk: int = DEFAULT_CHUNK

    def __post_init__(self):
        object.__setattr__(self, "axes", tuple(tuple(float(v) for v in ax) for ax in self.axes))
        k = family_param_count(self.family, self.fixed)
        if len(self.axes) != k:
            raise ValueError(f"{self.family} needs {k} axes, got {len(self.axes)}")

    @classmethod
    def from_dict(cls, d):
        family = d["family"]
        fixed = dict(d.get("params", {}))
        if "axes" in d:
            axes = d["axes"]
        else:
            axes = [d["values"]] * family_param_count(family, fixed)
        return cls(family, axes, fixed, d.get("samples"), bool(d.get("keep_eigenvalues", False)),
                   int(d.get("chunk", DEFAULT_CHUNK)))

    def to_dict(self):
        return {"family": self.family, "params": self.fixed, "axes": [list(a) for a in self.axes],
                "samples": self.samples, "keep_eigenvalues": self.keep_eigenvalues, "chunk": self.chunk}

    @property
    def dims(self):
        return family_dims(self.family, self.fixed)

    @property
    def grid_size(self):
        return math.prod(len(a) for a in self.axes)

    @property
    def n_points(self):
        return self.grid_size if self.samples is None else int(self.samples)


@dataclass(frozen=True)
class SweepRecord:
    """One evaluated grid point.

    ``neg_count`` and ``eigenvalues`` refer to the unnormalized family
    matrix of trace ``trace``; ``negativity`` is that of the normalized
    state.
    """

    point_index: int
    params: tuple
    neg_count: int
    negativity: float
    trace: float
    tolerance: float
    eigenvalues: tuple | None = None


def three_qutrit_grid_spec():
    """Full grid ``{0, 1/4, 1/2, 3/4, 1}^6`` of the three-qutrit family."""
    return SweepSpec("three_qutrit", [QUARTER_STEPS] * 6)


def cyclic4_sample_spec(samples=10 ** 5):
    """``samples`` uniform draws from ``{0.2, ..., 1.0}^12`` of the 4 x 4 cyclic family."""
    return SweepSpec("cyclic", [TENTH_STEPS] * 12, {"n": 4}, samples=samples)


def _chunk_points(spec, seed, c):
    start = c * spec.chunk
    stop = min(start + spec.chunk, spec.n_points)
    sizes = [len(a) for a in spec.axes]
    if spec.samples is None:
        idx = np.stack(np.unravel_index(np.arange(start, stop), sizes), axis=1)
    else:
        rng = seed.generator(c)
        idx = np.stack([rng.integers(0, s, size=stop - start) for s in sizes], axis=1)
    values = [np.asarray(a) for a in spec.axes]
    params = np.stack([values[k][idx[:, k]] for k in range(len(sizes))], axis=1)
    return start, params


def _run_chunk(task):
    spec, seed, c = task
    start, params = _chunk_points(spec, seed, c)
    dims = spec.dims
    mats = family_matrices(spec.family, spec.fixed, params)
    tr = np.trace(mats, axis1=-2, axis2=-1).real
    ev = pt_eigvals(mats, dims)
    counts, negs, tau = count_negative(ev, dims.total)
    out = []
    for j in range(params.shape[0]):
        out.append(SweepRecord(
            start + j,
            tuple(float(x) for x in params[j]),
            int(counts[j]),
            float(negs[j] / tr[j]),
            float(tr[j]),
            float(tau[j]),
            tuple(float(x) for x in ev[j]) if spec.keep_eigenvalues else None,
        ))
    return out


def sweep(spec, s=None, workers=1, cap=GRID_CAP):
    """Evaluate every point of ``spec``; yields :class:`SweepRecord` in index order.

    Raises
    ------
    GridTooLarge
        Full enumeration of more than ``cap`` points was requested.
    """
    if spec.samples is None and spec.grid_size > cap:
        raise GridTooLarge(f"grid has {spec.grid_size} points (cap {cap}); declare a sample count")
    seed = as_seed(s)
    n_chunks = -(-spec.n_points // spec.chunk)
    tasks = [(spec, seed, c) for c in range(n_chunks)]
    for chunk in map_tasks(_run_chunk, tasks, workers):
        yield from chunk


def histogram(records):
    """``{neg_count: occurrences}`` sorted by count."""
    h = Counter(r.neg_count for r in records)
    return dict(sorted(h.items()))


def summary(records, spec, s=None):
    """Reproducibility metadata and the negative-count histogram (plot data)."""
    records = list(records)
    dims = spec.dims
    return {
        "tool_version": __version__,
        "seed": as_seed(s).to_dict(),
        "spec": spec.to_dict(),
        "dims": {"m": dims.m, "n": dims.n},
        "points": len(records),
        "tolerance_rule": "mn*eps*max(1,max|lambda|)",
        "tolerance": max((r.tolerance for r in records), default=0.0),
        "neg_count_histogram": {str(k): v for k, v in histogram(records).items()},
    }


def write_records_csv(records, path, n_params):
    """CSV with columns ``point_index, param_0.., neg_count, negativity``."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\r\n")
        w.writerow(["point_index"] + [f"param_{k}" for k in range(n_params)] + ["neg_count", "negativity"])
        for r in records:
            w.writerow([r.point_index] + [repr(x) for x in r.params] + [r.neg_count, repr(r.negativity)])


def read_records_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    k = len(header) - 3
    return [(int(r[0]), tuple(float(x) for x in r[1:1 + k]), int(r[1 + k]), float(r[2 + k])) for r in body]
