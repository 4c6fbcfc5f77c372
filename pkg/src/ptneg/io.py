"""JSON state files: ``{"m", "n", "kind", "data"}`` with ``[re, im]`` pairs."""

from __future__ import annotations

import json
import os

import numpy as np

from . import __version__
from .errors import DimensionMismatch
from .states import DensityMatrix, PureState, as_dims


def _pairs(a):
    a = np.asarray(a, dtype=complex).reshape(-1)
    return [[float(z.real), float(z.imag)] for z in a]


def _unpairs(data):
    a = np.asarray(data, dtype=float)
    if a.ndim != 2 or a.shape[1] != 2:
        raise DimensionMismatch("state data must be a list of [re, im] pairs")
    return a[:, 0] + 1j * a[:, 1]


def state_to_dict(state, meta=None):
    """Serializable mapping for a :class:`DensityMatrix` or :class:`PureState`."""
    if isinstance(state, DensityMatrix):
        kind, data = "density", state.mat
    elif isinstance(state, PureState):
        kind, data = "pure", state.amplitudes
    else:
        raise TypeError(f"cannot serialize {type(state).__name__}")
    out = {"m": state.dims.m, "n": state.dims.n, "kind": kind, "data": _pairs(data)}
    out["meta"] = {"tool_version": __version__, **(meta or {})}
    return out


def state_from_dict(d, check=True):
    dims = as_dims((int(d["m"]), int(d["n"])))
    z = _unpairs(d["data"])
    kind = d.get("kind", "density")
    if kind == "pure":
        return PureState(z, dims)
    if kind == "density":
        N = dims.total
        if z.size != N * N:
            raise DimensionMismatch(f"density data has {z.size} entries, expected {N * N}")
        return DensityMatrix(z.reshape(N, N), dims, check=check)
    raise ValueError(f"unknown state kind {kind!r}")


def as_density(state):
    return state.density() if isinstance(state, PureState) else state


def basis_to_dict(vectors, dims, meta=None):
    dims = as_dims(dims)
    V = np.asarray(vectors, dtype=complex)
    return {
        "m": dims.m,
        "n": dims.n,
        "kind": "basis",
        "data": [_pairs(V[:, k]) for k in range(V.shape[1])],
        "meta": {"tool_version": __version__, **(meta or {})},
    }


def basis_from_dict(d):
    """Return ``(vectors, dims)``, vectors as the columns of an array."""
    dims = as_dims((int(d["m"]), int(d["n"])))
    cols = [_unpairs(v) for v in d["data"]]
    return np.stack(cols, axis=1), dims


def dump_json(obj, path):
    """Write ``obj`` as JSON. Floats use the shortest repr that round-trips."""
    text = json.dumps(obj, indent=1, allow_nan=True)
    if path in (None, "-"):
        print(text)
        return
    d = os.path.dirname(os.fspath(path))
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "w") as fh:
        fh.write(text + "\n")


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def save_state(state, path, meta=None):
    dump_json(state_to_dict(state, meta), path)


def load_state(path, check=True):
    return state_from_dict(load_json(path), check=check)
