"""Command-line interface: ``ptneg <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import os
import sys

from . import __version__
from .analysis import (
    SweepSpec,
    bound_report,
    find_product_vector,
    npt_robustness_check,
    search_max_neg,
    sweep,
)
from .analysis.search import STRATEGIES
from .analysis.sweep import summary, write_records_csv
from .families import build_from_spec, spectrum_from_spec
from .io import as_density, basis_from_dict, dump_json, load_json, load_state, save_state, state_to_dict
from .sampling import SeedSpec, ginibre_mixed, haar_pure, random_product_state
from .states import pt_spectrum


def _meta(seed=None, dims=None, tolerance=None):
    out = {"tool_version": __version__}
    if seed is not None:
        out["seed"] = seed.to_dict()
    if dims is not None:
        out["dims"] = {"m": dims.m, "n": dims.n}
    if tolerance is not None:
        out["tolerance"] = tolerance
    return out


def _spectrum_dict(spec, dims, source=None, trace=None):
    out = {
        **_meta(dims=dims, tolerance=spec.tolerance),
        "eigenvalues": spec.eigenvalues.tolist(),
        "neg_count": spec.neg_count,
        "negativity": spec.negativity,
    }
    if trace is not None:
        out["trace"] = trace
    if source is not None:
        out["source"] = source
    return out


def _emit_spectrum(d, as_csv, out=None):
    if not as_csv:
        dump_json(d, out)
        return
    fh = open(out, "w", newline="") if out else sys.stdout
    try:
        w = csv.writer(fh, lineterminator="\r\n")
        w.writerow(["index", "eigenvalue"])
        for i, v in enumerate(d["eigenvalues"]):
            w.writerow([i, repr(v)])
    finally:
        if out:
            fh.close()


def cmd_spectrum(args):
    rho = as_density(load_state(args.infile))
    if args.normalize:
        rho = rho.normalized()
    spec = pt_spectrum(rho)
    d = _spectrum_dict(spec, rho.dims, trace=rho.trace)
    d["normalized"] = bool(args.normalize)
    _emit_spectrum(d, args.csv, args.out)
    return 0


def cmd_family(args):
    fspec = load_json(args.spec)
    rho = build_from_spec(fspec)
    if args.out:
        save_state(rho, args.out, {"family": fspec})
    if args.spectrum:
        spec, source = spectrum_from_spec(fspec)
        _emit_spectrum(_spectrum_dict(spec, rho.dims, source, rho.trace), args.csv)
    elif not args.out:
        dump_json(state_to_dict(rho, {"family": fspec}), None)
    return 0


def cmd_verify(args):
    rho = as_density(load_state(args.infile))
    rep = bound_report(rho)
    dump_json({**_meta(dims=rep.dims, tolerance=rep.tolerance), **rep.to_dict()}, args.out)
    return 0 if rep.within_bounds else 1


def cmd_sweep(args):
    spec = SweepSpec.from_dict(load_json(args.spec))
    seed = SeedSpec(args.seed, args.stream)
    records = list(sweep(spec, seed, workers=args.workers))
    write_records_csv(records, args.out, len(spec.axes))
    summ = summary(records, spec, seed)
    dump_json(summ, args.out + ".meta.json")
    if args.histogram:
        dump_json(summ, args.histogram)
    return 0


def cmd_search(args):
    seed = SeedSpec(args.seed, args.stream)
    res = search_max_neg((args.m, args.n), args.strategy, args.budget, seed, workers=args.workers)
    dump_json(res.to_dict(), args.out)
    if res.best_count > res.dims.bound:
        return 1
    return 0


def cmd_robustness(args):
    rho = as_density(load_state(args.infile))
    seed = SeedSpec(args.seed, args.stream)
    rep = npt_robustness_check(rho, args.trials, seed)
    dump_json({**_meta(seed, rho.dims), **rep.to_dict()}, args.out)
    return 0 if rep.all_npt else 1


def cmd_product_vector(args):
    vectors, dims = basis_from_dict(load_json(args.infile))
    seed = SeedSpec(args.seed, args.stream)
    res = find_product_vector(vectors, dims, args.restarts, args.iters, args.tol, seed)
    dump_json({**_meta(seed, dims, args.tol), **res.to_dict()}, args.out)
    return 0 if res.success else 2


_SAMPLERS = {
    "haar": lambda dims, rank, s: haar_pure(dims, s),
    "ginibre": lambda dims, rank, s: ginibre_mixed(dims, rank, s),
    "product": lambda dims, rank, s: random_product_state(dims, s),
}


def cmd_sample(args):
    os.makedirs(args.out, exist_ok=True)
    streams = args.streams if args.streams is not None else [args.stream]
    width = max(4, len(str(args.count - 1)))
    for st in streams:
        base = SeedSpec(args.seed, st)
        for i in range(args.count):
            state = _SAMPLERS[args.kind]((args.m, args.n), args.rank, base.generator(i))
            name = f"{args.kind}_s{st}_{i:0{width}d}.json" if len(streams) > 1 else f"{args.kind}_{i:0{width}d}.json"
            meta = {"seed": {**base.to_dict(), "index": i}, "kind": args.kind, "rank": args.rank}
            save_state(state, os.path.join(args.out, name), meta)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="ptneg", description=__doc__)
    p.add_argument("--version", action="version", version=f"ptneg {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def seeded(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--stream", type=int, default=0)

    sp = sub.add_parser("spectrum", help="PT spectrum of a state file")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--normalize", action="store_true")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--csv", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("family", help="build a named state family")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--out")
    sp.add_argument("--spectrum", action="store_true")
    sp.add_argument("--csv", action="store_true")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("verify", help="check both PT eigenvalue bounds; exit 0 iff within bounds")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="grid sweep over a family")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--histogram")
    sp.add_argument("--workers", type=int, default=1)
    seeded(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("search", help="search for many negative PT eigenvalues")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--strategy", choices=STRATEGIES, default="random")
    sp.add_argument("--budget", type=int, default=10 ** 4)
    sp.add_argument("--out")
    sp.add_argument("--workers", type=int, default=1)
    seeded(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("robustness", help="mix product states into an NPT state")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--trials", type=int, default=500)
    sp.add_argument("--out")
    seeded(sp)
    sp.set_defaults(func=cmd_robustness)

    sp = sub.add_parser("product-vector", help="find a product vector in a subspace")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--restarts", type=int, default=20)
    sp.add_argument("--iters", type=int, default=200)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--out")
    seeded(sp)
    sp.set_defaults(func=cmd_product_vector)

    sp = sub.add_parser("sample", help="write random states to a directory")
    sp.add_argument("--kind", choices=sorted(_SAMPLERS), required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--rank", type=int)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--streams", type=int, nargs="+")
    sp.add_argument("--out", required=True)
    seeded(sp)
    sp.set_defaults(func=cmd_sample)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
