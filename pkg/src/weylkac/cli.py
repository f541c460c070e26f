"""Command-line entry point: ``weylkac <command> [options]``.

Exit codes: 0 when every check passes, 1 on a check failure, 2 on bad input.
"""

import argparse
import logging
import os
import sys
from pathlib import Path

import numpy as np

from .checks import TOLERANCES, RunConfig, run_suite
from .numerics import (
    GridError,
    GridFunction2D,
    fourier2d,
    moyal_star,
    moyal_unit,
    operator_trace,
    plancherel_residual,
    weyl_quantize,
    wigner_distribution,
    wigner_recover,
)
from .numerics.fixtures import first_excited, gaussian, ground_state
from .numerics.io import (
    InputError,
    dump_report,
    read_function,
    read_kernel,
    record,
    write_function,
    write_kernel,
)

OUT_ENV = "WEYLKAC_OUT"
OK, FAILED, BAD_INPUT = 0, 1, 2

log = logging.getLogger("weylkac")


class UsageError(Exception):
    pass


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid-n", type=int, default=64)
    common.add_argument("--extent", type=float, default=16.0)
    common.add_argument("--hbar", type=float, default=1.0)
    common.add_argument("--nu", type=float, default=1.0)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help=f"output directory (default ${OUT_ENV} or .)")
    common.add_argument("--filter", default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="weylkac", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("axioms", parents=[common], help="run the symbolic identity catalog")
    a.add_argument("--flip-theta", action="store_true", help="mutation: negate the cochain")

    q = sub.add_parser("quantize", parents=[common], help="phase-space function to kernel")
    q.add_argument("input", nargs="?", help="CSV/JSON function (default: bundled Gaussian)")

    r = sub.add_parser("recover", parents=[common], help="kernel back to a phase-space function")
    r.add_argument("kernel")
    r.add_argument("--reference", help="function to compare the recovery against")

    w = sub.add_parser("wigner", parents=[common], help="Wigner distribution of a state")
    w.add_argument("input", nargs="?", help="wavefunction file (default: bundled state)")
    w.add_argument("--state", choices=("ground", "excited"), default="ground")
    w.add_argument("--chi", help="second wavefunction for the cross distribution")

    s = sub.add_parser("star", parents=[common], help="Moyal star product of two functions")
    s.add_argument("left")
    s.add_argument("right")

    pl = sub.add_parser("plancherel", parents=[common], help="Plancherel residual")
    pl.add_argument("input", nargs="?")

    su = sub.add_parser("suite", parents=[common], help="all acceptance checks")
    su.add_argument("--flip-theta", action="store_true")
    return p


def _split_tolerances(extra):
    tols = {}
    it = iter(extra)
    for tok in it:
        if not tok.startswith("--tol."):
            raise UsageError(f"unrecognized argument {tok}")
        key = tok[len("--tol."):]
        if "=" in key:
            key, val = key.split("=", 1)
        else:
            val = next(it, None)
            if val is None:
                raise UsageError(f"{tok} needs a value")
        if key not in TOLERANCES:
            raise UsageError(f"unknown check {key!r} in {tok}")
        try:
            tols[key] = float(val)
        except ValueError as exc:
            raise UsageError(f"bad tolerance {val!r}") from exc
    return tols


def _config(args, tols):
    nu = args.nu
    try:
        return RunConfig(
            grid_n=args.grid_n, extent=args.extent, hbar=args.hbar, nu=nu, seed=args.seed,
            tolerances=tols, output_path=args.out, flip_theta=getattr(args, "flip_theta", False),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _outdir(args):
    d = Path(args.out or os.environ.get(OUT_ENV) or ".")
    d.mkdir(parents=True, exist_ok=True)
    return d


def _finish(name, records, args, extra=None):
    doc = {"command": name, "records": records, "pass": all(r["pass"] for r in records)}
    if extra:
        doc.update(extra)
    text = dump_report(doc, _outdir(args) / f"{name}_report.json")
    sys.stdout.write(text)
    return OK if doc["pass"] else FAILED


def cmd_axioms(args, cfg):
    from . import cocycle
    from .algebra.catalog import flipped_theta, matches_expectation, verify_all

    ids = [s.strip() for s in args.filter.split(",")] if args.filter else None
    try:
        reports = verify_all(ids, theta=flipped_theta if cfg.flip_theta else cocycle.theta)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    records = []
    for r in reports:
        ok = matches_expectation(r)
        records.append({**r, "check": r["id"], "value": 0 if r["holds"] else 1,
                        "tolerance": 0, "pass": ok})
    bad = [r["id"] for r in records if not r["pass"]]
    if bad:
        print(f"identity {bad[0]} does not match its expectation", file=sys.stderr)
    return _finish("axioms", records, args)


def _function_input(path, cfg):
    if path is None:
        return gaussian(cfg.grid)
    return read_function(path)


def cmd_quantize(args, cfg):
    f = _function_input(args.input, cfg)
    if not isinstance(f, GridFunction2D):
        raise InputError("quantize expects a phase-space function")
    k = weyl_quantize(f, cfg.nu)
    out = _outdir(args)
    write_kernel(k, out / "kernel.csv")
    origin = f.value_at_origin()
    err = abs(operator_trace(k) - origin) / max(1.0, abs(origin))
    return _finish("quantize", [record("trace_vs_origin", err, 1e-8)], args)


def cmd_recover(args, cfg):
    k = read_kernel(args.kernel)
    f = wigner_recover(k, k.nu)
    out = _outdir(args)
    write_function(f, out / "recovered.csv")
    records = []
    if args.reference:
        ref = read_function(args.reference)
        if not isinstance(ref, GridFunction2D) or not ref.grid.compatible(f.grid):
            raise GridError("reference grid differs from the kernel grid")
        err = float(np.linalg.norm(f.values - ref.values) / np.linalg.norm(ref.values))
        records.append(record("round_trip", err, cfg.tol("round_trip")))
    return _finish("recover", records, args)


def cmd_wigner(args, cfg):
    if args.input:
        xi = read_function(args.input)
    else:
        make = ground_state if args.state == "ground" else first_excited
        xi = make(cfg.grid_n, cfg.extent, cfg.hbar)
    chi = read_function(args.chi) if args.chi else xi
    W = wigner_distribution(xi, chi, cfg.hbar)
    write_function(W, _outdir(args) / "wigner.csv")
    records = []
    if chi is xi:
        scale = max(1.0, float(np.abs(W.values).max()))
        records.append(record("reality", float(np.abs(W.values.imag).max()) / scale, 1e-12))
    return _finish("wigner", records, args, {"minimum": float(W.values.real.min())})


def cmd_star(args, cfg):
    F = read_function(args.left)
    G = read_function(args.right)
    P = moyal_star(F, G, cfg.hbar)
    write_function(P, _outdir(args) / "star.csv")
    unit = moyal_unit(F.grid, cfg.hbar)
    err = float(np.abs(moyal_star(F, unit, cfg.hbar).values - F.values).max())
    scale = max(1.0, float(np.abs(F.values).max()))
    return _finish("star", [record("unit_law", err / scale, 1e-10)], args)


def cmd_plancherel(args, cfg):
    f = _function_input(args.input, cfg)
    res = plancherel_residual(f, cfg.nu)
    return _finish(
        "plancherel",
        [record("plancherel", res, cfg.tol("plancherel_gaussian"), relative=res.relative)],
        args,
    )


def cmd_suite(args, cfg):
    only = None
    if args.filter:
        try:
            only = {int(s) for s in args.filter.split(",")}
        except ValueError as exc:
            raise UsageError("suite --filter takes criterion numbers, e.g. 1,4") from exc
    doc = run_suite(cfg, only)
    doc["command"] = "suite"
    doc["config"] = {
        "grid_n": cfg.grid_n, "extent": cfg.extent, "hbar": cfg.hbar, "nu": cfg.nu,
        "seed": cfg.seed, "tolerances": cfg.tolerances,
    }
    text = dump_report(doc, _outdir(args) / "suite_report.json")
    sys.stdout.write(text)
    if doc["failures"]:
        print("failed: " + ", ".join(doc["failures"]), file=sys.stderr)
    return OK if doc["pass"] else FAILED


COMMANDS = {
    "axioms": cmd_axioms,
    "quantize": cmd_quantize,
    "recover": cmd_recover,
    "wigner": cmd_wigner,
    "star": cmd_star,
    "plancherel": cmd_plancherel,
    "suite": cmd_suite,
}


def main(argv=None):
    parser = _parser()
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        cfg = _config(args, _split_tolerances(extra))
        return COMMANDS[args.command](args, cfg)
    except (UsageError, InputError, GridError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
