"""Command-line interface.

Subcommands::

    rmt sample    --ensemble NAME --n N [--p P --rho R --alpha A --profile PR]
                  --seed S --out FILE
    rmt spectrum  --in FILE [--singular] [--normalize] --out FILE
    rmt verify    LAW [param options] [--trials T] [--seed S]
                  [--threads K] [--report FILE] [--csv FILE]
    rmt plot      {scatter|hist} --in FILE [--overlay SPEC] [--law NAME]
                  [--bins B] --out FILE
    rmt laws      dump --law NAME [--alpha A] --grid G --out FILE

Exit codes: 0 all criteria passed, 1 a verification criterion failed,
2 usage error (bad arguments, unknown names, resource-limit refusals),
3 numerical failure inside a sampler or solver.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

import numpy as np

from . import emit, ensembles, harness, laws, spectra
from .entries import EntryDistribution
from .matrixio import DenseMatrix, read_matrix, write_matrix
from .rng import RngStream

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rmt",
        description="Random-matrix laboratory: samplers, limit laws, verification.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_sample = sub.add_parser("sample", help="draw one matrix and write it to disk")
    p_sample.add_argument("--ensemble", required=True,
                          choices=["gue", "goe", "wigner_rademacher", "wishart",
                                   "ginibre", "ginibre_real", "iid_rademacher",
                                   "elliptical", "haar_unitary", "haar_orthogonal",
                                   "prescribed"])
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--p", type=int, default=None, help="rows for wishart")
    p_sample.add_argument("--rho", type=float, default=0.0, help="elliptical correlation")
    p_sample.add_argument("--profile", default="linear",
                          help="singular-value profile: linear | gapped | "
                               "path to a CSV file of values")
    p_sample.add_argument("--seed", type=int, default=harness.DEFAULT_MASTER_SEED)
    p_sample.add_argument("--out", required=True)

    p_spec = sub.add_parser("spectrum", help="eigen/singular decomposition of a stored matrix")
    p_spec.add_argument("--in", dest="infile", required=True)
    p_spec.add_argument("--singular", action="store_true",
                        help="singular values instead of eigenvalues")
    p_spec.add_argument("--normalize", action="store_true",
                        help="apply the 1/√n edge normalization")
    p_spec.add_argument("--out", required=True, help="CSV of the empirical measure")

    p_verify = sub.add_parser("verify", help="run a Monte Carlo verification suite")
    p_verify.add_argument("law", choices=["semicircle", "mp", "quarter_circle",
                                          "circular", "elliptical", "single_ring",
                                          "rigidity", "tw", "gumbel", "hard_edge",
                                          "counting"])
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--p", type=int, default=None)
    p_verify.add_argument("--alpha", type=float, default=None)
    p_verify.add_argument("--rho", type=float, default=None)
    p_verify.add_argument("--profile", default=None)
    p_verify.add_argument("--epsilon", type=float, default=None)
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=harness.DEFAULT_MASTER_SEED)
    p_verify.add_argument("--threads", type=int, default=None)
    p_verify.add_argument("--report", default=None, help="write the JSON report here")
    p_verify.add_argument("--csv", default=None, help="write the CSV report here")

    p_plot = sub.add_parser("plot", help="render a stored matrix's spectrum as SVG")
    p_plot.add_argument("kind", choices=["scatter", "hist"])
    p_plot.add_argument("--in", dest="infile", required=True)
    p_plot.add_argument("--overlay", action="append", default=[],
                        help="circle:R | ellipse:RHO | annulus:A,B (scatter only)")
    p_plot.add_argument("--law", default=None,
                        help="overlay law for hist: semicircle | quarter_circle | mp")
    p_plot.add_argument("--alpha", type=float, default=1.0, help="MP aspect ratio")
    p_plot.add_argument("--bins", type=int, default=None)
    p_plot.add_argument("--singular", action="store_true")
    p_plot.add_argument("--normalize", action="store_true")
    p_plot.add_argument("--out", required=True)

    p_laws = sub.add_parser("laws", help="law utilities")
    laws_sub = p_laws.add_subparsers(dest="laws_command", required=True)
    p_dump = laws_sub.add_parser("dump", help="tabulate a law's density and CDF as CSV")
    p_dump.add_argument("--law", required=True,
                        choices=["semicircle", "quarter_circle", "mp", "gumbel",
                                 "tracy_widom"])
    p_dump.add_argument("--alpha", type=float, default=1.0)
    p_dump.add_argument("--grid", type=int, default=512)
    p_dump.add_argument("--out", required=True)

    return top


def _cmd_sample(args) -> int:
    rng = RngStream(args.seed, 0)
    name, n = args.ensemble, args.n
    if name == "gue":
        m = ensembles.sample_gue(n, rng)
    elif name == "goe":
        m = ensembles.sample_goe(n, rng)
    elif name == "wigner_rademacher":
        rad = EntryDistribution.rademacher()
        m = ensembles.sample_wigner(n, rad, rad, "real", rng)
    elif name == "wishart":
        p = args.p if args.p is not None else n
        m = ensembles.sample_wishart(p, n, None, rng)
    elif name == "ginibre":
        m = ensembles.sample_ginibre(n, "complex", rng)
    elif name == "ginibre_real":
        m = ensembles.sample_ginibre(n, "real", rng)
    elif name == "iid_rademacher":
        m = ensembles.sample_iid(n, EntryDistribution.rademacher(), rng)
    elif name == "elliptical":
        m = ensembles.sample_elliptical(n, args.rho, None, rng)
    elif name == "haar_unitary":
        m = ensembles.sample_haar_unitary(n, rng)
    elif name == "haar_orthogonal":
        m = ensembles.sample_haar_orthogonal(n, rng)
    elif name == "prescribed":
        spec = args.profile
        if os.path.isfile(spec):
            values = np.loadtxt(spec, delimiter=",", ndmin=1).ravel()
            profile = harness._profile_array({"profile": values.tolist()}, n)
        else:
            profile = harness._profile_array({"profile": spec}, n)
        m = ensembles.sample_prescribed_singular(profile, rng)
    else:  # pragma: no cover - argparse already constrains choices
        raise ValueError(name)
    write_matrix(m, args.out)
    print(f"wrote {m.rows}x{m.cols} {m.scalar_field} matrix to {args.out}")
    return 0


def _load_measure(infile: str, singular: bool, normalize: bool):
    with open(infile) as fh:
        first = fh.readline()
    if not first.startswith("rmt-matrix"):
        return _read_measure_csv(infile)
    m = read_matrix(infile)
    if singular:
        spec = spectra.singular_values(m)
    elif m.is_square and _is_hermitian(m):
        spec = spectra.eigvals_hermitian(m)
    else:
        spec = spectra.eigvals_general(m)
    if normalize:
        spec = spec.scaled(1.0 / np.sqrt(m.cols))
    return spectra.empirical_measure(spec)


def _read_measure_csv(infile: str):
    """Re-read an empirical-measure CSV (``index,value`` or ``index,re,im``)."""
    data = np.loadtxt(infile, delimiter=",", skiprows=1, ndmin=2)
    if data.shape[1] == 2:
        return spectra.EmpiricalMeasure(data[:, 1])
    if data.shape[1] == 3:
        return spectra.EmpiricalMeasure(data[:, 1] + 1j * data[:, 2])
    raise ValueError(f"{infile}: not a matrix file or an empirical-measure CSV")


def _is_hermitian(m: DenseMatrix) -> bool:
    return bool(np.allclose(m.array, np.conj(m.array.T), atol=1e-12))


def _cmd_spectrum(args) -> int:
    mu = _load_measure(args.infile, args.singular, args.normalize)
    emit.emit_csv(mu, args.out)
    print(f"wrote {mu.n} spectrum points to {args.out}")
    return 0


def _cmd_verify(args) -> int:
    kw = {"master_seed": args.seed, "threads": args.threads}
    if args.trials is not None:
        kw["trials"] = args.trials

    law = args.law
    if law == "semicircle":
        report = harness.verify_semicircle(n=args.n or 1000, **kw)
    elif law == "mp":
        report = harness.verify_mp(alpha=args.alpha if args.alpha is not None else 1.0,
                                   p=args.p or 500, **kw)
    elif law == "quarter_circle":
        report = harness.verify_quarter_circle(n=args.n or 1000, **kw)
    elif law == "circular":
        report = harness.verify_circular(n=args.n or 1000, **kw)
    elif law == "elliptical":
        report = harness.verify_elliptical(
            rho=args.rho if args.rho is not None else 0.5, n=args.n or 1000, **kw)
    elif law == "single_ring":
        report = harness.verify_single_ring(profile=args.profile or "linear",
                                            n=args.n or 1000, **kw)
    elif law == "rigidity":
        report = harness.verify_rigidity(**kw)
    elif law == "tw":
        report = harness.verify_tw(n=args.n or 200, **kw)
    elif law == "gumbel":
        report = harness.verify_gumbel(n=args.n or 500, **kw)
    elif law == "hard_edge":
        report = harness.verify_hard_edge(
            alpha=args.alpha if args.alpha is not None else 0.25,
            p=args.p or 500, **kw)
    elif law == "counting":
        kw.setdefault("trials", 50)
        report = harness.counting_local(
            n=args.n or 400,
            epsilon=args.epsilon if args.epsilon is not None else 0.4, **kw)
    else:  # pragma: no cover
        raise ValueError(law)

    if args.report:
        emit.emit_json(report, args.report)
    if args.csv:
        emit.emit_csv(report, args.csv)
    for crit in report.criteria:
        status = "PASS" if crit["passed"] else "FAIL"
        if crit["comparator"] == "report":
            status = "INFO"
        print(f"[{status}] {crit['name']} = {crit['value']:.6g} "
              f"{crit['comparator']} {crit['threshold']}")
    print(f"verdict: {'PASS' if report.verdict else 'FAIL'} "
          f"(wall {report.wall_time:.1f}s)")
    return 0 if report.verdict else 1


def _parse_overlay(spec_str: str):
    kind, _, rest = spec_str.partition(":")
    if kind == "circle":
        return ("circle", float(rest))
    if kind == "ellipse":
        return ("ellipse", float(rest))
    if kind == "annulus":
        a, b = rest.split(",")
        return ("annulus", (float(a), float(b)))
    raise ValueError(f"unknown overlay {spec_str!r} "
                     "(expected circle:R, ellipse:RHO, or annulus:A,B)")


def _law_by_name(name: str, alpha: float):
    if name == "semicircle":
        return laws.semicircle()
    if name == "quarter_circle":
        return laws.quarter_circle()
    if name == "mp":
        return laws.marchenko_pastur(alpha)
    if name == "gumbel":
        return laws.gumbel_law()
    if name == "tracy_widom":
        return laws.tracy_widom_law()
    raise ValueError(f"unknown law {name!r}")


def _cmd_plot(args) -> int:
    mu = _load_measure(args.infile, args.singular, args.normalize)
    if args.kind == "scatter":
        overlays = [_parse_overlay(s) for s in args.overlay]
        emit.emit_svg_scatter(mu, overlays=overlays, path=args.out)
    else:
        law = _law_by_name(args.law, args.alpha) if args.law else None
        emit.emit_svg_histogram(mu, law=law, bins=args.bins, path=args.out)
    print(f"wrote {args.out}")
    return 0


def _cmd_laws(args) -> int:
    law = _law_by_name(args.law, args.alpha)
    emit.emit_csv(emit.LawTable(law, grid=args.grid), args.out)
    print(f"wrote {args.grid}-point table for {law.name} to {args.out}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sample":
            return _cmd_sample(args)
        if args.command == "spectrum":
            return _cmd_spectrum(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "plot":
            return _cmd_plot(args)
        if args.command == "laws":
            return _cmd_laws(args)
        parser.error(f"unknown command {args.command!r}")
    except (harness.ResourceLimitError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, RuntimeError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 2  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
