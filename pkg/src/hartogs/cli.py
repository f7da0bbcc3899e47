"""Command-line front end.

Subcommands map one-to-one onto the library layers:

    kernel          kernel values as CSV rows (nu, z1, z2, w1, w2, re, im)
    norm            coefficient-space norms of a Laurent polynomial
    project         weighted Bergman projection of a mixed polynomial
    szego           Szego projection (coefficient or FFT grid mode)
    critical-range  the L^p boundedness interval of P_nu
    scan-blowup     endpoint blow-up scan, CSV (epsilon, integral, slope)
    isometry        the three re-indexing isometries, forward or inverse
    verify          cross-validation suites, CSV + summary table

Exit codes: 0 success, 1 I/O error, 2 validation error, 3 verification
failure.  All numeric output uses 12 significant digits; identical
configuration and seed produce byte-identical output.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import coeffspace, isometries, kernels, projections, verify
from .coeffspace import LaurentCoeffs, MixedPoly, TorusSeries
from .geometry import HartogsPoint
from .specfun import DomainError

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_VERIFY = 3


def _fmt(x):
    return f"{x:.12g}"


def _fmt_complex(z):
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _parse_complex(text):
    try:
        if "," in text:
            re, im = text.split(",")
            return complex(float(re), float(im))
        return complex(text)
    except ValueError as exc:
        raise DomainError(f"cannot parse complex number {text!r}") from exc


def _default_order():
    raw = os.environ.get("HARTOGS_QUAD_ORDER")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"HARTOGS_QUAD_ORDER must be an integer, got {raw!r}") from exc


def _read_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _write_json(path, obj):
    _write_text(path, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _cmd_kernel(args):
    rows = ["nu,z1,z2,w1,w2,re,im"]
    if args.infile:
        pairs = [
            (HartogsPoint.from_json(rec["z"]), HartogsPoint.from_json(rec["w"]))
            for rec in _read_json(args.infile)
        ]
    else:
        if None in (args.z1, args.z2, args.w1, args.w2):
            raise DomainError("kernel needs either --in or all of --z1 --z2 --w1 --w2")
        z = HartogsPoint(_parse_complex(args.z1), _parse_complex(args.z2))
        w = HartogsPoint(_parse_complex(args.w1), _parse_complex(args.w2))
        pairs = [(z, w)]
    for z, w in pairs:
        val = kernels.kernel(args.nu, z, w)
        rows.append(
            ",".join(
                [
                    _fmt(args.nu),
                    _fmt_complex(z.z1),
                    _fmt_complex(z.z2),
                    _fmt_complex(w.z1),
                    _fmt_complex(w.z2),
                    _fmt(val.real),
                    _fmt(val.imag),
                ]
            )
        )
    _write_text(args.out, "\n".join(rows) + "\n")
    return EXIT_OK


_NORM_SPACES = ("bergman", "hardy", "dirichlet", "weighted-dirichlet", "star", "sharp")


def _cmd_norm(args):
    f = LaurentCoeffs.from_json(_read_json(args.infile))
    space = args.space
    if space in ("bergman", "weighted-dirichlet", "star") and args.nu is None:
        raise DomainError(f"norm --space {space} requires --nu")
    if space == "bergman":
        val = coeffspace.bergman_norm_sq(args.nu, f)
        label = "bergman_norm_sq"
    elif space == "hardy":
        val = coeffspace.hardy_norm_sq(f)
        label = "hardy_norm_sq"
    elif space == "dirichlet":
        val = coeffspace.dirichlet_norm_sq(f)
        label = "dirichlet_norm_sq"
    elif space == "weighted-dirichlet":
        val = coeffspace.weighted_dirichlet_norm_sq(args.nu, f)
        label = "weighted_dirichlet_norm_sq"
    elif space == "star":
        val = coeffspace.star_norm(args.nu, f)
        label = "star_norm"
    else:
        val = coeffspace.star_norm(-2.0, f)
        label = "sharp_norm"
    _write_text(args.out, f"{label} {_fmt(val)}\n")
    return EXIT_OK


def _cmd_project(args):
    if not args.nu > -1.0:
        raise DomainError(f"Bergman projection requires nu > -1, got {args.nu}")
    order = _default_order()
    if order is not None:
        projections.projection_self_test(args.nu, radial_order=order, angular_count=order + 1)
    else:
        projections.projection_self_test(args.nu)
    f = MixedPoly.from_json(_read_json(args.infile))
    out = projections.project_bergman(args.nu, f)
    _write_json(args.out, out.to_json())
    return EXIT_OK


def _cmd_szego(args):
    data = _read_json(args.infile)
    if "terms" in data:
        out = projections.project_szego(TorusSeries.from_json(data))
        _write_json(args.out, out.to_json())
        return EXIT_OK
    n = int(data["n"])
    if args.grid and args.grid != n:
        raise DomainError(f"--grid {args.grid} disagrees with input grid size {n}")
    flat = np.array([complex(re, im) for re, im in data["values"]])
    if flat.size != n * n:
        raise DomainError(f"grid file promises {n}x{n} values, found {flat.size}")
    projected = projections.project_szego_grid(flat.reshape(n, n))
    values = [[v.real, v.imag] for v in projected.ravel()]
    _write_json(args.out, {"n": n, "values": values})
    return EXIT_OK


def _cmd_critical_range(args):
    r = projections.critical_range(args.nu)
    _write_text(args.out, f"{r.p_minus:.12f} {r.p_plus:.12f}\n")
    return EXIT_OK


def _cmd_scan_blowup(args):
    epsilons = [float(tok) for tok in args.eps.split(",")]
    scan = projections.blowup_scan(args.nu, args.p, epsilons)
    rows = ["epsilon,integral,fitted_slope"]
    for eps, val in zip(scan.epsilons, scan.values):
        rows.append(f"{_fmt(eps)},{_fmt(val)},{_fmt(scan.fitted_slope)}")
    rows.append(f"# regime={scan.regime} s={_fmt(scan.s)} expected_slope={_fmt(scan.s + 1.0)}")
    _write_text(args.out, "\n".join(rows) + "\n")
    return EXIT_OK


def _cmd_isometry(args):
    data = _read_json(args.infile)
    if args.space == "hardy":
        if args.direction == "forward":
            out = isometries.hardy_to_bidisc(LaurentCoeffs.from_json(data))
        else:
            out = isometries.bidisc_to_hardy(isometries.BidiscCoeffs.from_json(data))
    elif args.space == "dirichlet":
        if args.direction == "forward":
            out = isometries.dirichlet_to_bidisc(LaurentCoeffs.from_json(data))
        else:
            out = isometries.bidisc_to_dirichlet(isometries.BidiscCoeffs.from_json(data))
    else:
        if args.nu is None:
            raise DomainError("isometry --space bergman requires --nu")
        if args.direction == "forward":
            out = isometries.bergman_pullback(args.nu, LaurentCoeffs.from_json(data))
        else:
            out = isometries.bergman_pullback_inverse(args.nu, LaurentCoeffs.from_json(data))
    _write_json(args.out, out.to_json())
    return EXIT_OK


def _cmd_verify(args):
    kwargs = {}
    if args.suite == "normalization" and args.nu is not None:
        kwargs["nus"] = (args.nu,)
    if args.suite == "monomials":
        if args.nu is not None:
            kwargs["nus"] = (args.nu,)
        if args.jmax is not None:
            kwargs["jmax"] = args.jmax
        if args.kmax is not None:
            kwargs["kmax"] = args.kmax
    if args.suite == "all":
        results = verify.run_all(seed=args.seed, tolerance=args.tolerance)
    else:
        if args.suite not in verify.SUITES:
            raise DomainError(
                f"unknown suite {args.suite!r}; choices: all, {', '.join(verify.SUITES)}"
            )
        results = [verify.run_suite(args.suite, seed=args.seed, tolerance=args.tolerance, **kwargs)]
    lines = ["case,closed_form,quadrature,abs_err,rel_err"]
    for res in results:
        for case, closed, quad, abs_err, rel_err in res.rows:
            lines.append(
                f"{res.name}:{case},{_fmt(closed)},{_fmt(quad)},{_fmt(abs_err)},{_fmt(rel_err)}"
            )
    lines.append("")
    lines.append("suite,status,detail")
    failed = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        lines.append(f"{res.name},{status},{res.message}")
        if not res.passed:
            failed.append(res.name)
    _write_text(args.out, "\n".join(lines) + "\n")
    if failed:
        print("failed suites: " + ", ".join(failed), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hartogs",
        description="Holomorphic function space numerics on the Hartogs triangle",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel", help="evaluate a reproducing kernel")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--in", dest="infile", help="JSON list of {z, w} point pairs")
    p.add_argument("--z1"), p.add_argument("--z2")
    p.add_argument("--w1"), p.add_argument("--w2")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_kernel)

    p = sub.add_parser("norm", help="coefficient-space norm of a Laurent polynomial")
    p.add_argument("--nu", type=float)
    p.add_argument("--space", choices=_NORM_SPACES, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_norm)

    p = sub.add_parser("project", help="weighted Bergman projection of a mixed polynomial")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_project)

    p = sub.add_parser("szego", help="Szego projection (coefficients or FFT grid)")
    p.add_argument("--grid", type=int, help="expected grid size for grid-mode input")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_szego)

    p = sub.add_parser("critical-range", help="L^p boundedness range of P_nu")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_critical_range)

    p = sub.add_parser("scan-blowup", help="endpoint blow-up scan")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--eps", required=True, help="comma-separated decreasing epsilons")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_scan_blowup)

    p = sub.add_parser("isometry", help="re-indexing isometries onto bidisc spaces")
    p.add_argument("--space", choices=("hardy", "dirichlet", "bergman"), required=True)
    p.add_argument("--nu", type=float)
    p.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_isometry)

    p = sub.add_parser("verify", help="run cross-validation suites")
    p.add_argument("suite", help="suite name or 'all'")
    p.add_argument("--nu", type=float)
    p.add_argument("--jmax", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ArithmeticError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
