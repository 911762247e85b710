"""Command-line front-end: ``hankel-lab {bound,coeffs,search,scan,phi,selftest}``.

Exit codes: 0 success, 1 selftest failure, 2 usage error, 3 inadmissible
Schwarz coefficients, 4 bound violated (or not attained) inside the region.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
import warnings

from . import coefmap, hankel, schwarz, search
from .coefmap import ClassParams, gamma_max

EXIT_OK, EXIT_SELFTEST, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_VIOLATION = 0, 1, 2, 3, 4
GAP_LOW, GAP_HIGH = -1e-8, 1e-5


def parse_complex(text: str) -> complex:
    """Parse ``re+imi`` literals such as ``0.1+0.2i``, ``-0.5i``, ``0.3``."""
    s = text.strip().replace(" ", "")
    if not s or "j" in s:
        raise ValueError(f"not a complex literal: {text!r}")
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise ValueError(f"not a complex literal: {text!r}") from None


def _fmt(x: float) -> str:
    return f"{x:.16e}"


def _params(args, parser) -> ClassParams:
    try:
        return ClassParams(args.alpha, args.gamma)
    except ValueError as exc:
        parser.error(str(exc))


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _intermediates_dict(pi: hankel.ProofIntermediates) -> dict:
    return {"mu": pi.mu, "nu": pi.nu, "mu1": pi.mu1, "nu1": pi.nu1, "A": pi.A, "B": pi.B, "F0": pi.F0}


# ---------------------------------------------------------------- commands


def cmd_bound(args, parser) -> int:
    params = _params(args, parser)
    pi = hankel.proof_intermediates(params)
    out = {
        "alpha": params.alpha,
        "gamma": params.gamma,
        "bound": hankel.bound(params, warn=False),
        "in_region": params.in_region,
        "gamma_max": gamma_max(params.alpha),
        "ineq30": hankel.check_ineq_30(params),
        "intermediates": _intermediates_dict(pi),
    }
    if not params.in_region:
        print("warning: parameters outside the proved region; bound is exploratory", file=sys.stderr)
    if args.json:
        _emit_json(out)
    else:
        print(f"alpha      = {params.alpha:.10g}")
        print(f"gamma      = {params.gamma:.10g}")
        print(f"bound      = {out['bound']:.8f}")
        print(f"in_region  = {str(params.in_region).lower()}")
        print(f"gamma_max  = {out['gamma_max']:.10g}")
        print(f"ineq30     = {str(out['ineq30']).lower()}")
        for k, v in out["intermediates"].items():
            print(f"{k:<10} = {v:.10g}")
    return EXIT_OK


def cmd_coeffs(args, parser) -> int:
    params = _params(args, parser)
    try:
        parts = [parse_complex(p) for p in args.c.split(",")]
    except ValueError as exc:
        parser.error(str(exc))
    if len(parts) != 3:
        parser.error("--c needs exactly three comma-separated values c1,c2,c3")
    c = schwarz.SchwarzCoeffs(*parts)
    if not schwarz.validate_coeffs(c):
        print(f"error: {args.c} is not an admissible Schwarz coefficient triple", file=sys.stderr)
        return EXIT_INADMISSIBLE
    closed = coefmap.closed_form_coefficients(params, c)
    solved = coefmap.solve_coefficients(params, c.to_series())
    h = hankel.h22(closed)
    out = {
        "alpha": params.alpha,
        "gamma": params.gamma,
        "c": [[complex(v).real, complex(v).imag] for v in parts],
        "closed_form": {k: [v.real, v.imag] for k, v in zip(("a2", "a3", "a4"), closed.as_tuple())},
        "solver": {k: [v.real, v.imag] for k, v in zip(("a2", "a3", "a4"), solved.as_tuple())},
        "max_discrepancy": closed.max_abs_diff(solved),
        "h22": [h.real, h.imag],
        "abs_h22": abs(h),
    }
    if args.json:
        _emit_json(out)
    else:
        for name, tri in (("closed-form", closed), ("solver", solved)):
            print(f"{name}:")
            for k, v in zip(("a2", "a3", "a4"), tri.as_tuple()):
                print(f"  {k} = {_cstr(v)}")
        print(f"max discrepancy = {out['max_discrepancy']:.3e}")
        print(f"H2(2)  = {_cstr(h)}")
        print(f"|H2(2)| = {abs(h):.10g}")
    return EXIT_OK


def _cstr(z: complex) -> str:
    return f"{z.real:.10g}{z.imag:+.10g}i"


def _config(args) -> search.SearchConfig:
    return search.SearchConfig(
        restarts=args.restarts,
        max_iterations=args.max_iterations,
        tolerance=args.tolerance,
        seed=args.seed,
        grid_resolution=args.grid_resolution,
    )


def cmd_search(args, parser) -> int:
    params = _params(args, parser)
    try:
        config = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    report = search.maximize_h22(params, config)
    _emit_json(report.to_dict())
    if report.in_region and not GAP_LOW <= report.gap <= GAP_HIGH:
        kind = "exceeds" if report.gap < GAP_LOW else "does not attain"
        print(f"red flag: in-region search {kind} the bound (gap={report.gap:.3e})", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def parse_range(text: str) -> list[float]:
    """``start:stop:step`` inclusive of ``stop`` (to rounding), or a single value."""
    parts = text.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise ValueError("range must be start:stop:step")
    start, stop, step = map(float, parts)
    if not 0.0 < step <= 0.1:
        raise ValueError("step must lie in (0, 0.1]")
    if stop < start:
        raise ValueError("empty range")
    n = int(math.floor((stop - start) / step + 1e-9))
    return [start + i * step for i in range(n + 1)]


SCAN_HEADER = ["alpha", "gamma", "in_region", "bound", "attained", "gap", "A", "B", "nu1", "ineq30"]


def scan_rows(alphas, gamma_mode: str, do_search: bool, config: search.SearchConfig):
    for a in alphas:
        g = gamma_max(a) if gamma_mode == "max" else float(gamma_mode)
        params = ClassParams(a, g)
        pi = hankel.proof_intermediates(params)
        b = hankel.bound(params, warn=False)
        attained = gap = ""
        if do_search:
            rep = search.maximize_h22(params, config)
            attained, gap = _fmt(rep.attained), _fmt(rep.gap)
        yield [
            _fmt(params.alpha), _fmt(params.gamma), str(params.in_region).lower(), _fmt(b),
            attained, gap, _fmt(pi.A), _fmt(pi.B), _fmt(pi.nu1), str(hankel.check_ineq_30(params)).lower(),
        ]


def cmd_scan(args, parser) -> int:
    try:
        alphas = parse_range(args.alpha)
        if args.gamma != "max":
            float(args.gamma)
        rows = list(scan_rows(alphas, args.gamma, args.search, _config(args)))
    except ValueError as exc:
        parser.error(str(exc))
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(SCAN_HEADER)
    w.writerows(rows)
    return EXIT_OK


def cmd_phi(args, parser) -> int:
    try:
        cert = hankel.certify_phi(args.step)
    except ValueError as exc:
        parser.error(str(exc))
    if args.json:
        out = dict(vars(cert))
        out["checks"] = cert.checks
        out["passed"] = cert.passed
        _emit_json(out)
    else:
        print(f"step                 = {cert.step:g}")
        print(f"min phi1 on [0,2]    = {cert.min_phi1:.3e} at t = {cert.argmin_phi1:.6f}")
        print(f"max phi1'' on [0,2]  = {cert.max_phi1_dd:.10f}")
        print(f"phi1'(0)             = {cert.phi1_prime_0:.10f}")
        print(f"phi1'(2)             = {cert.phi1_prime_2:.10f}")
        print(f"phi1' sign changes   = {cert.prime_sign_changes}")
        print(f"min phi on alpha grid = {cert.min_phi_alpha:.3e}")
        for name, ok in cert.checks.items():
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if cert.passed else EXIT_SELFTEST


def cmd_selftest(args, parser) -> int:
    from .selftest import run_selftest

    return EXIT_OK if run_selftest(seed=args.seed) else EXIT_SELFTEST


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                        help="search objective tolerance (default 1e-9)")

    parser = argparse.ArgumentParser(prog="hankel-lab", parents=[common],
                                     description="Second Hankel determinant bound workbench.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_params(p, gamma_type=float):
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--gamma", type=gamma_type, required=True)

    def with_search(p):
        p.add_argument("--restarts", type=int, default=64)
        p.add_argument("--max-iterations", type=int, default=500)
        p.add_argument("--grid-resolution", type=int, default=21)

    p = sub.add_parser("bound", parents=[common], help="bound, region membership, proof intermediates")
    with_params(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("coeffs", parents=[common], help="a2, a3, a4 and H2(2) from c1, c2, c3")
    with_params(p)
    p.add_argument("--c", required=True, help="c1,c2,c3 as re+imi literals, e.g. 0.1+0.2i,0.5,0")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("search", parents=[common], help="maximize |H2(2)| (JSON report)")
    with_params(p)
    with_search(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("scan", parents=[common], help="CSV scan over an alpha range")
    p.add_argument("--alpha", required=True, help="start:stop:step (inclusive)")
    p.add_argument("--gamma", required=True, help="fixed value or 'max' for the region boundary")
    p.add_argument("--search", action="store_true", help="also run the maximizer per row")
    with_search(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("phi", parents=[common], help="grid certificate for the polynomial inequality")
    p.add_argument("--step", type=float, default=1e-4)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suite at reduced size")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("seed", 0), ("tolerance", 1e-9)):
        if not hasattr(args, name):
            setattr(args, name, default)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    warnings.simplefilter("ignore", hankel.OutsideRegionWarning)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
